#include "algforge/random.hpp"

namespace algforge {

Poly random_poly(Rng& rng, std::size_t nvars, unsigned maxdeg, std::size_t terms) {
    const auto monos = monomials_up_to(nvars, maxdeg);
    Poly p(nvars);
    const std::size_t count = 1 + rng.below(terms);
    for (std::size_t t = 0; t < count; ++t) {
        const long c = rng.between(-5, 5);
        p.add_term(monos[rng.below(monos.size())], c);
    }
    return p;
}

Section random_section(Rng& rng, const Algebroid& a, unsigned maxdeg, std::size_t terms) {
    Section s = a.zero_section();
    for (std::size_t i = 0; i < a.rank(); ++i) s[i] = random_poly(rng, a.nvars(), maxdeg, terms);
    return s;
}

Form random_form(Rng& rng, std::size_t rank, std::size_t nvars, unsigned degree, unsigned maxdeg,
                 std::size_t comps) {
    Form f(rank, nvars, degree);
    if (degree > rank) return f;
    for (std::size_t c = 0; c < comps; ++c) {
        IndexTuple idx;
        while (idx.size() < degree) {
            const auto i = static_cast<std::uint32_t>(rng.below(rank));
            bool dup = false;
            for (auto j : idx) dup = dup || j == i;
            if (!dup) idx.push_back(i);
        }
        f.add(idx, random_poly(rng, nvars, maxdeg));
    }
    return f;
}

EConnection random_connection(Rng& rng, const Algebroid& a, unsigned maxdeg) {
    std::vector<Section> g;
    for (std::size_t beta = 0; beta < a.rank(); ++beta)
        for (std::size_t b = 0; b < a.rank(); ++b) {
            Section s = a.zero_section();
            for (std::size_t c = 0; c < a.rank(); ++c)
                if (rng.below(2)) s[c] = random_poly(rng, a.nvars(), maxdeg, 2);
            g.push_back(std::move(s));
        }
    return EConnection(a, a.gen_names(), std::move(g));
}

BracketModifier random_kernel_modifier(Rng& rng, const Algebroid& a, const std::vector<Section>& kernel,
                                       unsigned maxdeg) {
    BracketModifier b;
    for (std::size_t p = 0; p < a.rank(); ++p)
        for (std::size_t q = p + 1; q < a.rank(); ++q) {
            Section v = a.zero_section();
            for (const auto& k : kernel) v += random_poly(rng, a.nvars(), maxdeg) * k;
            if (!v.is_zero()) b.values.emplace(std::pair{p, q}, std::move(v));
        }
    return b;
}

}  // namespace algforge

#include "algforge/obstruction.hpp"

namespace algforge {

std::string to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::infeasible: return "infeasible";
        case CertificateStatus::inconclusive: return "inconclusive";
        case CertificateStatus::trivially_feasible: return "trivially feasible";
    }
    return "?";
}

Section modifier_jacobiator(const Algebroid& a, const BracketModifier& b, const Section& x, const Section& y,
                            const Section& z) {
    const Section* args[3] = {&x, &y, &z};
    Section out = a.zero_section();
    for (int r = 0; r < 3; ++r) {
        const Section& p = *args[r];
        const Section& q = *args[(r + 1) % 3];
        const Section& s = *args[(r + 2) % 3];
        const Section bpq = apply_modifier(a, b, p, q);
        out += bracket(a, bpq, s);
        out += apply_modifier(a, b, bracket(a, p, q), s);
        out += apply_modifier(a, b, bpq, s);
    }
    return out;
}

namespace {

int min_degree_of(const Section& s, std::size_t nbase) {
    int best = -1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const int d = s[i].min_degree_in(nbase);
        if (d >= 0 && (best < 0 || d < best)) best = d;
    }
    return best;
}

}  // namespace

InfeasibilityCertificate lie_infeasibility_certificate(const Algebroid& a, const std::vector<Section>& kernel,
                                                       std::array<std::size_t, 3> triple, unsigned maxdeg) {
    for (auto i : triple)
        if (i >= a.rank()) throw ShapeError("triple refers to an unknown generator");
    for (const auto& k : kernel)
        if (!anchor_apply(a, k).is_zero()) throw Error("kernel section is not annihilated by the anchor");

    InfeasibilityCertificate c;
    c.triple = triple;
    c.bound = maxdeg;
    const auto [i, j, k] = triple;
    c.jacobiator = jacobiator(a, a.unit(i), a.unit(j), a.unit(k));
    const std::size_t n = a.nvars();
    if (c.jacobiator.is_zero()) {
        c.status = CertificateStatus::trivially_feasible;
        c.cross_check = true;
        return c;
    }
    c.jacobiator_min_degree = min_degree_of(c.jacobiator, n);
    c.lowest_part = c.jacobiator;
    for (std::size_t s = 0; s < c.lowest_part.size(); ++s)
        c.lowest_part[s] = c.jacobiator[s].homogeneous_part(static_cast<unsigned>(c.jacobiator_min_degree), n);

    const auto monos = monomials_up_to(n, maxdeg);
    const std::size_t m = a.rank();
    c.parameters = m * (m - 1) / 2 * kernel.size() * monos.size();
    const std::size_t total = n + c.parameters;
    std::vector<std::string> params;
    for (std::size_t p = 0; p < c.parameters; ++p) params.push_back("c" + std::to_string(p + 1));
    const Algebroid wide = a.extend_base(params);

    BracketModifier b;
    std::size_t next = n;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p + 1; q < m; ++q) {
            Section v = wide.zero_section();
            for (const auto& kern : kernel) {
                Poly coeff(total);
                for (const auto& mono : monos) {
                    Monomial e = mono;
                    e.resize(total, 0);
                    e[next++] = 1;
                    coeff.add_term(e, 1);
                }
                v += coeff * kern.extend(total);
            }
            b.values.emplace(std::pair{p, q}, std::move(v));
        }

    const Section x = wide.unit(i), y = wide.unit(j), z = wide.unit(k);
    c.modifier_terms = modifier_jacobiator(wide, b, x, y, z);
    const Algebroid modified = modify_bracket(wide, b);
    c.cross_check = jacobiator(modified, x, y, z) == c.jacobiator.extend(total) - c.modifier_terms;
    c.modifier_min_degree = min_degree_of(c.modifier_terms, n);
    c.status = c.modifier_min_degree < 0 || c.modifier_min_degree > c.jacobiator_min_degree
                   ? CertificateStatus::infeasible
                   : CertificateStatus::inconclusive;
    return c;
}

}  // namespace algforge

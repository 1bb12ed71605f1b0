#include "algforge/ideal.hpp"

#include "algforge/linalg.hpp"

namespace algforge {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::no_witness_within_bound: return "no witness within bound";
    }
    return "?";
}

CoeffIdeal::CoeffIdeal(std::size_t nvars, std::vector<Poly> generators)
    : nvars_(nvars), gens_(std::move(generators)) {
    for (const auto& g : gens_) {
        if (g.nvars() != nvars_) throw ShapeError("ideal generator has the wrong variable count");
        if (g.size() != 1) monomial_ = false;
    }
}

IdealMembership ideal_member(const Poly& p, const CoeffIdeal& ideal, unsigned maxdeg) {
    if (p.nvars() != ideal.nvars()) throw ShapeError("ideal_member: variable counts differ");
    const std::size_t n = ideal.nvars();
    IdealMembership out;
    out.bound = maxdeg;
    out.cofactors.assign(ideal.generators().size(), Poly(n));

    if (p.is_zero()) {
        out.verdict = Verdict::yes;
        return out;
    }

    if (ideal.monomial()) {
        for (const auto& [m, c] : p.terms()) {
            bool placed = false;
            for (std::size_t g = 0; g < ideal.generators().size() && !placed; ++g) {
                const auto& [gm, gc] = *ideal.generators()[g].terms().begin();
                if (!divides(gm, m)) continue;
                Monomial q = m;
                for (std::size_t i = 0; i < n; ++i) q[i] -= gm[i];
                out.cofactors[g].add_term(q, c / gc);
                placed = true;
            }
            if (!placed) {
                out.verdict = Verdict::no;
                out.cofactors.assign(ideal.generators().size(), Poly(n));
                return out;
            }
        }
        out.verdict = Verdict::yes;
        return out;
    }

    const auto monos = monomials_up_to(n, maxdeg);
    std::vector<PolyVector> columns;
    for (const auto& g : ideal.generators())
        for (const auto& m : monos) columns.push_back({{0, Poly::term(m, 1) * g}});
    auto sol = solve_combination(columns, {{0, p}});
    if (!sol) {
        out.verdict = Verdict::no_witness_within_bound;
        return out;
    }
    std::size_t k = 0;
    for (std::size_t g = 0; g < ideal.generators().size(); ++g)
        for (const auto& m : monos) out.cofactors[g].add_term(m, (*sol)[k++]);
    out.verdict = Verdict::yes;
    return out;
}

}  // namespace algforge

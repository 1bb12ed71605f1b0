#include "algforge/forms.hpp"

#include <algorithm>
#include <set>

#include "algforge/linalg.hpp"

namespace algforge {

namespace {

// Sorts idx in place; returns the permutation sign, or 0 on a repeated index.
int sort_sign(IndexTuple& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

std::vector<IndexTuple> subsets(std::size_t m, std::size_t k) {
    std::vector<IndexTuple> out;
    if (k > m) return out;
    IndexTuple cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<std::uint32_t>(i);
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == m - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

bool axioms_hold(const Algebroid& a) { return check_axioms(a).ok(); }

// Nonzero module generators w^J ^ d^2 w^alpha of degree k.
struct ModuleGen {
    IndexTuple j;
    std::size_t alpha;
    Form form;
};

std::vector<ModuleGen> module_gens(const IdealBasis& basis, std::size_t rank, std::size_t nvars, unsigned k) {
    std::vector<ModuleGen> out;
    if (k < 3) return out;
    for (const auto& j : subsets(rank, k - 3)) {
        const Form wj = Form::monomial(rank, j, Poly::constant(nvars, 1));
        for (std::size_t alpha = 0; alpha < basis.gens3.size(); ++alpha) {
            if (basis.gens3[alpha].is_zero()) continue;
            Form g = wedge(wj, basis.gens3[alpha]);
            if (!g.is_zero()) out.push_back({j, alpha, std::move(g)});
        }
    }
    return out;
}

bool single_monomial(const Form& f) { return f.comps().size() == 1 && f.comps().begin()->second.size() == 1; }

// Component tuples are numbered so forms fit the generic linear solver.
struct TupleIds {
    std::map<IndexTuple, std::size_t> ids;
    std::size_t id(const IndexTuple& t) { return ids.try_emplace(t, ids.size()).first->second; }
    PolyVector vec(const Form& f) {
        PolyVector v;
        for (const auto& [t, p] : f.comps()) v.emplace(id(t), p);
        return v;
    }
};

bool supported(const Form& w, const std::vector<PolyVector>& cols, TupleIds& ids) {
    std::set<std::size_t> sup;
    for (const auto& c : cols)
        for (const auto& [k, p] : c) sup.insert(k);
    for (const auto& [t, p] : w.comps()) {
        auto it = ids.ids.find(t);
        if (it == ids.ids.end() || !sup.count(it->second)) return false;
    }
    return true;
}

}  // namespace

Form Form::function(std::size_t rank, const Poly& f) {
    Form w(rank, f.nvars(), 0);
    if (!f.is_zero()) w.comps_.emplace(IndexTuple{}, f);
    return w;
}

Form Form::dual(std::size_t rank, std::size_t nvars, std::size_t i) {
    return monomial(rank, {static_cast<std::uint32_t>(i)}, Poly::constant(nvars, 1));
}

Form Form::monomial(std::size_t rank, const IndexTuple& idx, const Poly& f) {
    Form w(rank, f.nvars(), static_cast<unsigned>(idx.size()));
    w.add(idx, f);
    return w;
}

Poly Form::component(const IndexTuple& sorted) const {
    auto it = comps_.find(sorted);
    return it == comps_.end() ? Poly(nvars_) : it->second;
}

void Form::add(IndexTuple idx, const Poly& c) {
    if (idx.size() != degree_) throw ShapeError("form component has the wrong degree");
    if (c.nvars() != nvars_) throw ShapeError("form coefficient has the wrong variable count");
    for (auto i : idx)
        if (i >= rank_) throw ShapeError("form index exceeds the bundle rank");
    const int s = sort_sign(idx);
    if (s == 0 || c.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(std::move(idx), nvars_);
    if (s > 0)
        it->second += c;
    else
        it->second -= c;
    if (it->second.is_zero()) comps_.erase(it);
}

void Form::check(const Form& o) const {
    if (o.rank_ != rank_ || o.nvars_ != nvars_) throw ShapeError("forms live on different bundles");
    if (o.degree_ != degree_) throw ShapeError("forms have different degrees");
}

Form& Form::operator+=(const Form& o) {
    check(o);
    for (const auto& [t, p] : o.comps_) add(t, p);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    check(o);
    for (const auto& [t, p] : o.comps_) add(t, -p);
    return *this;
}

Form& Form::operator*=(const Scalar& s) {
    if (s == 0) {
        comps_.clear();
        return *this;
    }
    for (auto& [t, p] : comps_) p *= s;
    return *this;
}

Form Form::operator-() const {
    Form r = *this;
    for (auto& [t, p] : r.comps_) p = -p;
    return r;
}

Form operator*(const Poly& f, const Form& a) {
    if (f.nvars() != a.nvars()) throw ShapeError("function and form live over different bases");
    Form r(a.rank(), a.nvars(), a.degree());
    for (const auto& [t, p] : a.comps()) r.add(t, f * p);
    return r;
}

Form Form::extend_vars(std::size_t nvars) const {
    Form r(rank_, nvars, degree_);
    for (const auto& [t, p] : comps_) r.comps_.emplace(t, p.extend(nvars));
    return r;
}

Form wedge(const Form& a, const Form& b) {
    if (a.rank() != b.rank() || a.nvars() != b.nvars()) throw ShapeError("wedge of forms on different bundles");
    Form out(a.rank(), a.nvars(), a.degree() + b.degree());
    for (const auto& [ta, pa] : a.comps())
        for (const auto& [tb, pb] : b.comps()) {
            IndexTuple idx = ta;
            idx.insert(idx.end(), tb.begin(), tb.end());
            out.add(std::move(idx), pa * pb);
        }
    return out;
}

Poly evaluate_on(const Form& w, const IndexTuple& args) {
    IndexTuple idx = args;
    const int s = sort_sign(idx);
    if (s == 0 || idx.size() != w.degree()) return Poly(w.nvars());
    Poly c = w.component(idx);
    return s > 0 ? c : -c;
}

Form differential(const Algebroid& a, const Form& w) {
    if (w.rank() != a.rank() || w.nvars() != a.nvars()) throw ShapeError("form does not live on this algebroid");
    const std::size_t k = w.degree();
    const std::size_t m = a.rank();
    Form out(m, a.nvars(), static_cast<unsigned>(k + 1));
    if (w.is_zero()) return out;
    for (const auto& tuple : subsets(m, k + 1)) {
        Poly val(a.nvars());
        for (std::size_t p = 0; p <= k; ++p) {
            IndexTuple rest = tuple;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
            const Poly c = w.component(rest);
            if (c.is_zero()) continue;
            const Poly v = apply(a.anchor_of(tuple[p]), c);
            if (p % 2) val -= v;
            else val += v;
        }
        for (std::size_t p = 0; p <= k; ++p)
            for (std::size_t q = p + 1; q <= k; ++q) {
                const Section& br = a.structure(tuple[p], tuple[q]);
                if (br.is_zero()) continue;
                IndexTuple rest = tuple;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(q));
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
                for (std::size_t c = 0; c < m; ++c) {
                    if (br[c].is_zero()) continue;
                    IndexTuple args{static_cast<std::uint32_t>(c)};
                    args.insert(args.end(), rest.begin(), rest.end());
                    const Poly wc = evaluate_on(w, args);
                    if (wc.is_zero()) continue;
                    const Poly v = br[c] * wc;
                    if ((p + q) % 2) val -= v;
                    else val += v;
                }
            }
        if (!val.is_zero()) out.add(tuple, val);
    }
    return out;
}

Form d_squared(const Algebroid& a, const Form& w) { return differential(a, differential(a, w)); }

IdealBasis lambda2_basis(const Algebroid& a) {
    IdealBasis b;
    for (std::size_t i = 0; i < a.rank(); ++i) b.gens3.push_back(d_squared(a, Form::dual(a.rank(), a.nvars(), i)));
    return b;
}

Form ideal_element(const Algebroid& a, const IdealBasis& basis, const std::vector<IdealTerm>& terms) {
    const unsigned k = terms.empty() ? 3 : static_cast<unsigned>(terms.front().j.size() + 3);
    Form out(a.rank(), a.nvars(), k);
    for (const auto& t : terms)
        out += t.f * wedge(Form::monomial(a.rank(), t.j, Poly::constant(a.nvars(), 1)), basis.gens3.at(t.alpha));
    return out;
}

Lambda2Membership in_lambda2(const Algebroid& a, const Form& w, unsigned maxdeg) {
    return in_lambda2(a, lambda2_basis(a), w, maxdeg);
}

Lambda2Membership in_lambda2(const Algebroid& a, const IdealBasis& basis, const Form& w, unsigned maxdeg) {
    if (w.rank() != a.rank() || w.nvars() != a.nvars()) throw ShapeError("form does not live on this algebroid");
    Lambda2Membership out;
    out.bound = maxdeg;
    if (w.is_zero()) {
        out.verdict = Verdict::yes;
        return out;
    }
    const auto gens = module_gens(basis, a.rank(), a.nvars(), w.degree());
    if (gens.empty()) return out;

    const bool fast = std::all_of(gens.begin(), gens.end(), [](const ModuleGen& g) { return single_monomial(g.form); });
    if (fast) {
        std::vector<Poly> cof(gens.size(), Poly(a.nvars()));
        for (const auto& [tuple, p] : w.comps()) {
            for (const auto& [m, c] : p.terms()) {
                bool placed = false;
                for (std::size_t g = 0; g < gens.size() && !placed; ++g) {
                    const auto& [gt, gp] = *gens[g].form.comps().begin();
                    if (gt != tuple) continue;
                    const auto& [gm, gc] = *gp.terms().begin();
                    if (!divides(gm, m)) continue;
                    Monomial q = m;
                    for (std::size_t i = 0; i < q.size(); ++i) q[i] -= gm[i];
                    cof[g].add_term(q, c / gc);
                    placed = true;
                }
                if (!placed) return out;
            }
        }
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (!cof[g].is_zero()) out.witness.push_back({gens[g].j, gens[g].alpha, cof[g]});
        out.verdict = Verdict::yes;
        return out;
    }

    TupleIds ids;
    const auto monos = monomials_up_to(a.nvars(), maxdeg);
    std::vector<PolyVector> cols;
    for (const auto& g : gens)
        for (const auto& m : monos) cols.push_back(ids.vec(Poly::term(m, 1) * g.form));
    if (!supported(w, cols, ids)) return out;
    auto sol = solve_combination(cols, ids.vec(w));
    if (!sol) {
        out.verdict = Verdict::no_witness_within_bound;
        return out;
    }
    std::size_t k = 0;
    for (const auto& g : gens) {
        Poly f(a.nvars());
        for (const auto& m : monos) f.add_term(m, (*sol)[k++]);
        if (!f.is_zero()) out.witness.push_back({g.j, g.alpha, f});
    }
    out.verdict = Verdict::yes;
    return out;
}

StrongClosed strong_closed(const Algebroid& a, const Form& w, unsigned maxdeg) {
    StrongClosed out;
    out.bound = maxdeg;
    const unsigned k = w.degree();
    out.theta = Form(a.rank(), a.nvars(), k > 0 ? k - 1 : 0);
    const Form dw = differential(a, w);
    if (dw.is_zero()) {
        out.verdict = Verdict::yes;
        return out;
    }
    if (k == 0) return out;

    const bool linear = axioms_hold(a);
    const auto monos = monomials_up_to(a.nvars(), maxdeg);
    const Poly one = Poly::constant(a.nvars(), 1);
    TupleIds ids;
    std::vector<PolyVector> cols;
    std::vector<std::pair<IndexTuple, Monomial>> unknowns;
    for (const auto& j : subsets(a.rank(), k - 1)) {
        const Form base = d_squared(a, Form::monomial(a.rank(), j, one));
        if (linear && base.is_zero()) continue;
        for (const auto& m : monos) {
            const Poly f = Poly::term(m, 1);
            Form col = linear ? f * base : d_squared(a, Form::monomial(a.rank(), j, f));
            if (col.is_zero()) continue;
            cols.push_back(ids.vec(col));
            unknowns.emplace_back(j, m);
        }
    }
    if (cols.empty() || !supported(dw, cols, ids)) return out;
    auto sol = solve_combination(cols, ids.vec(dw));
    if (!sol) {
        out.verdict = Verdict::no_witness_within_bound;
        return out;
    }
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        if ((*sol)[u] != 0) out.theta.add(unknowns[u].first, Poly::term(unknowns[u].second, (*sol)[u]));
    out.verdict = Verdict::yes;
    return out;
}

Lambda2Membership weak_closed(const Algebroid& a, const Form& w, unsigned maxdeg) {
    return in_lambda2(a, differential(a, w), maxdeg);
}

WeakExact weak_exact(const Algebroid& a, const Form& w, unsigned maxdeg) {
    WeakExact out;
    out.bound = maxdeg;
    const unsigned k = w.degree();
    out.theta = Form(a.rank(), a.nvars(), k > 0 ? k - 1 : 0);
    if (w.is_zero()) {
        out.verdict = Verdict::yes;
        return out;
    }
    if (k == 0) return out;

    const IdealBasis basis = lambda2_basis(a);
    const auto gens = module_gens(basis, a.rank(), a.nvars(), k);
    const auto monos = monomials_up_to(a.nvars(), maxdeg);
    TupleIds ids;
    std::vector<PolyVector> cols;
    std::vector<std::pair<IndexTuple, Monomial>> exact_unknowns;
    for (const auto& j : subsets(a.rank(), k - 1))
        for (const auto& m : monos) {
            Form col = differential(a, Form::monomial(a.rank(), j, Poly::term(m, 1)));
            if (col.is_zero()) continue;
            cols.push_back(ids.vec(col));
            exact_unknowns.emplace_back(j, m);
        }
    const std::size_t nexact = cols.size();
    for (const auto& g : gens)
        for (const auto& m : monos) cols.push_back(ids.vec(Poly::term(m, 1) * g.form));
    if (cols.empty() || !supported(w, cols, ids)) return out;
    auto sol = solve_combination(cols, ids.vec(w));
    if (!sol) {
        out.verdict = Verdict::no_witness_within_bound;
        return out;
    }
    for (std::size_t u = 0; u < nexact; ++u)
        if ((*sol)[u] != 0) out.theta.add(exact_unknowns[u].first, Poly::term(exact_unknowns[u].second, (*sol)[u]));
    std::size_t c = nexact;
    for (const auto& g : gens) {
        Poly f(a.nvars());
        for (const auto& m : monos) f.add_term(m, (*sol)[c++]);
        if (!f.is_zero()) out.ideal.push_back({g.j, g.alpha, f});
    }
    out.verdict = Verdict::yes;
    return out;
}

Form pullback(const Algebroid& a, const Form& base_form) {
    const std::size_t n = a.nvars();
    if (base_form.rank() != n || base_form.nvars() != n) throw ShapeError("base form must live on the tangent frame");
    std::vector<Form> dx;
    for (std::size_t j = 0; j < n; ++j) {
        Form f(a.rank(), n, 1);
        for (std::size_t i = 0; i < a.rank(); ++i) f.add({static_cast<std::uint32_t>(i)}, a.anchor_of(i)[j]);
        dx.push_back(std::move(f));
    }
    Form out(a.rank(), n, base_form.degree());
    for (const auto& [t, p] : base_form.comps()) {
        Form term = Form::function(a.rank(), p);
        for (auto j : t) term = wedge(term, dx[j]);
        out += term;
    }
    return out;
}

Form normal_form_mod_lambda2(const Algebroid& a, const Form& w, unsigned maxdeg) {
    if (w.degree() < 3 || w.is_zero()) return w;
    const auto gens = module_gens(lambda2_basis(a), a.rank(), a.nvars(), w.degree());
    if (gens.empty()) return w;
    const bool fast = std::all_of(gens.begin(), gens.end(), [](const ModuleGen& g) { return single_monomial(g.form); });
    if (fast) {
        Form out(w.rank(), w.nvars(), w.degree());
        for (const auto& [tuple, p] : w.comps())
            for (const auto& [m, c] : p.terms()) {
                bool divisible = false;
                for (const auto& g : gens) {
                    const auto& [gt, gp] = *g.form.comps().begin();
                    if (gt == tuple && divides(gp.terms().begin()->first, m)) divisible = true;
                }
                if (!divisible) out.add(tuple, Poly::term(m, c));
            }
        return out;
    }

    // coordinates (tuple, monomial), numbered so that larger terms come first
    using Coord = std::pair<IndexTuple, Monomial>;
    auto coord_less = [](const Coord& x, const Coord& y) {
        if (x.first != y.first) return x.first < y.first;
        return GrlexLess{}(y.second, x.second);
    };
    std::vector<Form> rows;
    for (const auto& g : gens)
        for (const auto& m : monomials_up_to(a.nvars(), maxdeg)) rows.push_back(Poly::term(m, 1) * g.form);
    std::map<Coord, std::size_t, decltype(coord_less)> index(coord_less);
    auto collect = [&](const Form& f) {
        for (const auto& [t, p] : f.comps())
            for (const auto& [m, c] : p.terms()) index.emplace(Coord{t, m}, 0);
    };
    for (const auto& r : rows) collect(r);
    collect(w);
    std::vector<Coord> coords;
    for (auto& [c, id] : index) {
        id = coords.size();
        coords.push_back(c);
    }
    auto to_row = [&](const Form& f) {
        SparseRow r;
        for (const auto& [t, p] : f.comps())
            for (const auto& [m, c] : p.terms()) r.emplace(index.at(Coord{t, m}), c);
        return r;
    };
    Echelon ech(coords.size());
    for (const auto& r : rows) ech.add(to_row(r));
    Form out(w.rank(), w.nvars(), w.degree());
    for (const auto& [col, c] : ech.reduce(to_row(w))) out.add(coords[col].first, Poly::term(coords[col].second, c));
    return out;
}

std::string form_to_string(const Form& w, const std::vector<std::string>& gen_names,
                           const std::vector<std::string>& var_names) {
    if (w.is_zero()) return "0";
    std::string out;
    for (const auto& [t, p] : w.comps()) {
        std::string basis;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) basis += "^";
            basis += "w(" + gen_names.at(t[i]) + ")";
        }
        std::string coef = p.to_string(var_names);
        bool negative = false;
        if (p.size() == 1 && coef.front() == '-') {
            negative = true;
            coef.erase(0, 1);
        }
        std::string term;
        if (basis.empty())
            term = coef;
        else if (coef == "1")
            term = basis;
        else if (p.size() == 1)
            term = coef + "*" + basis;
        else
            term = "(" + coef + ")*" + basis;
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace algforge

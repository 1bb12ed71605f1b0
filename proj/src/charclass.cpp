#include "algforge/charclass.hpp"

namespace algforge {

FormMatrix::FormMatrix(std::size_t size, std::size_t rank, std::size_t nvars, unsigned degree)
    : n_(size), degree_(degree), e_(size * size, Form(rank, nvars, degree)) {}

bool FormMatrix::is_zero() const {
    for (const auto& f : e_)
        if (!f.is_zero()) return false;
    return true;
}

FormMatrix& FormMatrix::operator+=(const FormMatrix& o) {
    if (o.n_ != n_) throw ShapeError("form matrices differ in size");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

FormMatrix& FormMatrix::operator-=(const FormMatrix& o) {
    if (o.n_ != n_) throw ShapeError("form matrices differ in size");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

namespace {

const Form& any_entry(const FormMatrix& m) {
    if (m.size() == 0) throw ShapeError("empty form matrix");
    return m(0, 0);
}

}  // namespace

FormMatrix wedge(const FormMatrix& x, const FormMatrix& y) {
    if (x.size() != y.size()) throw ShapeError("form matrices differ in size");
    const Form& f = any_entry(x);
    FormMatrix out(x.size(), f.rank(), f.nvars(), x.degree() + y.degree());
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < x.size(); ++b)
            for (std::size_t c = 0; c < x.size(); ++c) {
                if (x(a, c).is_zero() || y(c, b).is_zero()) continue;
                out(a, b) += wedge(x(a, c), y(c, b));
            }
    return out;
}

FormMatrix differential(const Algebroid& a, const FormMatrix& m) {
    FormMatrix out(m.size(), a.rank(), a.nvars(), m.degree() + 1);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = differential(a, m(i, j));
    return out;
}

Form trace(const FormMatrix& m) {
    Form out = any_entry(m);
    for (std::size_t a = 1; a < m.size(); ++a) out += m(a, a);
    return out;
}

FormMatrix connection_forms(const EConnection& c) {
    const Algebroid& e = c.algebroid();
    FormMatrix out(c.target_rank(), e.rank(), e.nvars(), 1);
    for (std::size_t beta = 0; beta < e.rank(); ++beta)
        for (std::size_t b = 0; b < c.target_rank(); ++b) {
            const Section& g = c.gamma(beta, b);
            for (std::size_t a = 0; a < c.target_rank(); ++a)
                if (!g[a].is_zero()) out(a, b).add({static_cast<std::uint32_t>(beta)}, g[a]);
        }
    return out;
}

FormMatrix curvature_matrix(const EConnection& c) {
    const Algebroid& e = c.algebroid();
    FormMatrix out(c.target_rank(), e.rank(), e.nvars(), 2);
    for (std::size_t al = 0; al < e.rank(); ++al)
        for (std::size_t be = al + 1; be < e.rank(); ++be)
            for (std::size_t b = 0; b < c.target_rank(); ++b) {
                const Section r = curvature(c, e.unit(al), e.unit(be), c.target_unit(b));
                for (std::size_t a = 0; a < c.target_rank(); ++a)
                    if (!r[a].is_zero())
                        out(a, b).add({static_cast<std::uint32_t>(al), static_cast<std::uint32_t>(be)}, r[a]);
            }
    return out;
}

FormMatrix cartan_residual(const EConnection& c) {
    const FormMatrix theta = connection_forms(c);
    return curvature_matrix(c) - differential(c.algebroid(), theta) - wedge(theta, theta);
}

FormMatrix dR_residual(const EConnection& c) {
    const Algebroid& e = c.algebroid();
    const FormMatrix theta = connection_forms(c);
    const FormMatrix r = curvature_matrix(c);
    return differential(e, r) - differential(e, differential(e, theta)) - wedge(r, theta) + wedge(theta, r);
}

Form char_form(const EConnection& c, unsigned k) {
    if (k == 0) throw Error("characteristic forms start at k = 1");
    const FormMatrix r = curvature_matrix(c);
    FormMatrix p = r;
    for (unsigned i = 1; i < k; ++i) p = wedge(p, r);
    return trace(p);
}

ProductAlgebroid product_algebroid(const Algebroid& e, const std::string& t_name, const std::string& gen_name) {
    const Algebroid wide = e.extend_base({t_name});
    const std::size_t n = wide.nvars(), m = e.rank();
    std::vector<std::string> gens = e.gen_names();
    gens.push_back(gen_name);
    std::vector<VectorField> anchor = wide.anchor();
    VectorField dt(n, n);
    dt[n - 1] = Poly::constant(n, 1);
    anchor.push_back(dt);
    StructureTable t;
    for (const auto& [ij, s] : wide.upper_table()) {
        Section v(m + 1, n);
        for (std::size_t i = 0; i < m; ++i) v[i] = s[i];
        t.emplace(ij, std::move(v));
    }
    return {e, Algebroid(wide.base(), std::move(gens), std::move(anchor), t)};
}

Form homotopy_H(const ProductAlgebroid& p, const Form& w) {
    const std::size_t m = p.base.rank(), n = p.base.nvars();
    if (w.rank() != m + 1 || w.nvars() != n + 1) throw ShapeError("form does not live on the product algebroid");
    Form out(m, n, w.degree() > 0 ? w.degree() - 1 : 0);
    if (w.degree() == 0) return out;
    for (const auto& [tuple, c] : w.comps()) {
        if (tuple.back() != p.t_gen()) continue;
        IndexTuple rest(tuple.begin(), tuple.end() - 1);
        Poly v = c.integrate_unit(p.t_var()).eliminate(p.t_var(), 0);
        if (rest.size() % 2) v = -v;
        out.add(rest, v);
    }
    return out;
}

Form restrict_at(const ProductAlgebroid& p, const Form& w, const Scalar& u) {
    const std::size_t m = p.base.rank(), n = p.base.nvars();
    if (w.rank() != m + 1 || w.nvars() != n + 1) throw ShapeError("form does not live on the product algebroid");
    Form out(m, n, w.degree());
    for (const auto& [tuple, c] : w.comps()) {
        if (!tuple.empty() && tuple.back() == p.t_gen()) continue;
        out.add(tuple, c.eliminate(p.t_var(), u));
    }
    return out;
}

Form lift_form(const ProductAlgebroid& p, const Form& w) {
    const std::size_t m = p.base.rank(), n = p.base.nvars();
    if (w.rank() != m || w.nvars() != n) throw ShapeError("form does not live on the base algebroid");
    Form out(m + 1, n + 1, w.degree());
    for (const auto& [tuple, c] : w.comps()) out.add(tuple, c.extend(n + 1));
    return out;
}

EConnection interpolate(const ProductAlgebroid& p, const EConnection& c1, const EConnection& c2) {
    if (!(c1.algebroid() == p.base) || !(c2.algebroid() == p.base))
        throw ShapeError("both connections must live on the base algebroid");
    if (c1.target_gens() != c2.target_gens()) throw ShapeError("connections act on different bundles");
    const std::size_t m = p.base.rank(), n = p.ext.nvars(), r = c1.target_rank();
    const Poly t = Poly::variable(n, p.t_var());
    const Poly one_minus_t = Poly::constant(n, 1) - t;
    std::vector<Section> g;
    for (std::size_t beta = 0; beta <= m; ++beta)
        for (std::size_t b = 0; b < r; ++b) {
            if (beta == m) {
                g.emplace_back(r, n);
                continue;
            }
            g.push_back(one_minus_t * c1.gamma(beta, b).extend(n) + t * c2.gamma(beta, b).extend(n));
        }
    return EConnection(p.ext, c1.target_gens(), std::move(g));
}

HomotopyCheck homotopy_identity_check(const ProductAlgebroid& p, const Form& w) {
    const Algebroid& e = p.base;
    HomotopyCheck out;
    out.identity1 = homotopy_H(p, differential(p.ext, w)) - restrict_at(p, w, 1) + restrict_at(p, w, 0);
    if (w.degree() > 0) out.identity1 += differential(e, homotopy_H(p, w));
    out.identity2 = homotopy_H(p, d_squared(p.ext, w));
    if (w.degree() > 0) out.identity2 -= d_squared(e, homotopy_H(p, w));
    return out;
}

TransgressionReport transgression_check(const EConnection& c1, const EConnection& c2, unsigned k,
                                        unsigned maxdeg) {
    const Algebroid& e = c1.algebroid();
    const ProductAlgebroid p = product_algebroid(e);
    const EConnection ct = interpolate(p, c1, c2);
    const Form big = char_form(ct, k);
    const Form f1 = char_form(c1, k), f2 = char_form(c2, k);

    TransgressionReport r;
    r.endpoints_ok = restrict_at(p, big, 0) == f1 && restrict_at(p, big, 1) == f2;
    r.difference = f2 - f1;
    r.theta = homotopy_H(p, big);
    r.ideal_part = homotopy_H(p, differential(p.ext, big));
    r.residual = r.difference - differential(e, r.theta) - r.ideal_part;
    r.membership = in_lambda2(e, r.ideal_part, maxdeg);
    return r;
}

PullbackConsistency pullback_consistency(const Algebroid& a, const EConnection& base_connection, unsigned k,
                                         unsigned maxdeg) {
    PullbackConsistency r;
    const EConnection induced = induced_connection(a, base_connection);
    r.char_form = char_form(induced, k);
    r.base_char_form = char_form(base_connection, k);
    r.pulled_back = pullback(a, r.base_char_form);
    r.equal = r.char_form == r.pulled_back;
    r.equal_mod_lambda2 =
        normal_form_mod_lambda2(a, r.char_form, maxdeg) == normal_form_mod_lambda2(a, r.pulled_back, maxdeg);
    return r;
}

}  // namespace algforge

#include "algforge/connection.hpp"

namespace algforge {

EConnection::EConnection(Algebroid e, std::vector<std::string> target_gens, std::vector<Section> gamma)
    : e_(std::move(e)), target_(std::move(target_gens)), gamma_(std::move(gamma)) {
    if (gamma_.size() != e_.rank() * target_.size())
        throw ShapeError("connection needs one value per (E generator, bundle generator) pair");
    for (const auto& s : gamma_)
        if (s.size() != target_.size() || s.nvars() != e_.nvars())
            throw ShapeError("connection value has the wrong shape");
}

EConnection EConnection::flat(const Algebroid& e) { return flat(e, e.gen_names()); }

EConnection EConnection::flat(const Algebroid& e, std::vector<std::string> target_gens) {
    const std::size_t k = target_gens.size();
    std::vector<Section> g(e.rank() * k, Section(k, e.nvars()));
    return EConnection(e, std::move(target_gens), std::move(g));
}

Section covariant_derivative(const EConnection& c, const Section& x, const Section& s) {
    const Algebroid& e = c.algebroid();
    if (x.size() != e.rank() || x.nvars() != e.nvars()) throw ShapeError("direction is not a section of E");
    if (s.size() != c.target_rank() || s.nvars() != e.nvars())
        throw ShapeError("argument is not a section of the connection's bundle");
    const VectorField rx = anchor_apply(e, x);
    Section out = c.target_zero();
    for (std::size_t b = 0; b < s.size(); ++b) out[b] = apply(rx, s[b]);
    for (std::size_t beta = 0; beta < x.size(); ++beta) {
        if (x[beta].is_zero()) continue;
        for (std::size_t b = 0; b < s.size(); ++b) {
            if (s[b].is_zero()) continue;
            const Section& g = c.gamma(beta, b);
            if (!g.is_zero()) out += (x[beta] * s[b]) * g;
        }
    }
    return out;
}

Section torsion(const EConnection& c, const Section& x, const Section& y) {
    if (!c.on_self()) throw ShapeError("torsion needs a connection on E itself");
    return covariant_derivative(c, x, y) - covariant_derivative(c, y, x) - bracket(c.algebroid(), x, y);
}

Section curvature(const EConnection& c, const Section& x, const Section& y, const Section& s) {
    return covariant_derivative(c, x, covariant_derivative(c, y, s)) -
           covariant_derivative(c, y, covariant_derivative(c, x, s)) -
           covariant_derivative(c, bracket(c.algebroid(), x, y), s);
}

namespace {

// (nabla_X T)(Y, Z)
Section nabla_torsion(const EConnection& c, const Section& x, const Section& y, const Section& z) {
    return covariant_derivative(c, x, torsion(c, y, z)) - torsion(c, covariant_derivative(c, x, y), z) -
           torsion(c, y, covariant_derivative(c, x, z));
}

}  // namespace

Section bianchi_defect(const EConnection& c, const Section& x, const Section& y, const Section& z) {
    const Section* args[3] = {&x, &y, &z};
    Section lhs = c.target_zero(), rhs = c.target_zero();
    for (int r = 0; r < 3; ++r) {
        const Section& a = *args[r];
        const Section& b = *args[(r + 1) % 3];
        const Section& d = *args[(r + 2) % 3];
        lhs += curvature(c, a, b, d);
        rhs += nabla_torsion(c, a, b, d);
        rhs += torsion(c, torsion(c, a, b), d);
    }
    rhs += jacobiator(c.algebroid(), x, y, z);
    return lhs - rhs;
}

EConnection induced_connection(const Algebroid& a, const EConnection& base) {
    const std::size_t n = a.nvars();
    if (base.algebroid().rank() != n || base.algebroid().nvars() != n || base.target_rank() != n)
        throw ShapeError("base connection must be a connection of the tangent algebroid of the same base");
    std::vector<Section> g;
    for (std::size_t beta = 0; beta < a.rank(); ++beta) {
        for (std::size_t b = 0; b < n; ++b) {
            Section v(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                const Poly& r = a.anchor_of(beta)[i];
                if (!r.is_zero()) v += r * base.gamma(i, b);
            }
            g.push_back(std::move(v));
        }
    }
    return EConnection(a, base.target_gens(), std::move(g));
}

ConnectionReport connection_report(const EConnection& c) {
    const Algebroid& e = c.algebroid();
    const std::size_t m = e.rank();
    ConnectionReport r;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = 0; k < c.target_rank(); ++k)
                r.curvature.push_back({i, j, k, curvature(c, e.unit(i), e.unit(j), c.target_unit(k))});
    if (!c.on_self()) return r;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) r.torsion.push_back({i, j, torsion(c, e.unit(i), e.unit(j))});
    for (const auto& t : r.curvature)
        if (!anchor_apply(e, t.value).is_zero()) r.curvature_in_kernel = false;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k)
                r.bianchi.push_back({i, j, k, bianchi_defect(c, e.unit(i), e.unit(j), e.unit(k))});
    return r;
}

std::string wedge_gen_name(const std::string& a, const std::string& b) { return a + "_w_" + b; }

std::size_t DerivedBundle::wedge_index(std::size_t i, std::size_t j) const {
    const std::size_t m = base_algebroid.rank();
    if (i >= j || j >= m) throw ShapeError("wedge index needs i < j < rank");
    return m + i * (2 * m - i - 1) / 2 + (j - i - 1);
}

Section DerivedBundle::wedge(const Section& y, const Section& z) const {
    const std::size_t m = base_algebroid.rank();
    if (y.size() != derived.rank() || z.size() != derived.rank()) throw ShapeError("wedge of non-derived sections");
    for (std::size_t p = m; p < derived.rank(); ++p)
        if (!y[p].is_zero() || !z[p].is_zero()) throw Error("wedge factor has a component outside E");
    Section out = derived.zero_section();
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p + 1; q < m; ++q) out[wedge_index(p, q)] = y[p] * z[q] - y[q] * z[p];
    return out;
}

DerivedBundle derive_bundle(const EConnection& c) {
    if (!c.on_self()) throw ShapeError("derived bundle needs a connection on E itself");
    const Algebroid& e = c.algebroid();
    const std::size_t m = e.rank(), n = e.nvars();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (!torsion(c, e.unit(i), e.unit(j)).is_zero())
                throw Error("connection has nonzero torsion on [" + e.gen_names()[i] + ", " + e.gen_names()[j] + "]");

    DerivedBundle d;
    d.base_algebroid = e;
    d.base_connection = c;
    std::vector<std::string> names = e.gen_names();
    std::vector<VectorField> anchor = e.anchor();
    const AxiomReport ax = check_axioms(e);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            d.wedge_pairs.emplace_back(i, j);
            names.push_back(wedge_gen_name(e.gen_names()[i], e.gen_names()[j]));
        }
    for (const auto& p : ax.pairs) anchor.push_back(p.defect);
    const std::size_t md = names.size();
    // provisional so wedge() knows the rank
    d.derived = Algebroid(e.base(), names, anchor, {});

    auto embed = [&](const Section& s) {
        Section out(md, n);
        for (std::size_t i = 0; i < m; ++i) out[i] = s[i];
        return out;
    };
    auto unit = [&](std::size_t i) { return Section::unit(md, n, i); };

    std::vector<Section> plain(md * md, Section(md, n));
    std::vector<Section> lifted;
    auto at = [&](std::size_t p, std::size_t q) -> Section& { return plain[p * md + q]; };

    std::vector<Section> nabla(m * m);  // nabla_{e_i} e_j embedded
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) nabla[i * m + j] = embed(covariant_derivative(c, e.unit(i), e.unit(j)));
    std::vector<Section> curv(d.wedge_pairs.size() * m);  // R(e_i, e_j) e_k embedded
    for (std::size_t w = 0; w < d.wedge_pairs.size(); ++w) {
        const auto [i, j] = d.wedge_pairs[w];
        for (std::size_t k = 0; k < m; ++k) curv[w * m + k] = embed(curvature(c, e.unit(i), e.unit(j), e.unit(k)));
    }

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) at(i, j) = nabla[i * m + j];
        for (std::size_t w = 0; w < d.wedge_pairs.size(); ++w) {
            const auto [j, k] = d.wedge_pairs[w];
            at(i, m + w) = d.wedge(nabla[i * m + j], unit(k)) + d.wedge(unit(j), nabla[i * m + k]);
        }
    }
    for (std::size_t w = 0; w < d.wedge_pairs.size(); ++w) {
        for (std::size_t k = 0; k < m; ++k) at(m + w, k) = curv[w * m + k];
        for (std::size_t v = 0; v < d.wedge_pairs.size(); ++v) {
            const auto [k, l] = d.wedge_pairs[v];
            at(m + w, m + v) = d.wedge(curv[w * m + k], unit(l)) + d.wedge(unit(k), curv[w * m + l]);
        }
    }
    lifted = plain;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            Section half = d.wedge(unit(i), unit(j));
            half *= Scalar(1, 2);
            lifted[i * md + j] += half;
        }

    StructureTable table;
    for (std::size_t p = 0; p < md; ++p)
        for (std::size_t q = p + 1; q < md; ++q) {
            Section v = lifted[p * md + q] - lifted[q * md + p];
            if (!v.is_zero()) table.emplace(std::pair{p, q}, std::move(v));
        }
    d.derived = Algebroid(e.base(), names, anchor, table);
    d.lifted = EConnection(d.derived, names, std::move(lifted));
    d.plain = EConnection(d.derived, names, std::move(plain));
    return d;
}

std::vector<DerivedIdentity> check_derived_identities(const DerivedBundle& d) {
    const std::size_t m = d.base_algebroid.rank();
    const std::size_t md = d.derived.rank();
    const EConnection& L = d.lifted;
    const EConnection& P = d.plain;
    auto u = [&](std::size_t i) { return d.derived.unit(i); };
    auto R = [&](std::size_t a, std::size_t b, const Section& s) { return curvature(L, u(a), u(b), s); };
    auto nab = [&](const Section& x, const Section& s) { return covariant_derivative(P, x, s); };
    const auto& names = d.derived.gen_names();

    std::vector<DerivedIdentity> items(5);
    for (int k = 0; k < 5; ++k) items[k].item = k + 1;
    auto record = [&](DerivedIdentity& it, bool ok, const std::string& where) {
        ++it.checked;
        if (ok) return;
        if (it.failed++ == 0) it.first_failure = where;
    };
    auto wedge_ok = [&](const Section& y, const Section& z, Section& out) {
        try {
            out = d.wedge(y, z);
            return true;
        } catch (const Error&) {
            return false;
        }
    };
    auto derivation_holds = [&](std::size_t a, std::size_t b, std::size_t z, std::size_t t) {
        const Section lhs = R(a, b, u(d.wedge_index(z, t)));
        Section w1, w2;
        if (!wedge_ok(R(a, b, u(z)), u(t), w1) || !wedge_ok(u(z), R(a, b, u(t)), w2)) return false;
        return lhs == w1 + w2;
    };
    auto second_order = [&](std::size_t a, std::size_t b, std::size_t z) {
        const Section x = u(a), y = u(b), s = u(z);
        const Section rhs = nab(x, nab(y, s)) - nab(y, nab(x, s)) - nab(nab(x, y), s) + nab(nab(y, x), s);
        return R(a, b, s) == rhs;
    };
    auto tag = [&](std::initializer_list<std::size_t> idx) {
        std::string s = "(";
        bool first = true;
        for (auto i : idx) {
            if (!first) s += ", ";
            s += names[i];
            first = false;
        }
        return s + ")";
    };

    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = x + 1; y < m; ++y) {
            for (std::size_t z = 0; z < m; ++z) record(items[0], R(x, y, u(z)).is_zero(), tag({x, y, z}));
            for (std::size_t w = m; w < md; ++w) record(items[0], R(x, y, u(w)).is_zero(), tag({x, y, w}));
        }
    for (std::size_t w = m; w < md; ++w)
        for (std::size_t y = 0; y < m; ++y) {
            for (std::size_t z = 0; z < m; ++z) record(items[1], second_order(w, y, z), tag({w, y, z}));
            for (std::size_t z = 0; z < m; ++z)
                for (std::size_t t = z + 1; t < m; ++t)
                    record(items[2], derivation_holds(w, y, z, t), tag({w, y, d.wedge_index(z, t)}));
        }
    for (std::size_t w = m; w < md; ++w)
        for (std::size_t v = w + 1; v < md; ++v) {
            for (std::size_t z = 0; z < m; ++z) record(items[3], second_order(w, v, z), tag({w, v, z}));
            for (std::size_t z = 0; z < m; ++z)
                for (std::size_t t = z + 1; t < m; ++t)
                    record(items[4], derivation_holds(w, v, z, t), tag({w, v, d.wedge_index(z, t)}));
        }
    return items;
}

}  // namespace algforge

#include "algforge/algebroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "algforge/linalg.hpp"

namespace algforge {

namespace {

void require_unique(const std::vector<std::string>& names, const char* what) {
    std::set<std::string> seen;
    for (const auto& n : names)
        if (!seen.insert(n).second) throw Error(std::string("duplicate ") + what + " name '" + n + "'");
}

void check_section(const Algebroid& a, const Section& s) {
    if (s.size() != a.rank()) throw ShapeError("section length does not match the bundle rank");
    if (s.nvars() != a.nvars()) throw ShapeError("section lives over a different base");
}

PolyVector as_column(const Section& s) {
    PolyVector v;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!s[i].is_zero()) v.emplace(i, s[i]);
    return v;
}

}  // namespace

Algebroid::Algebroid(BaseSpace base, std::vector<std::string> gens, std::vector<VectorField> anchor,
                     const StructureTable& brackets)
    : base_(std::move(base)), gens_(std::move(gens)), anchor_(std::move(anchor)) {
    require_unique(base_.var_names, "variable");
    require_unique(gens_, "generator");
    const std::size_t m = gens_.size(), n = base_.dim();
    if (anchor_.size() != m) throw ShapeError("anchor must have one row per generator");
    for (const auto& v : anchor_)
        if (v.size() != n || v.nvars() != n) throw ShapeError("anchor row does not match the base dimension");

    table_.assign(m * m, Section(m, n));
    std::vector<bool> given(m * m, false);
    for (const auto& [ij, s] : brackets) {
        const auto [i, j] = ij;
        if (i >= m || j >= m) throw ShapeError("bracket refers to an unknown generator");
        if (i == j) {
            if (!s.is_zero()) throw Error("diagonal bracket [" + gens_[i] + ", " + gens_[i] + "] must be zero");
            continue;
        }
        if (s.size() != m || s.nvars() != n) throw ShapeError("bracket value has the wrong shape");
        if (given[i * m + j] || given[j * m + i])
            throw Error("bracket [" + gens_[i] + ", " + gens_[j] + "] given twice");
        given[i * m + j] = true;
        table_[i * m + j] = s;
        table_[j * m + i] = -s;
    }
}

std::optional<std::size_t> Algebroid::gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == name) return i;
    return std::nullopt;
}

StructureTable Algebroid::upper_table() const {
    StructureTable t;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = i + 1; j < rank(); ++j)
            if (!structure(i, j).is_zero()) t.emplace(std::pair{i, j}, structure(i, j));
    return t;
}

Algebroid Algebroid::extend_base(std::vector<std::string> extra_vars) const {
    BaseSpace b = base_;
    for (auto& v : extra_vars) b.var_names.push_back(std::move(v));
    const std::size_t n = b.dim();
    std::vector<VectorField> anchor;
    for (const auto& v : anchor_) {
        VectorField w(n, n);
        for (std::size_t k = 0; k < v.size(); ++k) w[k] = v[k].extend(n);
        anchor.push_back(std::move(w));
    }
    StructureTable t;
    for (const auto& [ij, s] : upper_table()) t.emplace(ij, s.extend(n));
    return Algebroid(std::move(b), gens_, std::move(anchor), t);
}

Poly apply(const VectorField& v, const Poly& f) {
    if (f.nvars() != v.size()) throw ShapeError("vector field and function live over different bases");
    Poly out(f.nvars());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        Poly df = f.partial(k);
        if (!df.is_zero()) out += v[k] * df;
    }
    return out;
}

VectorField anchor_apply(const Algebroid& a, const Section& s) {
    check_section(a, s);
    VectorField out(a.nvars(), a.nvars());
    for (std::size_t i = 0; i < a.rank(); ++i)
        if (!s[i].is_zero()) out += s[i] * a.anchor_of(i);
    return out;
}

VectorField vf_bracket(const VectorField& v, const VectorField& w) {
    if (v.size() != w.size() || v.nvars() != w.nvars()) throw ShapeError("vector fields live over different bases");
    VectorField out(v.size(), v.nvars());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = apply(v, w[k]) - apply(w, v[k]);
    return out;
}

Section bracket(const Algebroid& a, const Section& x, const Section& y) {
    check_section(a, x);
    check_section(a, y);
    const std::size_t m = a.rank();
    Section out = a.zero_section();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            Poly c = x[i] * y[j] - x[j] * y[i];
            if (c.is_zero()) continue;
            const Section& s = a.structure(i, j);
            if (!s.is_zero()) out += c * s;
        }
    }
    const VectorField rx = anchor_apply(a, x), ry = anchor_apply(a, y);
    for (std::size_t b = 0; b < m; ++b) out[b] += apply(rx, y[b]) - apply(ry, x[b]);
    return out;
}

Section jacobiator(const Algebroid& a, const Section& x, const Section& y, const Section& z) {
    return bracket(a, x, bracket(a, y, z)) + bracket(a, y, bracket(a, z, x)) + bracket(a, z, bracket(a, x, y));
}

bool AxiomReport::ok() const {
    for (const auto& p : pairs)
        if (!p.defect.is_zero()) return false;
    return true;
}

AxiomReport check_axioms(const Algebroid& a) {
    AxiomReport r;
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = i + 1; j < a.rank(); ++j)
            r.pairs.push_back({i, j,
                               vf_bracket(a.anchor_of(i), a.anchor_of(j)) - anchor_apply(a, a.structure(i, j))});
    return r;
}

bool LieReport::lie() const {
    if (!axioms_ok) return false;
    for (const auto& t : triples)
        if (!t.value.is_zero()) return false;
    return true;
}

std::vector<TripleValue> LieReport::nonzero() const {
    std::vector<TripleValue> out;
    for (const auto& t : triples)
        if (!t.value.is_zero()) out.push_back(t);
    return out;
}

LieReport check_lie(const Algebroid& a) {
    LieReport r;
    r.axioms_ok = check_axioms(a).ok();
    const std::size_t m = a.rank();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k)
                r.triples.push_back({i, j, k, jacobiator(a, a.unit(i), a.unit(j), a.unit(k))});
    return r;
}

std::size_t anchor_rank_at(const Algebroid& a, std::span<const Scalar> point) {
    if (point.size() != a.nvars()) throw ShapeError("point has the wrong length");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& v : a.anchor()) {
        std::vector<Scalar> r;
        for (std::size_t k = 0; k < v.size(); ++k) r.push_back(v[k].eval(point));
        rows.push_back(std::move(r));
    }
    return matrix_rank(rows);
}

Section BundleMap::apply(const Section& s) const {
    if (s.size() != images.size()) throw ShapeError("bundle map applied to a section of the wrong rank");
    if (images.empty()) return s;
    Section out(images.front().size(), s.nvars());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!s[i].is_zero()) out += s[i] * images[i];
    return out;
}

BundleMap compose(const BundleMap& outer, const BundleMap& inner) {
    BundleMap r;
    for (const auto& img : inner.images) r.images.push_back(outer.apply(img));
    return r;
}

BundleMap identity_map(std::size_t rank, std::size_t nvars) {
    BundleMap r;
    for (std::size_t i = 0; i < rank; ++i) r.images.push_back(Section::unit(rank, nvars, i));
    return r;
}

bool is_almost_complex(const Endomorphism& j) {
    if (j.images.empty()) return true;
    const std::size_t m = j.images.size();
    for (const auto& img : j.images)
        if (img.size() != m) return false;
    const BundleMap sq = compose(j, j);
    const BundleMap id = identity_map(m, j.images.front().nvars());
    for (std::size_t i = 0; i < m; ++i)
        if (!(sq.images[i] + id.images[i]).is_zero()) return false;
    return true;
}

Section apply_modifier(const Algebroid& a, const BracketModifier& b, const Section& x, const Section& y) {
    check_section(a, x);
    check_section(a, y);
    Section out = a.zero_section();
    for (const auto& [ij, v] : b.values) {
        const auto [i, j] = ij;
        Poly c = x[i] * y[j] - x[j] * y[i];
        if (!c.is_zero()) out += c * v;
    }
    return out;
}

Algebroid modify_bracket(const Algebroid& a, const BracketModifier& b) {
    StructureTable t = a.upper_table();
    for (const auto& [ij, v] : b.values) {
        const auto [i, j] = ij;
        if (i >= j || j >= a.rank()) throw ShapeError("modifier entries must use pairs i < j");
        check_section(a, v);
        if (!anchor_apply(a, v).is_zero())
            throw Error("modifier value on [" + a.gen_names()[i] + ", " + a.gen_names()[j] +
                        "] is not in the kernel of the anchor");
        auto [it, inserted] = t.try_emplace(ij, v);
        if (!inserted) it->second += v;
    }
    return Algebroid(a.base(), a.gen_names(), a.anchor(), t);
}

bool MorphismReport::ok() const {
    for (const auto& [i, d] : anchor_defects)
        if (!d.is_zero()) return false;
    for (const auto& p : pairs)
        if (!p.defect.is_zero()) return false;
    return true;
}

MorphismReport check_morphism(const BundleMap& f, const Algebroid& src, const Algebroid& dst) {
    if (src.nvars() != dst.nvars()) throw ShapeError("morphism between algebroids over different bases");
    if (f.images.size() != src.rank()) throw ShapeError("morphism needs one image per source generator");
    for (const auto& img : f.images) check_section(dst, img);
    MorphismReport r;
    for (std::size_t i = 0; i < src.rank(); ++i)
        r.anchor_defects.emplace_back(i, anchor_apply(dst, f.images[i]) - src.anchor_of(i));
    for (std::size_t i = 0; i < src.rank(); ++i)
        for (std::size_t j = i + 1; j < src.rank(); ++j)
            r.pairs.push_back({i, j, f.apply(src.structure(i, j)) - bracket(dst, f.images[i], f.images[j])});
    return r;
}

SubalgebroidResult subalgebroid_restrict(const Algebroid& a, const std::vector<Section>& gens,
                                         std::vector<std::string> names, unsigned maxdeg) {
    if (names.size() != gens.size()) throw ShapeError("one name per generator required");
    for (const auto& g : gens) check_section(a, g);

    // independence over the coefficient ring, tested at a point with no special structure
    std::vector<Scalar> point;
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::size_t k = 0; k < a.nvars(); ++k) point.emplace_back(primes[k % 12] + 37 * int(k / 12));
    std::vector<std::vector<Scalar>> rows;
    for (const auto& g : gens) {
        std::vector<Scalar> r;
        for (std::size_t i = 0; i < g.size(); ++i) r.push_back(g[i].eval(point));
        rows.push_back(std::move(r));
    }
    if (matrix_rank(rows) != gens.size()) throw Error("subalgebroid generators are dependent at a generic point");

    const auto monos = monomials_up_to(a.nvars(), maxdeg);
    std::vector<PolyVector> columns;
    for (const auto& g : gens)
        for (const auto& m : monos) columns.push_back(as_column(Poly::term(m, 1) * g));

    SubalgebroidResult res;
    const std::size_t k = gens.size();
    for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t q = p + 1; q < k; ++q) {
            Section br = bracket(a, gens[p], gens[q]);
            auto sol = solve_combination(columns, as_column(br));
            if (!sol) {
                res.closed = false;
                res.offending = {p, q};
                res.offending_bracket = std::move(br);
                return res;
            }
            Section coords(k, a.nvars());
            std::size_t col = 0;
            for (std::size_t c = 0; c < k; ++c)
                for (const auto& m : monos) coords[c].add_term(m, (*sol)[col++]);
            if (!coords.is_zero()) res.coordinates.emplace(std::pair{p, q}, std::move(coords));
        }
    }
    std::vector<VectorField> anchor;
    for (const auto& g : gens) anchor.push_back(anchor_apply(a, g));
    res.closed = true;
    res.algebroid = Algebroid(a.base(), std::move(names), std::move(anchor), res.coordinates);
    return res;
}

Section nijenhuis(const Algebroid& a, const Endomorphism& j, const Section& x, const Section& y) {
    if (j.images.size() != a.rank()) throw ShapeError("endomorphism rank does not match the bundle");
    for (const auto& img : j.images) check_section(a, img);
    if (!is_almost_complex(j)) throw Error("endomorphism does not square to minus the identity");
    const Section jx = j.apply(x), jy = j.apply(y);
    return bracket(a, jx, jy) - j.apply(bracket(a, x, jy)) - j.apply(bracket(a, jx, y)) - bracket(a, x, y);
}

CoMetric::CoMetric(PolyMatrix m) : m_(std::move(m)) {
    for (std::size_t i = 0; i < m_.size(); ++i) {
        if (m_[i].size() != m_.size()) throw ShapeError("cometric must be square");
        for (std::size_t j = 0; j < i; ++j)
            if (!(m_[i][j] == m_[j][i])) throw Error("cometric is not symmetric");
    }
}

PolyMatrix courant_defect(const Algebroid& a, const CoMetric& g) {
    const std::size_t m = a.rank(), n = a.nvars();
    if (g.size() != m) throw ShapeError("cometric size does not match the bundle rank");
    PolyMatrix out(n, std::vector<Poly>(n, Poly(n)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const Poly& gij = g.matrix()[i][j];
            if (gij.is_zero()) continue;
            for (std::size_t p = 0; p < n; ++p) {
                if (a.anchor_of(i)[p].is_zero()) continue;
                Poly left = a.anchor_of(i)[p] * gij;
                for (std::size_t q = 0; q < n; ++q)
                    if (!a.anchor_of(j)[q].is_zero()) out[p][q] += left * a.anchor_of(j)[q];
            }
        }
    }
    return out;
}

namespace {

// Orbits of matrix entries that the ansatz forces to be equal.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> entry_orbits(std::size_t m, std::size_t n,
                                                                           CometricAnsatz ansatz) {
    std::vector<std::size_t> parent(m * m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t x, std::size_t y) { parent[find(x)] = find(y); };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            unite(i * m + j, j * m + i);
            if (ansatz == CometricAnsatz::block_symmetric) {
                const std::size_t bi = i / n, bj = j / n, ri = i % n, rj = j % n;
                unite(i * m + j, (bi * n + rj) * m + (bj * n + ri));
            }
        }
    std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> groups;
    for (std::size_t e = 0; e < m * m; ++e) groups[find(e)].emplace_back(e / m, e % m);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
    for (auto& [root, g] : groups) out.push_back(std::move(g));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

CourantSolutions courant_solution_space(const Algebroid& a, unsigned maxdeg, std::vector<Scalar> point,
                                        CometricAnsatz ansatz) {
    const std::size_t m = a.rank(), n = a.nvars();
    if (point.size() != n) throw ShapeError("point has the wrong length");
    if (ansatz == CometricAnsatz::block_symmetric && (n == 0 || m % n != 0))
        throw ShapeError("block ansatz needs the rank to be a multiple of the base dimension");

    const auto orbits = entry_orbits(m, n, ansatz);
    const auto monos = monomials_up_to(n, maxdeg);
    std::vector<PolyMatrix> unknowns;
    std::vector<PolyVector> columns;
    for (const auto& orbit : orbits) {
        for (const auto& mono : monos) {
            PolyMatrix g(m, std::vector<Poly>(m, Poly(n)));
            for (const auto& [i, j] : orbit) g[i][j] = Poly::term(mono, 1);
            PolyVector col;
            const PolyMatrix d = courant_defect(a, CoMetric(g));
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q)
                    if (!d[p][q].is_zero()) col.emplace(p * n + q, d[p][q]);
            columns.push_back(std::move(col));
            unknowns.push_back(std::move(g));
        }
    }

    CourantSolutions out;
    out.bound = maxdeg;
    out.ansatz = ansatz;
    out.point = std::move(point);
    for (const auto& v : combination_nullspace(columns)) {
        PolyMatrix g(m, std::vector<Poly>(m, Poly(n)));
        for (std::size_t u = 0; u < v.size(); ++u) {
            if (v[u] == 0) continue;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    if (!unknowns[u][i][j].is_zero()) g[i][j] += v[u] * unknowns[u][i][j];
        }
        out.basis.emplace_back(std::move(g));
    }

    auto value_at = [&](const CoMetric& g) {
        std::vector<std::vector<Scalar>> val(m, std::vector<Scalar>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) val[i][j] = g.matrix()[i][j].eval(out.point);
        return val;
    };
    for (const auto& g : out.basis) {
        auto val = value_at(g);
        bool nz = false;
        for (const auto& row : val)
            for (const auto& x : row) nz = nz || x != 0;
        if (nz) ++out.nonzero_at_point;
        out.values_at_point.push_back(std::move(val));
    }

    auto accept = [&](CoMetric g) {
        out.nondegenerate_det = poly_determinant(g.matrix());
        out.nondegenerate = std::move(g);
    };
    for (std::size_t b = 0; b < out.basis.size() && !out.nondegenerate; ++b)
        if (determinant(out.values_at_point[b]) != 0) accept(out.basis[b]);
    if (!out.nondegenerate && out.nonzero_at_point > 1) {
        // a generic combination is invertible at the point iff some combination is
        std::uint64_t state = 0x9e3779b97f4a7c15ULL;
        PolyMatrix g(m, std::vector<Poly>(m, Poly(n)));
        for (const auto& basis : out.basis) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            const Scalar c(static_cast<long>((state >> 33) % 1000) + 1);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    if (!basis.matrix()[i][j].is_zero()) g[i][j] += c * basis.matrix()[i][j];
        }
        CoMetric cand(std::move(g));
        if (determinant(value_at(cand)) != 0) accept(std::move(cand));
    }
    return out;
}

Poly poly_determinant(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly();
    if (n > 20) throw ShapeError("determinant too large");
    const std::size_t nv = m.front().front().nvars();
    // minors[mask]: determinant of the first popcount(mask) rows restricted to the columns in mask
    std::vector<Poly> minors(std::size_t{1} << n, Poly(nv));
    minors[0] = Poly::constant(nv, 1);
    for (std::size_t mask = 1; mask < minors.size(); ++mask) {
        const std::size_t r = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
        Poly acc(nv);
        std::size_t pos = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask >> c & 1)) continue;
            const Poly& sub = minors[mask & ~(std::size_t{1} << c)];
            if (!m[r][c].is_zero() && !sub.is_zero()) {
                Poly t = m[r][c] * sub;
                if ((r + pos) % 2) acc -= t;
                else acc += t;
            }
            ++pos;
        }
        minors[mask] = std::move(acc);
    }
    return minors.back();
}

}  // namespace algforge

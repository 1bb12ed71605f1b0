#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algforge/ideal.hpp"
#include "algforge/poly.hpp"

namespace algforge {

struct BaseSpace {
    std::vector<std::string> var_names;

    std::size_t dim() const { return var_names.size(); }
    friend bool operator==(const BaseSpace&, const BaseSpace&) = default;
};

/// Fixed-length vector of polynomials. The tag keeps sections of a bundle
/// and vector fields on the base apart at compile time.
template <class Tag>
class PolyVec {
public:
    PolyVec() = default;
    PolyVec(std::size_t len, std::size_t nvars) : nvars_(nvars), c_(len, Poly(nvars)) {}
    PolyVec(std::size_t nvars, std::vector<Poly> coeffs) : nvars_(nvars), c_(std::move(coeffs)) {
        for (const auto& p : c_)
            if (p.nvars() != nvars_) throw ShapeError("coefficient has the wrong variable count");
    }

    static PolyVec unit(std::size_t len, std::size_t nvars, std::size_t i) {
        PolyVec v(len, nvars);
        v.c_.at(i) = Poly::constant(nvars, 1);
        return v;
    }

    std::size_t size() const { return c_.size(); }
    std::size_t nvars() const { return nvars_; }
    const Poly& operator[](std::size_t i) const { return c_[i]; }
    Poly& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Poly>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }

    PolyVec& operator+=(const PolyVec& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    PolyVec& operator-=(const PolyVec& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    PolyVec& operator*=(const Scalar& s) {
        for (auto& p : c_) p *= s;
        return *this;
    }
    PolyVec operator-() const {
        PolyVec r = *this;
        for (auto& p : r.c_) p = -p;
        return r;
    }

    friend PolyVec operator+(PolyVec a, const PolyVec& b) { return a += b; }
    friend PolyVec operator-(PolyVec a, const PolyVec& b) { return a -= b; }
    friend PolyVec operator*(const Scalar& s, PolyVec a) { return a *= s; }
    friend PolyVec operator*(const Poly& f, PolyVec a) {
        for (auto& p : a.c_)
            if (!p.is_zero()) p = f * p;
        return a;
    }
    friend bool operator==(const PolyVec& a, const PolyVec& b) { return a.c_ == b.c_; }

    /// Re-embeds every coefficient into `nvars` variables.
    PolyVec extend(std::size_t nvars) const {
        PolyVec r(c_.size(), nvars);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i].extend(nvars);
        return r;
    }

private:
    void check(const PolyVec& o) const {
        if (o.c_.size() != c_.size()) throw ShapeError("vector lengths differ");
    }

    std::size_t nvars_ = 0;
    std::vector<Poly> c_;
};

struct SectionTag {};
struct FieldTag {};

/// Coefficients of a bundle section over the generator frame.
using Section = PolyVec<SectionTag>;
/// Components of a vector field in the coordinate frame d1..dn.
using VectorField = PolyVec<FieldTag>;

using PolyMatrix = std::vector<std::vector<Poly>>;
using StructureTable = std::map<std::pair<std::size_t, std::size_t>, Section>;

/// Anchored bundle with a skew bracket over a polynomial base. The bracket is
/// fixed by its values on generator pairs; skewness is enforced on input.
class Algebroid {
public:
    Algebroid() = default;
    /// `brackets` may list either ordering of a pair (never both, never a
    /// diagonal pair); missing pairs are zero.
    Algebroid(BaseSpace base, std::vector<std::string> gens, std::vector<VectorField> anchor,
              const StructureTable& brackets);

    const BaseSpace& base() const { return base_; }
    std::size_t nvars() const { return base_.dim(); }
    std::size_t rank() const { return gens_.size(); }
    const std::vector<std::string>& gen_names() const { return gens_; }
    std::optional<std::size_t> gen_index(const std::string& name) const;

    const VectorField& anchor_of(std::size_t i) const { return anchor_[i]; }
    const std::vector<VectorField>& anchor() const { return anchor_; }
    /// [e_i, e_j]
    const Section& structure(std::size_t i, std::size_t j) const { return table_[i * rank() + j]; }
    /// Nonzero brackets with i < j.
    StructureTable upper_table() const;

    Section zero_section() const { return Section(rank(), nvars()); }
    Section unit(std::size_t i) const { return Section::unit(rank(), nvars(), i); }

    /// Same structure over a base with extra trailing variables.
    Algebroid extend_base(std::vector<std::string> extra_vars) const;

    friend bool operator==(const Algebroid&, const Algebroid&) = default;

private:
    BaseSpace base_;
    std::vector<std::string> gens_;
    std::vector<VectorField> anchor_;
    std::vector<Section> table_;
};

/// V(f) = sum_k V^k df/dx^k.
Poly apply(const VectorField& v, const Poly& f);

VectorField anchor_apply(const Algebroid& a, const Section& s);
VectorField vf_bracket(const VectorField& v, const VectorField& w);
Section bracket(const Algebroid& a, const Section& x, const Section& y);
Section jacobiator(const Algebroid& a, const Section& x, const Section& y, const Section& z);

struct PairDefect {
    std::size_t i = 0, j = 0;
    /// [rho e_i, rho e_j] - rho([e_i, e_j])
    VectorField defect;
};

struct AxiomReport {
    std::vector<PairDefect> pairs;  // every pair i < j, in order
    bool ok() const;
};

AxiomReport check_axioms(const Algebroid& a);

struct TripleValue {
    std::size_t i = 0, j = 0, k = 0;
    Section value;
};

struct LieReport {
    bool axioms_ok = true;
    std::vector<TripleValue> triples;  // every triple i < j < k, in order
    bool lie() const;
    std::vector<TripleValue> nonzero() const;
};

LieReport check_lie(const Algebroid& a);

std::size_t anchor_rank_at(const Algebroid& a, std::span<const Scalar> point);

/// Images of the source generators, each a section of the target bundle.
/// An endomorphism is a bundle map from a bundle to itself.
struct BundleMap {
    std::vector<Section> images;

    Section apply(const Section& s) const;
    friend bool operator==(const BundleMap&, const BundleMap&) = default;
};
using Endomorphism = BundleMap;

BundleMap compose(const BundleMap& outer, const BundleMap& inner);
BundleMap identity_map(std::size_t rank, std::size_t nvars);
bool is_almost_complex(const Endomorphism& j);

/// Bundle-valued skew tensor B on generator pairs, used to modify a bracket.
struct BracketModifier {
    StructureTable values;  // i < j
};

/// Evaluates the modifier tensorially on arbitrary sections.
Section apply_modifier(const Algebroid& a, const BracketModifier& b, const Section& x, const Section& y);

/// Bracket [x, y] + B(x, y). Throws when some B(e_i, e_j) is not in the kernel of the anchor.
Algebroid modify_bracket(const Algebroid& a, const BracketModifier& b);

struct MorphismReport {
    std::vector<std::pair<std::size_t, VectorField>> anchor_defects;  // rho_B(f e_i) - rho_A(e_i)
    struct PairCheck {
        std::size_t i = 0, j = 0;
        Section defect;  // f[e_i, e_j]_A - [f e_i, f e_j]_B
    };
    std::vector<PairCheck> pairs;
    bool ok() const;
};

MorphismReport check_morphism(const BundleMap& f, const Algebroid& src, const Algebroid& dst);

struct SubalgebroidResult {
    bool closed = false;
    std::optional<Algebroid> algebroid;
    /// Coordinates: table[(a,b)] expresses [g_a, g_b] in the generators.
    StructureTable coordinates;
    std::pair<std::size_t, std::size_t> offending{0, 0};
    Section offending_bracket;
};

/// Closure of the F-span of `gens` under the bracket, searched with
/// coefficients of degree <= maxdeg. Throws if the generators are dependent
/// at a generic point.
SubalgebroidResult subalgebroid_restrict(const Algebroid& a, const std::vector<Section>& gens,
                                         std::vector<std::string> names, unsigned maxdeg);

/// N(X,Y) = [JX,JY] - J[X,JY] - J[JX,Y] - [X,Y]. Throws unless J^2 = -id.
Section nijenhuis(const Algebroid& a, const Endomorphism& j, const Section& x, const Section& y);

/// Symmetric m x m polynomial matrix (the inverse metric in the frame).
class CoMetric {
public:
    CoMetric() = default;
    explicit CoMetric(PolyMatrix m);

    std::size_t size() const { return m_.size(); }
    const PolyMatrix& matrix() const { return m_; }
    friend bool operator==(const CoMetric&, const CoMetric&) = default;

private:
    PolyMatrix m_;
};

/// rho G rho^T as an n x n matrix.
PolyMatrix courant_defect(const Algebroid& a, const CoMetric& g);

enum class CometricAnsatz {
    symmetric,       ///< any symmetric matrix
    block_symmetric  ///< additionally every (dim x dim) block is symmetric
};

struct CourantSolutions {
    unsigned bound = 0;
    CometricAnsatz ansatz = CometricAnsatz::symmetric;
    std::vector<CoMetric> basis;
    std::vector<Scalar> point;
    std::vector<std::vector<std::vector<Scalar>>> values_at_point;  // per basis element
    std::size_t nonzero_at_point = 0;
    /// A solution whose value at `point` is invertible, if one was found.
    std::optional<CoMetric> nondegenerate;
    Poly nondegenerate_det;
};

CourantSolutions courant_solution_space(const Algebroid& a, unsigned maxdeg, std::vector<Scalar> point,
                                        CometricAnsatz ansatz = CometricAnsatz::symmetric);

Poly poly_determinant(const PolyMatrix& m);

}  // namespace algforge

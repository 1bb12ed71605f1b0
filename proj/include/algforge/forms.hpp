#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algforge/algebroid.hpp"
#include "algforge/ideal.hpp"

namespace algforge {

/// Strictly increasing generator indices.
using IndexTuple = std::vector<std::uint32_t>;

/// Alternating form on a rank-m bundle: component I is the value on the
/// generators e_I, so the component of w^I is 1.
class Form {
public:
    using CompMap = std::map<IndexTuple, Poly>;

    Form() = default;
    Form(std::size_t rank, std::size_t nvars, unsigned degree) : rank_(rank), nvars_(nvars), degree_(degree) {}

    static Form function(std::size_t rank, const Poly& f);
    /// The dual 1-form w^i.
    static Form dual(std::size_t rank, std::size_t nvars, std::size_t i);
    /// f * w^{i_1} ^ ... ^ w^{i_k} for indices in any order.
    static Form monomial(std::size_t rank, const IndexTuple& idx, const Poly& f);

    std::size_t rank() const { return rank_; }
    std::size_t nvars() const { return nvars_; }
    unsigned degree() const { return degree_; }
    const CompMap& comps() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    Poly component(const IndexTuple& sorted) const;
    /// Adds c to the component of idx; idx may be unsorted (sign is tracked)
    /// and repeated indices make the call a no-op.
    void add(IndexTuple idx, const Poly& c);

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(const Scalar& s);
    Form operator-() const;

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Scalar& s, Form a) { return a *= s; }
    friend Form operator*(const Poly& f, const Form& a);
    friend bool operator==(const Form&, const Form&) = default;

    /// Same components over more variables.
    Form extend_vars(std::size_t nvars) const;

private:
    void check(const Form& o) const;

    std::size_t rank_ = 0;
    std::size_t nvars_ = 0;
    unsigned degree_ = 0;
    CompMap comps_;
};

Form wedge(const Form& a, const Form& b);
Form differential(const Algebroid& a, const Form& w);
Form d_squared(const Algebroid& a, const Form& w);

/// Value on generator arguments, alternating in their order.
Poly evaluate_on(const Form& w, const IndexTuple& args);

/// The 3-forms d^2 w^alpha, one per dual generator.
struct IdealBasis {
    std::vector<Form> gens3;
};

IdealBasis lambda2_basis(const Algebroid& a);

/// f * w^J ^ d^2 w^alpha
struct IdealTerm {
    IndexTuple j;
    std::size_t alpha = 0;
    Poly f;
};

Form ideal_element(const Algebroid& a, const IdealBasis& basis, const std::vector<IdealTerm>& terms);

struct Lambda2Membership {
    Verdict verdict = Verdict::no;
    unsigned bound = 0;
    std::vector<IdealTerm> witness;
};

Lambda2Membership in_lambda2(const Algebroid& a, const Form& w, unsigned maxdeg);
Lambda2Membership in_lambda2(const Algebroid& a, const IdealBasis& basis, const Form& w, unsigned maxdeg);

struct StrongClosed {
    Verdict verdict = Verdict::no;
    unsigned bound = 0;
    Form theta;  // d w == d^2 theta when verdict is yes
};

StrongClosed strong_closed(const Algebroid& a, const Form& w, unsigned maxdeg);
Lambda2Membership weak_closed(const Algebroid& a, const Form& w, unsigned maxdeg);

struct WeakExact {
    Verdict verdict = Verdict::no;
    unsigned bound = 0;
    Form theta;                    // w == ideal part + d theta
    std::vector<IdealTerm> ideal;  // ideal part
};

WeakExact weak_exact(const Algebroid& a, const Form& w, unsigned maxdeg);

/// rho^* of a form on the base, given over the tangent frame dx^1..dx^n.
Form pullback(const Algebroid& a, const Form& base_form);

/// Representative of w modulo the ideal. Exact when every generator of the
/// relevant degree is a single monomial term; otherwise reduces against
/// generator multiples of degree <= maxdeg.
Form normal_form_mod_lambda2(const Algebroid& a, const Form& w, unsigned maxdeg);

std::string form_to_string(const Form& w, const std::vector<std::string>& gen_names,
                           const std::vector<std::string>& var_names);

}  // namespace algforge

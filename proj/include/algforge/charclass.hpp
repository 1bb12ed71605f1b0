#pragma once

#include <cstddef>
#include <vector>

#include "algforge/connection.hpp"
#include "algforge/forms.hpp"

namespace algforge {

/// Square matrix of forms of one degree; entry (a, b) sits in row a, column b.
class FormMatrix {
public:
    FormMatrix() = default;
    FormMatrix(std::size_t size, std::size_t rank, std::size_t nvars, unsigned degree);

    std::size_t size() const { return n_; }
    unsigned degree() const { return degree_; }
    const Form& operator()(std::size_t a, std::size_t b) const { return e_[a * n_ + b]; }
    Form& operator()(std::size_t a, std::size_t b) { return e_[a * n_ + b]; }
    bool is_zero() const;

    FormMatrix& operator+=(const FormMatrix& o);
    FormMatrix& operator-=(const FormMatrix& o);
    friend FormMatrix operator+(FormMatrix a, const FormMatrix& b) { return a += b; }
    friend FormMatrix operator-(FormMatrix a, const FormMatrix& b) { return a -= b; }
    friend bool operator==(const FormMatrix&, const FormMatrix&) = default;

private:
    std::size_t n_ = 0;
    unsigned degree_ = 0;
    std::vector<Form> e_;
};

FormMatrix wedge(const FormMatrix& x, const FormMatrix& y);
FormMatrix differential(const Algebroid& a, const FormMatrix& m);
Form trace(const FormMatrix& m);

/// theta(a, b) = sum_beta Gamma^a_{beta b} w^beta
FormMatrix connection_forms(const EConnection& c);
/// Curvature 2-forms assembled from R(e_alpha, e_beta) on the bundle generators.
FormMatrix curvature_matrix(const EConnection& c);
/// R - d theta - theta ^ theta
FormMatrix cartan_residual(const EConnection& c);
/// dR - d^2 theta - R ^ theta + theta ^ R
FormMatrix dR_residual(const EConnection& c);
/// Tr R^k
Form char_form(const EConnection& c, unsigned k);

/// E x TR: one extra variable t and one extra generator e_t, both last.
struct ProductAlgebroid {
    Algebroid base;
    Algebroid ext;

    std::size_t t_var() const { return base.nvars(); }
    std::size_t t_gen() const { return base.rank(); }
};

ProductAlgebroid product_algebroid(const Algebroid& e, const std::string& t_name = "t",
                                   const std::string& gen_name = "Et");

/// Fiber integral of the contraction with e_t.
Form homotopy_H(const ProductAlgebroid& p, const Form& w);
/// Substitutes t = u and drops every component involving e_t.
Form restrict_at(const ProductAlgebroid& p, const Form& w, const Scalar& u);
/// Pullback along the projection to E.
Form lift_form(const ProductAlgebroid& p, const Form& w);

/// (1 - t) nabla1 + t nabla2 along E, zero along e_t.
EConnection interpolate(const ProductAlgebroid& p, const EConnection& c1, const EConnection& c2);

struct HomotopyCheck {
    Form identity1;  // H d w + d H w - (I1 - I0) w
    Form identity2;  // H d^2 w - d^2 H w
};

HomotopyCheck homotopy_identity_check(const ProductAlgebroid& p, const Form& w);

struct TransgressionReport {
    Form difference;    // Tr R2^k - Tr R1^k
    Form theta;         // H Tr R~^k
    Form ideal_part;    // H d~ Tr R~^k
    Form residual;      // difference - d theta - ideal_part
    bool endpoints_ok = false;  // restrictions of Tr R~^k at t = 0, 1
    Lambda2Membership membership;
};

TransgressionReport transgression_check(const EConnection& c1, const EConnection& c2, unsigned k,
                                        unsigned maxdeg);

struct PullbackConsistency {
    Form char_form;        // of the induced connection
    Form pulled_back;      // rho^* of the base form
    Form base_char_form;   // on the tangent frame
    bool equal = false;
    bool equal_mod_lambda2 = false;
};

PullbackConsistency pullback_consistency(const Algebroid& a, const EConnection& base_connection, unsigned k,
                                         unsigned maxdeg);

}  // namespace algforge

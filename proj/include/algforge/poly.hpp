#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace algforge {

/// Exact rational scalar. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;

std::string scalar_to_string(const Scalar& s);

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different variable counts, ranks or bases.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Exponent vector of a monomial; its length is the variable count.
using Monomial = std::vector<std::uint32_t>;

unsigned total_degree(const Monomial& m);

/// Graded lexicographic order with x1 > x2 > ... > xn.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// True when every exponent of `divisor` is at most the matching one of `m`.
bool divides(const Monomial& divisor, const Monomial& m);

/// All monomials of total degree <= maxdeg, ascending in grlex.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned maxdeg);

/// Multivariate polynomial with rational coefficients in a fixed number of
/// variables. Only nonzero coefficients are stored, so two polynomials are
/// equal iff their term maps are equal.
class Poly {
public:
    using TermMap = std::map<Monomial, Scalar, GrlexLess>;

    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Scalar& c);
    static Poly variable(std::size_t nvars, std::size_t index);
    static Poly term(Monomial m, const Scalar& c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// Lowest total degree of a term; -1 for the zero polynomial.
    int min_degree() const;
    /// Lowest degree counted only over the variables [0, nbase).
    int min_degree_in(std::size_t nbase) const;

    bool is_constant() const;
    Scalar constant_term() const;
    Scalar coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const Scalar& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Scalar& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b);

    Poly pow(unsigned e) const;
    Poly partial(std::size_t var) const;
    /// Definite integral over [0, 1] in `var`; the result does not involve `var`.
    Poly integrate_unit(std::size_t var) const;
    Scalar eval(std::span<const Scalar> point) const;
    /// Substitutes `value` for `var` keeping the variable count.
    Poly substitute(std::size_t var, const Scalar& value) const;
    /// Substitutes `value` for `var` and removes that variable.
    Poly eliminate(std::size_t var, const Scalar& value) const;
    /// Re-embeds into `nvars` variables; the old ones keep their indices.
    Poly extend(std::size_t nvars) const;
    /// Keeps only the terms of total degree `d` in the first `nbase` variables.
    Poly homogeneous_part(unsigned d, std::size_t nbase) const;

    std::string to_string(std::span<const std::string> var_names) const;

private:
    void check_same(const Poly& o) const;

    std::size_t nvars_ = 0;
    TermMap terms_;
};

/// Default variable names x1..xn.
std::vector<std::string> default_var_names(std::size_t n);

}  // namespace algforge

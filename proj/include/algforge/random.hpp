#pragma once

#include <cstdint>
#include <random>

#include "algforge/algebroid.hpp"
#include "algforge/connection.hpp"
#include "algforge/forms.hpp"

namespace algforge {

/// Seeded generator for property checks. Draws are reduced by plain modulo so
/// sequences do not depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }
    /// Uniform integer in [lo, hi].
    long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

private:
    std::mt19937_64 eng_;
};

/// Up to `terms` terms of degree <= maxdeg with coefficients in [-5, 5].
Poly random_poly(Rng& rng, std::size_t nvars, unsigned maxdeg, std::size_t terms = 3);
Section random_section(Rng& rng, const Algebroid& a, unsigned maxdeg, std::size_t terms = 2);
Form random_form(Rng& rng, std::size_t rank, std::size_t nvars, unsigned degree, unsigned maxdeg,
                 std::size_t comps = 3);
/// Connection on E with random gamma; about half of the entries are zero.
EConnection random_connection(Rng& rng, const Algebroid& a, unsigned maxdeg);
/// Kernel-valued modifier with random coefficient polynomials on every pair.
BracketModifier random_kernel_modifier(Rng& rng, const Algebroid& a, const std::vector<Section>& kernel,
                                       unsigned maxdeg);

}  // namespace algforge

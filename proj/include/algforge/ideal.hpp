#pragma once

#include <string>
#include <vector>

#include "algforge/poly.hpp"

namespace algforge {

/// Outcome of a witness search. `no_witness_within_bound` is what a bounded
/// search reports when it fails; it is never an unconditional "no".
enum class Verdict { yes, no, no_witness_within_bound };

std::string to_string(Verdict v);

/// Ideal of the coefficient ring given by generators.
class CoeffIdeal {
public:
    CoeffIdeal(std::size_t nvars, std::vector<Poly> generators);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Poly>& generators() const { return gens_; }
    /// Every generator is a single term.
    bool monomial() const { return monomial_; }

private:
    std::size_t nvars_;
    std::vector<Poly> gens_;
    bool monomial_ = true;
};

struct IdealMembership {
    Verdict verdict = Verdict::no;
    unsigned bound = 0;
    /// p == sum_i cofactors[i] * generators[i] when verdict is yes.
    std::vector<Poly> cofactors;
};

/// Exact for monomial ideals; otherwise a linear solve for cofactors of
/// degree <= maxdeg.
IdealMembership ideal_member(const Poly& p, const CoeffIdeal& ideal, unsigned maxdeg);

}  // namespace algforge

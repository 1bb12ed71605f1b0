#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "algforge/algebroid.hpp"

namespace algforge {

enum class CertificateStatus { infeasible, inconclusive, trivially_feasible };

std::string to_string(CertificateStatus s);

/// Degree bookkeeping for J' = J - (cyclic B terms) on one generator triple,
/// with B(e_p, e_q) = sum_a B^a_pq K_a and every coefficient of B^a_pq of
/// degree <= bound an independent parameter.
struct InfeasibilityCertificate {
    CertificateStatus status = CertificateStatus::inconclusive;
    std::array<std::size_t, 3> triple{};
    unsigned bound = 0;
    std::size_t parameters = 0;
    Section jacobiator;           // over the base ring
    int jacobiator_min_degree = -1;
    Section lowest_part;          // homogeneous part of J of that degree
    Section modifier_terms;       // over base variables plus parameters
    int modifier_min_degree = -1; // in the base variables; -1 when the terms vanish
    bool cross_check = false;     // J - modifier_terms equals J' computed through modify_bracket
};

/// `kernel` spans the kernel of the anchor.
InfeasibilityCertificate lie_infeasibility_certificate(const Algebroid& a, const std::vector<Section>& kernel,
                                                       std::array<std::size_t, 3> triple, unsigned maxdeg);

/// Cyclic sum of [B(X,Y),Z] + B([X,Y],Z) + B(B(X,Y),Z).
Section modifier_jacobiator(const Algebroid& a, const BracketModifier& b, const Section& x, const Section& y,
                            const Section& z);

}  // namespace algforge

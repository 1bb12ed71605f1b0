#pragma once

#include <string>
#include <vector>

#include "algforge/document.hpp"

namespace algforge {

/// Coordinate algebroid on R^n: generators D1..Dn, identity anchor, zero bracket.
Algebroid tangent_algebroid(std::size_t n);

/// Built-in documents: E0, E0prime, E0prime_lie, E0doubleprime, E00, E01, E02
/// and tangent(n). Throws Error on an unknown name.
Document builtin(const std::string& name);
std::vector<std::string> builtin_names();

/// E0 with the bracket [X11, X21] = 2 x2 X21 and the rest unchanged.
Algebroid e0_itemized_variant();
/// Y11 -> X11, Y22 -> X22, Yc1 -> K1, Yc2 -> K2 from E0prime to E0.
BundleMap e0_morphism_f0();

}  // namespace algforge

#pragma once

#include <string>
#include <vector>

#include "algforge/builtins.hpp"
#include "algforge/dsl.hpp"
#include "algforge/random.hpp"

namespace algforge::test {

inline const std::vector<std::string>& plane() {
    static const std::vector<std::string> v{"x1", "x2"};
    return v;
}

inline Poly P(const std::string& text, const std::vector<std::string>& vars = plane()) { return parse_poly(text, vars); }

inline Section sec(const Algebroid& a, std::vector<std::string> coeffs) {
    Section s = a.zero_section();
    for (std::size_t i = 0; i < coeffs.size(); ++i) s[i] = P(coeffs[i], a.base().var_names);
    return s;
}

inline VectorField vf(std::vector<std::string> coeffs, const std::vector<std::string>& vars = plane()) {
    VectorField v(vars.size(), vars.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) v[i] = P(coeffs[i], vars);
    return v;
}

inline Form form(const Document& d, const std::string& text) {
    std::string src = serialize(d) + "form zz_probe = " + text + "\n";
    return *parse_document(src).form("zz_probe");
}

}  // namespace algforge::test

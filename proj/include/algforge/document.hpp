#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algforge/algebroid.hpp"
#include "algforge/connection.hpp"
#include "algforge/forms.hpp"

namespace algforge {

template <class T>
using Named = std::vector<std::pair<std::string, T>>;

template <class T>
const T* find_named(const Named<T>& list, const std::string& name) {
    for (const auto& [n, v] : list)
        if (n == name) return &v;
    return nullptr;
}

/// One base, one bundle and everything declared over it.
struct Document {
    std::string bundle_name;
    Algebroid algebroid;
    /// Sections spanning the kernel of the anchor, by name.
    std::vector<std::string> kernel;
    Named<Section> sections;
    Named<Endomorphism> endos;
    Named<EConnection> connections;
    Named<CoMetric> cometrics;
    Named<Form> forms;

    const Section* section(const std::string& n) const { return find_named(sections, n); }
    const Endomorphism* endo(const std::string& n) const { return find_named(endos, n); }
    const EConnection* connection(const std::string& n) const { return find_named(connections, n); }
    const CoMetric* cometric(const std::string& n) const { return find_named(cometrics, n); }
    const Form* form(const std::string& n) const { return find_named(forms, n); }

    std::vector<Section> kernel_sections() const;

    friend bool operator==(const Document&, const Document&) = default;
};

}  // namespace algforge

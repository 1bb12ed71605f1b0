#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "algforge/document.hpp"

namespace algforge {

/// "builtin:NAME" or a path to a DSL file. Sets `digest` to the digest of the source text.
Document load_document(const std::string& source, std::string& digest);

/// `args` excludes the program name. Returns 0 when every check passes, 1 when
/// any check fails or is inconclusive, 2 on usage, parse or semantic errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algforge

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "algforge/document.hpp"

namespace algforge {

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Malformed text: position plus what the parser would have accepted.
class ParseError : public Error {
public:
    ParseError(SourcePos pos, std::vector<std::string> expected, std::string found);

    SourcePos pos() const { return pos_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    SourcePos pos_;
    std::vector<std::string> expected_;
    std::string found_;
};

/// Well-formed text that does not describe a valid object.
class SemanticError : public Error {
public:
    SemanticError(SourcePos pos, const std::string& what);
    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

Document parse_document(std::string_view text);
std::string serialize(const Document& doc);

/// Polynomial in the given variables, in the shared expression syntax.
Poly parse_poly(std::string_view text, const std::vector<std::string>& vars);

std::string section_to_string(const Section& s, const std::vector<std::string>& gen_names,
                              const std::vector<std::string>& var_names);
std::string field_to_string(const VectorField& v, const std::vector<std::string>& var_names);

}  // namespace algforge

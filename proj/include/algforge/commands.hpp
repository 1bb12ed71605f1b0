#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "algforge/document.hpp"
#include "algforge/report.hpp"

namespace algforge {

/// Bad command-line input that survived parsing: unknown names, malformed triples.
class UsageError : public Error {
public:
    using Error::Error;
};

using Triple = std::array<std::size_t, 3>;

/// "i,j,k" with generator names or 1-based indices.
Triple parse_triple(const Document& doc, const std::string& text);

Report cmd_check(const Document& doc);
/// Empty `triples` means every triple i < j < k.
Report cmd_jacobiator(const Document& doc, const std::vector<Triple>& triples);
Report cmd_lie(const Document& doc);
Report cmd_connection_report(const Document& doc, const std::string& connection);
/// Fills `derived` with the derived bundle as a document.
Report cmd_derive(const Document& doc, const std::string& connection, Document& derived);
Report cmd_cohomology(const Document& doc, const std::string& form, unsigned maxdeg);
Report cmd_charclass(const Document& doc, const std::string& connection, unsigned max_k, unsigned maxdeg);
Report cmd_transgression(const Document& doc, const std::string& c1, const std::string& c2, unsigned k,
                         unsigned maxdeg);
Report cmd_courant(const Document& doc, unsigned maxdeg);
Report cmd_nijenhuis(const Document& doc, const std::string& endo);
Report cmd_obstruction(const Document& doc, const Triple& triple, unsigned maxdeg);

/// Text forms of engine objects in the document's names.
std::string show(const Document& doc, const Section& s);
std::string show(const Document& doc, const VectorField& v);
std::string show(const Document& doc, const Form& w);
std::string show(const Document& doc, const PolyMatrix& m);
std::string triple_name(const Document& doc, const Triple& t);

}  // namespace algforge

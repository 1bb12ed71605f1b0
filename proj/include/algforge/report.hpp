#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace algforge {

inline constexpr const char* kVersion = "algforge 1.0.0";

enum class Status { pass, fail, inconclusive };

std::string to_string(Status s);

struct Check {
    std::string name;
    Status status = Status::pass;
    std::string witness;  // DSL syntax, empty when there is nothing to show
    std::string note;
};

struct Report {
    std::string command;
    std::string input_digest;
    std::vector<Check> checks;
    std::uint64_t seed = 0;
    std::string version = kVersion;

    void add(std::string name, bool ok, std::string witness = {}, std::string note = {});
    bool passed() const;
    /// 0 when every check passes, 1 otherwise.
    int exit_code() const;
};

/// FNV-1a 64, lower-case hex.
std::string digest(std::string_view bytes);

std::string to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace algforge

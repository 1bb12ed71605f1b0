#include "algforge/report.hpp"

#include <cctype>
#include <cstdio>

#include <json.hpp>

namespace algforge {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

void Report::add(std::string name, bool ok, std::string witness, std::string note) {
    checks.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(witness), std::move(note)});
}

bool Report::passed() const {
    for (const auto& c : checks)
        if (c.status != Status::pass) return false;
    return true;
}

int Report::exit_code() const { return passed() ? 0 : 1; }

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["input_digest"] = r.input_digest;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["status"] = to_string(c.status);
        if (!c.witness.empty()) e["witness"] = c.witness;
        if (!c.note.empty()) e["note"] = c.note;
        j["checks"].push_back(std::move(e));
    }
    j["seed"] = r.seed;
    j["version"] = r.version;
    return j.dump(2) + "\n";
}

std::string to_text(const Report& r) {
    std::size_t failed = 0;
    std::string out = r.command + " (" + r.version + ", seed " + std::to_string(r.seed) + ")\n";
    for (const auto& c : r.checks) {
        if (c.status != Status::pass) ++failed;
        std::string tag = to_string(c.status);
        for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        out += "[" + tag + "] " + c.name + "\n";
        if (!c.witness.empty()) out += "    witness: " + c.witness + "\n";
        if (!c.note.empty()) out += "    note: " + c.note + "\n";
    }
    out += std::to_string(r.checks.size() - failed) + "/" + std::to_string(r.checks.size()) + " checks passed\n";
    return out;
}

}  // namespace algforge

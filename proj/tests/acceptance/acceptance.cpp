#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "algforge/verify.hpp"

using namespace algforge;

int main(int argc, char** argv) {
    int only = 0;
    std::uint64_t seed = 0;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--only") && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::fprintf(stderr, "usage: %s [--only N] [--seed S]\n", argv[0]);
            return 2;
        }
    }
    if (only < 0 || only > kCriterionCount) {
        std::fprintf(stderr, "criterion must be in 1..%d\n", kCriterionCount);
        return 2;
    }

    int failed = 0;
    for (int id = 1; id <= kCriterionCount; ++id) {
        if (only && id != only) continue;
        const CriterionResult r = run_criterion(id, seed);
        std::printf("%s %2d %s\n", r.passed() ? "PASS" : "FAIL", r.id, r.title.c_str());
        if (r.passed()) continue;
        ++failed;
        for (const auto& c : r.checks) {
            if (c.status == Status::pass) continue;
            std::printf("       [%s] %s\n", to_string(c.status).c_str(), c.name.c_str());
            if (!c.witness.empty()) std::printf("         witness: %s\n", c.witness.c_str());
            if (!c.note.empty()) std::printf("         note: %s\n", c.note.c_str());
        }
    }
    return failed ? 1 : 0;
}

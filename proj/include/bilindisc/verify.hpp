#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bilindisc {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int samples = 100;
    int jobs = 1;
};

// Suites: p11, det3, thm1, lemma, euler, or all. Trial t of a check draws from
// Sampler(seed, (check << 32) + t) so results do not depend on `jobs`.
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options);

const std::vector<std::string>& suite_names();

}  // namespace bilindisc

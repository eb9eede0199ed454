#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tref/graph.hpp"
#include "tref/tangles.hpp"

namespace tref {

inline constexpr int kMaxCanonicalCheck = 20;

enum class CheckStatus { kPass, kFail, kSkip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

// Runs every invariant check on (g, k). Sampled checks draw from seed.
std::vector<CheckResult> run_checks(const Graph& g, int k, std::uint64_t seed,
                                    long long max_nodes = kDefaultMaxNodes);

}  // namespace tref

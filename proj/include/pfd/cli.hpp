#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace pfd {

/// Entry point for the pfdecomp tool; args exclude the program name.
/// Exit codes: 0 success/pass, 1 verified-negative (certificate, unsat,
/// failed verification), 2 usage or parse error, 3 timeout or cap.
int run_cli(const std::vector<std::string>& args);

struct CorpusOutcome {
  nlohmann::json summary;
  bool all_ok = false;
};

/// Seeded random-multigraph driver: per graph and k in {1,2,3}, decompose at
/// the minimal d passing the density hypothesis (or at d=1 expecting a
/// certificate when none exists) and verify the outcome. Deterministic for a
/// fixed seed.
CorpusOutcome run_corpus(unsigned long long seed, int count, int n_max, int m_max);

}  // namespace pfd

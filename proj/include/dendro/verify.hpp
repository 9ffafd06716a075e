#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dendro {

struct SuiteReport {
  std::string suite;
  int checks_run = 0;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
};

// "height_fn", "tree_core", "order_measure", "codec", "random_gen",
// "roundtrip"; run_verify also accepts "all".
const std::vector<std::string>& verify_suite_names();

// Runs one named invariant suite (or every suite for "all") with `cases`
// randomized repetitions on top of the fixed instances each suite carries.
// Deterministic given (name, cases, seed). Throws domain_error for unknown
// suite names or cases < 1.
std::vector<SuiteReport> run_verify(const std::string& name, int cases,
                                    std::uint64_t seed);

}  // namespace dendro

// The acceptance suite: twelve numbered criteria over the whole library,
// each answering with one pass/fail line. Expected values and tolerances
// are pinned here, not computed, so a regression cannot move the goalposts.
#ifndef OPNKIT_VERIFY_HPP
#define OPNKIT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "opnkit/core_arith.hpp"

namespace opnkit {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  FactorConfig factor_config = {};
};

// Runs criteria 1..12 in order. Criterion 12 summarizes the substituted
// desk-scale basis and passes iff 1..11 all passed.
std::vector<CriterionResult> run_acceptance_suite(const VerifyOptions& opt);

// "PASS  3  prime-power-quotients  (0.41s)  detail" style line.
std::string format_criterion_line(const CriterionResult& r);

}  // namespace opnkit

#endif

// Acceptance gate: runs the twelve-criterion suite and prints one line per
// criterion. The build is acceptable only when every line reads PASS.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "opnkit/verify.hpp"

TEST_CASE("acceptance suite") {
  opnkit::VerifyOptions opt;
  opt.seed = 0;
  const auto results = opnkit::run_acceptance_suite(opt);
  REQUIRE(results.size() == 12);
  for (const auto& r : results) {
    std::printf("%s\n", opnkit::format_criterion_line(r).c_str());
    std::fflush(stdout);
  }
  for (const auto& r : results) {
    CAPTURE(r.id);
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}

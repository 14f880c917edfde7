#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "opnkit/density.hpp"

using namespace opnkit;

TEST_CASE("square-full counts, exact") {
  CHECK(squarefull_count(Int(1)) == 1);    // just 1
  CHECK(squarefull_count(Int(3)) == 1);
  CHECK(squarefull_count(Int(4)) == 2);    // 1, 4
  CHECK(squarefull_count(Int(50)) == 10);  // 1,4,8,9,16,25,27,32,36,49
  CHECK(squarefull_count(pow_ui(Int(10), 5)) == 619);
  CHECK(squarefull_count(pow_ui(Int(10), 6)) == 2027);
}

TEST_CASE("square-full count matches a per-integer oracle") {
  const unsigned long lim = 20000;
  unsigned long want = 0;
  for (unsigned long n = 1; n <= lim; ++n) {
    unsigned long m = n;
    bool full = true;
    for (unsigned long d = 2; d * d <= m; ++d) {
      if (m % d) continue;
      unsigned e = 0;
      while (m % d == 0) {
        m /= d;
        ++e;
      }
      if (e < 2) {
        full = false;
        break;
      }
    }
    if (m > 1) full = false;  // leftover prime to the first power
    if (full) ++want;
  }
  CHECK(squarefull_count(Int(lim)) == Int(want));
}

TEST_CASE("square-full counting is monotone and near 2.17 sqrt(N)") {
  Int prev = 0;
  for (unsigned long k = 1; k <= 6; ++k) {
    const Int c = squarefull_count(pow_ui(Int(10), k));
    CHECK(c >= prev);
    prev = c;
  }
  const double c6 = squarefull_count(pow_ui(Int(10), 6)).get_d();
  CHECK(c6 / 1000.0 > 1.0);
  CHECK(c6 / 1000.0 < 3.0);
}

TEST_CASE("prime product density over pinned floor lists") {
  // 10^6, 10^4, 10^2 and smallest odd primes: the eight-factor list
  const std::vector<Int> floors8 = {pow_ui(Int(10), 6), pow_ui(Int(10), 4),
                                    Int(100), Int(3),  Int(5),
                                    Int(7),  Int(11), Int(13)};
  const auto rho8 = prime_product_density(floors8);
  CHECK(rho8.factor_count == 8);
  CHECK(rho8.value.to_double() ==
        doctest::Approx(8.032e-5).epsilon(0.01));

  // eleven factors with 3 excluded
  const std::vector<Int> floors11 = {
      pow_ui(Int(10), 6), pow_ui(Int(10), 4), Int(100), Int(5), Int(7),
      Int(11), Int(13), Int(17), Int(19), Int(23), Int(29)};
  const auto rho11 = prime_product_density(floors11);
  CHECK(rho11.value.to_double() ==
        doctest::Approx(1.004e-6).epsilon(0.01));

  CHECK_THROWS_AS(prime_product_density({Int(1)}), std::invalid_argument);
  CHECK_THROWS_AS(prime_product_density({}), std::invalid_argument);
}

TEST_CASE("assembled bound composes floors automatically") {
  const Int start = pow_ui(Int(10), 301);
  const auto e8 = opn_density_bound(start, 8, false);
  REQUIRE(e8.prime_floor_bounds.size() == 8);
  CHECK(e8.prime_floor_bounds[0] == pow_ui(Int(10), 6));
  CHECK(e8.prime_floor_bounds[3] == 3);
  CHECK(e8.prime_floor_bounds[7] == 13);

  const auto e11 = opn_density_bound(start, 11, true);
  REQUIRE(e11.prime_floor_bounds.size() == 11);
  CHECK(e11.prime_floor_bounds[3] == 5);
  CHECK(e11.prime_floor_bounds[10] == 29);

  // bound = mean square-full density at the interval start times the
  // squared prime-product density
  const auto rho8 = prime_product_density(e8.prime_floor_bounds);
  const double want_log10 =
      -0.5 * 301.0 + 2.0 * std::log10(rho8.value.to_double());
  CHECK(e8.value.log10() == doctest::Approx(want_log10).epsilon(0.001));
}

TEST_CASE("assembled bounds land within two orders of the pinned figures") {
  const Int start = pow_ui(Int(10), 301);
  const auto e8 = opn_density_bound(start, 8, false);
  const auto e11 = opn_density_bound(start, 11, true);
  CHECK(std::abs(e8.value.log10() - (std::log10(3.28) - 159.0)) < 2.0);
  CHECK(std::abs(e11.value.log10() - (std::log10(5.13) - 163.0)) < 2.0);
}

TEST_CASE("doubling the interval start scales the bound by 1/sqrt(2)") {
  const Int start = pow_ui(Int(10), 40);
  const auto a = opn_density_bound(start, 8, false);
  const auto b = opn_density_bound(2 * start, 8, false);
  const double ratio = b.value.to_double() / a.value.to_double();
  CHECK(ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("assembled bound validates its inputs") {
  CHECK_THROWS_AS(opn_density_bound(Int(1), 8, false), std::invalid_argument);
  CHECK_THROWS_AS(opn_density_bound(pow_ui(Int(10), 10), 7, false),
                  std::invalid_argument);
}

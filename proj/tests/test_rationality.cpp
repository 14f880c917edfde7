#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "opnkit/rationality.hpp"
#include "opnkit/repunit.hpp"
#include "oracles.hpp"

using namespace opnkit;

namespace {

CandidateSignature sig_of(unsigned long s, unsigned long e,
                          std::vector<std::pair<unsigned long, unsigned long>>
                              comps) {
  CandidateSignature sig;
  sig.special_prime = Int(s);
  sig.special_exponent = e;
  for (const auto& [q, a] : comps) sig.components.emplace_back(Int(q), a);
  return sig;
}

}  // namespace

TEST_CASE("signature validation") {
  CHECK_NOTHROW(sig_of(5, 1, {}).validate());
  CHECK_NOTHROW(sig_of(13, 5, {{3, 2}, {7, 1}}).validate());

  CHECK_THROWS_AS(sig_of(6, 1, {}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(sig_of(7, 1, {}).validate(), std::invalid_argument);   // 3 mod 4
  CHECK_THROWS_AS(sig_of(13, 2, {}).validate(), std::invalid_argument);  // exp
  CHECK_THROWS_AS(sig_of(13, 1, {{2, 1}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(sig_of(13, 1, {{9, 1}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(sig_of(13, 1, {{13, 1}}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(sig_of(13, 1, {{3, 1}, {3, 2}}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(sig_of(13, 1, {{3, 0}}).validate(), std::invalid_argument);
}

TEST_CASE("signature value") {
  CHECK(sig_of(5, 1, {}).value() == 5);
  CHECK(sig_of(5, 1, {{3, 1}}).value() == 45);
  CHECK(sig_of(13, 1, {{3, 2}}).value() == 13 * 81);
  CHECK(sig_of(5, 5, {{3, 1}}).value() == 3125 * 9);
}

TEST_CASE("sigma pinned examples and oracle agreement") {
  CHECK(sigma(sig_of(5, 1, {{3, 1}})) == 78);
  CHECK(sigma(sig_of(5, 1, {})) == 6);
  CHECK(sigma(sig_of(13, 1, {{3, 2}})) == 1694);

  // multiplicativity against divisor enumeration for every Euler-form
  // N < 10^6 with special < 100, components from {3, 7, 11}
  for (unsigned long s : {5ul, 13ul, 17ul, 29ul, 37ul, 41ul, 53ul, 61ul,
                          73ul, 89ul, 97ul}) {
    for (unsigned long e : {1ul, 5ul}) {
      std::vector<std::vector<std::pair<unsigned long, unsigned long>>> comb =
          {{}, {{3, 1}}, {{3, 2}}, {{7, 1}}, {{3, 1}, {7, 1}},
           {{3, 1}, {11, 1}}, {{3, 2}, {7, 1}}};
      for (const auto& comps : comb) {
        const auto sig = sig_of(s, e, comps);
        const Int n = sig.value();
        if (n >= 1000000) continue;
        REQUIRE(sigma(sig) == oracle::sigma(n));
      }
    }
  }
}

TEST_CASE("abundancy exact rationals") {
  const Rat a = abundancy(sig_of(5, 1, {{3, 1}}));
  CHECK(a.get_num() == 26);
  CHECK(a.get_den() == 15);
  const Rat b = abundancy(sig_of(5, 1, {}));
  CHECK(b.get_num() == 6);
  CHECK(b.get_den() == 5);
  // strictly between 1 and 2 at desk scale without many components
  CHECK(abundancy(sig_of(13, 1, {{3, 2}})) > 1);
}

TEST_CASE("assembled product equals 2 s sigma(N)") {
  CHECK(product_eq5(sig_of(5, 1, {})) == 60);
  CHECK(product_eq5(sig_of(5, 1, {{3, 1}})) == 780);
  CHECK(product_eq5(sig_of(13, 1, {{3, 2}})) == 44044);

  std::mt19937_64 rng(99);
  const std::vector<unsigned long> odd = {3, 7, 11, 19, 23, 31};
  for (int it = 0; it < 100; ++it) {
    const unsigned long specials[] = {5, 13, 17, 29, 37};
    const auto s = specials[rng() % 5];
    const auto e = 4 * (rng() % 3) + 1;
    std::vector<std::pair<unsigned long, unsigned long>> comps;
    std::set<unsigned long> used;
    const unsigned k = rng() % 4;
    while (used.size() < k) used.insert(odd[rng() % odd.size()]);
    for (auto q : used) comps.emplace_back(q, rng() % 3 + 1);
    const auto sig = sig_of(s, e, comps);
    REQUIRE(product_eq5(sig) == 2 * sig.special_prime * sigma(sig));
    // necessity: a perfect candidate would make the product 4sN, a square
    REQUIRE(is_perfect_square(4 * sig.special_prime * sig.value()));
  }
}

TEST_CASE("rationality report for the 44044 example") {
  const auto rep = rationality_check(sig_of(13, 1, {{3, 2}}));
  CHECK_FALSE(rep.is_square);
  CHECK(rep.product == 44044);
  CHECK(rep.has_three_two_component);
  CHECK(rep.kernel_available);
  REQUIRE(rep.kernel.has_value());
  CHECK(rep.kernel->kappa == 91);
  CHECK(rep.kernel->chi == 22);
  REQUIRE(rep.unmatched_primes.size() == 2);
  CHECK(rep.unmatched_primes[0] == 7);
  CHECK(rep.unmatched_primes[1] == 13);
  CHECK(rep.abundance.get_num() == 1694);
  CHECK(rep.abundance.get_den() == 1053);
}

TEST_CASE("rationality report for the 60 example") {
  const auto rep = rationality_check(sig_of(5, 1, {}));
  CHECK_FALSE(rep.is_square);
  CHECK(rep.product == 60);
  CHECK_FALSE(rep.has_three_two_component);
  REQUIRE(rep.kernel.has_value());
  CHECK(rep.kernel->kappa == 15);
  CHECK(rep.kernel->chi == 2);
  REQUIRE(rep.unmatched_primes.size() == 2);
  CHECK(rep.unmatched_primes[0] == 3);
  CHECK(rep.unmatched_primes[1] == 5);
}

TEST_CASE("unmatched primes divide the product to an odd power") {
  std::mt19937_64 rng(1234);
  for (int it = 0; it < 50; ++it) {
    const unsigned long specials[] = {5, 13, 17, 29};
    const auto sig =
        sig_of(specials[rng() % 4], 1,
               {{3 + 4 * (rng() % 2 == 0), rng() % 2 + 1}});
    const auto rep = rationality_check(sig);
    REQUIRE(rep.kernel_available);
    for (const Int& p : rep.unmatched_primes) {
      REQUIRE(v_p(rep.product, p) % 2 == 1);
    }
    REQUIRE(rep.is_square == (rep.kernel->kappa == 1));
    REQUIRE(std::is_sorted(rep.unmatched_primes.begin(),
                           rep.unmatched_primes.end()));
  }
}

TEST_CASE("kernel degrades gracefully under a tiny factoring budget") {
  // large product whose factorization cannot finish: the square answer
  // must still be present with the kernel marked unavailable
  FactorConfig cfg;
  cfg.rho_budget = 200;
  // repunit(1319, 7) = 256934819 * 20510450339 resists this budget
  const auto sig = sig_of(12241, 1, {{1319, 3}});
  const auto rep = rationality_check(sig, cfg);
  CHECK_FALSE(rep.is_square);
  CHECK_FALSE(rep.kernel_available);
  CHECK_FALSE(rep.kernel.has_value());
  CHECK_FALSE(rep.product_factorization.has_value());
  CHECK(rep.unmatched_primes.empty());
  CHECK(rep.product == product_eq5(sig));
}

TEST_CASE("special class reduction") {
  const auto r1 = special_class_check(sig_of(5, 1, {{3, 1}}));
  CHECK(r1.reduces);  // gcd(3, 13) = 1
  const auto r2 = special_class_check(sig_of(13, 1, {{3, 2}}));
  CHECK(r2.reduces);  // gcd(7, 121) = 1
  const auto r3 = special_class_check(sig_of(5, 1, {{11, 1}}));
  CHECK(r3.reduces);  // gcd(3, 133) = 1

  // witness case: S = (5^2 - 1)/8 = 3 shares 3 with repunit(7, 3) = 57
  const auto r4 = special_class_check(sig_of(5, 1, {{7, 1}}));
  CHECK_FALSE(r4.reduces);
  CHECK(r4.witness_component == 7);
  CHECK(r4.witness_gcd == 3);

  // S = (13^2 - 1)/8/3 = 7 shares 7 with repunit(11, 3) = 133
  const auto r5 = special_class_check(sig_of(13, 1, {{11, 1}}));
  CHECK_FALSE(r5.reduces);
  CHECK(r5.witness_component == 11);
  CHECK(r5.witness_gcd == 7);
}

TEST_CASE("twice-a-square search is empty in range") {
  CHECK(search_eq12(Int(1000), 30).empty());
  CHECK(search_eq12(Int(5), 2).empty());
}

TEST_CASE("excluded index two admits an infinite family") {
  // (x + 1)/2 = y^2 has x = 2t^2 - 1; t = 3 gives x = 17 = 1 (mod 4).
  // This is why the search domain starts at n = 6.
  const Int x(17);
  CHECK(x % 4 == 1);
  CHECK(is_perfect_square(repunit_value(x, 2) / 2));  // 18/2 = 9
}

TEST_CASE("split form agrees with the product form") {
  for (Int x = 5; x <= 201; x += 4) {
    for (unsigned long n : {6ul, 10ul, 14ul, 18ul}) {
      const Int r = repunit_value(x, n);
      REQUIRE(eq12_split_holds(x, n) == is_perfect_square(r / 2));
    }
  }
}

TEST_CASE("coefficient pairs") {
  auto c = coefficient_pair(Int(6), Int(6));
  CHECK(c.a == 1);
  CHECK(c.b == 1);
  c = coefficient_pair(Int(13), Int(6));
  CHECK(c.a == 6);
  CHECK(c.b == 13);
  c = coefficient_pair(Int(121), Int(11));
  CHECK(c.a == 1);
  CHECK(c.b == 11);

  std::mt19937_64 rng(5150);
  for (int it = 0; it < 500; ++it) {
    const Int l(rng() % 100000 + 1);
    const Int r(rng() % 100000 + 1);
    const auto cp = coefficient_pair(l, r);
    Int g;
    mpz_gcd(g.get_mpz_t(), cp.a.get_mpz_t(), cp.b.get_mpz_t());
    REQUIRE(g == 1);
    REQUIRE(cp.a * l == cp.b * r);
  }
}

TEST_CASE("omega ledger on the 44044 example") {
  const auto led = omega_ledger(sig_of(13, 1, {{3, 2}}));
  REQUIRE(led.parity.size() == 2);
  CHECK(led.parity[0].first == 7);
  CHECK(led.parity[0].second == 1);
  CHECK(led.parity[1].first == 13);
  CHECK(led.parity[1].second == 1);
  CHECK_FALSE(led.all_even());
}

TEST_CASE("ledger parities match valuation sums") {
  std::mt19937_64 rng(31337);
  const std::vector<unsigned long> odd = {3, 7, 11, 19};
  const unsigned long specials[] = {5, 13, 17, 29};
  for (int it = 0; it < 100; ++it) {
    const auto s = specials[rng() % 4];
    std::set<unsigned long> used;
    const unsigned k = rng() % 3;
    while (used.size() < k) used.insert(odd[rng() % odd.size()]);
    std::vector<std::pair<unsigned long, unsigned long>> comps;
    for (auto q : used) comps.emplace_back(q, rng() % 2 + 1);
    const auto sig = sig_of(s, 1, comps);

    const auto led = omega_ledger(sig);
    const Int product = product_eq5(sig);
    // every listed prime has odd exponent; absent primes have even exponent
    std::set<Int> listed;
    for (const auto& [p, bit] : led.parity) {
      REQUIRE(bit == 1);
      REQUIRE(v_p(product, p) % 2 == 1);
      listed.insert(p);
    }
    for (const auto& [p, e] : factor(product).factors) {
      if (listed.count(p)) continue;
      REQUIRE(e % 2 == 0);
    }
    REQUIRE(led.all_even() == is_perfect_square(product));
  }
}

TEST_CASE("ledger extension flips exactly the new repunit's odd primes") {
  std::mt19937_64 rng(2718);
  const std::vector<unsigned long> odd = {3, 7, 11, 19, 23};
  const unsigned long specials[] = {5, 13, 17, 29};
  for (int it = 0; it < 200; ++it) {
    const auto s = specials[rng() % 4];
    std::set<unsigned long> used;
    while (used.size() < 1 + rng() % 2) used.insert(odd[rng() % odd.size()]);
    std::vector<std::pair<unsigned long, unsigned long>> comps;
    for (auto q : used) comps.emplace_back(q, rng() % 2 + 1);

    // the added component must be a fresh odd prime
    unsigned long q_new = odd[rng() % odd.size()];
    while (used.count(q_new)) q_new = odd[rng() % odd.size()];
    const unsigned long a_new = rng() % 2 + 1;

    const auto base = sig_of(s, 1, comps);
    auto ext_comps = comps;
    ext_comps.emplace_back(q_new, a_new);
    const auto ext = sig_of(s, 1, ext_comps);

    std::set<Int> before;
    for (const auto& [p, bit] : omega_ledger(base).parity) before.insert(p);
    std::set<Int> after;
    for (const auto& [p, bit] : omega_ledger(ext).parity) after.insert(p);

    std::set<Int> flips;
    const Int added = repunit_value(Int(q_new), 2 * a_new + 1);
    for (const auto& [p, e] : factor(added).factors) {
      if (e % 2 == 1) flips.insert(p);
    }
    std::set<Int> expect = before;
    for (const Int& p : flips) {
      if (expect.count(p)) {
        expect.erase(p);
      } else {
        expect.insert(p);
      }
    }
    REQUIRE(after == expect);
  }
}

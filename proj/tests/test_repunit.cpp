#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>
#include <vector>

#include "opnkit/padic.hpp"
#include "opnkit/repunit.hpp"
#include "oracles.hpp"

using namespace opnkit;

TEST_CASE("repunit values") {
  CHECK(repunit_value(Int(10), 5) == 11111);
  CHECK(repunit_value(Int(2), 5) == 31);
  CHECK(repunit_value(Int(3), 5) == 121);
  CHECK(repunit_value(Int(7), 1) == 1);
  CHECK(repunit_value(Int(7), 0) == 0);
  CHECK(repunit_value(Int(13), 2) == 14);
}

TEST_CASE("lucas sequence reproduces repunits") {
  CHECK(lucas_u(Int(11), Int(10), 3) == 111);
  CHECK(lucas_u(Int(4), Int(3), 5) == 121);
  CHECK(lucas_u(Int(1), Int(-1), 10) == 55);  // Fibonacci sanity
  for (unsigned long q = 2; q <= 12; ++q) {
    for (unsigned long n = 0; n <= 40; ++n) {
      REQUIRE(lucas_u(Int(q + 1), Int(q), n) == repunit_value(Int(q), n));
    }
  }
}

TEST_CASE("cyclotomic values") {
  CHECK(cyclotomic_value(1, Int(5)) == 4);
  CHECK(cyclotomic_value(2, Int(5)) == 6);
  CHECK(cyclotomic_value(6, Int(2)) == 3);
  CHECK(cyclotomic_value(5, Int(3)) == 121);
  CHECK(cyclotomic_value(12, Int(2)) == 13);
}

TEST_CASE("cyclotomic product identity q^n - 1") {
  for (unsigned long q = 2; q <= 8; ++q) {
    for (unsigned long n = 1; n <= 20; ++n) {
      Int prod = 1;
      for (unsigned long d : divisors_of(n)) {
        prod *= cyclotomic_value(d, Int(q));
      }
      REQUIRE(prod == pow_ui(Int(q), n) - 1);
    }
  }
}

TEST_CASE("cyclotomic matches the dense polynomial oracle") {
  for (unsigned long n = 1; n <= 30; ++n) {
    for (unsigned long q : {2ul, 3ul, 10ul}) {
      REQUIRE(cyclotomic_value(n, Int(q)) == oracle::cyclotomic_at(n, Int(q)));
    }
  }
}

TEST_CASE("gcd(n, Phi_n(q)) is 1 or prime") {
  for (unsigned long q = 2; q <= 10; ++q) {
    for (unsigned long n = 2; n <= 30; ++n) {
      Int g;
      const Int phi = cyclotomic_value(n, Int(q));
      mpz_gcd_ui(g.get_mpz_t(), phi.get_mpz_t(), n);
      REQUIRE((g == 1 || is_prime(g)));
    }
  }
}

TEST_CASE("arithmetic primitive factor") {
  CHECK(arithmetic_primitive_factor(Int(2), 6) == 1);
  CHECK(arithmetic_primitive_factor(Int(2), 4) == 5);
  CHECK(arithmetic_primitive_factor(Int(10), 3) == 37);
  CHECK(arithmetic_primitive_factor(Int(3), 5) == 121);
  CHECK(arithmetic_primitive_factor(Int(2), 12) == 13);
  CHECK(arithmetic_primitive_factor(Int(2), 18) == 19);  // Phi_18(2)=57=3*19
  // every prime of the primitive factor has order exactly n
  for (unsigned long q = 2; q <= 10; ++q) {
    for (unsigned long n = 3; n <= 24; ++n) {
      Int apf = arithmetic_primitive_factor(Int(q), n);
      if (apf == 1) continue;
      const auto f = factor(apf);
      for (const auto& [p, e] : f.factors) {
        REQUIRE(ord(Int(q), p) == Int(n));
      }
    }
  }
}

TEST_CASE("rank of apparition convention and brute-force agreement") {
  CHECK(rank_of_apparition(Int(10), Int(3)) == 3);   // 3 | 10 - 1
  CHECK(rank_of_apparition(Int(10), Int(7)) == 6);   // ord
  CHECK(rank_of_apparition(Int(10), Int(37)) == 3);
  CHECK(rank_of_apparition(Int(2), Int(7)) == 3);
  CHECK(rank_of_apparition(Int(3), Int(5)) == 4);
  CHECK(rank_of_apparition(Int(3), Int(11)) == 5);
  CHECK_THROWS_AS(rank_of_apparition(Int(10), Int(5)), NotCoprimeError);

  for (unsigned long q : {2ul, 3ul, 5ul, 10ul}) {
    for (unsigned long pu : primes_below(300)) {
      if (q % pu == 0) continue;
      REQUIRE(rank_of_apparition(Int(q), Int(pu)) ==
              Int(oracle::rank(Int(q), Int(pu))));
    }
  }
}

TEST_CASE("repunit divisibility at the rank") {
  // p | repunit(q, n) iff rank | n, for p not dividing q - 1;
  // p | q - 1 divides repunit(q, n) iff p | n.
  for (unsigned long q : {2ul, 3ul, 10ul}) {
    for (unsigned long pu : primes_below(60)) {
      if (q % pu == 0) continue;
      const Int rank = rank_of_apparition(Int(q), Int(pu));
      for (unsigned long n = 1; n <= 60; ++n) {
        const bool divides =
            mpz_divisible_p(repunit_value(Int(q), n).get_mpz_t(),
                            Int(pu).get_mpz_t());
        const bool at_rank = (Int(n) % rank == 0);
        REQUIRE(divides == at_rank);
      }
    }
  }
}

TEST_CASE("valuation closed form on pinned examples") {
  CHECK(repunit_valuation(Int(10), 9, Int(3)) == 2);
  CHECK(repunit_valuation(Int(2), 12, Int(7)) == 1);
  CHECK(repunit_valuation(Int(3), 4, Int(5)) == 1);   // repunit = 40
  CHECK(repunit_valuation(Int(3), 2, Int(5)) == 0);   // repunit = 4
  CHECK(repunit_valuation(Int(3), 5, Int(11)) == 2);  // 121
  CHECK(repunit_valuation(Int(10), 3, Int(37)) == 1);
  CHECK(repunit_valuation(Int(10), 3, Int(7)) == 0);
}

TEST_CASE("valuation digit algorithm on pinned examples") {
  CHECK(repunit_valuation_digits(Int(3), 4, Int(5)) == 1);
  CHECK(repunit_valuation_digits(Int(3), 2, Int(5)) == 0);
  CHECK(repunit_valuation_digits(Int(10), 9, Int(3)) == 2);
  CHECK(repunit_valuation_digits(Int(2), 12, Int(7)) == 1);
  CHECK(repunit_valuation_digits(Int(3), 5, Int(11)) == 2);
}

TEST_CASE("three valuation routes agree on a sample grid") {
  for (unsigned long q = 2; q <= 20; ++q) {
    Int r = 0;
    for (unsigned long n = 1; n <= 60; ++n) {
      r = r * q + 1;
      for (unsigned long pu : primes_below(50)) {
        if (pu == 2 || q % pu == 0) continue;
        const unsigned direct = v_p(r, Int(pu));
        REQUIRE(repunit_valuation(Int(q), n, Int(pu)) == direct);
        REQUIRE(repunit_valuation_digits(Int(q), n, Int(pu)) == direct);
      }
    }
  }
}

TEST_CASE("divisor classification of repunit(10, 9)") {
  const auto recs = classify_divisors({Int(10), 9});
  REQUIRE(recs.size() == 3);

  CHECK(recs[0].p == 3);
  CHECK(recs[0].rank == 3);
  CHECK(recs[0].h == 2);
  CHECK_FALSE(recs[0].primitive);
  // 3 | 10 - 1 and v_3(9) = 2: the repeated-index class
  CHECK(recs[0].h2_class == H2Class::ClassI);

  CHECK(recs[1].p == 37);
  CHECK(recs[1].rank == 3);
  CHECK(recs[1].h == 1);
  CHECK_FALSE(recs[1].primitive);
  CHECK(recs[1].h2_class == H2Class::NotApplicable);

  CHECK(recs[2].p == 333667);
  CHECK(recs[2].rank == 9);
  CHECK(recs[2].h == 1);
  CHECK(recs[2].primitive);
}

TEST_CASE("divisor classification of repunit(2, 12) = 4095") {
  const auto recs = classify_divisors({Int(2), 12});
  REQUIRE(recs.size() == 4);

  CHECK(recs[0].p == 3);
  CHECK(recs[0].rank == 2);
  CHECK(recs[0].h == 2);
  // ord_3(2) = 2, 3 || 2^2 - 1, 3 || 12: the composite-index class
  CHECK(recs[0].h2_class == H2Class::ClassII);

  CHECK(recs[1].p == 5);
  CHECK(recs[1].rank == 4);
  CHECK(recs[1].h == 1);

  CHECK(recs[2].p == 7);
  CHECK(recs[2].rank == 3);
  CHECK(recs[2].h == 1);

  CHECK(recs[3].p == 13);
  CHECK(recs[3].rank == 12);
  CHECK(recs[3].primitive);
}

TEST_CASE("divisor classification of repunit(3, 5) = 121") {
  const auto recs = classify_divisors({Int(3), 5});
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].p == 11);
  CHECK(recs[0].rank == 5);
  CHECK(recs[0].h == 2);
  CHECK(recs[0].primitive);
  // 11^2 | 3^5 - 1 with 11 primitive: the Wieferich-type class
  CHECK(recs[0].h2_class == H2Class::ClassIII);
  CHECK(fermat_quotient(Int(3), Int(11)).value_mod_p == 0);
}

TEST_CASE("squared divisors split by Fermat quotient") {
  // For odd p with ord_p(q) = e > 1: p^2 | q^e - 1 iff the quotient is 0.
  for (unsigned long pu : primes_below(100)) {
    if (pu == 2) continue;
    for (unsigned long q = 2; q <= 50; ++q) {
      if (q % pu == 0 || (q - 1) % pu == 0) continue;
      const Int e = ord(Int(q), Int(pu));
      const unsigned he = v_p(pow_ui(Int(q), e.get_ui()) - 1, Int(pu));
      const bool quotient_zero =
          fermat_quotient(Int(q), Int(pu)).value_mod_p == 0;
      REQUIRE(quotient_zero == (he >= 2));
    }
  }
}

TEST_CASE("primitive records have index-aligned order") {
  // Ord-branch primitive divisors satisfy p = 1 (mod index); the p | q-1
  // branch (rank = p) is the documented carve-out.
  for (unsigned long q : {2ul, 3ul, 10ul}) {
    for (unsigned long n = 2; n <= 16; ++n) {
      for (const auto& r : classify_divisors({Int(q), n})) {
        if (!r.primitive) continue;
        if ((Int(q) - 1) % r.p == 0) continue;
        REQUIRE(r.rank == Int(n));
        REQUIRE(r.p % n == 1);
      }
    }
  }
}

TEST_CASE("distinct-prime floor from pairwise-coprime primitive cores") {
  // Cores at distinct divisor levels d > 1 are pairwise coprime, and their
  // product together with q - 1 divides q^n - 1, so omega(q^n - 1) is at
  // least the prime count of that product. (The core at index 2 may retain
  // a factor of 2 shared with q - 1 when q = 3 mod 4, so the two counts do
  // not simply add.)
  for (unsigned long q : {2ul, 3ul, 5ul, 10ul}) {
    for (unsigned long n = 2; n <= 20; ++n) {
      std::vector<Int> cores;
      for (unsigned long d : divisors_of(n)) {
        if (d == 1) continue;
        const Int c = arithmetic_primitive_factor(Int(q), d);
        if (c > 1) cores.push_back(c);
      }
      for (std::size_t i = 0; i < cores.size(); ++i) {
        for (std::size_t j = i + 1; j < cores.size(); ++j) {
          Int g;
          mpz_gcd(g.get_mpz_t(), cores[i].get_mpz_t(), cores[j].get_mpz_t());
          REQUIRE(g == 1);
        }
      }
      Int partial = Int(q) - 1;
      for (const Int& c : cores) partial *= c;
      REQUIRE((pow_ui(Int(q), n) - 1) % partial == 0);
      const unsigned long floor_omega = factor(partial).factors.size();
      const unsigned long omega =
          factor(pow_ui(Int(q), n) - 1).factors.size();
      REQUIRE(omega >= floor_omega);
      // when no core collapses the floor is the divisor count less one
      if (cores.size() + 1 == divisors_of(n).size()) {
        REQUIRE(omega >= divisors_of(n).size() - 1);
      }
    }
  }
}

TEST_CASE("classification propagates factoring timeouts") {
  FactorConfig cfg;
  cfg.rho_budget = 500;
  // repunit(10, 71) has a 30+ digit least prime factor beyond this budget
  CHECK_THROWS_AS(classify_divisors({Int(10), 71}, cfg),
                  FactorTimeoutError);
}

// The perfect-square test on 2 s sigma(N) for Euler-form candidates
// N = s^e * prod q_i^{2 a_i}, plus the reductions that feed it: divisor-sum
// products, square kernels, parity ledgers, and the degenerate Diophantine
// searches the special component reduces to.
#ifndef OPNKIT_RATIONALITY_HPP
#define OPNKIT_RATIONALITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "opnkit/core_arith.hpp"

namespace opnkit {

// Euler form: special_prime = 1 (mod 4), special_exponent = 1 (mod 4),
// components (q_i, alpha_i) with distinct odd primes q_i != special_prime
// and alpha_i >= 1. Components may be empty.
struct CandidateSignature {
  Int special_prime;
  unsigned long special_exponent = 1;
  std::vector<std::pair<Int, unsigned long>> components;

  void validate(const FactorConfig& cfg = {}) const;  // throws invalid_argument
  Int value() const;                                  // N
};

Int sigma(const CandidateSignature& sig);

// sigma(N)/N in lowest terms.
Rat abundancy(const CandidateSignature& sig);

// 2 s * sigma(N) assembled as the structured repunit product
// 2 s * prod_i repunit(q_i, 2 a_i + 1) * repunit(s, e + 1), s = special.
Int product_eq5(const CandidateSignature& sig);

struct RationalityReport {
  bool is_square;
  Int product;
  Rat abundance;
  bool has_three_two_component;  // (3, 2) among components
  bool kernel_available;         // false when factoring hit the budget
  std::optional<Factorization> product_factorization;
  std::optional<SquareFreeSplit> kernel;
  std::vector<Int> unmatched_primes;  // primes of odd exponent, ascending
};

// The square test never needs the factorization; the kernel fields degrade
// gracefully under FactorTimeoutError instead of failing the report.
RationalityReport rationality_check(const CandidateSignature& sig,
                                    const FactorConfig& cfg = {},
                                    FactorCache* cache = nullptr);

struct SpecialClassResult {
  bool reduces;  // gcd of the special quotient with every component repunit is 1
  Int witness_component;  // first offending q_i when !reduces
  Int witness_gcd;
};

// S = (s^{e+1} - 1) / (2 (s - 1)) against each repunit(q_i, 2 a_i + 1).
SpecialClassResult special_class_check(const CandidateSignature& sig);

struct Eq12Solution {
  Int x;
  unsigned long n;
  Int y;
  bool operator==(const Eq12Solution&) const = default;
};

// (x^n - 1)/(x - 1) = 2 y^2 over x = 1 (mod 4), n = 2 (mod 4), n >= 6.
// n = 2 is excluded as degenerate: x + 1 = 2 y^2 has the infinite family
// x = 2 t^2 - 1. Expected empty on every desk-scale range.
std::vector<Eq12Solution> search_eq12(const Int& x_max, unsigned long n_max);

// The equivalent split form for n = 4m + 2: both halves must be squares,
//   (x^{2m+1} - 1)/(x - 1) = y1^2  and  (x^{2m+1} + 1)/2 = y2^2.
// The halves are coprime, so this holds iff the product form does.
bool eq12_split_holds(const Int& x, unsigned long n);

struct CoefficientPair {
  Int a;
  Int b;
  bool operator==(const CoefficientPair&) const = default;
};

// The unique coprime (a, b) with a * r_left = b * r_right.
CoefficientPair coefficient_pair(const Int& r_left, const Int& r_right);

// Primes whose valuation in the assembled product is odd. Empty exactly
// when the product is a perfect square.
struct OmegaLedger {
  std::vector<std::pair<Int, unsigned>> parity;  // (p, 1), ascending
  bool all_even() const;
};

OmegaLedger omega_ledger(const CandidateSignature& sig,
                         const FactorConfig& cfg = {},
                         FactorCache* cache = nullptr);

}  // namespace opnkit

#endif

// Exact integer arithmetic kernel: primality, factorization, valuations,
// multiplicative orders, square detection. Everything is GMP-backed and pure;
// the only shared state is an optional FactorCache passed in explicitly.
#ifndef OPNKIT_CORE_ARITH_HPP
#define OPNKIT_CORE_ARITH_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace opnkit {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when an argument must be coprime to a modulus and is not.
struct NotCoprimeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when the rho iteration budget runs out. Carries whatever split was
// achieved so callers can degrade gracefully.
struct FactorTimeoutError : std::runtime_error {
  std::vector<std::pair<Int, unsigned>> partial;  // primes found so far
  Int unfactored;                                 // composite remainder, > 1
  FactorTimeoutError(std::vector<std::pair<Int, unsigned>> part, Int rest)
      : std::runtime_error("factor: rho iteration budget exhausted"),
        partial(std::move(part)),
        unfactored(std::move(rest)) {}
};

struct FactorConfig {
  // Total Brent-rho iterations allowed per factor() call. The default cracks
  // a product of two 40-bit primes in a few seconds.
  std::uint64_t rho_budget = 16'000'000;
  // Extra randomized strong-probable-prime rounds for n >= 2^64. Below 2^64
  // the staged deterministic witness table decides exactly.
  unsigned mr_rounds = 64;
  // Witness stream above 2^64 is a pure function of (n, seed).
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

// Prime factorization with ascending bases and positive exponents.
// factor(1) yields the empty factorization.
struct Factorization {
  std::vector<std::pair<Int, unsigned>> factors;

  Int value() const;
  unsigned exponent_of(const Int& p) const;
  bool operator==(const Factorization&) const = default;
};

// kappa = square-free kernel, chi = cofactor root: n = kappa * chi^2.
struct SquareFreeSplit {
  Int kappa;
  Int chi;
  bool operator==(const SquareFreeSplit&) const = default;
};

// In-process factor memo with hit/miss counters. The CLI persists it to disk;
// the library only reads/writes the map. Never changes numeric results.
class FactorCache {
 public:
  const Factorization* lookup(const Int& n);
  void insert(const Int& n, const Factorization& f);
  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }
  const std::map<Int, Factorization>& entries() const { return entries_; }

 private:
  std::map<Int, Factorization> entries_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
};

bool is_prime(const Int& n, const FactorConfig& cfg = {});

// Trial division by a fixed small-prime table, then Brent rho with perfect
// power splitting. Throws FactorTimeoutError when cfg.rho_budget runs out.
Factorization factor(const Int& n, const FactorConfig& cfg = {},
                     FactorCache* cache = nullptr);

// v_p(n): exponent of p in n. n != 0, p >= 2.
unsigned v_p(const Int& n, const Int& p);

// Multiplicative order of q mod p, p prime, p not dividing q.
// Factors p-1, so inherits the budget contract.
Int ord(const Int& q, const Int& p, const FactorConfig& cfg = {},
        FactorCache* cache = nullptr);

SquareFreeSplit square_free_split(const Int& n, const FactorConfig& cfg = {},
                                  FactorCache* cache = nullptr);

bool is_perfect_square(const Int& n);

// Legendre symbol via the Euler criterion a^((p-1)/2) mod p. p odd prime.
int legendre(const Int& a, const Int& p);

// ---- small shared helpers ----

Int pow_ui(const Int& base, unsigned long e);
Int powmod(const Int& base, const Int& e, const Int& m);

// Ascending divisors of a machine-word n >= 1.
std::vector<unsigned long> divisors_of(unsigned long n);

// Moebius function of a machine-word n >= 1.
int mobius(unsigned long n);

// Ascending primes below limit.
std::vector<unsigned long> primes_below(unsigned long limit);

}  // namespace opnkit

#endif

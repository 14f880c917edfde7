// Exhaustive desk-scale scans: prime-power quotients of q^n - 1 pairs,
// consecutive perfect powers, square classes of repunits with odd index,
// and the gcd size test for shared prime support.
#ifndef OPNKIT_PRIMEEQ_HPP
#define OPNKIT_PRIMEEQ_HPP

#include <array>
#include <utility>
#include <vector>

#include "opnkit/core_arith.hpp"

namespace opnkit {

struct PrimeEqSolution {
  Int q_i;
  Int q_j;
  unsigned long n;
  Int p;
  unsigned long h;
  bool operator==(const PrimeEqSolution&) const = default;
};

// All (q_i, q_j, n, p, h) with odd primes q_i < q_j <= q_max, 2 <= n <= n_max,
// (q_j^n - 1)/(q_i^n - 1) = p^h exactly, p prime, 1 <= h <= h_max.
// Ascending lexicographic by (n, q_i, q_j).
std::vector<PrimeEqSolution> search_prime_eq(unsigned long q_max,
                                             unsigned long n_max,
                                             unsigned long h_max);

// X^U - Y^V = 1 with 2 <= X, Y <= base_max, 2 <= U, V <= exp_max,
// reported as (X, U, Y, V). The classical catalogue: exactly (3, 2, 2, 3).
std::vector<std::array<unsigned long, 4>> catalan_scan(unsigned long base_max,
                                                       unsigned long exp_max);

// Pairs of odd indices 3 <= n1 < n2 <= n_max whose base-q repunits multiply
// to a perfect square. Odd indices are the component exponents 2a+1; even
// indices admit genuine coincidences (base 2: 7 * 63 = 21^2) and are out of
// scope. Expected empty.
std::vector<std::pair<unsigned long, unsigned long>> square_class_scan(
    const Int& q, unsigned long n_max);

// Whether q_ell^{n/2} < gcd(q_j^n - 1, q_ell^n - 1), compared exactly as
// q_ell^n < gcd^2.
bool gcd_inequality_check(const Int& q_j, const Int& q_ell, unsigned long n);

}  // namespace opnkit

#endif

// Repunits (q^n-1)/(q-1) as Lucas sequences, cyclotomic values, primitive
// factors, ranks of apparition, and the p-adic valuation of a repunit by
// three independent routes.
#ifndef OPNKIT_REPUNIT_HPP
#define OPNKIT_REPUNIT_HPP

#include <vector>

#include "opnkit/core_arith.hpp"

namespace opnkit {

struct RepunitSpec {
  Int base;             // q >= 2
  unsigned long index;  // n >= 1
};

// (q^n - 1)/(q - 1); zero when n = 0.
Int repunit_value(const Int& q, unsigned long n);

// U_n(a, b): U_0 = 0, U_1 = 1, U_{n+2} = a U_{n+1} - b U_n.
// repunit_value(q, n) == lucas_u(q+1, q, n).
Int lucas_u(const Int& a, const Int& b, unsigned long n);

// Phi_n(q) by Moebius inclusion-exclusion over q^d - 1, exact division.
Int cyclotomic_value(unsigned long n, const Int& q);

// Phi_n(q) stripped of the intrinsic prime: the unique prime p | n with
// ord_p(q) = n / p^{v_p(n)}, when it exists, divides gcd(n, Phi_n(q)) and is
// removed once. The n = 6, q = 2 value collapses to 1.
Int arithmetic_primitive_factor(const Int& q, unsigned long n);

// Least n >= 1 with p | repunit(q, n). Equals ord_p(q) when p does not
// divide q - 1, and equals p itself when it does (repunit(q, n) is then
// congruent to n mod p). p >= 2, p prime, p not dividing q.
Int rank_of_apparition(const Int& q, const Int& p,
                       const FactorConfig& cfg = {},
                       FactorCache* cache = nullptr);

// v_p(repunit(q, n)) by the closed form:
//   e = ord_p(q):  e > 1 and e | n  ->  v_p(q^e - 1) + v_p(n)
//   p | q - 1                       ->  v_p(n)
//   otherwise                       ->  0
// p odd prime, p not dividing q.
unsigned repunit_valuation(const Int& q, unsigned long n, const Int& p,
                           const FactorConfig& cfg = {},
                           FactorCache* cache = nullptr);

// Same value via mixed-radix digits of n-1 and n in base (e, p, p, ...) and
// the carry chain of adding 1: s = eps_0 h + eps_1 + ... with p^h || q^e - 1.
// The carry sum tracks v_p(q^n - 1); dividing by q - 1 removes h exactly
// when ord is 1, hence the subtraction in that case.
unsigned repunit_valuation_digits(const Int& q, unsigned long n, const Int& p,
                                  const FactorConfig& cfg = {},
                                  FactorCache* cache = nullptr);

// Divisor taxonomy for squared valuations (h = 2):
//   ClassI    p | q-1 and n = mu p^2
//   ClassII   n = mu e p with p || q^e - 1 (Fermat quotient nonzero)
//   ClassIII  p primitive with p^2 | q^e - 1 (Fermat quotient zero)
enum class H2Class { NotApplicable, ClassI, ClassII, ClassIII };

struct DivisorRecord {
  Int p;
  Int rank;        // rank of apparition of p in the base-q repunits
  unsigned h;      // exact exponent of p in the repunit
  bool primitive;  // rank == index
  H2Class h2_class;
};

// Full factorization of repunit(base, index) annotated with ranks and the
// h = 2 classes. Records ascend by p. Propagates FactorTimeoutError.
std::vector<DivisorRecord> classify_divisors(const RepunitSpec& spec,
                                             const FactorConfig& cfg = {},
                                             FactorCache* cache = nullptr);

const char* h2_class_name(H2Class c);

}  // namespace opnkit

#endif

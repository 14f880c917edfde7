// Fermat quotients mod p, their logarithmic rule, Hensel lifting of
// (p-1)-th roots of unity into Z/p^2, and the Glaisher-style quotient sum
// kept as a diagnostic.
#ifndef OPNKIT_PADIC_HPP
#define OPNKIT_PADIC_HPP

#include <vector>

#include "opnkit/core_arith.hpp"

namespace opnkit {

struct FermatQuotient {
  Int base;
  Int p;
  Int value_mod_p;  // (base^(p-1) - 1)/p mod p
};

// p odd prime, p not dividing q. q = 1 gives 0; Wieferich pairs give 0.
FermatQuotient fermat_quotient(const Int& q, const Int& p);

// (Q_{q1 q2} - Q_{q1} - Q_{q2}) mod p; identically zero.
Int log_rule_residual(const Int& q1, const Int& q2, const Int& p);

// One Newton step for f(x) = x^{p-1} - 1 over Z/p^2:
//   x' = x - g1(x) p / ((p-1) x^{p-2})  with  x^{p-1} - 1 = g1(x) p (mod p^2).
// Result is the unique lift of x mod p with x'^{p-1} = 1 (mod p^2),
// normalized to [1, p^2 - 1]. p odd prime, p not dividing x.
Int hensel_lift(const Int& x, const Int& p);

// { c^p mod p^2 : 1 <= c <= p-1 }, ascending. These are exactly the
// (p-1)-th roots of unity in Z/p^2, i.e. the image of hensel_lift.
std::vector<Int> cp_solutions(const Int& p);

// Q_q - sum_{i=1}^{p-1} mu_i i^{-1} (mod p), where mu_i is the least
// non-negative residue of -i p^{-1} (mod q). Zero on every tested input;
// callers treat nonzero as a formula-interpretation diagnostic, not an
// arithmetic failure.
Int glaisher_residual(const Int& q, const Int& p);

}  // namespace opnkit

#endif

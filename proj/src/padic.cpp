#include "opnkit/padic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace opnkit {

namespace {

void require_odd_prime_coprime(const Int& q, const Int& p, const char* who) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
  if (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t()))
    throw NotCoprimeError(std::string(who) + ": p divides the base");
}

Int inv_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw NotCoprimeError("inv_mod: not invertible");
  return r;
}

}  // namespace

FermatQuotient fermat_quotient(const Int& q, const Int& p) {
  require_odd_prime_coprime(q, p, "fermat_quotient");
  Int p2 = p * p;
  Int t = powmod(q, p - 1, p2);  // = 1 + Q p (mod p^2)
  Int val = ((t - 1) / p) % p;
  return FermatQuotient{q, p, val};
}

Int log_rule_residual(const Int& q1, const Int& q2, const Int& p) {
  Int a = fermat_quotient(q1, p).value_mod_p;
  Int b = fermat_quotient(q2, p).value_mod_p;
  Int c = fermat_quotient(q1 * q2, p).value_mod_p;
  Int r = (c - a - b) % p;
  if (r < 0) r += p;
  return r;
}

Int hensel_lift(const Int& x, const Int& p) {
  require_odd_prime_coprime(x, p, "hensel_lift");
  Int p2 = p * p;
  Int x0 = x % p2;
  if (x0 < 0) x0 += p2;
  Int t = powmod(x0, p - 1, p2);
  Int g1 = ((t - 1) / p) % p;           // x^{p-1} = 1 + g1 p (mod p^2)
  Int deriv = ((p - 1) * powmod(x0, p - 2, p)) % p;
  Int corr = (g1 * inv_mod(deriv, p)) % p;
  Int out = (x0 - corr * p) % p2;
  if (out < 0) out += p2;
  if (out == 0) out = p2;  // unreachable for valid input; keep range [1, p^2-1]
  return out;
}

std::vector<Int> cp_solutions(const Int& p) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("cp_solutions: p must be an odd prime");
  Int p2 = p * p;
  std::vector<Int> out;
  for (Int c = 1; c < p; ++c) out.push_back(powmod(c, p, p2));
  std::sort(out.begin(), out.end());
  return out;
}

Int glaisher_residual(const Int& q, const Int& p) {
  require_odd_prime_coprime(q, p, "glaisher_residual");
  if (q < 2) throw std::invalid_argument("glaisher_residual: q must be >= 2");
  Int Q = fermat_quotient(q, p).value_mod_p;
  Int pinv_q = inv_mod(p % q, q);
  Int sum = 0;
  for (Int i = 1; i < p; ++i) {
    Int mu = (-(i * pinv_q)) % q;
    if (mu < 0) mu += q;  // least non-negative residue; 0 when q | i
    sum = (sum + mu * inv_mod(i, p)) % p;
  }
  Int r = (Q - sum) % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace opnkit

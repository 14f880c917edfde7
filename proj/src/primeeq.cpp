#include "opnkit/primeeq.hpp"

#include <stdexcept>

#include "opnkit/repunit.hpp"

namespace opnkit {

namespace {

// Q = p^h with p prime, h maximal (unique when it exists at all).
bool as_prime_power(const Int& Q, Int& p, unsigned long& h) {
  if (Q < 2) return false;
  Int base = Q;
  unsigned long exp = 1;
  while (mpz_perfect_power_p(base.get_mpz_t())) {
    unsigned long maxk = mpz_sizeinbase(base.get_mpz_t(), 2);
    bool split = false;
    for (unsigned long k = 2; k <= maxk; ++k) {
      Int root, rem;
      mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), base.get_mpz_t(), k);
      if (rem == 0) {
        base = root;
        exp *= k;
        split = true;
        break;
      }
    }
    if (!split) break;
  }
  if (!is_prime(base)) return false;
  p = base;
  h = exp;
  return true;
}

}  // namespace

std::vector<PrimeEqSolution> search_prime_eq(unsigned long q_max,
                                             unsigned long n_max,
                                             unsigned long h_max) {
  if (q_max < 5 || n_max < 2 || h_max < 1)
    throw std::invalid_argument("search_prime_eq: need q_max>=5, n_max>=2, h_max>=1");
  std::vector<unsigned long> qs;
  for (unsigned long p : primes_below(q_max + 1))
    if (p >= 3) qs.push_back(p);

  std::vector<PrimeEqSolution> out;
  for (unsigned long n = 2; n <= n_max; ++n) {
    std::vector<Int> pow_n(qs.size());
    for (size_t i = 0; i < qs.size(); ++i)
      pow_n[i] = pow_ui(Int(qs[i]), n) - 1;
    for (size_t i = 0; i < qs.size(); ++i) {
      for (size_t j = i + 1; j < qs.size(); ++j) {
        if (!mpz_divisible_p(pow_n[j].get_mpz_t(), pow_n[i].get_mpz_t()))
          continue;
        Int Q = pow_n[j] / pow_n[i];
        Int p;
        unsigned long h;
        if (as_prime_power(Q, p, h) && h <= h_max)
          out.push_back(PrimeEqSolution{Int(qs[i]), Int(qs[j]), n, p, h});
      }
    }
  }
  return out;
}

std::vector<std::array<unsigned long, 4>> catalan_scan(unsigned long base_max,
                                                       unsigned long exp_max) {
  if (base_max < 3 || exp_max < 2)
    throw std::invalid_argument("catalan_scan: need base_max>=3, exp_max>=2");
  std::vector<std::array<unsigned long, 4>> out;
  for (unsigned long X = 2; X <= base_max; ++X) {
    for (unsigned long U = 2; U <= exp_max; ++U) {
      Int W = pow_ui(Int(X), U) - 1;
      if (W < 4) continue;  // smallest admissible Y^V is 2^2
      for (unsigned long V = 2; V <= exp_max; ++V) {
        Int root, rem;
        mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), W.get_mpz_t(), V);
        if (rem == 0 && root >= 2 && root <= Int(base_max))
          out.push_back({X, U, root.get_ui(), V});
      }
    }
  }
  return out;
}

std::vector<std::pair<unsigned long, unsigned long>> square_class_scan(
    const Int& q, unsigned long n_max) {
  if (q < 2) throw std::invalid_argument("square_class_scan: base must be >= 2");
  if (n_max < 2)
    throw std::invalid_argument("square_class_scan: n_max must be >= 2");
  std::vector<Int> rep;  // rep[k] = repunit(q, 2k+3), odd indices only
  for (unsigned long n = 3; n <= n_max; n += 2)
    rep.push_back(repunit_value(q, n));
  std::vector<std::pair<unsigned long, unsigned long>> out;
  for (size_t i = 0; i < rep.size(); ++i)
    for (size_t j = i + 1; j < rep.size(); ++j)
      if (is_perfect_square(rep[i] * rep[j]))
        out.emplace_back(2 * i + 3, 2 * j + 3);
  return out;
}

bool gcd_inequality_check(const Int& q_j, const Int& q_ell, unsigned long n) {
  if (q_j < 2 || q_ell < 2 || n < 1)
    throw std::invalid_argument("gcd_inequality_check: bases >= 2, n >= 1");
  Int a = pow_ui(q_j, n) - 1;
  Int b = pow_ui(q_ell, n) - 1;
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g * g > pow_ui(q_ell, n);
}

}  // namespace opnkit

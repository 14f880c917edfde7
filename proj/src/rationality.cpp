#include "opnkit/rationality.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "opnkit/repunit.hpp"

namespace opnkit {

void CandidateSignature::validate(const FactorConfig& cfg) const {
  if (special_prime % 4 != 1)
    throw std::invalid_argument("signature: special prime must be 1 (mod 4)");
  if (!is_prime(special_prime, cfg))
    throw std::invalid_argument("signature: special base must be prime");
  if (special_exponent % 4 != 1)
    throw std::invalid_argument("signature: special exponent must be 1 (mod 4)");
  std::set<Int> seen;
  for (const auto& [q, a] : components) {
    if (q < 3 || q % 2 == 0 || !is_prime(q, cfg))
      throw std::invalid_argument("signature: components must be odd primes");
    if (q == special_prime)
      throw std::invalid_argument("signature: component equals special prime");
    if (!seen.insert(q).second)
      throw std::invalid_argument("signature: repeated component prime");
    if (a < 1)
      throw std::invalid_argument("signature: component exponent must be >= 1");
  }
}

Int CandidateSignature::value() const {
  Int n = pow_ui(special_prime, special_exponent);
  for (const auto& [q, a] : components) n *= pow_ui(q, 2 * a);
  return n;
}

Int sigma(const CandidateSignature& sig) {
  // sigma(p^e) = repunit(p, e+1), multiplicative across coprime parts
  Int s = repunit_value(sig.special_prime, sig.special_exponent + 1);
  for (const auto& [q, a] : sig.components) s *= repunit_value(q, 2 * a + 1);
  return s;
}

Rat abundancy(const CandidateSignature& sig) {
  Rat r(sigma(sig), sig.value());
  r.canonicalize();
  return r;
}

Int product_eq5(const CandidateSignature& sig) {
  Int p = 2 * sig.special_prime;
  for (const auto& [q, a] : sig.components) p *= repunit_value(q, 2 * a + 1);
  p *= repunit_value(sig.special_prime, sig.special_exponent + 1);
  return p;
}

RationalityReport rationality_check(const CandidateSignature& sig,
                                    const FactorConfig& cfg,
                                    FactorCache* cache) {
  sig.validate(cfg);
  RationalityReport rep;
  rep.product = product_eq5(sig);
  rep.is_square = is_perfect_square(rep.product);
  rep.abundance = abundancy(sig);
  rep.has_three_two_component = false;
  for (const auto& [q, a] : sig.components)
    if (q == 3 && a == 2) rep.has_three_two_component = true;

  try {
    Factorization f = factor(rep.product, cfg, cache);
    SquareFreeSplit split{1, 1};
    for (const auto& [p, e] : f.factors) {
      if (e & 1) {
        split.kappa *= p;
        rep.unmatched_primes.push_back(p);
      }
      split.chi *= pow_ui(p, e / 2);
    }
    rep.product_factorization = std::move(f);
    rep.kernel = split;
    rep.kernel_available = true;
  } catch (const FactorTimeoutError&) {
    rep.kernel_available = false;
  }
  return rep;
}

SpecialClassResult special_class_check(const CandidateSignature& sig) {
  sig.validate();
  // (s^{e+1} - 1) / (2(s-1)): the even-index special repunit halved
  Int S = repunit_value(sig.special_prime, sig.special_exponent + 1) / 2;
  for (const auto& [q, a] : sig.components) {
    Int g;
    Int r = repunit_value(q, 2 * a + 1);
    mpz_gcd(g.get_mpz_t(), S.get_mpz_t(), r.get_mpz_t());
    if (g != 1) return SpecialClassResult{false, q, g};
  }
  return SpecialClassResult{true, 0, 1};
}

bool eq12_split_holds(const Int& x, unsigned long n) {
  if (n % 4 != 2) throw std::invalid_argument("eq12_split: n must be 2 (mod 4)");
  unsigned long half = n / 2;  // odd
  Int left = repunit_value(x, half);
  Int right = (pow_ui(x, half) + 1) / 2;
  return is_perfect_square(left) && is_perfect_square(right);
}

std::vector<Eq12Solution> search_eq12(const Int& x_max, unsigned long n_max) {
  std::vector<Eq12Solution> out;
  for (Int x = 5; x <= x_max; x += 4) {
    for (unsigned long n = 6; n <= n_max; n += 4) {
      Int r = repunit_value(x, n);
      Int halfr = r / 2;  // r = 2 (mod 4) for x = 1 (mod 4), even n
      if (is_perfect_square(halfr)) {
        Int y;
        mpz_sqrt(y.get_mpz_t(), halfr.get_mpz_t());
        out.push_back(Eq12Solution{x, n, y});
      }
    }
  }
  return out;
}

CoefficientPair coefficient_pair(const Int& r_left, const Int& r_right) {
  if (r_left < 1 || r_right < 1)
    throw std::invalid_argument("coefficient_pair: arguments must be >= 1");
  Int g;
  mpz_gcd(g.get_mpz_t(), r_left.get_mpz_t(), r_right.get_mpz_t());
  return CoefficientPair{r_right / g, r_left / g};
}

bool OmegaLedger::all_even() const {
  for (const auto& [p, par] : parity)
    if (par) return false;
  return true;
}

OmegaLedger omega_ledger(const CandidateSignature& sig,
                         const FactorConfig& cfg, FactorCache* cache) {
  sig.validate(cfg);
  Factorization f = factor(product_eq5(sig), cfg, cache);
  OmegaLedger led;
  // only odd parities are recorded; an empty ledger means a square product
  for (const auto& [p, e] : f.factors)
    if (e & 1u) led.parity.emplace_back(p, 1u);
  return led;
}

}  // namespace opnkit

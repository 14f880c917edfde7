#include "opnkit/repunit.hpp"

#include <stdexcept>

namespace opnkit {

Int repunit_value(const Int& q, unsigned long n) {
  if (q < 2) throw std::invalid_argument("repunit_value: base must be >= 2");
  Int num = pow_ui(q, n) - 1;
  Int r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), Int(q - 1).get_mpz_t());
  return r;
}

Int lucas_u(const Int& a, const Int& b, unsigned long n) {
  Int u0 = 0, u1 = 1;
  if (n == 0) return u0;
  for (unsigned long i = 1; i < n; ++i) {
    Int u2 = a * u1 - b * u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

Int cyclotomic_value(unsigned long n, const Int& q) {
  if (n == 0) throw std::invalid_argument("cyclotomic_value: n must be >= 1");
  if (q < 2) throw std::invalid_argument("cyclotomic_value: q must be >= 2");
  Int num = 1, den = 1;
  for (unsigned long d : divisors_of(n)) {
    int mu = mobius(n / d);
    if (mu == 1)
      num *= pow_ui(q, d) - 1;
    else if (mu == -1)
      den *= pow_ui(q, d) - 1;
  }
  Int r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

namespace {

// Multiplicative order of q mod r for machine-word prime r, by direct scan.
unsigned long ord_small(const Int& q, unsigned long r) {
  unsigned long x = mpz_fdiv_ui(q.get_mpz_t(), r);
  unsigned long q0 = x, e = 1;
  while (x != 1) {
    x = (unsigned long)((unsigned __int128)x * q0 % r);
    ++e;
  }
  return e;
}

}  // namespace

Int arithmetic_primitive_factor(const Int& q, unsigned long n) {
  Int phi = cyclotomic_value(n, q);
  Int g;
  mpz_gcd_ui(g.get_mpz_t(), phi.get_mpz_t(), n);
  if (g == 1) return phi;
  // g is a power of the single prime shared by n and Phi_n(q)
  unsigned long gw = g.get_ui();
  unsigned long p = 2;
  while (gw % p != 0) ++p;
  // cross-check with the order criterion: ord_p(q) must be n / p^{v_p(n)}
  unsigned long f = 0, m = n;
  while (m % p == 0) m /= p, ++f;
  if (f == 0 || mpz_fdiv_ui(q.get_mpz_t(), p) == 0 || ord_small(q, p) != m)
    throw std::logic_error(
        "arithmetic_primitive_factor: gcd and order criteria disagree");
  Int r;
  mpz_divexact_ui(r.get_mpz_t(), phi.get_mpz_t(), p);
  return r;
}

Int rank_of_apparition(const Int& q, const Int& p, const FactorConfig& cfg,
                       FactorCache* cache) {
  if (p < 2) throw std::invalid_argument("rank_of_apparition: p must be prime");
  if (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t()))
    throw NotCoprimeError("rank_of_apparition: p divides the base");
  if (mpz_divisible_p(Int(q - 1).get_mpz_t(), p.get_mpz_t())) return p;
  return ord(q, p, cfg, cache);
}

unsigned repunit_valuation(const Int& q, unsigned long n, const Int& p,
                           const FactorConfig& cfg, FactorCache* cache) {
  if (n == 0) throw std::invalid_argument("repunit_valuation: n must be >= 1");
  if (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t()))
    throw NotCoprimeError("repunit_valuation: p divides the base");
  Int nz(n);
  if (mpz_divisible_p(Int(q - 1).get_mpz_t(), p.get_mpz_t()))
    return v_p(nz, p);
  Int e = ord(q, p, cfg, cache);
  if (e > 1 && e <= Int(n) && mpz_divisible_p(nz.get_mpz_t(), e.get_mpz_t())) {
    Int full = pow_ui(q, e.get_ui()) - 1;
    return v_p(full, p) + v_p(nz, p);
  }
  return 0;
}

unsigned repunit_valuation_digits(const Int& q, unsigned long n, const Int& p,
                                  const FactorConfig& cfg,
                                  FactorCache* cache) {
  if (n == 0)
    throw std::invalid_argument("repunit_valuation_digits: n must be >= 1");
  if (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t()))
    throw NotCoprimeError("repunit_valuation_digits: p divides the base");
  Int e_z = mpz_divisible_p(Int(q - 1).get_mpz_t(), p.get_mpz_t())
                ? Int(1)
                : ord(q, p, cfg, cache);
  if (e_z > Int(n)) return 0;  // no digit of n-1 can carry out of radix e
  unsigned long e = e_z.get_ui();

  // mixed-radix digits: n-1 = a0 + e(a1 + a2 p + ...), n = b0 + e(b1 + ...)
  unsigned long a0 = (n - 1) % e;
  Int A((n - 1 - a0) / e);
  Int B((n - n % e) / e);
  unsigned eps = (a0 + 1 == e) ? 1 : 0;  // carry out of the radix-e digit
  unsigned h = eps ? v_p(pow_ui(q, e) - 1, p) : 0;
  unsigned s = eps * h;

  // carry chain of A + eps = B in base p
  Int a = A, b = B;
  unsigned carry = eps;
  while (a > 0 || b > 0 || carry > 0) {
    Int ai = a % p, bi = b % p;
    Int t = ai + carry;
    if (t == bi) {
      carry = 0;
    } else if (t == bi + p) {
      carry = 1;
      ++s;
    } else {
      throw std::logic_error("repunit_valuation_digits: broken carry chain");
    }
    a /= p;
    b /= p;
    if (a == 0 && b == 0 && carry == 0) break;
  }
  if (carry != 0)
    throw std::logic_error("repunit_valuation_digits: dangling carry");

  // The carry sum equals v_p(q^n - 1); the denominator q - 1 carries h
  // exactly when ord is 1.
  if (e == 1) s -= h;
  return s;
}

std::vector<DivisorRecord> classify_divisors(const RepunitSpec& spec,
                                             const FactorConfig& cfg,
                                             FactorCache* cache) {
  if (spec.base < 2 || spec.index < 1)
    throw std::invalid_argument("classify_divisors: need base >= 2, index >= 1");
  Int value = repunit_value(spec.base, spec.index);
  Factorization f = factor(value, cfg, cache);

  std::vector<DivisorRecord> out;
  for (const auto& [p, h] : f.factors) {
    DivisorRecord rec;
    rec.p = p;
    rec.h = h;
    rec.rank = rank_of_apparition(spec.base, p, cfg, cache);
    rec.primitive = (rec.rank == Int(spec.index));
    rec.h2_class = H2Class::NotApplicable;
    // The squared-valuation taxonomy is a statement about odd primes; the
    // component indices it serves are odd, where the repunit is odd anyway.
    if (h == 2 && p > 2) {
      Int nz(spec.index);
      if (mpz_divisible_p(Int(spec.base - 1).get_mpz_t(), p.get_mpz_t())) {
        if (v_p(nz, p) == 2) rec.h2_class = H2Class::ClassI;
      } else {
        Int e = ord(spec.base, p, cfg, cache);
        if (mpz_divisible_p(nz.get_mpz_t(), e.get_mpz_t())) {
          unsigned he = v_p(pow_ui(spec.base, e.get_ui()) - 1, p);
          unsigned vn = v_p(nz, p);
          if (he == 1 && vn == 1)
            rec.h2_class = H2Class::ClassII;
          else if (he == 2 && vn == 0)
            rec.h2_class = H2Class::ClassIII;
        }
      }
      if (rec.h2_class == H2Class::NotApplicable)
        throw std::logic_error("classify_divisors: h = 2 escaped every class");
    }
    out.push_back(rec);
  }
  return out;
}

const char* h2_class_name(H2Class c) {
  switch (c) {
    case H2Class::ClassI: return "ClassI";
    case H2Class::ClassII: return "ClassII";
    case H2Class::ClassIII: return "ClassIII";
    default: return "NotApplicable";
  }
}

}  // namespace opnkit

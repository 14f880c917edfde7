#include "opnkit/core_arith.hpp"

#include <algorithm>
#include <mutex>

namespace opnkit {

Int Factorization::value() const {
  Int v = 1;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

unsigned Factorization::exponent_of(const Int& p) const {
  for (const auto& [q, e] : factors)
    if (q == p) return e;
  return 0;
}

const Factorization* FactorCache::lookup(const Int& n) {
  auto it = entries_.find(n);
  if (it == entries_.end()) {
    ++misses_;
    return nullptr;
  }
  ++hits_;
  return &it->second;
}

void FactorCache::insert(const Int& n, const Factorization& f) {
  entries_.emplace(n, f);
}

Int pow_ui(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int powmod(const Int& base, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

// ---- primality ----

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod_u64(u64 b, u64 e, u64 m) {
  u64 r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

bool mr_witness_u64(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

// Staged deterministic witness sets; each stage is proven exact below its
// threshold, the last one below 2^64.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  auto test = [&](std::initializer_list<u64> bases) {
    for (u64 a : bases)
      if (mr_witness_u64(n, a, d, s)) return false;
    return true;
  };
  if (n < 2047ULL) return test({2});
  if (n < 1373653ULL) return test({2, 3});
  if (n < 9080191ULL) return test({31, 73});
  if (n < 25326001ULL) return test({2, 3, 5});
  if (n < 3215031751ULL) return test({2, 3, 5, 7});
  if (n < 4759123141ULL) return test({2, 7, 61});
  if (n < 1122004669633ULL) return test({2, 13, 23, 1662803});
  if (n < 2152302898747ULL) return test({2, 3, 5, 7, 11});
  if (n < 3474749660383ULL) return test({2, 3, 5, 7, 11, 13});
  if (n < 341550071728321ULL) return test({2, 3, 5, 7, 11, 13, 17});
  if (n < 3825123056546413051ULL)
    return test({2, 3, 5, 7, 11, 13, 17, 19, 23});
  return test({2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37});
}

bool mr_witness_mpz(const Int& n, const Int& a, const Int& d,
                    unsigned long s) {
  Int x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

// Derives the witness stream for a given n so repeated calls agree and
// --seed makes whole runs reproducible.
u64 mix_seed(const Int& n, u64 seed) {
  u64 h = mpz_fdiv_ui(n.get_mpz_t(), 0xFFFFFFFFFFFFFFC5ULL);
  h ^= seed + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

bool is_prime(const Int& n, const FactorConfig& cfg) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t()) && sizeof(unsigned long) == 8)
    return is_prime_u64(n.get_ui());

  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (mr_witness_mpz(n, Int(p), d, s)) return false;
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(mix_seed(n, cfg.seed));
  Int span = n - 4;
  for (unsigned i = 0; i < cfg.mr_rounds; ++i) {
    Int a = rng.get_z_range(span) + 2;  // uniform in [2, n-2]
    if (mr_witness_mpz(n, a, d, s)) return false;
  }
  return true;
}

// ---- factorization ----

namespace {

const std::vector<unsigned long>& small_primes() {
  static std::vector<unsigned long> table;
  static std::once_flag once;
  std::call_once(once, [] { table = primes_below(100000); });
  return table;
}

Int rho_brent(const Int& n, u64& budget, gmp_randstate_t rng) {
  // Brent's cycle variant with batched gcds. Returns a nontrivial factor,
  // or throws via the caller when the budget is gone.
  while (budget > 0) {
    Int y, c;
    mpz_urandomm(y.get_mpz_t(), rng, n.get_mpz_t());
    mpz_urandomm(c.get_mpz_t(), rng, n.get_mpz_t());
    if (c == 0) c = 1;
    Int x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long block = 128;
    while (g == 1 && budget > 0) {
      x = y;
      for (unsigned long i = 0; i < r && budget > 0; ++i) {
        y = (y * y + c) % n;
        --budget;
      }
      unsigned long k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        unsigned long lim = std::min(block, r - k);
        for (unsigned long i = 0; i < lim && budget > 0; ++i) {
          y = (y * y + c) % n;
          Int diff = x - y;
          q = (q * abs(diff)) % n;
          --budget;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        Int diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n && g > 1) return g;
  }
  return 0;
}

void add_factor(std::vector<std::pair<Int, unsigned>>& out, const Int& p,
                unsigned e) {
  for (auto& [q, k] : out) {
    if (q == p) {
      k += e;
      return;
    }
  }
  out.emplace_back(p, e);
}

// Splits m (no small factors, composite allowed) into primes, recursing on
// perfect powers and rho splits.
void factor_core(Int m, unsigned mult,
                 std::vector<std::pair<Int, unsigned>>& out,
                 const FactorConfig& cfg, u64& budget, gmp_randstate_t rng) {
  if (m == 1) return;
  if (is_prime(m, cfg)) {
    add_factor(out, m, mult);
    return;
  }
  if (mpz_perfect_power_p(m.get_mpz_t())) {
    unsigned long maxk = mpz_sizeinbase(m.get_mpz_t(), 2);
    for (unsigned long k = 2; k <= maxk; ++k) {
      Int root, rem;
      mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t(), k);
      if (rem == 0) {
        factor_core(root, mult * unsigned(k), out, cfg, budget, rng);
        return;
      }
    }
  }
  Int d = rho_brent(m, budget, rng);
  if (d == 0) throw FactorTimeoutError(out, m);
  factor_core(d, mult, out, cfg, budget, rng);
  factor_core(m / d, mult, out, cfg, budget, rng);
}

}  // namespace

Factorization factor(const Int& n, const FactorConfig& cfg,
                     FactorCache* cache) {
  if (n < 1) throw std::invalid_argument("factor: n must be >= 1");
  if (cache) {
    if (const Factorization* hit = cache->lookup(n)) return *hit;
  }

  Factorization result;
  Int m = n;
  if (mpz_fits_ulong_p(m.get_mpz_t())) {
    // machine-word trial division, no mpz traffic
    u64 w = m.get_ui();
    for (unsigned long p : small_primes()) {
      if (u64(p) * p > w) break;
      if (w % p == 0) {
        unsigned e = 0;
        while (w % p == 0) w /= p, ++e;
        result.factors.emplace_back(p, e);
      }
    }
    m = Int(static_cast<unsigned long>(w));
  } else {
    for (unsigned long p : small_primes()) {
      if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        unsigned long e =
            mpz_remove(m.get_mpz_t(), m.get_mpz_t(), Int(p).get_mpz_t());
        result.factors.emplace_back(p, unsigned(e));
      }
      if (mpz_fits_ulong_p(m.get_mpz_t())) break;
    }
    if (mpz_fits_ulong_p(m.get_mpz_t())) {
      u64 w = m.get_ui();
      for (unsigned long p : small_primes()) {
        if (u64(p) * p > w) break;
        if (w % p == 0) {
          unsigned e = 0;
          while (w % p == 0) w /= p, ++e;
          add_factor(result.factors, p, e);
        }
      }
      m = Int(static_cast<unsigned long>(w));
    }
  }
  if (m > 1) {
    if (is_prime(m, cfg)) {
      result.factors.emplace_back(m, 1);
    } else {
      u64 budget = cfg.rho_budget;
      gmp_randstate_t rng;
      gmp_randinit_mt(rng);
      gmp_randseed_ui(rng, mix_seed(m, cfg.seed));
      std::vector<std::pair<Int, unsigned>> rest;
      try {
        factor_core(m, 1, rest, cfg, budget, rng);
      } catch (FactorTimeoutError& e) {
        gmp_randclear(rng);
        // surface the full partial picture, small primes included
        for (const auto& pe : result.factors) e.partial.push_back(pe);
        std::sort(e.partial.begin(), e.partial.end());
        throw;
      }
      gmp_randclear(rng);
      for (const auto& pe : rest) result.factors.push_back(pe);
    }
  }
  std::sort(result.factors.begin(), result.factors.end());

  if (cache && n > 1000000) cache->insert(n, result);
  return result;
}

unsigned v_p(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("v_p: n must be nonzero");
  if (p < 2) throw std::invalid_argument("v_p: p must be >= 2");
  Int rest;
  return unsigned(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Int ord(const Int& q, const Int& p, const FactorConfig& cfg,
        FactorCache* cache) {
  if (p < 2) throw std::invalid_argument("ord: p must be prime");
  if (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t()))
    throw NotCoprimeError("ord: q divisible by p");
  Int e = p - 1;
  Factorization f = factor(e, cfg, cache);
  // shrink e by every prime power that keeps q^e = 1
  for (const auto& [r, k] : f.factors) {
    for (unsigned i = 0; i < k; ++i) {
      Int cand = e / r;
      if (powmod(q, cand, p) == 1)
        e = cand;
      else
        break;
    }
  }
  return e;
}

SquareFreeSplit square_free_split(const Int& n, const FactorConfig& cfg,
                                  FactorCache* cache) {
  if (n < 1) throw std::invalid_argument("square_free_split: n must be >= 1");
  Factorization f = factor(n, cfg, cache);
  SquareFreeSplit s{1, 1};
  for (const auto& [p, e] : f.factors) {
    if (e & 1) s.kappa *= p;
    s.chi *= pow_ui(p, e / 2);
  }
  return s;
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

int legendre(const Int& a, const Int& p) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("legendre: p must be an odd prime");
  Int r = powmod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  if (r == 1) return 1;
  return -1;  // r == p-1 by Euler's criterion
}

std::vector<unsigned long> divisors_of(unsigned long n) {
  if (n == 0) throw std::invalid_argument("divisors_of: n must be >= 1");
  std::vector<unsigned long> out;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(unsigned long n) {
  if (n == 0) throw std::invalid_argument("mobius: n must be >= 1");
  int sign = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<unsigned long> primes_below(unsigned long limit) {
  std::vector<bool> comp(limit, false);
  std::vector<unsigned long> out;
  for (unsigned long i = 2; i < limit; ++i) {
    if (!comp[i]) {
      out.push_back(i);
      for (unsigned long j = i * i; j < limit; j += i) comp[j] = true;
    }
  }
  return out;
}

}  // namespace opnkit

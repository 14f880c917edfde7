// Minimal RAII wrapper over MPFR, just wide enough for the density
// estimates: 256-bit mantissa (~77 decimal digits), log/sqrt/ratios,
// scientific-notation printing. Round-to-nearest throughout.
#ifndef OPNKIT_BIGFLOAT_HPP
#define OPNKIT_BIGFLOAT_HPP

#include <mpfr.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "opnkit/core_arith.hpp"

namespace opnkit {

class BigFloat {
 public:
  static constexpr mpfr_prec_t kPrec = 256;

  BigFloat() { mpfr_init2(v_, kPrec); mpfr_set_ui(v_, 0, MPFR_RNDN); }
  explicit BigFloat(unsigned long u) {
    mpfr_init2(v_, kPrec);
    mpfr_set_ui(v_, u, MPFR_RNDN);
  }
  explicit BigFloat(double d) {
    mpfr_init2(v_, kPrec);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  explicit BigFloat(const Int& z) {
    mpfr_init2(v_, kPrec);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, kPrec);
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r;
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  BigFloat log() const {
    BigFloat r;
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigFloat sqrt() const {
    BigFloat r;
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
  }
  double log10() const {
    mpfr_t t;
    mpfr_init2(t, kPrec);
    mpfr_log10(t, v_, MPFR_RNDN);
    double d = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return d;
  }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  // "d.dddddde-159" with `digits` significant digits.
  std::string str(int digits = 20) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits - 1, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

 private:
  mpfr_t v_;
};

}  // namespace opnkit

#endif

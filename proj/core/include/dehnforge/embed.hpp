#pragma once

#include <mpfr.h>

#include <string>

#include "dehnforge/scalar.hpp"
#include "dehnforge/tower.hpp"

namespace dehnforge {

// Owning handle around an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t bits = 64) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Mpfr(const Mpfr& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mpfr(Mpfr&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Mpfr& operator=(Mpfr o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits) const;

 private:
  mpfr_t v_;
};

// Certified enclosure lo <= x <= hi.
struct RealInterval {
  Mpfr lo, hi;
};

RealInterval enclose(const TowerElement& x, mpfr_prec_t bits);

// Approximation with |value - x| < 2^-precision_bits; the enclosure is kept.
struct Embedded {
  Mpfr value;
  RealInterval interval;
  int precision_bits = 0;
};

// Works on real tower elements; anything else raises NotEmbeddable.
Embedded embed_float(const TowerElement& x, int precision_bits);
Embedded embed_float(const Scalar& x, int precision_bits);

// Sign of a real tower element under the embedding with positive roots.
int real_sign(const TowerElement& x);

}  // namespace dehnforge

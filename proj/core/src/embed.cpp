#include "dehnforge/embed.hpp"

#include <vector>

#include "dehnforge/error.hpp"

namespace dehnforge {

std::string Mpfr::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return buf.data();
}

namespace {

void set_rational(mpfr_ptr out, const Rational& q, mpfr_rnd_t rnd) { mpfr_set_q(out, q.get_mpq_t(), rnd); }

// Encloses c * sqrt(m) for m > 0.
void enclose_term(const Rational& c, const Integer& m, mpfr_prec_t bits, Mpfr& lo, Mpfr& hi) {
  Mpfr slo(bits), shi(bits);
  mpfr_set_z(slo.get(), m.get_mpz_t(), MPFR_RNDD);
  mpfr_sqrt(slo.get(), slo.get(), MPFR_RNDD);
  mpfr_set_z(shi.get(), m.get_mpz_t(), MPFR_RNDU);
  mpfr_sqrt(shi.get(), shi.get(), MPFR_RNDU);
  Mpfr clo(bits), chi(bits);
  set_rational(clo.get(), c, MPFR_RNDD);
  set_rational(chi.get(), c, MPFR_RNDU);
  // c*s with s > 0: bounds use the endpoints of c against those of s.
  if (c >= 0) {
    mpfr_mul(lo.get(), clo.get(), slo.get(), MPFR_RNDD);
    mpfr_mul(hi.get(), chi.get(), shi.get(), MPFR_RNDU);
  } else {
    mpfr_mul(lo.get(), clo.get(), shi.get(), MPFR_RNDD);
    mpfr_mul(hi.get(), chi.get(), slo.get(), MPFR_RNDU);
  }
}

}  // namespace

RealInterval enclose(const TowerElement& x, mpfr_prec_t bits) {
  if (!x.is_real()) throw Error(ErrorCode::NotEmbeddable, "non-real element " + x.to_string());
  RealInterval r{Mpfr(bits), Mpfr(bits)};
  Mpfr tlo(bits), thi(bits);
  for (const auto& [m, c] : x.coords()) {
    if (m == 1) {
      set_rational(tlo.get(), c, MPFR_RNDD);
      set_rational(thi.get(), c, MPFR_RNDU);
    } else {
      enclose_term(c, m, bits, tlo, thi);
    }
    mpfr_add(r.lo.get(), r.lo.get(), tlo.get(), MPFR_RNDD);
    mpfr_add(r.hi.get(), r.hi.get(), thi.get(), MPFR_RNDU);
  }
  return r;
}

Embedded embed_float(const TowerElement& x, int precision_bits) {
  if (precision_bits < 64) throw Error(ErrorCode::InvalidInput, "precision_bits must be at least 64");
  mpfr_prec_t bits = precision_bits + 32;
  Mpfr tol(bits);
  mpfr_set_ui_2exp(tol.get(), 1, -precision_bits, MPFR_RNDN);
  for (;; bits *= 2) {
    RealInterval iv = enclose(x, bits);
    Mpfr width(bits);
    mpfr_sub(width.get(), iv.hi.get(), iv.lo.get(), MPFR_RNDU);
    if (mpfr_cmp(width.get(), tol.get()) < 0) {
      Mpfr mid(bits);
      mpfr_add(mid.get(), iv.lo.get(), iv.hi.get(), MPFR_RNDN);
      mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
      return {std::move(mid), std::move(iv), precision_bits};
    }
  }
}

int real_sign(const TowerElement& x) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x.rational_value());
  for (mpfr_prec_t bits = 128;; bits *= 2) {
    RealInterval iv = enclose(x, bits);
    if (mpfr_sgn(iv.lo.get()) > 0) return 1;
    if (mpfr_sgn(iv.hi.get()) < 0) return -1;
  }
}

Embedded embed_float(const Scalar& x, int precision_bits) {
  if (x.is_ratfunc())
    throw Error(ErrorCode::NotEmbeddable, x.to_string() + " has no canonical real embedding", x.to_string());
  return embed_float(x.tower(), precision_bits);
}

}  // namespace dehnforge

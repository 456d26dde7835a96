#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace hydroform {

/// Precision settings threaded through every numeric routine.  `bits` is the
/// MPFR significand size; `series_guard` adds slack terms on top of analytic
/// truncation bounds where a routine sums an a-priori-bounded series.
struct PrecisionContext {
  mpfr_prec_t bits = 128;
  int series_guard = 8;

  PrecisionContext() = default;
  explicit PrecisionContext(mpfr_prec_t b, int guard = 8) : bits(b < 64 ? 64 : b), series_guard(guard) {}

  PrecisionContext doubled() const { return PrecisionContext(2 * bits, series_guard); }
};

/// Arbitrary-size signed integer (GMP mpz).  All combinatorics that feed the
/// multipole coefficients run through this type so no rounding ever happens
/// before the final conversion to Real.
class ExactInt {
 public:
  ExactInt() { mpz_init(v_); }
  ExactInt(long n) { mpz_init_set_si(v_, n); }
  ExactInt(const ExactInt& o) { mpz_init_set(v_, o.v_); }
  ExactInt(ExactInt&& o) noexcept {
    mpz_init(v_);
    mpz_swap(v_, o.v_);
  }
  ExactInt& operator=(const ExactInt& o) {
    if (this != &o) mpz_set(v_, o.v_);
    return *this;
  }
  ExactInt& operator=(ExactInt&& o) noexcept {
    mpz_swap(v_, o.v_);
    return *this;
  }
  ~ExactInt() { mpz_clear(v_); }

  static ExactInt factorial(unsigned long n) {
    ExactInt r;
    mpz_fac_ui(r.v_, n);
    return r;
  }
  static ExactInt double_factorial(unsigned long n) {
    ExactInt r;
    mpz_2fac_ui(r.v_, n);
    return r;
  }
  static ExactInt binomial(unsigned long n, long k) {
    ExactInt r;  // zero when k out of range
    if (k < 0 || static_cast<unsigned long>(k) > n) return r;
    mpz_bin_uiui(r.v_, n, static_cast<unsigned long>(k));
    return r;
  }
  static ExactInt pow(const ExactInt& b, unsigned long e) {
    ExactInt r;
    mpz_pow_ui(r.v_, b.v_, e);
    return r;
  }

  friend ExactInt operator+(const ExactInt& a, const ExactInt& b) {
    ExactInt r;
    mpz_add(r.v_, a.v_, b.v_);
    return r;
  }
  friend ExactInt operator-(const ExactInt& a, const ExactInt& b) {
    ExactInt r;
    mpz_sub(r.v_, a.v_, b.v_);
    return r;
  }
  friend ExactInt operator*(const ExactInt& a, const ExactInt& b) {
    ExactInt r;
    mpz_mul(r.v_, a.v_, b.v_);
    return r;
  }
  ExactInt operator-() const {
    ExactInt r;
    mpz_neg(r.v_, v_);
    return r;
  }
  friend bool operator==(const ExactInt& a, const ExactInt& b) { return mpz_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const ExactInt& a, const ExactInt& b) { return !(a == b); }
  bool is_zero() const { return mpz_sgn(v_) == 0; }
  int sign() const { return mpz_sgn(v_); }
  std::string str() const {
    char* s = mpz_get_str(nullptr, 10, v_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
  }

  mpz_srcptr raw() const { return v_; }
  mpz_ptr raw() { return v_; }

 private:
  mpz_t v_;
};

/// Exact rational (GMP mpq), used for coefficient tables that are later
/// evaluated at a Real argument.
class Rational {
 public:
  Rational() { mpq_init(v_); }
  Rational(long n) {
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
  }
  Rational(const ExactInt& num, const ExactInt& den) {
    mpq_init(v_);
    mpz_set(mpq_numref(v_), num.raw());
    mpz_set(mpq_denref(v_), den.raw());
    mpq_canonicalize(v_);
  }
  explicit Rational(const ExactInt& num) : Rational(num, ExactInt(1)) {}
  Rational(const Rational& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(v_, o.v_);
    return *this;
  }
  ~Rational() { mpq_clear(v_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    Rational r;
    mpq_div(r.v_, a.v_, b.v_);
    return r;
  }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
  }
  friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) == 0; }
  bool is_zero() const { return mpq_sgn(v_) == 0; }
  int sign() const { return mpq_sgn(v_); }

  mpq_srcptr raw() const { return v_; }

 private:
  mpq_t v_;
};

/// Fixed-precision real number (MPFR, round-to-nearest everywhere).
/// Binary operations produce results at the larger operand precision, so a
/// computation seeded from one PrecisionContext stays at that precision and
/// identical inputs give bit-identical outputs.
class Real {
 public:
  Real() : Real(static_cast<mpfr_prec_t>(128)) {}
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(long n, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, n, MPFR_RNDN);
    return r;
  }
  static Real of(double d, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
  }
  static Real of(const ExactInt& z, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, z.raw(), MPFR_RNDN);
    return r;
  }
  static Real of(const Rational& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, q.raw(), MPFR_RNDN);
    return r;
  }
  static Real parse(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN);
    return r;
  }
  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  Real& operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(long n) {
    mpfr_mul_si(v_, v_, n, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(long n) {
    mpfr_div_si(v_, v_, n, MPFR_RNDN);
    return *this;
  }
  Real& operator+=(long n) {
    mpfr_add_si(v_, v_, n, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(long n) {
    mpfr_sub_si(v_, v_, n, MPFR_RNDN);
    return *this;
  }

  friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }
  friend Real operator*(const Real& a, long n) {
    Real r(a.prec());
    mpfr_mul_si(r.v_, a.v_, n, MPFR_RNDN);
    return r;
  }
  friend Real operator*(long n, const Real& a) { return a * n; }
  friend Real operator/(const Real& a, long n) {
    Real r(a.prec());
    mpfr_div_si(r.v_, a.v_, n, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long n, const Real& a) {
    Real r(a.prec());
    mpfr_si_div(r.v_, n, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& a, long n) {
    Real r(a.prec());
    mpfr_add_si(r.v_, a.v_, n, MPFR_RNDN);
    return r;
  }
  friend Real operator+(long n, const Real& a) { return a + n; }
  friend Real operator-(const Real& a, long n) {
    Real r(a.prec());
    mpfr_sub_si(r.v_, a.v_, n, MPFR_RNDN);
    return r;
  }
  friend Real operator-(long n, const Real& a) {
    Real r(a.prec());
    mpfr_si_sub(r.v_, n, a.v_, MPFR_RNDN);
    return r;
  }
  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, long n) { return mpfr_cmp_si(a.v_, n) < 0; }
  friend bool operator>(const Real& a, long n) { return mpfr_cmp_si(a.v_, n) > 0; }
  friend bool operator==(const Real& a, long n) { return mpfr_cmp_si(a.v_, n) == 0; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  /// Decimal string with the given significant digit count (default: full
  /// precision of the stored value).
  std::string str(size_t digits = 0) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  template <typename F>
  static Real bin(F f, const Real& a, const Real& b) {
    Real r(a.prec() > b.prec() ? a.prec() : b.prec());
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

inline Real sqrt(const Real& a) {
  Real r(a.prec());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real abs(const Real& a) {
  Real r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real pow_si(const Real& a, long e) {
  Real r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}
inline Real exp(const Real& a) {
  Real r(a.prec());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real log(const Real& a) {
  Real r(a.prec());
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real sin(const Real& a) {
  Real r(a.prec());
  mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real cos(const Real& a) {
  Real r(a.prec());
  mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline void sin_cos(Real& s, Real& c, const Real& a) {
  mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
}
inline Real atan2(const Real& y, const Real& x) {
  Real r(y.prec() > x.prec() ? y.prec() : x.prec());
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline Real acos(const Real& a) {
  Real r(a.prec());
  mpfr_acos(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline Real max(const Real& a, const Real& b) { return a > b ? a : b; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }
/// 2^e at the given precision; handy for precision-derived tolerances.
inline Real pow2(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}
/// Relative tolerance 2^{-bits*fraction}: "lose at most this fraction of the
/// significand".  The self-validation suites use fraction 0.5 (agreement)
/// and 0.25 (looser bound for amplifying recurrences).
inline Real rel_tolerance(const PrecisionContext& ctx, double fraction) {
  return pow2(-static_cast<long>(static_cast<double>(ctx.bits) * fraction), ctx.bits);
}

/// Complex value as a pair of Reals.
struct Complex {
  Real re, im;

  Complex() = default;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  static Complex of(const Real& r) { return Complex(r, Real::of(0L, r.prec())); }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const Real& s) { return {a.re * s, a.im * s}; }
  friend Complex operator*(const Real& s, const Complex& a) { return a * s; }
  Complex operator-() const { return {-re, -im}; }
  Complex conj() const { return {re, -im}; }
  Real abs2() const { return re * re + im * im; }
  Real abs() const { return sqrt(abs2()); }
  /// multiply by i^k (k may be negative)
  Complex times_i_pow(long k) const {
    long m = ((k % 4) + 4) % 4;
    switch (m) {
      case 0: return *this;
      case 1: return {-im, re};
      case 2: return {-re, -im};
      default: return {im, -re};
    }
  }
};

}  // namespace hydroform

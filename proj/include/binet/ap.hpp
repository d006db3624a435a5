// Arbitrary-precision real and complex values over MPFR.
//
// Every thread carries its own working precision (in bits). New values and
// the results of arithmetic are created at that precision; PrecisionGuard
// changes it for a scope.
#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "binet/exact.hpp"

namespace binet {

long digits_to_bits(long digits);
long bits_to_digits(long bits);

mpfr_prec_t working_bits();
void set_working_bits(mpfr_prec_t bits);

// Target precision P plus internal guard digits.
struct PrecisionContext {
  int digits = 30;
  int guard = 10;

  int work_digits() const { return digits + guard; }
  PrecisionContext with_digits(int d) const { return {d, guard}; }
  PrecisionContext plus(int extra) const { return {digits + extra, guard}; }
};

class PrecisionGuard {
 public:
  explicit PrecisionGuard(long digits);
  explicit PrecisionGuard(const PrecisionContext& ctx) : PrecisionGuard(ctx.work_digits()) {}
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  mpfr_prec_t saved_;
};

class Real {
 public:
  Real();
  Real(int v);
  Real(long v);
  Real(unsigned long v);
  Real(double v);
  Real(const Int& v);
  Real(const Rat& v);
  explicit Real(const std::string& decimal);
  explicit Real(const char* decimal) : Real(std::string(decimal)) {}
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  long exponent2() const;  // e with |x| in [2^{e-1}, 2^e); very negative for 0

 private:
  mpfr_t v_;
};

Real operator-(const Real& a);
Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long b);
Real operator*(long a, const Real& b);
Real operator/(const Real& a, long b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator-(long a, const Real& b);
Real operator/(long a, const Real& b);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
bool operator!=(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real log10(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real acos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real ldexp(const Real& x, long e);
Real floor(const Real& x);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

Real const_pi();
Real const_log2();
Real ten_pow(long e);  // 10^e at working precision

// Exactly `digits` significant decimal digits, round-half-even. Fixed
// notation for moderate exponents, scientific otherwise.
std::string format(const Real& x, int digits);
// log10|x| as a double; -inf-ish sentinel (-1e9) for zero.
double log10_abs(const Real& x);

class Complex {
 public:
  Real re, im;

  Complex() = default;
  Complex(const Real& r) : re(r), im(0) {}
  Complex(const Real& r, const Real& i) : re(r), im(i) {}
  Complex(int r) : re(r), im(0) {}
  Complex(long r) : re(r), im(0) {}
  Complex(double r) : re(r), im(0) {}
  Complex(const Rat& r) : re(r), im(0) {}

  bool is_real() const { return im.is_zero(); }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
};

Complex operator-(const Complex& a);
Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator/(const Complex& a, const Real& b);

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);   // in (-pi, pi]
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, const Complex& w);
Complex pow(const Complex& z, long n);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex reciprocal(const Complex& z);

std::string format(const Complex& z, int digits);

}  // namespace binet

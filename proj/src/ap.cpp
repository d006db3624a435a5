#include "binet/ap.hpp"

#include <cmath>
#include <stdexcept>

namespace binet {

namespace {
thread_local mpfr_prec_t t_bits = 0;
}

long digits_to_bits(long digits) {
  return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 4;
}

long bits_to_digits(long bits) { return static_cast<long>(std::floor((bits - 4) / 3.3219280948873623)); }

mpfr_prec_t working_bits() {
  if (t_bits == 0) t_bits = digits_to_bits(40);
  return t_bits;
}

void set_working_bits(mpfr_prec_t bits) { t_bits = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits; }

PrecisionGuard::PrecisionGuard(long digits) : saved_(working_bits()) {
  set_working_bits(digits_to_bits(digits));
}

PrecisionGuard::~PrecisionGuard() { set_working_bits(saved_); }

// ---- Real -----------------------------------------------------------------

Real::Real() {
  mpfr_init2(v_, working_bits());
  mpfr_set_zero(v_, 1);
}
Real::Real(int v) : Real(static_cast<long>(v)) {}
Real::Real(long v) {
  mpfr_init2(v_, working_bits());
  mpfr_set_si(v_, v, MPFR_RNDN);
}
Real::Real(unsigned long v) {
  mpfr_init2(v_, working_bits());
  mpfr_set_ui(v_, v, MPFR_RNDN);
}
Real::Real(double v) {
  mpfr_init2(v_, working_bits());
  mpfr_set_d(v_, v, MPFR_RNDN);
}
Real::Real(const Int& v) {
  mpfr_init2(v_, working_bits());
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}
Real::Real(const Rat& v) {
  mpfr_init2(v_, working_bits());
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}
Real::Real(const std::string& decimal) {
  mpfr_init2(v_, working_bits());
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("not a decimal number: " + decimal);
}
Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}
Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
Real::~Real() { mpfr_clear(v_); }

long Real::exponent2() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return mpfr_get_exp(v_);
}

namespace {
// Result slot at working precision.
inline Real fresh() { return Real(); }

template <class F>
Real unary(const Real& x, F f) {
  Real r = fresh();
  f(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
}  // namespace

Real& Real::operator+=(const Real& o) {
  *this = *this + o;
  return *this;
}
Real& Real::operator-=(const Real& o) {
  *this = *this - o;
  return *this;
}
Real& Real::operator*=(const Real& o) {
  *this = *this * o;
  return *this;
}
Real& Real::operator/=(const Real& o) {
  *this = *this / o;
  return *this;
}
Real& Real::operator*=(long o) {
  *this = *this * o;
  return *this;
}
Real& Real::operator/=(long o) {
  *this = *this / o;
  return *this;
}

Real operator-(const Real& a) { return unary(a, mpfr_neg); }
Real operator+(const Real& a, const Real& b) {
  Real r = fresh();
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r = fresh();
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r = fresh();
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r = fresh();
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, long b) {
  Real r = fresh();
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(const Real& a, long b) {
  Real r = fresh();
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator+(const Real& a, long b) {
  Real r = fresh();
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r = fresh();
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator-(long a, const Real& b) {
  Real r = fresh();
  mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}
Real operator/(long a, const Real& b) {
  Real r = fresh();
  mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
  return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
bool operator!=(const Real& a, const Real& b) { return !(a == b); }

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real log10(const Real& x) { return unary(x, mpfr_log10); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real tan(const Real& x) { return unary(x, mpfr_tan); }
Real atan(const Real& x) { return unary(x, mpfr_atan); }
Real acos(const Real& x) { return unary(x, mpfr_acos); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real floor(const Real& x) {
  Real r = fresh();
  mpfr_floor(r.raw(), x.raw());
  return r;
}
Real atan2(const Real& y, const Real& x) {
  Real r = fresh();
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
Real pow(const Real& x, const Real& y) {
  Real r = fresh();
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
Real pow(const Real& x, long n) {
  Real r = fresh();
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}
Real ldexp(const Real& x, long e) {
  Real r = fresh();
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}
Real min(const Real& a, const Real& b) { return a < b ? a : b; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real const_pi() {
  Real r = fresh();
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
Real const_log2() {
  Real r = fresh();
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}
Real ten_pow(long e) {
  Real r(10L);
  return pow(r, e);
}

std::string format(const Real& x, int digits) {
  if (digits < 1) digits = 1;
  if (!x.is_finite()) return mpfr_nan_p(x.raw()) ? "nan" : (x.sign() < 0 ? "-inf" : "inf");
  if (x.is_zero()) return "0";
  mpfr_exp_t e10 = 0;
  char* s = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(digits), x.raw(), MPFR_RNDN);
  std::string d(s);
  mpfr_free_str(s);
  bool neg = false;
  if (!d.empty() && d[0] == '-') {
    neg = true;
    d.erase(0, 1);
  }
  long lead = static_cast<long>(e10) - 1;  // decimal exponent of the first digit
  std::string out;
  if (lead >= -5 && lead < digits) {
    if (lead < 0) {
      out = "0." + std::string(static_cast<size_t>(-lead - 1), '0') + d;
    } else {
      out = d.substr(0, static_cast<size_t>(lead + 1));
      if (static_cast<long>(d.size()) > lead + 1) out += "." + d.substr(static_cast<size_t>(lead + 1));
    }
  } else {
    out = d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    out += "e" + std::to_string(lead);
  }
  return neg ? "-" + out : out;
}

double log10_abs(const Real& x) {
  if (x.is_zero()) return -1e9;
  PrecisionGuard g(20);
  return log10(abs(x)).to_double();
}

// ---- Complex --------------------------------------------------------------

Complex& Complex::operator+=(const Complex& o) {
  re = re + o.re;
  im = im + o.im;
  return *this;
}
Complex& Complex::operator-=(const Complex& o) {
  re = re - o.re;
  im = im - o.im;
  return *this;
}
Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}
Complex& Complex::operator/=(const Complex& o) {
  *this = *this / o;
  return *this;
}

Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  if (a.im.is_zero() && b.im.is_zero()) return {a.re * b.re, Real(0)};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  if (b.im.is_zero()) return {a.re / b.re, a.im / b.re};
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
Real abs(const Complex& z) {
  Real r;
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}
Real arg(const Complex& z) { return atan2(z.im, z.re); }
Complex conj(const Complex& z) { return {z.re, -z.im}; }
Complex reciprocal(const Complex& z) { return Complex(1) / z; }

Complex exp(const Complex& z) {
  Real m = exp(z.re);
  if (z.im.is_zero()) return {m, Real(0)};
  return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z) {
  if (z.im.is_zero() && z.re.sign() > 0) return {log(z.re), Real(0)};
  return {log(abs(z)), arg(z)};
}

Complex sqrt(const Complex& z) {
  if (z.im.is_zero() && z.re.sign() >= 0) return {sqrt(z.re), Real(0)};
  Real r = abs(z);
  Real a = sqrt((r + z.re) / 2);
  Real b = sqrt((r - z.re) / 2);
  if (z.im.sign() < 0) b = -b;
  return {a, b};
}

Complex pow(const Complex& z, const Complex& w) {
  if (z.re.is_zero() && z.im.is_zero()) return Complex(0);
  return exp(w * log(z));
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return reciprocal(pow(z, -n));
  Complex r(1), b = z;
  while (n > 0) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

Complex sin(const Complex& z) {
  if (z.im.is_zero()) return {sin(z.re), Real(0)};
  return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

Complex cos(const Complex& z) {
  if (z.im.is_zero()) return {cos(z.re), Real(0)};
  return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))};
}

std::string format(const Complex& z, int digits) {
  if (z.im.is_zero()) return format(z.re, digits);
  std::string im = format(z.im, digits);
  if (im[0] != '-') im = "+" + im;
  return format(z.re, digits) + im + "i";
}

}  // namespace binet

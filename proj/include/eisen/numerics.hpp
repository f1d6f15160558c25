#pragma once

// High-precision numerical evaluation: Eisenstein q-series, one-index lattice
// sums in closed form, and brute-force oracles for the multiple series. None of
// this depends on the symbolic reducer, so it can check it.

#include "eisen/hyperbolic.hpp"
#include "eisen/reducer.hpp"
#include "eisen/ring.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace eisen {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr int kDefaultQTerms = 64;
inline constexpr int kDefaultMmax = 60;
inline constexpr int kDefaultNmax = 400;

/// Sets the working precision of newly created Real values for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits10_;
};

/// Raised when an oracle runs into a pole of coth.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

  friend Complex operator+(Complex x, const Complex& y) { return x += y; }
  friend Complex operator-(Complex x, const Complex& y) { return x -= y; }
  friend Complex operator*(Complex x, const Complex& y) { return x *= y; }
  friend Complex operator/(Complex x, const Complex& y) { return x /= y; }
  friend Complex operator-(const Complex& x) { return {-x.re, -x.im}; }
};

Real abs(const Complex& z);
Complex exp(const Complex& z);
Complex pow(const Complex& z, long n);
Complex cot(const Complex& z);
Complex coth(const Complex& z);

Real pi_value();
Real to_real(const Rational& q);
Real zeta_value(unsigned s);

/// "a+bi" with `digits` significant digits per component.
std::string format_complex(const Complex& z, int digits = 20);

/// G_{2k}(tau) from its q-expansion. For k = 1 returns the convention in which
/// the inner sum runs over the tau-coefficient: the usual quasimodular value
/// minus 2 pi i / tau. Throws std::domain_error when Im(tau) <= 0.
Complex eval_G(int k, const Complex& tau, int terms = kDefaultQTerms);

/// sum_{l in Z} (m + l tau)^{-2p} in closed form, from derivatives of
/// (pi/tau) cot(pi z / tau). Throws std::domain_error for m == 0.
Complex inner_sum(int p, long m, const Complex& tau);

struct OracleReport {
  Complex value;
  int truncation = 0;
  Real tail_estimate;
  std::string summation_order;
};

/// Sum over 0 < |m| <= mmax of prod_j inner_sum(p_j, m, tau), ascending |m|,
/// plus the m = 0 row for the full family.
OracleReport oracle_Gtilde(const IndexTuple& t, const Complex& tau, int mmax = kDefaultMmax);

/// Brute-force coth series: for each m, the last inner index is summed directly
/// over |n_r| <= nmax with coth evaluated at (m + n_r tau) pi i / tau; the
/// remainder |n_r| > nmax is added using the i pi periodicity of coth.
OracleReport oracle_coth(const CothIndex& c, const Complex& tau, int mmax = kDefaultMmax,
                         int nmax = kDefaultNmax);

Complex eval_ring_element(const RingElement& x, const Complex& tau, int terms = kDefaultQTerms);

Real eval_closed_form(const ClosedFormValue& v);

/// varpi = pi / agm(1, sqrt 2), computed at the given precision.
Real lemniscate_constant(unsigned precision_bits = kDefaultPrecisionBits);
/// varpi = Gamma(1/4)^2 / (2 sqrt(2 pi)).
Real lemniscate_constant_gamma(unsigned precision_bits = kDefaultPrecisionBits);

/// sum_{m != 0} coth(m pi) / m^{4p+3}: the coth - 1 part summed directly over
/// 0 < |m| <= mmax, the remaining 2 zeta(4p+3) taken from MPFR.
Real cauchy_numeric(int p, int mmax);

}  // namespace eisen

#include "eisen/numerics.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <map>
#include <utility>

namespace eisen {

namespace {

unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120));
}

[[maybe_unused]] const bool kPrecisionInstalled = [] {
  Real::default_precision(bits_to_digits10(kDefaultPrecisionBits));
  return true;
}();

void require_upper_half_plane(const Complex& tau) {
  if (tau.im <= 0) throw std::domain_error("Im(tau) must be positive");
}

Real to_real(const Integer& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Integer divisor_power_sum(long n, unsigned power) {
  Integer sum = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), power);
    sum += t;
    const long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(e), power);
      sum += t;
    }
  }
  return sum;
}

// (i z)
Complex times_i(const Complex& z) { return {-z.im, z.re}; }

// Integer-coefficient polynomial in c = cot(w) and s = csc^2(w).
using CotPoly = std::map<std::pair<int, int>, Integer>;

// Q_n with d^n/dw^n cot(w) = Q_n(cot w, csc^2 w); uses cot' = -s, s' = -2cs.
CotPoly cot_derivative(int n) {
  CotPoly poly{{{1, 0}, Integer(1)}};
  for (int step = 0; step < n; ++step) {
    CotPoly next;
    for (const auto& [exps, coeff] : poly) {
      const auto [a, b] = exps;
      if (a > 0) next[{a - 1, b + 1}] -= coeff * a;
      if (b > 0) next[{a + 1, b}] -= coeff * (2 * b);
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits10_(Real::default_precision()) {
  Real::default_precision(bits_to_digits10(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits10_); }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  const Real den = o.re * o.re + o.im * o.im;
  if (den == 0) throw std::domain_error("complex division by zero");
  Real r = (re * o.re + im * o.im) / den;
  im = (im * o.re - re * o.im) / den;
  re = std::move(r);
  return *this;
}

Real abs(const Complex& z) { return sqrt(z.re * z.re + z.im * z.im); }

Complex exp(const Complex& z) {
  const Real scale = exp(z.re);
  return {scale * cos(z.im), scale * sin(z.im)};
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(Real(1)) / pow(z, -n);
  Complex result(Real(1));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

namespace {

struct CotPair {
  Complex cot;
  Complex csc2;
};

CotPair cot_and_csc2(const Complex& w) {
  const Complex iw = times_i(w);
  const Complex e = exp(iw);
  const Complex e_inv = exp(-iw);
  const Complex two_cos = e + e_inv;
  const Complex diff = e - e_inv;
  const Complex two_sin{diff.im, -diff.re};  // (e - e^{-1}) / i
  return {two_cos / two_sin, Complex(Real(4)) / (two_sin * two_sin)};
}

}  // namespace

Complex cot(const Complex& z) { return cot_and_csc2(z).cot; }

Complex coth(const Complex& z) {
  const bool right = z.re >= 0;
  const Complex t = exp(right ? Complex(-2 * z.re, -2 * z.im) : Complex(2 * z.re, 2 * z.im));
  const Complex one(Real(1));
  const Complex denom = one - t;
  // |sinh z| = e^{|Re z|} |1 - t| / 2
  if (exp(right ? z.re : Real(-z.re)) * abs(denom) / 2 <= Real("1e-12"))
    throw PoleError("coth evaluated at a pole");
  const Complex r = (one + t) / denom;
  return right ? r : -r;
}

Real pi_value() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real zeta_value(unsigned s) {
  Real r;
  mpfr_zeta_ui(r.backend().data(), s, MPFR_RNDN);
  return r;
}

std::string format_complex(const Complex& z, int digits) {
  std::string re = z.re.str(digits);
  std::string im = z.im.str(digits);
  if (!im.empty() && im[0] == '-') return re + "-" + im.substr(1) + "i";
  return re + "+" + im + "i";
}

Complex eval_G(int k, const Complex& tau, int terms) {
  require_upper_half_plane(tau);
  if (k < 1) throw std::domain_error("eval_G requires k >= 1");
  if (terms < 1) throw std::domain_error("eval_G requires at least one q-series term");
  const Real pi = pi_value();
  const Complex q = exp(Complex(-2 * pi * tau.im, 2 * pi * tau.re));

  Complex series;
  Complex qn = q;
  for (int n = 1; n <= terms; ++n) {
    const Real sigma = to_real(divisor_power_sum(n, static_cast<unsigned>(2 * k - 1)));
    series += Complex(sigma) * qn;
    qn *= q;
  }

  if (k == 1) {
    const Real pi2 = pi * pi;
    Complex g = Complex(pi2 / 3) - Complex(8 * pi2) * series;
    return g - Complex(Real(0), 2 * pi) / tau;
  }
  // 2 zeta(2k) + 2 (2 pi i)^{2k} / (2k-1)! sum sigma_{2k-1}(n) q^n
  Real scale = 2 * boost::multiprecision::pow(2 * pi, 2 * k) / to_real(factorial(2 * k - 1));
  if (k % 2 != 0) scale = -scale;
  return Complex(2 * zeta_value(static_cast<unsigned>(2 * k))) + Complex(scale) * series;
}

Complex inner_sum(int p, long m, const Complex& tau) {
  require_upper_half_plane(tau);
  if (m == 0) throw std::domain_error("inner_sum requires m != 0");
  if (p < 1) throw std::domain_error("inner_sum requires p >= 1");
  const int n = 2 * p;
  const Complex pi_over_tau = Complex(pi_value()) / tau;
  const auto [c, s] = cot_and_csc2(pi_over_tau * Complex(Real(m)));

  Complex poly;
  for (const auto& [exps, coeff] : cot_derivative(n - 1))
    poly += Complex(to_real(coeff)) * pow(c, exps.first) * pow(s, exps.second);

  // sum_l (z + l tau)^{-n} = (-1)^{n-1} / (n-1)! * (pi/tau)^n Q_{n-1}
  const Complex scale = pow(pi_over_tau, n) / Complex(to_real(factorial(n - 1)));
  return -(scale * poly);
}

OracleReport oracle_Gtilde(const IndexTuple& t, const Complex& tau, int mmax) {
  require_upper_half_plane(tau);
  if (mmax < 1) throw std::domain_error("oracle requires mmax >= 1");
  if (t.family() == Family::coth) throw std::invalid_argument("use oracle_coth for coth series");

  Complex sum;
  Real last = 0;
  Real previous = 0;
  for (long m = 1; m <= mmax; ++m) {
    Complex plus(Real(1));
    Complex minus(Real(1));
    for (int p : t.halves()) {
      plus *= inner_sum(p, m, tau);
      minus *= inner_sum(p, -m, tau);
    }
    const Complex term = plus + minus;
    sum += term;
    previous = last;
    last = abs(term);
  }

  if (t.family() == Family::full) {
    Complex row(Real(1));
    for (int p : t.halves())
      row *= Complex(2 * zeta_value(static_cast<unsigned>(2 * p))) / pow(tau, 2 * p);
    sum += row;
  }

  OracleReport report;
  report.value = sum;
  report.truncation = mmax;
  // Geometric extrapolation from the last two slices; one slice gives no ratio.
  if (previous > 0 && last < previous) {
    const Real ratio = last / previous;
    report.tail_estimate = last * ratio / (1 - ratio);
  } else {
    report.tail_estimate = last;
  }
  report.summation_order = "inner n_j in closed form; m != 0 symmetric, ascending |m| <= mmax";
  if (t.family() == Family::full) report.summation_order += "; m = 0 row added";
  return report;
}

OracleReport oracle_coth(const CothIndex& c, const Complex& tau, int mmax, int nmax) {
  require_upper_half_plane(tau);
  if (mmax < 1 || nmax < 1) throw std::domain_error("oracle requires mmax, nmax >= 1");
  const auto& halves = c.base.halves();
  const int p_last = halves.back();
  const Complex pi_i_over_tau = Complex(Real(0), pi_value()) / tau;

  Complex sum;
  Real tail = 0;
  Real last = 0;
  for (long m_abs = 1; m_abs <= mmax; ++m_abs) {
    Complex slice;
    for (long m : {m_abs, -m_abs}) {
      Complex prefix(Real(1));
      for (std::size_t j = 0; j + 1 < halves.size(); ++j) prefix *= inner_sum(halves[j], m, tau);

      Complex direct;
      Complex plain;
      for (long n = -nmax; n <= nmax; ++n) {
        const Complex lattice = Complex(Real(m)) + Complex(Real(n)) * tau;
        const Complex weight = pow(lattice, -2 * p_last);
        direct += pow(coth(lattice * pi_i_over_tau), 2 * c.k) * weight;
        plain += weight;
      }
      // coth has period i pi, so every omitted n carries the n = 0 factor.
      const Complex remainder = pow(coth(Complex(Real(m)) * pi_i_over_tau), 2 * c.k) *
                                (inner_sum(p_last, m, tau) - plain);
      slice += prefix * (direct + remainder);
      tail += abs(prefix * remainder);
    }
    sum += slice;
    last = abs(slice);
  }

  OracleReport report;
  report.value = sum;
  report.truncation = mmax;
  report.tail_estimate = tail + last;
  report.summation_order =
      "n_1..n_{r-1} in closed form; n_r direct over |n_r| <= nmax plus periodic remainder; "
      "m != 0 symmetric, ascending |m| <= mmax";
  return report;
}

Complex eval_ring_element(const RingElement& x, const Complex& tau, int terms) {
  require_upper_half_plane(tau);
  const Real pi = pi_value();
  const Complex pi2(pi * pi);
  const Complex tau2 = tau * tau;
  std::map<int, Complex> g_cache;
  auto g = [&](int k) -> const Complex& {
    auto it = g_cache.find(k);
    if (it == g_cache.end()) it = g_cache.emplace(k, eval_G(k, tau, terms)).first;
    return it->second;
  };

  Complex sum;
  for (const auto& [m, q] : x.terms()) {
    Complex term = Complex(to_real(q)) * pow(pi2, m.a) * pow(tau2, m.b);
    if (m.c > 0) term *= pow(g(1), m.c);
    if (m.d > 0) term *= pow(g(2), m.d);
    if (m.e > 0) term *= pow(g(3), m.e);
    sum += term;
  }
  return sum;
}

Real eval_closed_form(const ClosedFormValue& v) {
  const Real pi = pi_value();
  const Real varpi = lemniscate_constant(static_cast<unsigned>(pi.precision() * 3.33 + 8));
  Real sum = 0;
  for (const auto& [key, q] : v.terms())
    sum += to_real(q) * boost::multiprecision::pow(pi, key.pi_power) *
           boost::multiprecision::pow(varpi, key.varpi_power);
  return sum;
}

Real lemniscate_constant(unsigned precision_bits) {
  PrecisionScope scope(precision_bits);
  Real a = 1;
  Real b = sqrt(Real(2));
  const Real eps = ldexp(Real(1), -static_cast<int>(precision_bits));
  while (abs(a - b) > eps * a) {
    Real next_a = (a + b) / 2;
    b = sqrt(a * b);
    a = std::move(next_a);
  }
  return pi_value() / a;
}

Real lemniscate_constant_gamma(unsigned precision_bits) {
  PrecisionScope scope(precision_bits);
  const Real g = boost::math::tgamma(Real(1) / 4);
  return g * g / (2 * sqrt(2 * pi_value()));
}

Real cauchy_numeric(int p, int mmax) {
  if (p < 0 || mmax < 1) throw std::domain_error("cauchy_numeric requires p >= 0, mmax >= 1");
  const Real pi = pi_value();
  const unsigned s = static_cast<unsigned>(4 * p + 3);
  // coth(m pi) = 1 + 2t/(1-t), t = e^{-2 pi m}; the constant part sums to 2 zeta(s).
  Real sum = 2 * zeta_value(s);
  for (long m = 1; m <= mmax; ++m) {
    const Real t = exp(-2 * pi * m);
    sum += 4 * t / ((1 - t) * boost::multiprecision::pow(Real(m), s));
  }
  return sum;
}

}  // namespace eisen

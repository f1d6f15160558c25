#include "eisen/exact_core.hpp"

#include <stdexcept>

namespace eisen {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  auto valid_integer = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw std::invalid_argument("malformed rational: '" + text + "'");
  // mpz_class rejects a leading '+'.
  Integer n(num[0] == '+' ? num.substr(1) : num);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return make_rational(n, d);
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BernoulliCache::BernoulliCache() { table_.emplace_back(1); }

Rational BernoulliCache::get(unsigned n) {
  std::lock_guard<std::mutex> lock(mutex_);
  extend_to(n);
  return table_[n];
}

std::size_t BernoulliCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return table_.size();
}

void BernoulliCache::extend_to(unsigned n) {
  while (table_.size() <= n) {
    const unsigned m = static_cast<unsigned>(table_.size());
    if (m >= 3 && m % 2 == 1) {
      table_.emplace_back(0);
      continue;
    }
    // (m+1) B_m = -sum_{j<m} C(m+1, j) B_j
    Rational acc = 0;
    Integer c = 1;  // C(m+1, j), updated incrementally
    for (unsigned j = 0; j < m; ++j) {
      acc += Rational(c) * table_[j];
      c = c * (m + 1 - j) / (j + 1);
    }
    Rational b = -acc / (m + 1);
    b.canonicalize();
    table_.push_back(b);
  }
}

Rational bernoulli(unsigned n) {
  static BernoulliCache cache;
  return cache.get(n);
}

Rational binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial requires n >= 0");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational zeta_even_coefficient(long l) {
  if (l <= 0) throw std::domain_error("zeta_even requires l >= 1");
  // zeta(2l) = (-1)^(l+1) B_{2l} (2 pi)^{2l} / (2 (2l)!)
  const unsigned n = static_cast<unsigned>(2 * l);
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n);
  Rational c = bernoulli(n) * Rational(two_pow) / Rational(2 * factorial(n));
  if (l % 2 == 0) c = -c;
  c.canonicalize();
  return c;
}

}  // namespace eisen

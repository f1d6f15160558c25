#pragma once

// Exact rational arithmetic and the classical constants built on it:
// Bernoulli numbers, zero-extended binomials and even zeta values.

#include <gmpxx.h>

#include <cstddef>
#include <mutex>
#include <string>
#include <vector>

namespace eisen {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds a canonical rational num/den. Throws std::domain_error on den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "n" or "n/d" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

Integer factorial(unsigned n);

/// Memoized table of Bernoulli numbers with B_1 = -1/2.
///
/// Entries are computed from the recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0
/// and appended; an entry never changes once it is in the table. Access is
/// serialized by an internal mutex so one cache may be shared across threads.
class BernoulliCache {
 public:
  BernoulliCache();

  Rational get(unsigned n);
  std::size_t size() const;

 private:
  void extend_to(unsigned n);

  mutable std::mutex mutex_;
  std::vector<Rational> table_;
};

/// B_n from the process-wide cache.
Rational bernoulli(unsigned n);

/// C(n, k), zero outside 0 <= k <= n. n must be non-negative.
Rational binomial(long n, long k);

/// The rational c with zeta(2l) = c * pi^(2l). Throws std::domain_error
/// for l <= 0.
Rational zeta_even_coefficient(long l);

}  // namespace eisen

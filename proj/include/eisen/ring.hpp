#pragma once

// The target algebra Q[pi^{+-2}, tau^{+-2}, G2, G4, G6] and the exact values
// of its elements at tau = i.

#include "eisen/exact_core.hpp"

#include <compare>
#include <map>
#include <tuple>
#include <utility>

namespace eisen {

/// pi^{2a} tau^{2b} G2^c G4^d G6^e. a and b may be negative.
struct Monomial {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  int e = 0;

  /// 2a + 2c + 4d + 6e; tau carries weight zero.
  int weight() const { return 2 * a + 2 * c + 4 * d + 6 * e; }
  /// Weight carried by the Eisenstein generators alone.
  int g_weight() const { return 2 * c + 4 * d + 6 * e; }

  Monomial operator*(const Monomial& o) const {
    return {a + o.a, b + o.b, c + o.c, d + o.d, e + o.e};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: total weight, then Eisenstein weight, then the G6,
/// G4, G2 exponents, then pi^2 and tau^2, all descending. Puts G4 ahead of
/// pi^2 tau^-2 G2 and the pure pi-power term last.
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const {
    auto key = [](const Monomial& m) {
      return std::make_tuple(m.weight(), m.g_weight(), m.e, m.d, m.c, m.a, m.b);
    };
    return key(x) > key(y);
  }
};

class RingElement {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  RingElement() = default;
  RingElement(const Rational& constant);  // NOLINT: scalars embed implicitly
  RingElement(const Monomial& m, const Rational& coeff = 1);

  static RingElement pi2(int power = 1) { return RingElement(Monomial{power, 0, 0, 0, 0}); }
  static RingElement tau2(int power = 1) { return RingElement(Monomial{0, power, 0, 0, 0}); }
  static RingElement g2() { return RingElement(Monomial{0, 0, 1, 0, 0}); }
  static RingElement g4() { return RingElement(Monomial{0, 0, 0, 1, 0}); }
  static RingElement g6() { return RingElement(Monomial{0, 0, 0, 0, 1}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of m, zero when absent.
  Rational coefficient(const Monomial& m) const;

  /// Adds coeff * m; zero coefficients are dropped. Throws std::domain_error when
  /// m has a negative G2, G4 or G6 exponent.
  void add_term(const Monomial& m, const Rational& coeff);

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const Rational& s);

  friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
  friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
  friend RingElement operator-(RingElement x) { return x *= Rational(-1); }
  friend RingElement operator*(RingElement x, const Rational& s) { return x *= s; }
  friend RingElement operator*(const Rational& s, RingElement x) { return x *= s; }
  friend RingElement operator*(const RingElement& x, const RingElement& y);

  friend bool operator==(const RingElement& x, const RingElement& y) { return x.terms_ == y.terms_; }

 private:
  Terms terms_;
};

RingElement ring_add(const RingElement& x, const RingElement& y);
RingElement ring_mul(const RingElement& x, const RingElement& y);
RingElement pow(const RingElement& x, unsigned n);

/// Partition of x by monomial weight; the parts sum back to x.
std::map<int, RingElement> weight_decomposition(const RingElement& x);

/// G_{2k} for k >= 2 as a weight-2k element of Q[G4, G6], using
/// (2k+1)(2k-1)(k-3) G_{2k} = 3 sum_{j=2}^{k-2} (2j-1)(2k-2j-1) G_{2j} G_{2k-2j}.
/// Throws std::domain_error for k <= 1: G2 is not in Q[G4, G6].
RingElement normalize_higher_G(int k);

/// G_{2k} for any k >= 1: the generator for k <= 3, normalized otherwise.
RingElement eisenstein_generator(int k);

/// A combination constant + sum_k coeff_k * G_{2k} whose Eisenstein factors
/// may include G8, G10, ... This is the form the reducer builds before
/// normalization; all coefficients are free of Eisenstein generators.
struct EisensteinCombination {
  std::map<int, RingElement> g_coeffs;  // k -> coefficient of G_{2k}
  RingElement constant;

  void add_g(int k, const RingElement& coeff);
  EisensteinCombination& operator+=(const EisensteinCombination& o);
};

/// Substitutes G_{2k}, k >= 4, through normalize_higher_G. The result only
/// contains the generators G2, G4, G6.
RingElement normalize_element(const EisensteinCombination& x);

/// zeta(2l) as c * pi^{2l}. Throws std::domain_error for l <= 0.
RingElement zeta_even(int l);
/// zeta(k) for even k, zero for odd k.
RingElement zeta_dagger(int k);

/// Exact value sum coeff * pi^x * varpi^y in Q[pi^{+-1}, varpi].
class ClosedFormValue {
 public:
  struct Key {
    int pi_power = 0;
    int varpi_power = 0;
    friend bool operator==(const Key&, const Key&) = default;
  };
  /// varpi power descending, then pi power descending.
  struct KeyOrder {
    bool operator()(const Key& x, const Key& y) const {
      return std::make_pair(x.varpi_power, x.pi_power) > std::make_pair(y.varpi_power, y.pi_power);
    }
  };
  using Terms = std::map<Key, Rational, KeyOrder>;

  ClosedFormValue() = default;
  ClosedFormValue(int pi_power, int varpi_power, const Rational& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& k, const Rational& coeff);

  ClosedFormValue& operator+=(const ClosedFormValue& o);
  friend ClosedFormValue operator+(ClosedFormValue x, const ClosedFormValue& y) { return x += y; }
  friend ClosedFormValue operator*(const ClosedFormValue& x, const ClosedFormValue& y);
  friend bool operator==(const ClosedFormValue& x, const ClosedFormValue& y) { return x.terms_ == y.terms_; }

 private:
  Terms terms_;
};

/// Exact specialization at tau = i via the Hurwitz values
/// G2(i) = -pi, G4(i) = varpi^4/15, G6(i) = 0 and tau^2 = -1.
ClosedFormValue specialize_i(const RingElement& x);

}  // namespace eisen

#include "eisen/ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace eisen {

RingElement::RingElement(const Rational& constant) { add_term(Monomial{}, constant); }

RingElement::RingElement(const Monomial& m, const Rational& coeff) { add_term(m, coeff); }

Rational RingElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RingElement::add_term(const Monomial& m, const Rational& coeff) {
  if (m.c < 0 || m.d < 0 || m.e < 0)
    throw std::domain_error("negative exponent on an Eisenstein generator");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

RingElement& RingElement::operator+=(const RingElement& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, q);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, -q);
  return *this;
}

RingElement& RingElement::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, q] : terms_) q *= s;
  return *this;
}

RingElement operator*(const RingElement& x, const RingElement& y) {
  RingElement r;
  for (const auto& [mx, qx] : x.terms_)
    for (const auto& [my, qy] : y.terms_) r.add_term(mx * my, qx * qy);
  return r;
}

RingElement ring_add(const RingElement& x, const RingElement& y) { return x + y; }

RingElement ring_mul(const RingElement& x, const RingElement& y) { return x * y; }

RingElement pow(const RingElement& x, unsigned n) {
  RingElement r(Rational(1));
  for (unsigned i = 0; i < n; ++i) r = r * x;
  return r;
}

std::map<int, RingElement> weight_decomposition(const RingElement& x) {
  std::map<int, RingElement> parts;
  for (const auto& [m, q] : x.terms()) parts[m.weight()].add_term(m, q);
  return parts;
}

RingElement normalize_higher_G(int k) {
  if (k <= 1) throw std::domain_error("G_{2k} with k <= 1 is not in Q[G4, G6]");
  std::vector<RingElement> table(static_cast<std::size_t>(std::max(k, 3)) + 1);
  table[2] = RingElement::g4();
  table[3] = RingElement::g6();
  for (int n = 4; n <= k; ++n) {
    RingElement acc;
    for (int j = 2; j <= n - 2; ++j)
      acc += Rational((2 * j - 1) * (2 * n - 2 * j - 1)) * (table[j] * table[n - j]);
    table[n] = acc * make_rational(3, static_cast<long>(2 * n + 1) * (2 * n - 1) * (n - 3));
  }
  return table[k];
}

RingElement eisenstein_generator(int k) {
  if (k == 1) return RingElement::g2();
  return normalize_higher_G(k);
}

void EisensteinCombination::add_g(int k, const RingElement& coeff) {
  if (k < 1) throw std::domain_error("Eisenstein index must be >= 1");
  if (coeff.is_zero()) return;
  auto& slot = g_coeffs[k];
  slot += coeff;
  if (slot.is_zero()) g_coeffs.erase(k);
}

EisensteinCombination& EisensteinCombination::operator+=(const EisensteinCombination& o) {
  for (const auto& [k, coeff] : o.g_coeffs) add_g(k, coeff);
  constant += o.constant;
  return *this;
}

RingElement normalize_element(const EisensteinCombination& x) {
  RingElement r = x.constant;
  for (const auto& [k, coeff] : x.g_coeffs) r += coeff * eisenstein_generator(k);
  return r;
}

RingElement zeta_even(int l) { return RingElement(Monomial{l, 0, 0, 0, 0}, zeta_even_coefficient(l)); }

RingElement zeta_dagger(int k) {
  if (k < 1) throw std::domain_error("zeta_dagger requires k >= 1");
  if (k % 2 != 0) return {};
  return zeta_even(k / 2);
}

ClosedFormValue::ClosedFormValue(int pi_power, int varpi_power, const Rational& coeff) {
  add_term(Key{pi_power, varpi_power}, coeff);
}

void ClosedFormValue::add_term(const Key& k, const Rational& coeff) {
  if (k.varpi_power < 0) throw std::domain_error("negative power of varpi");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

ClosedFormValue& ClosedFormValue::operator+=(const ClosedFormValue& o) {
  for (const auto& [k, q] : o.terms_) add_term(k, q);
  return *this;
}

ClosedFormValue operator*(const ClosedFormValue& x, const ClosedFormValue& y) {
  ClosedFormValue r;
  for (const auto& [kx, qx] : x.terms_)
    for (const auto& [ky, qy] : y.terms_)
      r.add_term({kx.pi_power + ky.pi_power, kx.varpi_power + ky.varpi_power}, qx * qy);
  return r;
}

ClosedFormValue specialize_i(const RingElement& x) {
  ClosedFormValue r;
  for (const auto& [m, q] : x.terms()) {
    if (m.e > 0) continue;  // G6(i) = 0
    Rational coeff = q;
    // tau^{2b} -> (-1)^b, G2^c -> (-1)^c pi^c
    if ((m.b + m.c) % 2 != 0) coeff = -coeff;
    Integer fifteen_pow;
    mpz_ui_pow_ui(fifteen_pow.get_mpz_t(), 15, static_cast<unsigned long>(m.d));
    coeff /= Rational(fifteen_pow);
    r.add_term({2 * m.a + m.c, 4 * m.d}, coeff);
  }
  return r;
}

}  // namespace eisen

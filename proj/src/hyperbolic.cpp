#include "eisen/hyperbolic.hpp"

#include <stdexcept>

namespace eisen {

AlphaTable::AlphaTable(int n_) : n(n_) {
  if (n < 1) throw std::invalid_argument("alpha requires n >= 1");
  // Multiply out X * prod (X^2 - l^2); poly[i] is the coefficient of X^i.
  std::vector<Integer> poly{0, 1};
  for (int l = 1; l < n; ++l) {
    std::vector<Integer> next(poly.size() + 2, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 2] += poly[i];
      next[i] -= poly[i] * (l * l);
    }
    poly = std::move(next);
  }
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (poly[i] != 0) coeffs[static_cast<int>(i)] = poly[i];
}

Integer AlphaTable::at(int k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? Integer(0) : it->second;
}

Integer alpha(int n, int k) { return AlphaTable(n).at(k); }

ClosedFormValue cauchy_closed_form(int p) {
  if (p < 0) throw std::invalid_argument("cauchy_closed_form requires p >= 0");
  const int top = 4 * p + 4;
  Rational sum = 0;
  for (int nu = 0; nu <= 2 * p + 2; ++nu) {
    Rational term = bernoulli(2 * nu) * bernoulli(top - 2 * nu) /
                    Rational(factorial(2 * nu) * factorial(top - 2 * nu));
    sum += nu % 2 == 0 ? -term : term;  // (-1)^{nu+1}
  }
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(4 * p + 3));
  sum *= two_pow;
  sum.canonicalize();
  return ClosedFormValue(4 * p + 3, 0, sum);
}

std::vector<SinhTerm> sinh_inner_identity(int nu) {
  if (nu < 1) throw std::invalid_argument("sinh_inner_identity requires nu >= 1");
  const AlphaTable table(nu);
  Integer four_nu;
  mpz_ui_pow_ui(four_nu.get_mpz_t(), 4, static_cast<unsigned long>(nu));
  const Rational prefactor = Rational(four_nu) / Rational(factorial(2 * nu - 1));

  std::vector<SinhTerm> out;
  for (int j = 1; j <= nu; ++j) {
    // (2 pi i / tau)^{-2j} = (-4)^{-j} pi^{-2j} tau^{2j}
    Integer four_j;
    mpz_ui_pow_ui(four_j.get_mpz_t(), 4, static_cast<unsigned long>(j));
    Rational c = prefactor * Rational(table.at(2 * j - 1)) * Rational(factorial(2 * j - 1)) /
                 Rational(four_j);
    if (j % 2 != 0) c = -c;
    c.canonicalize();
    out.push_back({j, RingElement(Monomial{-j, j, 0, 0, 0}, c)});
  }
  return out;
}

CothIndex::CothIndex(std::vector<int> halves, int k_) : base(std::move(halves), Family::coth), k(k_) {
  if (k < 0) throw std::invalid_argument("coth power must be non-negative");
}

RingElement coth_reduce(const CothIndex& c) {
  if (c.k < 0) throw std::invalid_argument("coth power must be non-negative");
  const auto& halves = c.base.halves();
  const IndexTuple star(halves, Family::star);

  const int r = static_cast<int>(halves.size());
  const int half_weight = c.base.weight() / 2;
  RingElement zeta_product(Rational(1));
  for (int p : halves) zeta_product = zeta_product * zeta_even(p);

  // sinh_part[h] = G~_{2p_1,...,2p_r,2h} - 2^{r+1} tau^{-2(sum p + h)} prod zeta(2p_j) zeta(2h)
  std::vector<RingElement> sinh_part(static_cast<std::size_t>(c.k) + 1);
  for (int h = 1; h <= c.k; ++h) {
    std::vector<int> extended = halves;
    extended.push_back(h);
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(r + 1));
    const RingElement row = Rational(two_pow) * RingElement::tau2(-(half_weight + h)) *
                            zeta_product * zeta_even(h);
    sinh_part[h] = reduce_multi(IndexTuple(extended, Family::full)) - row;
  }

  std::vector<RingElement> values;
  values.push_back(reduce_multi(star));
  for (int kappa = 1; kappa <= c.k; ++kappa) {
    RingElement rhs;
    for (const auto& term : sinh_inner_identity(kappa)) rhs += term.coeff * sinh_part[term.j];
    for (int mu = 0; mu < kappa; ++mu) {
      Rational w = binomial(kappa, mu);
      if ((kappa - mu) % 2 != 0) w = -w;
      rhs -= w * values[mu];
    }
    values.push_back(std::move(rhs));
  }
  return values[c.k];
}

}  // namespace eisen

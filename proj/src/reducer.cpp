#include "eisen/reducer.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace eisen {

std::string to_string(Family f) {
  switch (f) {
    case Family::full: return "full";
    case Family::star: return "star";
    case Family::coth: return "coth";
  }
  return "full";
}

Family parse_family(const std::string& text) {
  if (text == "full") return Family::full;
  if (text == "star") return Family::star;
  if (text == "coth") return Family::coth;
  throw std::invalid_argument("unknown series family '" + text + "'");
}

IndexTuple::IndexTuple(std::vector<int> halves, Family family)
    : halves_(std::move(halves)), family_(family) {
  if (halves_.empty()) throw std::invalid_argument("index tuple must be non-empty");
  for (int p : halves_)
    if (p < 1) throw std::invalid_argument("index tuple entries must be >= 1");
}

IndexTuple IndexTuple::from_exponents(const std::vector<int>& exponents, Family family) {
  std::vector<int> halves;
  halves.reserve(exponents.size());
  for (int s : exponents) {
    if (s <= 0) throw std::invalid_argument("indices must be positive");
    if (s % 2 != 0) throw std::invalid_argument("indices must be even");
    halves.push_back(s / 2);
  }
  return IndexTuple(std::move(halves), family);
}

std::vector<int> IndexTuple::exponents() const {
  std::vector<int> out;
  out.reserve(halves_.size());
  for (int p : halves_) out.push_back(2 * p);
  return out;
}

int IndexTuple::weight() const { return 2 * std::accumulate(halves_.begin(), halves_.end(), 0); }

std::vector<PartialFractionTerm> partial_fraction(int s1, int s2) {
  if (s1 < 1 || s2 < 1) throw std::invalid_argument("partial_fraction requires s1, s2 >= 1");
  std::vector<PartialFractionTerm> out;
  const int total = s1 + s2;
  const int sign1 = s2 % 2 == 0 ? 1 : -1;
  const int sign2 = s1 % 2 == 0 ? 1 : -1;
  for (int k1 = 1; k1 < total; ++k1) {
    const int k2 = total - k1;
    Rational b = binomial(k2 - 1, s2 - 1);
    if (b != 0) out.push_back({PartialFractionTerm::Side::first, k1, sign1, b, k2});
  }
  for (int k1 = 1; k1 < total; ++k1) {
    const int k2 = total - k1;
    Rational b = binomial(k1 - 1, s1 - 1);
    if (b != 0) out.push_back({PartialFractionTerm::Side::second, k2, sign2, b, k1});
  }
  return out;
}

std::complex<double> evaluate_partial_fraction(std::span<const PartialFractionTerm> terms,
                                               std::complex<double> x, std::complex<double> c1,
                                               std::complex<double> c2) {
  std::complex<double> sum = 0;
  for (const auto& t : terms) {
    const bool first = t.side == PartialFractionTerm::Side::first;
    const std::complex<double> diff = first ? c1 - c2 : c2 - c1;
    const std::complex<double> pole = x + (first ? c1 : c2);
    sum += double(t.coeff_sign) * t.binom.get_d() /
           (std::pow(diff, t.difference_power) * std::pow(pole, t.k));
  }
  return sum;
}

namespace {

RingElement tau_inverse_power(int two_l) { return RingElement::tau2(-two_l / 2); }

// 2 zeta(2l) tau^{-2l}
RingElement zeta_over_tau(int l) { return Rational(2) * zeta_even(l) * tau_inverse_power(2 * l); }

EisensteinCombination star_depth1_unnormalized(int p) {
  EisensteinCombination out;
  out.add_g(p, Rational(1));
  out.constant = -zeta_over_tau(p);
  return out;
}

}  // namespace

RingElement star_depth1(int p) {
  if (p < 1) throw std::invalid_argument("star_depth1 requires p >= 1");
  return normalize_element(star_depth1_unnormalized(p));
}

RingElement zero_row(const IndexTuple& t) {
  RingElement r(Rational(1));
  for (int p : t.halves()) r = r * zeta_over_tau(p);
  return r;
}

RingElement star_to_full(const IndexTuple& t, const RingElement& star_value) {
  if (t.family() != Family::star) throw std::invalid_argument("star_to_full expects a star tuple");
  return star_value + zero_row(t);
}

EisensteinCombination reduce_depth2_unnormalized(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("reduce_depth2 requires p, q >= 1");
  const int total = p + q;
  EisensteinCombination out;
  out.add_g(total, Rational(1));
  RingElement bracket = zeta_even(p) * zeta_even(q) - make_rational(1, 2) * zeta_even(total);
  for (int l1 = 1; l1 < total; ++l1) {
    const int l2 = total - l1;
    const Rational b2 = binomial(2 * l2 - 1, 2 * q - 1);
    const Rational b1 = binomial(2 * l1 - 1, 2 * p - 1);
    out.add_g(l1, b2 * zeta_over_tau(l2));
    out.add_g(l2, b1 * zeta_over_tau(l1));
    bracket -= (b2 + b1) * (zeta_even(l1) * zeta_even(l2));
  }
  out.constant = Rational(4) * tau_inverse_power(2 * total) * bracket;
  return out;
}

RingElement reduce_depth2(int p, int q) { return normalize_element(reduce_depth2_unnormalized(p, q)); }

std::vector<StarTerm> star_recursion_step(const IndexTuple& t) {
  if (t.depth() < 2) throw std::invalid_argument("star_recursion_step requires depth >= 2");
  const auto& h = t.halves();
  const int p_prev = h[h.size() - 2];
  const int p_last = h.back();
  const int total = p_prev + p_last;
  std::vector<int> head(h.begin(), h.end() - 2);

  auto with_last = [&](int last) {
    std::vector<int> v = head;
    v.push_back(last);
    return IndexTuple(std::move(v), Family::star);
  };

  std::vector<StarTerm> out;
  out.push_back({with_last(total), RingElement(Rational(1))});
  for (int l1 = 1; l1 < total; ++l1) {
    const int l2 = total - l1;
    const Rational b = binomial(2 * l2 - 1, 2 * p_last - 1);
    if (b != 0) out.push_back({with_last(l1), b * zeta_over_tau(l2)});
  }
  for (int l1 = 1; l1 < total; ++l1) {
    const int l2 = total - l1;
    const Rational b = binomial(2 * l1 - 1, 2 * p_prev - 1);
    if (b != 0) out.push_back({with_last(l2), b * zeta_over_tau(l1)});
  }
  return out;
}

EisensteinCombination reduce_multi_unnormalized(const IndexTuple& t) {
  if (t.family() == Family::coth)
    throw std::invalid_argument("coth series are reduced by the hyperbolic solver");

  // Pending star tuples, keyed by halves; like tuples merge their coefficients.
  std::map<std::vector<int>, RingElement> pending;
  pending[t.halves()] = RingElement(Rational(1));
  for (std::size_t depth = t.depth(); depth >= 2; --depth) {
    std::map<std::vector<int>, RingElement> next;
    for (const auto& [halves, coeff] : pending) {
      for (const auto& term : star_recursion_step(IndexTuple(halves, Family::star))) {
        auto& slot = next[term.tuple.halves()];
        slot += coeff * term.coeff;
      }
    }
    pending = std::move(next);
  }

  EisensteinCombination out;
  for (const auto& [halves, coeff] : pending) {
    const auto base = star_depth1_unnormalized(halves.front());
    for (const auto& [k, c] : base.g_coeffs) out.add_g(k, coeff * c);
    out.constant += coeff * base.constant;
  }
  if (t.family() == Family::full) out.constant += zero_row(t);
  return out;
}

RingElement reduce_multi(const IndexTuple& t) { return normalize_element(reduce_multi_unnormalized(t)); }

namespace {

void compositions(int remaining, int parts_left, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  for (int first = 1; first <= remaining - (parts_left - 1); ++first) {
    prefix.push_back(first);
    compositions(remaining - first, parts_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<IndexTuple> all_tuples(int max_weight, int max_depth, Family family) {
  std::vector<IndexTuple> out;
  for (int depth = 1; depth <= max_depth; ++depth) {
    for (int half = depth; 2 * half <= max_weight; ++half) {
      std::vector<std::vector<int>> found;
      std::vector<int> prefix;
      compositions(half, depth, prefix, found);
      for (auto& halves : found) out.emplace_back(std::move(halves), family);
    }
  }
  return out;
}

}  // namespace eisen

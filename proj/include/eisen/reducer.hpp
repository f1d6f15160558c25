#pragma once

// Reduction of multiple Eisenstein-type series
//
//   G~_{2p_1,...,2p_r}(tau) = sum_m sum_{n_1} ... sum_{n_r} prod_j (m + n_j tau)^{-2p_j}
//
// (each (m, n_j) != (0, 0)) to exact elements of Q[pi^2, tau^2, G2, G4, G6].
// The star variant G~* restricts the outer sum to m != 0; the two differ by the
// m = 0 row prod_j 2 zeta(2p_j) / tau^{2p_j}.
//
// Depth r star series reduce to depth r-1 by splitting the last two inner
// indices into n_{r-1} = n_r and n_{r-1} != n_r and applying the two-pole
// partial fraction identity to the latter. Repeating this down to depth 1
// leaves ordinary Eisenstein series.

#include "eisen/ring.hpp"

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace eisen {

enum class Family { full, star, coth };

std::string to_string(Family f);
Family parse_family(const std::string& text);

/// Exponent signature (2p_1, ..., 2p_r), stored as the halves p_j.
class IndexTuple {
 public:
  /// Throws std::invalid_argument when empty or when some p_j < 1.
  IndexTuple(std::vector<int> halves, Family family = Family::full);

  /// From the literal even exponents 2p_j. Throws std::invalid_argument on odd
  /// or non-positive entries.
  static IndexTuple from_exponents(const std::vector<int>& exponents, Family family = Family::full);

  const std::vector<int>& halves() const { return halves_; }
  std::vector<int> exponents() const;
  Family family() const { return family_; }
  std::size_t depth() const { return halves_.size(); }
  int weight() const;

  IndexTuple with_family(Family f) const { return IndexTuple(halves_, f); }

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;

 private:
  std::vector<int> halves_;
  Family family_;
};

/// One summand of
///   1/((x+c1)^s1 (x+c2)^s2)
///     = sum_{k1+k2=s1+s2} (-1)^s2 C(k2-1, s2-1) / ((c1-c2)^k2 (x+c1)^k1)
///                       + (-1)^s1 C(k1-1, s1-1) / ((c2-c1)^k1 (x+c2)^k2).
/// A first-side term is sign * binom / ((c1-c2)^difference_power (x+c1)^k),
/// a second-side term the same with c1 and c2 exchanged.
struct PartialFractionTerm {
  enum class Side { first, second };
  Side side;
  int k;                 // exponent left on the surviving pole
  int coeff_sign;        // +1 or -1
  Rational binom;
  int difference_power;  // power of the pole difference in the denominator
};

/// Nonzero terms of the expansion above for s1, s2 >= 1.
std::vector<PartialFractionTerm> partial_fraction(int s1, int s2);

/// Evaluates the expansion at concrete x, c1, c2 (c1 != c2).
std::complex<double> evaluate_partial_fraction(std::span<const PartialFractionTerm> terms,
                                               std::complex<double> x, std::complex<double> c1,
                                               std::complex<double> c2);

/// G~*_{2p} = G_{2p} - 2 zeta(2p) / tau^{2p}, normalized.
RingElement star_depth1(int p);

/// The m = 0 row prod_j 2 zeta(2p_j) / tau^{2p_j}.
RingElement zero_row(const IndexTuple& t);

/// Adds the m = 0 row to a star-series value. t must have star family.
RingElement star_to_full(const IndexTuple& t, const RingElement& star_value);

/// Closed form for G~_{2p,2q} from the explicit depth-two formula.
RingElement reduce_depth2(int p, int q);

/// Same formula before normalization of G8, G10, ...
EisensteinCombination reduce_depth2_unnormalized(int p, int q);

/// A star tuple with a coefficient; the building block of the recursion.
struct StarTerm {
  IndexTuple tuple;
  RingElement coeff;
};

/// One recursion step on the last two indices of a star tuple of depth >= 2:
/// the merged tuple (..., p_{r-1}+p_r) with coefficient 1, then for every
/// l1 + l2 = p_{r-1} + p_r the tuple (..., l1) weighted by
/// 2 zeta(2 l2) C(2 l2 - 1, 2 p_r - 1) tau^{-2 l2} and the tuple (..., l2)
/// weighted by 2 zeta(2 l1) C(2 l1 - 1, 2 p_{r-1} - 1) tau^{-2 l1}.
/// Terms with a vanishing binomial are omitted.
std::vector<StarTerm> star_recursion_step(const IndexTuple& t);

/// Reduces a full or star tuple of any depth.
RingElement reduce_multi(const IndexTuple& t);

/// The same reduction before normalization of G8, G10, ...
EisensteinCombination reduce_multi_unnormalized(const IndexTuple& t);

/// Every ordered tuple with weight <= max_weight and depth <= max_depth,
/// by depth, then weight, then lexicographically.
std::vector<IndexTuple> all_tuples(int max_weight, int max_depth, Family family = Family::full);

}  // namespace eisen

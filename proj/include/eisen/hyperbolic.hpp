#pragma once

// Hyperbolic-cotangent lattice series
//
//   C_r^<2k>(2p_1,...,2p_r; tau)
//     = sum_{m != 0} sum_{n_1} ... sum_{n_r} coth^{2k}((m + n_r tau) pi i / tau)
//       prod_j (m + n_j tau)^{-2p_j}
//
// and the one-dimensional sums sum_{m != 0} coth(m pi) / m^{4p+3}.

#include "eisen/reducer.hpp"

#include <map>
#include <vector>

namespace eisen {

/// Coefficients of X * prod_{l=1}^{n-1} (X - l)(X + l) = sum_k alpha(n, k) X^k.
struct AlphaTable {
  int n = 0;
  std::map<int, Integer> coeffs;  // odd k in [1, 2n-1] only

  explicit AlphaTable(int n);
  Integer at(int k) const;
};

/// alpha(n, k); zero outside [0, 2n-1] and for even k. Throws for n < 1.
Integer alpha(int n, int k);

/// Exact sum_{m != 0} coth(m pi) / m^{4p+3} as a rational multiple of pi^{4p+3}.
ClosedFormValue cauchy_closed_form(int p);

/// One term of 1/sinh^{2nu}(m pi i / tau) = sum_j coeff_j * sum_l (m + l tau)^{-2j}.
struct SinhTerm {
  int j;
  RingElement coeff;  // [2^{2nu}/(2nu-1)!] alpha(nu, 2j-1) (2j-1)! (2 pi i / tau)^{-2j}
};

std::vector<SinhTerm> sinh_inner_identity(int nu);

struct CothIndex {
  IndexTuple base;  // (2p_1, ..., 2p_r), family coth
  int k;            // the series carries coth^{2k}

  /// Throws std::invalid_argument for k < 0.
  CothIndex(std::vector<int> halves, int k);
};

/// Exact formula for C_r^<2k>. Solves
///   sum_{mu=0}^{k} C(k, mu) (-1)^{k-mu} C^<2mu> = 1/sinh^{2k} contribution
/// upward in k, starting from C^<0> = G~*.
RingElement coth_reduce(const CothIndex& c);

}  // namespace eisen

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "test_support.hpp"

#include "eisen/hyperbolic.hpp"
#include "eisen/numerics.hpp"
#include "eisen/reducer.hpp"

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace eisen;
using eisen::testing::cf;
using eisen::testing::rel_diff;
using eisen::testing::tau_of;
using eisen::testing::term;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // <= 0: no limit
  std::function<Outcome()> body;
};

std::string sci(const Real& x) { return x.str(3, std::ios_base::scientific); }

Outcome depth_two_formulas() {
  Outcome o;
  o.require(reduce_depth2(1, 1) == RingElement::g4() + term("2/3", 1, -1, 1) + term("-2/15", 2, -2),
            "(2,2)");
  o.require(reduce_depth2(1, 2) == RingElement::g6() + term("1/3", 1, -1, 0, 1) + term("4/45", 2, -2, 1) +
                                       term("-2/63", 3, -3),
            "(2,4)");
  o.require(reduce_depth2(1, 3) == term("3/7", 0, 0, 0, 2) + term("1/3", 1, -1, 0, 0, 1) +
                                       term("1/15", 2, -2, 0, 1) + term("4/315", 3, -3, 1) +
                                       term("-4/675", 4, -4),
            "(2,6)");
  o.require(reduce_depth2(1, 4) == term("5/11", 0, 0, 0, 1, 1) + term("1/7", 1, -1, 0, 2) +
                                       term("1/15", 2, -2, 0, 0, 1) + term("2/189", 3, -3, 0, 1) +
                                       term("8/4725", 4, -4, 1) + term("-2/2079", 5, -5),
            "(2,8)");
  return o;
}

Outcome higher_depth_formulas() {
  Outcome o;
  o.require(reduce_multi(IndexTuple({1, 1, 1})) == RingElement::g6() + term("1", 1, -1, 0, 1) +
                                                       term("8/15", 2, -2, 1) + term("-52/315", 3, -3),
            "(2,2,2)");
  const RingElement g242 = term("3/7", 0, 0, 0, 2) + term("2/3", 1, -1, 0, 0, 1) + term("4/15", 2, -2, 0, 1) +
                           term("32/315", 3, -3, 1) + term("-184/4725", 4, -4);
  o.require(reduce_multi(IndexTuple({1, 2, 1})) == g242, "(2,4,2)");
  o.require(reduce_multi(IndexTuple({1, 1, 2})) == g242, "(2,2,4)");
  const RingElement g262 = term("5/11", 0, 0, 0, 1, 1) + term("2/7", 1, -1, 0, 2) +
                           term("11/45", 2, -2, 0, 0, 1) + term("64/945", 3, -3, 0, 1) +
                           term("32/1575", 4, -4, 1) + term("-272/31185", 5, -5);
  o.require(reduce_multi(IndexTuple({1, 3, 1})) == g262, "(2,6,2)");
  o.require(reduce_multi(IndexTuple({1, 1, 3})) == g262, "(2,2,6)");
  o.require(reduce_multi(IndexTuple({1, 1, 1, 1})) == term("3/7", 0, 0, 0, 2) + term("4/3", 1, -1, 0, 0, 1) +
                                                          term("14/15", 2, -2, 0, 1) + term("16/35", 3, -3, 1) +
                                                          term("-86/525", 4, -4),
            "(2,2,2,2)");
  return o;
}

Outcome specializations_at_i() {
  struct Case {
    std::vector<int> halves;
    ClosedFormValue expected;
  };
  const std::vector<Case> cases = {
      {{1, 1}, cf("1/15", 0, 4) + cf("-2/15", 4, 0) + cf("2/3", 3, 0)},
      {{1, 2}, cf("-1/45", 2, 4) + cf("2/63", 6, 0) + cf("-4/45", 5, 0)},
      {{1, 3}, cf("1/525", 0, 8) + cf("1/225", 4, 4) + cf("-4/675", 8, 0) + cf("4/315", 7, 0)},
      {{1, 4}, cf("-1/1575", 2, 8) + cf("-2/2835", 6, 4) + cf("2/2079", 10, 0) + cf("-8/4725", 9, 0)},
      {{1, 1, 1}, cf("-1/15", 2, 4) + cf("52/315", 6, 0) + cf("-8/15", 5, 0)},
      {{1, 2, 1}, cf("1/525", 0, 8) + cf("4/225", 4, 4) + cf("-184/4725", 8, 0) + cf("32/315", 7, 0)},
      {{1, 3, 1}, cf("-2/1575", 2, 8) + cf("-64/14175", 6, 4) + cf("272/31185", 10, 0) + cf("-32/1575", 9, 0)},
      {{1, 1, 1, 1}, cf("1/525", 0, 8) + cf("14/225", 4, 4) + cf("-86/525", 8, 0) + cf("16/35", 7, 0)},
  };
  Outcome o;
  for (const auto& c : cases) {
    std::ostringstream name;
    for (int p : c.halves) name << 2 * p << ' ';
    o.require(specialize_i(reduce_multi(IndexTuple(c.halves))) == c.expected, "(" + name.str() + ")");
  }
  o.detail = o.passed ? std::to_string(cases.size()) + " values" : o.detail;
  return o;
}

Outcome coth_formulas() {
  Outcome o;
  // Multiply through by the denominators 945 tau^4 pi^2 and 14175 tau^6 pi^2.
  const RingElement first = coth_reduce(CothIndex({1, 1}, 1)) * term("945", 1, 2);
  o.require(first == term("-40", 3, 0) + term("126", 2, 1, 1) + term("-945", 0, 3, 0, 0, 1), "(2,2)");
  const RingElement second = coth_reduce(CothIndex({1, 2}, 1)) * term("14175", 1, 3);
  // -14175 tau^8 G8 with G8 = (3/7) G4^2.
  o.require(second == term("32", 4, 0) + term("-180", 3, 1, 1) + term("945", 2, 2, 0, 1) +
                          term("4725", 1, 3, 0, 0, 1) + term("-6075", 0, 4, 0, 2),
            "(2,4)");
  return o;
}

Outcome dual_pipeline() {
  Outcome o;
  Real worst = 0;
  int count = 0;
  for (const Complex& tau : {tau_of("0", "2"), tau_of("0.5", "2")}) {
    for (Family f : {Family::full, Family::star}) {
      for (const auto& t : all_tuples(12, 4, f)) {
        const Complex symbolic = eval_ring_element(reduce_multi(t), tau);
        const Complex oracle = oracle_Gtilde(t, tau).value;
        const Real d = rel_diff(symbolic, oracle);
        worst = std::max(worst, d);
        ++count;
        if (d > Real("1e-8")) o.require(false, "mismatch " + sci(d));
      }
    }
  }
  o.detail = std::to_string(count) + " comparisons, max rel diff " + sci(worst) +
             (worst <= Real("1e-10") ? " (within 1e-10 target)" : " (above 1e-10 target)") +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome hurwitz_values() {
  Outcome o;
  const Complex i = tau_of("0", "1");
  const Real varpi = lemniscate_constant();
  const Real pi = pi_value();
  o.require(rel_diff(eval_G(2, i), Complex(Real(pow(varpi, 4) / 15))) < Real("1e-12"), "G4(i)");
  o.require(rel_diff(eval_G(4, i), Complex(Real(pow(varpi, 8) / 525))) < Real("1e-12"), "G8(i)");
  o.require(abs(eval_G(3, i)) < Real("1e-20"), "G6(i)");
  o.require(rel_diff(eval_G(1, i), Complex(Real(-pi))) < Real("1e-12"), "G2(i)");
  return o;
}

Outcome cauchy_sums() {
  Outcome o;
  o.require(cauchy_closed_form(0) == cf("7/90", 3, 0), "p=0 exact");
  Real worst = 0;
  for (int p = 0; p <= 2; ++p) {
    const Real d = rel_diff(cauchy_numeric(p, 200), eval_closed_form(cauchy_closed_form(p)));
    worst = std::max(worst, d);
    o.require(d < Real("1e-10"), "p=" + std::to_string(p) + " rel " + sci(d));
  }
  if (o.passed) o.detail = "max rel diff " + sci(worst);
  return o;
}

Outcome property_suites() {
  Outcome o;
  for (int p = 1; p <= 7; ++p)
    for (int q = 1; p + q <= 8; ++q)
      o.require(reduce_multi(IndexTuple({p, q})) == reduce_depth2(p, q),
                "closed form vs recursion (" + std::to_string(p) + "," + std::to_string(q) + ")");

  for (const auto& t : all_tuples(12, 3)) {
    std::vector<int> h = t.halves();
    const RingElement base = reduce_multi(t);
    std::sort(h.begin(), h.end());
    do {
      if (!(reduce_multi(IndexTuple(h)) == base)) o.require(false, "permutation invariance");
    } while (std::next_permutation(h.begin(), h.end()));
  }

  for (Family f : {Family::full, Family::star})
    for (const auto& t : all_tuples(16, 4, f)) {
      const RingElement x = reduce_multi(t);
      for (const auto& [m, q] : x.terms())
        if (m.weight() != t.weight() || m.a + m.b != 0) o.require(false, "homogeneity");
    }

  for (unsigned n = 1; n <= 60; ++n) {
    Rational sum = 0;
    for (unsigned j = 0; j <= n; ++j) sum += binomial(n + 1, j) * bernoulli(j);
    if (sum != 0) o.require(false, "Bernoulli recurrence n=" + std::to_string(n));
  }

  for (int n = 1; n <= 10; ++n) {
    const AlphaTable table(n);
    for (long x = -n; x < n; ++x) {
      Integer product = x;
      for (long l = 1; l < n; ++l) product *= (x - l) * (x + l);
      Integer series = 0, power = 1;
      for (int k = 0; k <= 2 * n - 1; ++k) {
        series += table.at(k) * power;
        power *= x;
      }
      if (series != product) o.require(false, "alpha table n=" + std::to_string(n));
    }
  }

  using cd = std::complex<double>;
  using eisen::testing::to_mp;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_int_distribution<int> s(1, 8);
  Real worst = 0;
  for (int checked = 0; checked < 100; ++checked) {
    const cd x(u(rng), u(rng)), c1(u(rng), u(rng));
    cd c2(u(rng), u(rng));
    while (c2 == c1) c2 = cd(u(rng), u(rng));
    const int s1 = s(rng), s2 = s(rng);
    const Complex direct = eisen::testing::two_pole(s1, s2, to_mp(x), to_mp(c1), to_mp(c2));
    const Complex expanded =
        eisen::testing::evaluate_expansion(partial_fraction(s1, s2), to_mp(x), to_mp(c1), to_mp(c2));
    worst = std::max(worst, rel_diff(expanded, direct));
  }
  if (worst >= Real("1e-10")) o.require(false, "partial fractions rel " + sci(worst));
  return o;
}

Outcome rho_check() {
  Outcome o;
  const Real pi = pi_value();
  const Complex rho(boost::multiprecision::cos(2 * pi / 3), boost::multiprecision::sin(2 * pi / 3));
  const IndexTuple t({1, 1, 1});
  const Real d = rel_diff(oracle_Gtilde(t, rho).value, eval_ring_element(reduce_multi(t), rho));
  o.require(d < Real("1e-8"), "rel " + sci(d));
  if (o.passed) o.detail = "rel diff " + sci(d);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "depth-two formulas (2,2), (2,4), (2,6), (2,8)", 1.0, depth_two_formulas},
      {2, "depth-three and depth-four formulas", 1.0, higher_depth_formulas},
      {3, "exact values at tau = i", 0, specializations_at_i},
      {4, "coth-weighted formulas with power 2", 0, coth_formulas},
      {5, "symbolic vs lattice oracle, weight <= 12, depth <= 4, tau in {2i, 1/2+2i}", 30.0, dual_pipeline},
      {6, "Eisenstein values at tau = i", 0, hurwitz_values},
      {7, "coth(m pi)/m^(4p+3) sums, p = 0, 1, 2", 0, cauchy_sums},
      {8, "property suites", 0, property_suites},
      {9, "depth-three oracle at rho = exp(2 pi i/3)", 0, rho_check},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
      o.passed = false;
      o.detail += (o.detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    if (!o.passed) ++failures;
    std::printf("[%s] AC%d %s (%.3f s)%s%s\n", o.passed ? "PASS" : "FAIL", c.id, c.title.c_str(), elapsed,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

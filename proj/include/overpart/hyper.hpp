#pragma once

#include <optional>
#include <string>
#include <vector>

#include "overpart/errors.hpp"
#include "overpart/qseries.hpp"

namespace overpart {

/// r+1 phi s with monomial parameters:
///   sum_n (a_0;q)_n ... (a_r;q)_n / ((q;q)_n (b_1;q)_n ... (b_s;q)_n)
///         * ((-1)^n q^binom(n,2))^(s-r) * w^n
struct HypergeometricSpec {
  std::vector<QMonomial> numerator_params;    // a_0 .. a_r
  std::vector<QMonomial> denominator_params;  // b_1 .. b_s
  QMonomial argument;                         // w

  /// s - r.
  int series_exponent_shift() const {
    return static_cast<int>(denominator_params.size()) - static_cast<int>(numerator_params.size()) + 1;
  }

  /// Smallest n with a numerator parameter equal to q^-n, if any. The
  /// series then has exactly n + 1 nonzero terms.
  std::optional<int> termination_index() const;
};

/// Number of terms after which every remaining term is O(q^target_order).
/// Throws NonTerminatingWithoutConvergence for a non-terminating spec unless
/// the argument has a positive power of q and s - r >= 0.
int required_terms(const HypergeometricSpec& spec, int target_order);

/// Partial sum of the first `terms` terms, exact below target_order.
/// Throws NonUnitDenominator when some (b_j; q)_n has a non-unit leading
/// coefficient (for instance a factor 1 - z or 1 - 1).
QSeries eval_phi(const HypergeometricSpec& spec, int terms, int target_order);
QSeries eval_phi(const HypergeometricSpec& spec, int target_order);

/// 2phi1(a, q^-n; c; q, c q^n / a) == (c/a; q)_n / (c; q)_n below target_order.
bool check_chu(const QMonomial& a, const QMonomial& c, int n, int target_order);

/// 3phi2(a, b, c; d, e; q, de/(abc)) ==
///   (e/a)_inf (de/(bc))_inf / ((e)_inf (de/(abc))_inf)
///   * 3phi2(a, d/b, d/c; d, de/(bc); q, e/a)
/// below target_order.
bool check_32_transform(const QMonomial& a, const QMonomial& b, const QMonomial& c, const QMonomial& d,
                        const QMonomial& e, int target_order);

/// Runs `build(working_order)` with increasing working orders until the
/// result is known below target_order, then truncates. Used wherever
/// intermediate Laurent terms make the precision loss hard to predict.
template <class Build>
QSeries with_precision(int target_order, Build&& build) {
  int working = target_order;
  for (int attempt = 0; attempt < 64; ++attempt) {
    QSeries r = build(working);
    if (r.order() >= target_order) return r.truncated(target_order);
    working += target_order - r.order();
  }
  throw InsufficientPrecision("working order did not converge for target q^" + std::to_string(target_order));
}

struct ChainLine {
  std::string label;
  QSeries value = QSeries::zero(0);
  bool equal_to_previous = true;
};

struct ChainReport {
  int t = 1;
  int order = 0;
  ZMode mode = ZMode::tracked;
  std::vector<ChainLine> lines;
  bool pass = true;
  std::string first_failure;
  /// Set when the leftmost member was compared with the enumerated
  /// generating function of G_t.
  std::optional<bool> matches_enumeration;
};

/// Evaluates every line of the analytic derivation of the G_t generating
/// function independently, from the sum over the smallest part r down to
/// (1/(1-q^t)) ((-zq)_t/(q)_t - 1), and compares consecutive lines below
/// target_order. Lines are evaluated concurrently unless exec is serial.
ChainReport verify_section3_chain(int t, int target_order, ZMode mode = ZMode::tracked,
                                  bool compare_enumeration = false, Exec exec = Exec::automatic);

}  // namespace overpart

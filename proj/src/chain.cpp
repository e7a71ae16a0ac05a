#include <exception>
#include <functional>

#include "overpart/hyper.hpp"
#include "overpart/partitions.hpp"
#include "parallel.hpp"
#include "series_ops.hpp"

namespace overpart {

namespace {

using detail::over_one_minus;
using detail::over_poch;
using detail::times_one_minus;
using detail::times_poch;

// Builds the chain with z symbolic, or with z = 1 substituted into every
// parameter before evaluation.
class Chain {
public:
  Chain(int t, bool z_one) : t_(t), z_one_(z_one) {}

  // sign * z^z * q^q, honoring the z = 1 substitution.
  QMonomial m(int sign, int z, int q) const { return z_one_ ? QMonomial{sign, 0, q} : QMonomial{sign, z, q}; }
  QMonomial minus_zq(int k) const { return m(-1, 1, k); }
  static QMonomial q(int k) { return QMonomial::q(k); }

  // (1 + z) q (-zq)_t / ((1 + zq) (q)_{t+1})
  QSeries prefactor_3phi2(int w) const {
    QSeries s = times_one_minus(QSeries::one(w), minus_zq(0)).times(q(1));
    s = times_poch(s, minus_zq(1), t_);
    s = over_one_minus(s, minus_zq(1));
    return over_poch(s, q(1), t_ + 1);
  }

  // -(-zq)_t / ((1 - q^t) (q)_t)
  QSeries prefactor_chu(int w) const {
    QSeries s = times_poch(-QSeries::one(w), minus_zq(1), t_);
    s = over_one_minus(s, q(t_));
    return over_poch(s, q(1), t_);
  }

  QSeries smallest_part_sum(int w) const {
    QSeries sum = QSeries::zero(w);
    for (int r = 1; r < w; ++r) {
      QSeries s = times_one_minus(QSeries::one(w), minus_zq(0)).times(q(r));
      s = over_one_minus(s, q(r));
      for (int j = 1; j <= t_ - 1; ++j) s = over_one_minus(times_one_minus(s, minus_zq(r + j)), q(r + j));
      sum = sum + over_one_minus(s, q(r + t_));
    }
    return sum;
  }

  QSeries quotient_sum_from_one(int w) const {
    QSeries sum = QSeries::zero(w);
    for (int r = 1; r < w; ++r) {
      QSeries s = times_poch(QSeries::one(w), q(1), r - 1);
      s = times_poch(s, minus_zq(1), r + t_ - 1);
      s = over_poch(s, q(1), r + t_);
      s = over_poch(s, minus_zq(1), r);
      sum = sum + s.times(q(r));
    }
    return times_one_minus(sum, minus_zq(0));
  }

  QSeries quotient_sum_from_zero(int w) const {
    QSeries sum = QSeries::zero(w);
    for (int r = 0; r < w; ++r) {
      QSeries s = times_poch(QSeries::one(w), q(1), r);
      s = times_poch(s, minus_zq(1), r + t_);
      s = over_poch(s, q(1), r + t_ + 1);
      s = over_poch(s, minus_zq(1), r + 1);
      sum = sum + s.times(q(r));
    }
    return times_one_minus(sum, minus_zq(0)).times(q(1));
  }

  QSeries explicit_3phi2(int w) const {
    QSeries sum = QSeries::zero(w);
    for (int r = 0; r < w; ++r) {
      QSeries s = times_poch(QSeries::one(w), q(1), r);
      s = times_poch(s, q(1), r);
      s = times_poch(s, minus_zq(t_ + 1), r);
      s = over_poch(s, q(1), r);
      s = over_poch(s, q(t_ + 2), r);
      s = over_poch(s, minus_zq(2), r);
      sum = sum + s.times(q(r));
    }
    return prefactor_3phi2(w) * sum;
  }

  QSeries hypergeometric_3phi2(int w) const {
    const HypergeometricSpec spec{{q(1), q(1), minus_zq(t_ + 1)}, {minus_zq(2), q(t_ + 2)}, q(1)};
    return prefactor_3phi2(w) * eval_phi(spec, w);
  }

  QSeries transformed_3phi2(int w) const {
    const HypergeometricSpec spec{{q(1), minus_zq(1), q(1 - t_)}, {minus_zq(2), q(2)}, q(t_ + 1)};
    QSeries ratio = pochhammer_infinite(q(t_ + 1), w) * pochhammer_infinite(q(2), w) *
                    invert(pochhammer_infinite(q(t_ + 2), w) * pochhammer_infinite(q(1), w), w);
    return prefactor_3phi2(w) * ratio * eval_phi(spec, w);
  }

  QSeries explicit_transformed(int w) const {
    QSeries sum = QSeries::zero(w);
    for (int r = 0; r < w; ++r) {
      QSeries s = times_poch(QSeries::one(w), minus_zq(1), r);
      s = times_poch(s, q(1 - t_), r);
      s = over_poch(s, minus_zq(2), r);
      s = over_poch(s, q(2), r);
      sum = sum + s.times(q(r * (t_ + 1)));
    }
    QSeries pre = times_one_minus(QSeries::one(w), minus_zq(0)).times(q(1));
    pre = times_poch(pre, minus_zq(1), t_);
    pre = over_one_minus(pre, q(1));
    pre = over_one_minus(pre, minus_zq(1));
    pre = over_poch(pre, q(1), t_);
    return pre * sum;
  }

  QSeries shifted_sum(int w) const {
    QSeries sum = QSeries::zero(w);
    for (int r = 0; r < w; ++r) {
      QSeries s = times_poch(QSeries::one(w), m(-1, 1, 0), r + 1);
      s = times_poch(s, q(-t_), r + 1);
      s = over_poch(s, minus_zq(1), r + 1);
      s = over_poch(s, q(1), r + 1);
      sum = sum + s.times(q((r + 1) * (t_ + 1)));
    }
    return prefactor_chu(w) * sum;
  }

  QSeries chu_2phi1(int w) const {
    const HypergeometricSpec spec{{m(-1, 1, 0), q(-t_)}, {minus_zq(1)}, q(t_ + 1)};
    return prefactor_chu(w) * (eval_phi(spec, w) - QSeries::one(w));
  }

  QSeries chu_closed(int w) const {
    QSeries ratio = over_poch(times_poch(QSeries::one(w), q(1), t_), minus_zq(1), t_);
    return prefactor_chu(w) * (ratio - QSeries::one(w));
  }

private:
  int t_;
  bool z_one_;
};

}  // namespace

ChainReport verify_section3_chain(int t, int target_order, ZMode mode, bool compare_enumeration, Exec exec) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  ChainReport report;
  report.t = t;
  report.order = target_order;
  report.mode = mode;

  const Chain chain(t, mode == ZMode::one);
  using Line = QSeries (Chain::*)(int) const;
  const std::vector<std::pair<std::string, Line>> lines{
      {"sum over smallest part r", &Chain::smallest_part_sum},
      {"pochhammer quotients, r >= 1", &Chain::quotient_sum_from_one},
      {"pochhammer quotients, r >= 0", &Chain::quotient_sum_from_zero},
      {"explicit 3phi2 sum", &Chain::explicit_3phi2},
      {"3phi2", &Chain::hypergeometric_3phi2},
      {"transformed 3phi2", &Chain::transformed_3phi2},
      {"explicit transformed sum", &Chain::explicit_transformed},
      {"shifted terminating sum", &Chain::shifted_sum},
      {"2phi1 minus 1", &Chain::chu_2phi1},
      {"q-Chu-Vandermonde evaluated", &Chain::chu_closed},
  };
  const int count = static_cast<int>(lines.size());
  std::vector<QSeries> values(lines.size(), QSeries::zero(0));
  std::vector<std::exception_ptr> errors(lines.size());
  detail::for_each_index(count, exec, [&](int i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      values[k] = with_precision(target_order, [&](int w) { return std::invoke(lines[k].second, chain, w); });
    } catch (...) {
      errors[k] = std::current_exception();
    }
  });
  // z -> 0 cannot be substituted into a monomial, so it is applied to the
  // evaluated lines instead.
  const ZMode post = mode == ZMode::zero ? ZMode::zero : ZMode::tracked;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    report.lines.push_back({lines[k].first, values[k].specialize(post), true});
  }
  report.lines.push_back({"closed form", rhs_theorem11(t, mode, target_order), true});

  for (std::size_t i = 1; i < report.lines.size(); ++i) {
    auto& cur = report.lines[i];
    const auto& prev = report.lines[i - 1];
    const int diff = cur.value.first_difference(prev.value, target_order);
    cur.equal_to_previous = diff == target_order;
    if (!cur.equal_to_previous && report.pass) {
      report.pass = false;
      report.first_failure =
          "'" + cur.label + "' differs from '" + prev.label + "' at q^" + std::to_string(diff);
    }
  }

  if (compare_enumeration) {
    QSeries gf = gf_from_enumeration(Family::Gt, t, target_order - 1).specialize(mode);
    const bool match = gf.equal_to(report.lines.front().value, target_order);
    report.matches_enumeration = match;
    if (!match) {
      if (report.pass) report.first_failure = "leftmost member differs from the enumerated G_t generating function";
      report.pass = false;
    }
  }
  return report;
}

}  // namespace overpart

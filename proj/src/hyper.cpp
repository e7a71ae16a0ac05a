#include "overpart/hyper.hpp"

#include <algorithm>

#include "series_ops.hpp"

namespace overpart {

namespace detail {

QSeries times_one_minus(const QSeries& s, const QMonomial& m) { return s - s.times(m); }

QSeries over_one_minus(const QSeries& s, const QMonomial& m) {
  if (m.q_exp == 0) {
    throw NonUnitDenominator("1 - (" + m.to_string() + ") has no inverse with integer coefficients");
  }
  if (m.q_exp < 0) {
    // 1/(1 - m) = -m^-1 / (1 - m^-1)
    const QMonomial inv{m.sign, -m.z_exp, -m.q_exp};
    return -over_one_minus(s.times(inv), inv);
  }
  // r = s + m r, solved upward from the lowest exponent.
  const int lo = s.min_exp();
  const int n = s.order() - lo;
  std::vector<ZLaurentPoly> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    r[static_cast<std::size_t>(i)] = s.coeff(lo + i);
    if (i >= m.q_exp) {
      r[static_cast<std::size_t>(i)] += r[static_cast<std::size_t>(i - m.q_exp)].times_monomial(m.sign, m.z_exp);
    }
  }
  return QSeries(lo, s.order(), std::move(r));
}

QSeries times_poch(QSeries s, const QMonomial& a, int n) {
  for (int k = 0; k < n; ++k) s = times_one_minus(s, a * QMonomial::q(k));
  return s;
}

QSeries over_poch(QSeries s, const QMonomial& a, int n) {
  for (int k = 0; k < n; ++k) s = over_one_minus(s, a * QMonomial::q(k));
  return s;
}

}  // namespace detail

std::optional<int> HypergeometricSpec::termination_index() const {
  std::optional<int> best;
  for (const auto& a : numerator_params) {
    if (a.is_terminating() && (!best || -a.q_exp < *best)) best = -a.q_exp;
  }
  return best;
}

int required_terms(const HypergeometricSpec& spec, int target_order) {
  if (auto n = spec.termination_index()) return *n + 1;
  const int shift = spec.series_exponent_shift();
  const int wq = spec.argument.q_exp;
  if (wq < 1 || shift < 0) {
    throw NonTerminatingWithoutConvergence("non-terminating series with argument " + spec.argument.to_string() +
                                           " and s - r = " + std::to_string(shift) +
                                           " has no bound on the number of terms");
  }
  // Lower bound on the q-valuation of term n. Numerator factors 1 - a q^k
  // can lower it, denominator factors with negative exponent raise it.
  int stable = 0;
  for (const auto& a : spec.numerator_params) stable = std::max(stable, -a.q_exp);
  for (const auto& b : spec.denominator_params) stable = std::max(stable, -b.q_exp);

  long bound = 0;  // valuation bound for term n
  int last_short = -1;
  for (int n = 0;; ++n) {
    if (bound < target_order) last_short = n;
    if (n >= stable && bound >= target_order) break;
    long step = wq + static_cast<long>(shift) * n;
    for (const auto& a : spec.numerator_params) step += std::min(0, a.q_exp + n);
    for (const auto& b : spec.denominator_params) step -= std::min(0, b.q_exp + n);
    bound += step;
  }
  return last_short + 1;
}

QSeries eval_phi(const HypergeometricSpec& spec, int terms, int target_order) {
  const int shift = spec.series_exponent_shift();
  return with_precision(target_order, [&](int working) {
    QSeries term = QSeries::one(working);
    QSeries sum = terms > 0 ? term : QSeries::zero(working);
    for (int n = 0; n + 1 < terms; ++n) {
      bool vanished = false;
      for (const auto& a : spec.numerator_params) {
        const QMonomial f = a * QMonomial::q(n);
        if (f == QMonomial{}) vanished = true;
        term = detail::times_one_minus(term, f);
      }
      // Past a terminating parameter every term is exactly zero.
      if (vanished) break;
      term = detail::over_one_minus(term, QMonomial::q(n + 1));
      for (const auto& b : spec.denominator_params) term = detail::over_one_minus(term, b * QMonomial::q(n));
      term = term.times(QMonomial{shift % 2 != 0 ? -1 : 1, 0, n * shift} * spec.argument);
      sum = sum + term;
    }
    return sum;
  });
}

QSeries eval_phi(const HypergeometricSpec& spec, int target_order) {
  return eval_phi(spec, required_terms(spec, target_order), target_order);
}

bool check_chu(const QMonomial& a, const QMonomial& c, int n, int target_order) {
  if (n < 0) throw std::invalid_argument("check_chu: negative n");
  const HypergeometricSpec spec{{a, QMonomial::q(-n)}, {c}, c * QMonomial::q(n) / a};
  const QSeries lhs = eval_phi(spec, target_order);
  const QSeries rhs = with_precision(target_order, [&](int working) {
    return detail::over_poch(detail::times_poch(QSeries::one(working), c / a, n), c, n);
  });
  return lhs.equal_to(rhs, target_order);
}

bool check_32_transform(const QMonomial& a, const QMonomial& b, const QMonomial& c, const QMonomial& d,
                        const QMonomial& e, int target_order) {
  const QMonomial de_abc = d * e / (a * b * c);
  const QMonomial de_bc = d * e / (b * c);
  const HypergeometricSpec left{{a, b, c}, {d, e}, de_abc};
  const HypergeometricSpec right{{a, d / b, d / c}, {d, de_bc}, e / a};

  const QSeries lhs = eval_phi(left, target_order);
  const QSeries rhs = with_precision(target_order, [&](int working) {
    QSeries num = pochhammer_infinite(e / a, working) * pochhammer_infinite(de_bc, working);
    QSeries den = pochhammer_infinite(e, working) * pochhammer_infinite(de_abc, working);
    return num * invert(den, working) * eval_phi(right, working);
  });
  return lhs.equal_to(rhs, target_order);
}

}  // namespace overpart

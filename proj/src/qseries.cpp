#include "overpart/qseries.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "overpart/errors.hpp"

namespace overpart {

namespace {

const ZLaurentPoly& zero_poly() {
  static const ZLaurentPoly kZero;
  return kZero;
}

std::string exceeded(int e, int order) {
  return "coefficient of q^" + std::to_string(e) + " requested but series is only known below q^" +
         std::to_string(order);
}

}  // namespace

QMonomial QMonomial::pow(int n) const {
  return {(n % 2 != 0) ? sign : 1, z_exp * n, q_exp * n};
}

std::string QMonomial::to_string() const {
  std::ostringstream os;
  if (sign < 0) os << '-';
  bool any = false;
  if (z_exp != 0) {
    os << 'z';
    if (z_exp != 1) os << '^' << z_exp;
    any = true;
  }
  if (q_exp != 0) {
    if (any) os << '*';
    os << 'q';
    if (q_exp != 1) os << '^' << q_exp;
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

QSeries::QSeries(int min_exp, int order, std::vector<ZLaurentPoly> coeffs)
    : min_exp_(min_exp), order_(order), coeffs_(std::move(coeffs)) {
  if (min_exp_ > order_) throw std::invalid_argument("QSeries: min_exp exceeds order");
  if (static_cast<int>(coeffs_.size()) != order_ - min_exp_) {
    throw std::invalid_argument("QSeries: coefficient count does not match [min_exp, order)");
  }
  normalize();
}

void QSeries::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const ZLaurentPoly& c) { return !c.is_zero(); });
  min_exp_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

QSeries QSeries::zero(int order) { return QSeries(order, order, {}); }

QSeries QSeries::constant(ZLaurentPoly c, int order) {
  if (order <= 0) return zero(order);
  std::vector<ZLaurentPoly> coeffs(static_cast<std::size_t>(order));
  coeffs[0] = std::move(c);
  return QSeries(0, order, std::move(coeffs));
}

QSeries QSeries::monomial(const QMonomial& m, int order) {
  return polynomial({{m.q_exp, ZLaurentPoly::monomial(m.z_exp, m.sign)}}, order);
}

QSeries QSeries::polynomial(const std::vector<std::pair<int, ZLaurentPoly>>& terms, int order) {
  int lo = order;
  for (const auto& [e, c] : terms) {
    if (!c.is_zero() && e < order) lo = std::min(lo, e);
  }
  std::vector<ZLaurentPoly> coeffs(static_cast<std::size_t>(order - lo));
  for (const auto& [e, c] : terms) {
    if (e < order && !c.is_zero()) coeffs[static_cast<std::size_t>(e - lo)] += c;
  }
  return QSeries(lo, order, std::move(coeffs));
}

const ZLaurentPoly& QSeries::coeff(int e) const {
  if (e >= order_) throw InsufficientPrecision(exceeded(e, order_));
  if (e < min_exp_) return zero_poly();
  return coeffs_[static_cast<std::size_t>(e - min_exp_)];
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const int order = std::min(a.order_, b.order_);
  const int lo = std::min({a.min_exp_, b.min_exp_, order});
  std::vector<ZLaurentPoly> coeffs(static_cast<std::size_t>(order - lo));
  for (int e = lo; e < order; ++e) {
    auto& slot = coeffs[static_cast<std::size_t>(e - lo)];
    slot = a.coeff(e);
    slot += b.coeff(e);
  }
  return QSeries(lo, order, std::move(coeffs));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

QSeries QSeries::times(const QMonomial& m) const {
  QSeries r = *this;
  r.min_exp_ += m.q_exp;
  r.order_ += m.q_exp;
  for (auto& c : r.coeffs_) c = c.times_monomial(m.sign, m.z_exp);
  return r;
}

QSeries QSeries::scaled(const ZLaurentPoly& c) const {
  std::vector<ZLaurentPoly> coeffs;
  coeffs.reserve(coeffs_.size());
  for (const auto& x : coeffs_) coeffs.push_back(x * c);
  return QSeries(min_exp_, order_, std::move(coeffs));
}

QSeries QSeries::truncated(int order) const {
  if (order >= order_) return *this;
  const int lo = std::min(min_exp_, order);
  std::vector<ZLaurentPoly> coeffs(coeffs_.begin(), coeffs_.begin() + (order - lo));
  return QSeries(lo, order, std::move(coeffs));
}

QSeries QSeries::specialize(ZMode mode) const {
  if (mode == ZMode::tracked) return *this;
  std::vector<ZLaurentPoly> coeffs;
  coeffs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    coeffs.push_back(ZLaurentPoly::monomial(0, mode == ZMode::one ? c.at_one() : c.at_zero()));
  }
  return QSeries(min_exp_, order_, std::move(coeffs));
}

int QSeries::first_difference(const QSeries& other, int upto) const {
  if (upto > order_) throw InsufficientPrecision(exceeded(upto - 1, order_));
  if (upto > other.order_) throw InsufficientPrecision(exceeded(upto - 1, other.order_));
  for (int e = std::min(min_exp_, other.min_exp_); e < upto; ++e) {
    if (!(coeff(e) == other.coeff(e))) return e;
  }
  return upto;
}

bool QSeries::equal_to(const QSeries& other, int upto) const { return first_difference(other, upto) == upto; }

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int e = min_exp_; e < order_; ++e) {
    const auto& c = coeff(e);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (c.size() > 1) {
      os << '(' << c.to_string() << ')';
    } else {
      os << c.to_string();
    }
    if (e != 0) os << "*q^" << e;
  }
  if (first) os << '0';
  os << " + O(q^" << order_ << ')';
  return os.str();
}

namespace kernels {

namespace {

ZLaurentPoly cauchy_coefficient(const QSeries& a, const QSeries& b, int n) {
  const int i_lo = a.min_exp();
  const int i_hi = n - b.min_exp();  // inclusive
  if (i_hi < i_lo) return {};
  int z_lo = 0;
  int z_hi = -1;
  bool any = false;
  for (int i = i_lo; i <= i_hi; ++i) {
    const auto& x = a.coeff(i);
    const auto& y = b.coeff(n - i);
    if (x.is_zero() || y.is_zero()) continue;
    const int lo = x.min_exp() + y.min_exp();
    const int hi = x.max_exp() + y.max_exp();
    if (!any) {
      z_lo = lo;
      z_hi = hi;
      any = true;
    } else {
      z_lo = std::min(z_lo, lo);
      z_hi = std::max(z_hi, hi);
    }
  }
  if (!any) return {};
  ZAccumulator acc(z_lo, z_hi);
  for (int i = i_lo; i <= i_hi; ++i) {
    const auto& x = a.coeff(i);
    const auto& y = b.coeff(n - i);
    if (x.is_zero() || y.is_zero()) continue;
    acc.add_product(x, y);
  }
  return acc.take();
}

}  // namespace

std::vector<ZLaurentPoly> cauchy_product_serial(const QSeries& a, const QSeries& b, int lo, int hi) {
  std::vector<ZLaurentPoly> out(static_cast<std::size_t>(std::max(0, hi - lo)));
  for (int n = lo; n < hi; ++n) out[static_cast<std::size_t>(n - lo)] = cauchy_coefficient(a, b, n);
  return out;
}

std::vector<ZLaurentPoly> cauchy_product_parallel(const QSeries& a, const QSeries& b, int lo, int hi) {
  std::vector<ZLaurentPoly> out(static_cast<std::size_t>(std::max(0, hi - lo)));
  // Later coefficients carry more work, so hand them out dynamically.
#pragma omp parallel for schedule(dynamic, 1)
  for (int n = lo; n < hi; ++n) out[static_cast<std::size_t>(n - lo)] = cauchy_coefficient(a, b, n);
  return out;
}

}  // namespace kernels

namespace {

constexpr int kParallelMinLength = 24;

bool in_parallel_region() {
#ifdef _OPENMP
  return omp_in_parallel() != 0;
#else
  return false;
#endif
}

}  // namespace

QSeries mul(const QSeries& a, const QSeries& b, Exec exec) {
  const int lo = a.min_exp() + b.min_exp();
  const int order = std::min(a.order() + b.min_exp(), b.order() + a.min_exp());
  bool parallel = exec == Exec::parallel;
  if (exec == Exec::automatic) parallel = (order - lo) >= kParallelMinLength && !in_parallel_region();
  auto coeffs = parallel ? kernels::cauchy_product_parallel(a, b, lo, order)
                         : kernels::cauchy_product_serial(a, b, lo, order);
  return QSeries(lo, order, std::move(coeffs));
}

QSeries invert(const QSeries& a, int target_order) {
  if (a.is_zero()) throw NonUnitLeadingCoefficient("cannot invert a series with no known nonzero coefficient");
  const int m = a.min_exp();
  const ZLaurentPoly& lead = a.coeff(m);
  if (!lead.is_unit_monomial()) {
    throw NonUnitLeadingCoefficient("leading coefficient " + lead.to_string() + " is not +-z^i");
  }
  const int lead_sign = lead.terms().front().second > 0 ? 1 : -1;
  const int lead_z = lead.min_exp();
  const int count = std::max(0, std::min(target_order, a.order() - m));

  // b_0 = 1/u, b_k = -(1/u) * sum_{j=1..k} a_{m+j} b_{k-j}.
  std::vector<ZLaurentPoly> b(static_cast<std::size_t>(count));
  if (count > 0) b[0] = ZLaurentPoly::monomial(-lead_z, lead_sign);
  for (int k = 1; k < count; ++k) {
    ZLaurentPoly sum;
    for (int j = 1; j <= k; ++j) {
      const auto& x = a.coeff(m + j);
      if (x.is_zero() || b[static_cast<std::size_t>(k - j)].is_zero()) continue;
      sum += x * b[static_cast<std::size_t>(k - j)];
    }
    b[static_cast<std::size_t>(k)] = sum.times_monomial(-lead_sign, -lead_z);
  }
  return QSeries(-m, -m + count, std::move(b));
}

QSeries divide(const QSeries& num, const QSeries& den, int target_order) {
  // 1/den must be known far enough that the product reaches target_order.
  const int inv_order = target_order - num.min_exp() + den.min_exp();
  return (num * invert(den, inv_order)).truncated(target_order);
}

QSeries pochhammer(const QMonomial& a, int n, int target_order) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  // Total downward shift still available from factors not yet applied; terms
  // that cannot fall below target_order afterwards are dropped early.
  int remaining_neg = 0;
  for (int k = 0; k < n; ++k) remaining_neg += std::min(0, a.q_exp + k);

  std::map<int, ZLaurentPoly> acc{{0, ZLaurentPoly(1)}};
  for (int k = 0; k < n; ++k) {
    const int e = a.q_exp + k;
    remaining_neg -= std::min(0, e);
    std::map<int, ZLaurentPoly> next;
    for (const auto& [p, c] : acc) {
      next[p] += c;
      next[p + e] -= c.times_monomial(a.sign, a.z_exp);
    }
    acc.clear();
    for (auto& [p, c] : next) {
      if (!c.is_zero() && p + remaining_neg < target_order) acc.emplace(p, std::move(c));
    }
  }
  std::vector<std::pair<int, ZLaurentPoly>> terms(acc.begin(), acc.end());
  return QSeries::polynomial(terms, target_order);
}

QSeries pochhammer_infinite(const QMonomial& a, int target_order) {
  if (a.q_exp < 1) {
    throw DivergentProduct("(" + a.to_string() + "; q)_inf needs a positive power of q");
  }
  return pochhammer(a, std::max(0, target_order - a.q_exp), target_order);
}

namespace {

QSeries geometric_t(int t, int order) {
  return invert(QSeries::polynomial({{0, ZLaurentPoly(1)}, {t, ZLaurentPoly(-1)}}, order), order);
}

}  // namespace

QSeries rhs_theorem11(int t, ZMode mode, int target_order) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  const int order = target_order;
  QMonomial minus_zq{-1, 1, 1};
  if (mode == ZMode::one) minus_zq = minus_zq.at_z_one();
  QSeries ratio = pochhammer(minus_zq, t, order) * invert(pochhammer(QMonomial::q(1), t, order), order);
  QSeries result = geometric_t(t, order) * (ratio - QSeries::one(order));
  return mode == ZMode::zero ? result.specialize(ZMode::zero) : result;
}

QSeries rhs_breuer_kronholm(int t, int target_order) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  QSeries inv = invert(pochhammer(QMonomial::q(1), t, target_order), target_order);
  return geometric_t(t, target_order) * (inv - QSeries::one(target_order));
}

QSeries rhs_overpartition_count(int t, int target_order) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  QSeries ratio = pochhammer(QMonomial{-1, 0, 1}, t, target_order) *
                  invert(pochhammer(QMonomial::q(1), t, target_order), target_order);
  return geometric_t(t, target_order) * (ratio - QSeries::one(target_order));
}

}  // namespace overpart

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "overpart/zpoly.hpp"

namespace overpart {

/// How the overline-marking variable z is treated by generating-function
/// builders: kept symbolic, or specialized to 0 or 1.
enum class ZMode { tracked, zero, one };

/// A signed monomial sign * z^z_exp * q^q_exp. Never zero.
struct QMonomial {
  int sign = 1;
  int z_exp = 0;
  int q_exp = 0;

  static QMonomial q(int e) { return {1, 0, e}; }
  static QMonomial z_q(int sign, int z, int e) { return {sign < 0 ? -1 : 1, z, e}; }

  QMonomial operator*(const QMonomial& o) const { return {sign * o.sign, z_exp + o.z_exp, q_exp + o.q_exp}; }
  QMonomial operator/(const QMonomial& o) const { return {sign * o.sign, z_exp - o.z_exp, q_exp - o.q_exp}; }
  QMonomial pow(int n) const;
  /// Replaces z by 1 (the sign and the power of q are kept).
  QMonomial at_z_one() const { return {sign, 0, q_exp}; }

  /// True for q^{-n} with n >= 0, the parameter that makes a Pochhammer
  /// symbol (and hence a hypergeometric series) terminate.
  bool is_terminating() const { return sign == 1 && z_exp == 0 && q_exp <= 0; }

  bool operator==(const QMonomial&) const = default;
  std::string to_string() const;
};

/// Which evaluation path a data-parallel kernel takes. `automatic` picks the
/// parallel kernel for large inputs when not already inside a parallel region.
enum class Exec { automatic, serial, parallel };

/// Truncated Laurent series in q with coefficients in Z[z, 1/z].
///
/// Coefficients are exactly known on [min_exp, order) and are zero below
/// min_exp; nothing is known at or above order. min_exp is normalized to the
/// first nonzero coefficient (or to order when every known coefficient is
/// zero). Values are immutable; all operations return fresh series.
class QSeries {
public:
  /// `coeffs[i]` is the coefficient of q^(min_exp + i); size must equal
  /// order - min_exp.
  QSeries(int min_exp, int order, std::vector<ZLaurentPoly> coeffs);

  static QSeries zero(int order);
  static QSeries constant(ZLaurentPoly c, int order);
  static QSeries one(int order) { return constant(ZLaurentPoly(1), order); }
  static QSeries monomial(const QMonomial& m, int order);
  /// Builds a polynomial from (q-exponent, coefficient) pairs, truncated at order.
  static QSeries polynomial(const std::vector<std::pair<int, ZLaurentPoly>>& terms, int order);

  int min_exp() const { return min_exp_; }
  int order() const { return order_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of q^e; throws InsufficientPrecision when e >= order().
  const ZLaurentPoly& coeff(int e) const;
  const std::vector<ZLaurentPoly>& coeffs() const { return coeffs_; }

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  /// Exact multiplication by a monomial: shifts both min_exp and order.
  QSeries times(const QMonomial& m) const;
  QSeries scaled(const ZLaurentPoly& c) const;
  QSeries truncated(int order) const;
  QSeries specialize(ZMode mode) const;

  /// Equality of the coefficients below `upto`; throws InsufficientPrecision
  /// unless both operands are known on that range.
  bool equal_to(const QSeries& other, int upto) const;

  /// First exponent below `upto` where the two differ, or `upto` if none.
  int first_difference(const QSeries& other, int upto) const;

  std::string to_string() const;

private:
  QSeries() = default;
  void normalize();

  int min_exp_ = 0;
  int order_ = 0;
  std::vector<ZLaurentPoly> coeffs_;
};

QSeries mul(const QSeries& a, const QSeries& b, Exec exec = Exec::automatic);

/// Multiplicative inverse. The leading coefficient must be +-z^i. The result
/// satisfies a * b = 1 on [0, target_order), with the order capped when `a`
/// is not known far enough to support target_order.
QSeries invert(const QSeries& a, int target_order);

QSeries divide(const QSeries& num, const QSeries& den, int target_order);

/// (a; q)_n = prod_{k<n} (1 - a q^k), truncated at target_order.
QSeries pochhammer(const QMonomial& a, int n, int target_order);

/// (a; q)_infinity; requires a.q_exp >= 1.
QSeries pochhammer_infinite(const QMonomial& a, int target_order);

/// (1/(1-q^t)) * ((-zq; q)_t / (q; q)_t - 1), with z handled per `mode`.
QSeries rhs_theorem11(int t, ZMode mode, int target_order);
inline QSeries rhs_theorem11(int t, bool z_tracked, int target_order) {
  return rhs_theorem11(t, z_tracked ? ZMode::tracked : ZMode::one, target_order);
}

/// (1/(1-q^t)) * (1/(q; q)_t - 1), partitions with bounded difference.
QSeries rhs_breuer_kronholm(int t, int target_order);

/// (1/(1-q^t)) * ((-q; q)_t / (q; q)_t - 1), built without z.
QSeries rhs_overpartition_count(int t, int target_order);

namespace kernels {

/// Coefficients of a*b for q-exponents in [lo, hi). Every exponent in the
/// range must lie inside the product's valid range.
std::vector<ZLaurentPoly> cauchy_product_serial(const QSeries& a, const QSeries& b, int lo, int hi);
std::vector<ZLaurentPoly> cauchy_product_parallel(const QSeries& a, const QSeries& b, int lo, int hi);

}  // namespace kernels

}  // namespace overpart

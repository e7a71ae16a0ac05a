#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace overpart {

using BigInt = mpz_class;

/// Laurent polynomial in z with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted by exponent and no stored coefficient is zero, so
/// structural equality is mathematical equality.
class ZLaurentPoly {
public:
  using Term = std::pair<int, BigInt>;

  ZLaurentPoly() = default;
  ZLaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  ZLaurentPoly(std::initializer_list<std::pair<int, long>> terms);

  static ZLaurentPoly monomial(int z_exp, BigInt coeff);
  /// Builds from arbitrary (exponent, coefficient) pairs; duplicates are summed.
  static ZLaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  int min_exp() const;  // precondition: !is_zero()
  int max_exp() const;  // precondition: !is_zero()

  /// Coefficient of z^e (zero when absent).
  BigInt coeff(int e) const;

  /// True when this is a single term with coefficient +1 or -1.
  bool is_unit_monomial() const;

  ZLaurentPoly operator-() const;
  ZLaurentPoly& operator+=(const ZLaurentPoly& rhs);
  ZLaurentPoly& operator-=(const ZLaurentPoly& rhs);
  ZLaurentPoly& operator*=(const ZLaurentPoly& rhs);

  friend ZLaurentPoly operator+(ZLaurentPoly a, const ZLaurentPoly& b) { return a += b; }
  friend ZLaurentPoly operator-(ZLaurentPoly a, const ZLaurentPoly& b) { return a -= b; }
  friend ZLaurentPoly operator*(const ZLaurentPoly& a, const ZLaurentPoly& b);
  friend bool operator==(const ZLaurentPoly& a, const ZLaurentPoly& b);

  /// Multiplies by sign * z^shift.
  ZLaurentPoly times_monomial(int sign, int shift) const;
  ZLaurentPoly scaled(const BigInt& factor) const;

  /// Substitutes z = 1. Always defined.
  BigInt at_one() const;
  /// Substitutes z = 0; throws std::domain_error when a negative power is present.
  BigInt at_zero() const;

  std::string to_string() const;

private:
  void normalize();

  std::vector<Term> terms_;
};

/// Dense accumulator for products of Laurent polynomials, used by the series
/// kernels so that a whole Cauchy-product coefficient is summed in one buffer.
class ZAccumulator {
public:
  ZAccumulator(int lo, int hi);  // covers z-exponents [lo, hi]

  void add_product(const ZLaurentPoly& a, const ZLaurentPoly& b);
  void add(const ZLaurentPoly& a);
  void sub_product(const ZLaurentPoly& a, const ZLaurentPoly& b);
  ZLaurentPoly take();

private:
  int lo_;
  std::vector<BigInt> dense_;
};

}  // namespace overpart

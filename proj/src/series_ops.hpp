#pragma once

#include "overpart/qseries.hpp"

namespace overpart::detail {

// Lossless multiplication and division by binomials 1 - m. Division by
// 1 - m with q-exponent 0 throws NonUnitDenominator.
QSeries times_one_minus(const QSeries& s, const QMonomial& m);
QSeries over_one_minus(const QSeries& s, const QMonomial& m);

// s * (a; q)_n and s / (a; q)_n, factor by factor.
QSeries times_poch(QSeries s, const QMonomial& a, int n);
QSeries over_poch(QSeries s, const QMonomial& a, int n);

}  // namespace overpart::detail

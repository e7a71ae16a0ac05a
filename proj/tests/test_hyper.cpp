#include <doctest.h>

#include "oracles.hpp"
#include "overpart/errors.hpp"
#include "overpart/hyper.hpp"

using namespace overpart;

namespace {

QMonomial q(int e) { return QMonomial::q(e); }
QMonomial mzq(int e) { return {-1, 1, e}; }

oracle::Bivariate to_bivariate(const QSeries& s) {
  oracle::Bivariate out;
  for (int e = s.min_exp(); e < s.order(); ++e) {
    for (const auto& [z, c] : s.coeff(e).terms()) out[{e, z}] = c;
  }
  return out;
}

// (a;q)_n for a = sign z^zexp q^qexp, exact.
oracle::Bivariate poch(const QMonomial& a, int n) { return oracle::pochhammer_exact(a.sign, a.z_exp, a.q_exp, n); }

}  // namespace

TEST_CASE("termination and term counts") {
  HypergeometricSpec chu{{mzq(0), q(-2)}, {mzq(1)}, q(3)};
  CHECK(chu.series_exponent_shift() == 0);
  CHECK(chu.termination_index() == 2);
  CHECK(required_terms(chu, 10) == 3);

  HypergeometricSpec binomial{{mzq(0)}, {}, q(1)};
  CHECK_FALSE(binomial.termination_index().has_value());
  CHECK(required_terms(binomial, 10) == 10);

  // q^-n parameters with a sign or a z do not terminate.
  HypergeometricSpec signed_param{{QMonomial{-1, 0, -2}}, {}, q(1)};
  CHECK_FALSE(signed_param.termination_index().has_value());

  HypergeometricSpec poisson{{}, {}, mzq(0)};  // 0phi0: s - r = 1
  CHECK(poisson.series_exponent_shift() == 1);
  CHECK_THROWS_AS(required_terms(poisson, 10), NonTerminatingWithoutConvergence);
  CHECK_THROWS_AS(required_terms(HypergeometricSpec{{mzq(0)}, {}, mzq(0)}, 5), NonTerminatingWithoutConvergence);
  CHECK_THROWS_AS(eval_phi(HypergeometricSpec{{q(1)}, {}, q(0)}, 5), NonTerminatingWithoutConvergence);
}

TEST_CASE("eval_phi basics") {
  HypergeometricSpec any{{mzq(0), q(2)}, {q(3)}, q(1)};
  CHECK(eval_phi(any, 1, 12).equal_to(QSeries::one(12), 12));
  HypergeometricSpec trivial{{mzq(0), q(0)}, {mzq(1)}, q(5)};
  CHECK(eval_phi(trivial, 12).equal_to(QSeries::one(12), 12));
  CHECK(eval_phi(trivial, 7, 12).equal_to(QSeries::one(12), 12));
}

TEST_CASE("2phi1(-z, q^-2; -zq; q, q^3) = (q)_2 / (-zq)_2") {
  HypergeometricSpec spec{{mzq(0), q(-2)}, {mzq(1)}, q(3)};
  const int N = 30;
  QSeries lhs = eval_phi(spec, 3, N);
  // Cross-multiplied so the oracle never divides.
  CHECK(oracle::below(oracle::multiply(to_bivariate(lhs), poch(mzq(1), 2), N), N) == poch(q(1), 2));
  // Terms past termination are exactly zero.
  CHECK(eval_phi(spec, 9, N).equal_to(lhs, N));
  CHECK(eval_phi(spec, N).equal_to(lhs, N));
}

TEST_CASE("q-binomial theorem as a non-terminating check") {
  // 1phi0(a; -; q, w) = (aw)_inf / (w)_inf
  const int N = 25;
  for (const QMonomial& a : {mzq(0), QMonomial{1, 1, 2}, q(3), QMonomial{-1, 2, -1}}) {
    for (int wq = 1; wq <= 3; ++wq) {
      const QMonomial w = q(wq);
      if ((a * w).q_exp < 1) continue;
      QSeries lhs = eval_phi(HypergeometricSpec{{a}, {}, w}, N);
      auto lhs_times_w = oracle::multiply(to_bivariate(lhs), oracle::pochhammer(1, 0, wq, N, N), N);
      const QMonomial aw = a * w;
      CHECK(lhs_times_w == oracle::pochhammer(aw.sign, aw.z_exp, aw.q_exp, N, N));
    }
  }
}

TEST_CASE("denominators must be units") {
  CHECK_THROWS_AS(eval_phi(HypergeometricSpec{{q(-3)}, {QMonomial{1, 1, 0}}, q(1)}, 10), NonUnitDenominator);
  CHECK_THROWS_AS(eval_phi(HypergeometricSpec{{q(-3)}, {q(-1)}, q(1)}, 10), NonUnitDenominator);
  CHECK_THROWS_AS(eval_phi(HypergeometricSpec{{q(-3)}, {QMonomial{-1, 0, 0}}, q(1)}, 10), NonUnitDenominator);
  // A denominator with a negative power of q is still a unit in the Laurent ring.
  CHECK_NOTHROW(eval_phi(HypergeometricSpec{{q(-3)}, {QMonomial{1, 0, -5}}, q(1)}, 10));
}

TEST_CASE("with_precision raises the working order") {
  int calls = 0;
  QSeries r = with_precision(10, [&](int w) {
    ++calls;
    return QSeries::one(w - 4);
  });
  CHECK(r.order() == 10);
  CHECK(calls == 2);
}

TEST_CASE("check_chu") {
  CHECK(check_chu(mzq(0), mzq(1), 0, 20));
  for (int t = 1; t <= 5; ++t) CHECK(check_chu(mzq(0), mzq(1), t, 25));
  CHECK(check_chu(q(1), q(3), 2, 25));

  const std::vector<QMonomial> as{q(1), QMonomial{-1, 1, 0}, mzq(2)};
  const std::vector<QMonomial> cs{q(3), mzq(1), QMonomial{1, 1, 2}};
  for (const auto& a : as) {
    for (const auto& c : cs) {
      for (int n = 0; n <= 6; ++n) {
        CHECK(check_chu(a, c, n, 25));
        // The same evaluation against the oracle: lhs * (c)_n == (c/a)_n.
        const int N = 25;
        QSeries lhs = eval_phi(HypergeometricSpec{{a, q(-n)}, {c}, c * q(n) / a}, N);
        CHECK(oracle::below(oracle::multiply(to_bivariate(lhs), poch(c, n), N), N) ==
              oracle::below(poch(c / a, n), N));
      }
    }
  }
}

TEST_CASE("check_chu rejects a false instance") {
  // Terms of the wrong series: dropping the last term breaks the identity.
  HypergeometricSpec spec{{mzq(0), q(-3)}, {mzq(1)}, q(4)};
  QSeries short_sum = eval_phi(spec, 3, 20);
  QSeries full = eval_phi(spec, 20);
  CHECK_FALSE(short_sum.equal_to(full, 20));
}

TEST_CASE("3phi2 transformation") {
  for (int t = 1; t <= 4; ++t) CHECK(check_32_transform(q(1), q(1), mzq(t + 1), mzq(2), q(t + 2), 30));
  // b = d: the right side collapses to its first term.
  CHECK(check_32_transform(q(1), mzq(1), q(1), mzq(1), q(4), 20));
  CHECK(check_32_transform(q(1), q(1), mzq(2), mzq(2), q(3), 1));
  HypergeometricSpec lhs{{q(1), q(1), mzq(3)}, {mzq(2), q(4)}, q(1)};
  CHECK(eval_phi(lhs, 1).coeff(0) == ZLaurentPoly(1));
  // Parameters outside the domain of the infinite products.
  CHECK_THROWS_AS(check_32_transform(q(2), q(1), q(1), q(3), q(2), 10), DivergentProduct);  // e/a = 1
}

TEST_CASE("the analytic chain") {
  for (int t = 1; t <= 5; ++t) {
    for (auto mode : {ZMode::tracked, ZMode::zero, ZMode::one}) {
      ChainReport r = verify_section3_chain(t, 40, mode);
      CHECK_MESSAGE(r.pass, r.first_failure);
      CHECK(r.lines.size() == 11);
      for (const auto& line : r.lines) CHECK(line.equal_to_previous);
      CHECK_FALSE(r.matches_enumeration.has_value());
    }
  }
}

TEST_CASE("chain specializations and the combinatorial meaning of its leftmost member") {
  SUBCASE("z -> 1 gives the overpartition count series") {
    ChainReport r = verify_section3_chain(3, 30, ZMode::one);
    CHECK(r.lines.front().value.equal_to(rhs_overpartition_count(3, 30), 30));
    CHECK(r.lines.front().value.coeff(3) == ZLaurentPoly(8));
  }
  SUBCASE("z -> 0 gives the bounded-difference partition series") {
    ChainReport r = verify_section3_chain(2, 30, ZMode::zero);
    CHECK(r.lines.back().value.equal_to(rhs_breuer_kronholm(2, 30), 30));
  }
  SUBCASE("leftmost member counts G_t by weight and overlines") {
    for (int t = 1; t <= 4; ++t) {
      const int N = 13;
      ChainReport r = verify_section3_chain(t, N, ZMode::tracked, true);
      CHECK(r.matches_enumeration == true);
      const auto counts = oracle::g_counts(t, N - 1);
      oracle::Bivariate expected;
      for (const auto& [key, c] : counts) expected[{key.first, key.second}] = c;
      CHECK(to_bivariate(r.lines.front().value) == expected);
    }
  }
}

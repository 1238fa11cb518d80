#include <gtest/gtest.h>

#include "polysym/qfun.hpp"
#include "polysym/serialize.hpp"
#include "print.hpp"

using namespace polysym;

namespace {

const TruncationSpec kQ(200);

Series P(std::string_view text, const TruncationSpec& spec = kQ) { return parse_text(text, spec); }

// Independent route: (q)_n / ((q)_k (q)_{n-k}) with series inversion.
Series qbinomial_by_quotient(int n, int k, const TruncationSpec& spec) {
  Series q = Series::monomial(1, mono(Var::q, 1), spec);
  return pochhammer(q, n) * invert(pochhammer(q, k)) * invert(pochhammer(q, n - k));
}

Integer binomial(int n, int k) {
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int degree(const Series& s) {
  int d = -1;
  for (const auto& t : s.terms()) d = std::max(d, t.exp[Var::q]);
  return d;
}

}  // namespace

TEST(QBinomial, Examples) {
  EXPECT_EQ(qbinomial(5, 0, kQ), P("1"));
  EXPECT_EQ(qbinomial(2, 1, kQ), P("1 + q"));
  EXPECT_EQ(qbinomial(4, 2, kQ), P("1 + q + 2*q^2 + q^3 + q^4"));
  EXPECT_TRUE(qbinomial(3, 4, kQ).is_zero());
  EXPECT_TRUE(qbinomial(3, -1, kQ).is_zero());
  EXPECT_EQ(qbinomial(3, 3, kQ), P("1"));
}

TEST(QBinomial, SubstitutedExamples) {
  EXPECT_EQ(qbinomial_substituted(2, 1, mono(Var::q, 4), kQ), P("1 + q^4"));
  EXPECT_EQ(qbinomial_substituted(1, 1, mono(Var::q, -4), kQ, mono(Var::q, 4)), P("q^4"));
  EXPECT_EQ(qbinomial_substituted(3, 1, mono(Var::q, 2), kQ), P("1 + q^2 + q^4"));
}

TEST(QBinomial, MatchesQuotientOfPochhammers) {
  TruncationSpec spec(40);
  for (int n = 0; n <= 9; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(qbinomial(n, k, spec), qbinomial_by_quotient(n, k, spec)) << n << "," << k;
}

TEST(QBinomial, SymmetryEvaluationDegree) {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      Series a = qbinomial(n, k, kQ);
      EXPECT_EQ(a, qbinomial(n, n - k, kQ));
      EXPECT_EQ(a.coeff_sum(), binomial(n, k));
      EXPECT_EQ(degree(a), k * (n - k));
      for (const auto& t : a.terms()) EXPECT_GT(t.coeff, 0);
    }
  }
}

TEST(QBinomial, Vandermonde) {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n)
      for (int k = 0; k <= m + n; ++k) {
        Series rhs(kQ);
        for (int j = 0; j <= k; ++j) {
          if (j > m || k - j > n) continue;
          rhs += shift(qbinomial(m, j, kQ) * qbinomial(n, k - j, kQ), mono(Var::q, (m - j) * (k - j)));
        }
        EXPECT_EQ(qbinomial(m + n, k, kQ), rhs);
      }
}

TEST(QPochhammer, InverseByQBinomialTheorem) {
  TruncationSpec spec = TruncationSpec(14, {Var::x, Var::y, Var::q}).with_cap(Var::y, 9);
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(qpochhammer_inverse(1, mono(Var::y, 1), n, spec), invert(qpochhammer(1, mono(Var::y, 1), n, spec)));
    EXPECT_EQ(qpochhammer_inverse(-1, mono(Var::x, 1, Var::q, 2), n, spec),
              invert(qpochhammer(-1, mono(Var::x, 1, Var::q, 2), n, spec)));
  }
}

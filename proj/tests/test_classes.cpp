#include <gtest/gtest.h>

#include "polysym/classes.hpp"
#include "polysym/oracle.hpp"
#include "polysym/qfun.hpp"
#include "print.hpp"

using namespace polysym;

namespace {

TruncationSpec xyq(int n) { return TruncationSpec(n, VarSet{Var::x, Var::y, Var::q}); }
TruncationSpec xq(int n) { return TruncationSpec(n, VarSet{Var::x, Var::q}); }

Integer total_at_q(const Series& a, int k) {
  Integer sum = 0;
  for (const Term& t : a.terms())
    if (t.exp[Var::q] == k) sum += t.coeff;
  return sum;
}

bool nonnegative(const Series& a) {
  for (const Term& t : a.terms())
    if (t.coeff < 0) return false;
  return true;
}

}  // namespace

TEST(Partitions, SmallCoefficients) {
  Series p = series_P(xyq(8));
  EXPECT_EQ(p.coeff(mono(Var::x, 1, Var::y, 1, Var::q, 1)), 1);
  EXPECT_EQ(p.coeff(mono(Var::x, 2, Var::y, 2, Var::q, 3)), 1);
  EXPECT_EQ(total_at_q(p, 4), 5);
  EXPECT_EQ(total_at_q(p, 8), 22);
}

TEST(Partitions, DoubleSumMatchesProductForm) {
  EXPECT_EQ(series_P_double_sum(xyq(12)), series_P(xyq(12)));
}

TEST(Partitions, WithEmptyParts) {
  auto spec = xyq(8).with_cap(Var::y, 6);
  Series p0 = series_P0(spec);
  EXPECT_EQ(p0.coeff(mono(Var::y, 2)), 1);
  EXPECT_EQ(p0.coeff(mono(Var::x, 1, Var::y, 1, Var::q, 1)), 1);
  // Only the row sequence (1, 0) is weakly decreasing.
  EXPECT_EQ(p0.coeff(mono(Var::x, 1, Var::y, 2, Var::q, 1)), 1);
  EXPECT_EQ(p0, oracle_series(ClassId::P0, spec));
}

TEST(Partitions, DistinctParts) {
  Series ps = series_PS(xyq(10));
  EXPECT_EQ(ps.coeff(mono(Var::x, 3, Var::y, 2, Var::q, 5)), 1);
  EXPECT_EQ(ps.coeff(mono(Var::x, 3, Var::y, 2, Var::q, 4)), 1);
  EXPECT_EQ(ps.coeff(mono(Var::x, 1, Var::y, 1, Var::q, 1)), 1);
  EXPECT_EQ(total_at_q(ps, 10), 10);

  auto su = xyq(10).with_var(Var::u);
  Series psu = series_PS_u(su);
  EXPECT_EQ(eval_at_one(psu, Var::u), restrict_to(ps, xyq(10)));
  for (const Term& t : psu.terms()) EXPECT_EQ(t.exp[Var::u], t.exp[Var::x]);
}

TEST(Stacks, SmallCoefficients) {
  Series t = series_T(xyq(8));
  EXPECT_EQ(t.coeff(mono(Var::x, 1, Var::y, 1, Var::q, 1)), 1);
  EXPECT_EQ(t.coeff(mono(Var::x, 2, Var::y, 2, Var::q, 3)), 2);

  auto spec = xyq(8).with_cap(Var::y, 4);
  Series row1 = coeff_extract(series_T0(spec), Var::y, 1);
  EXPECT_EQ(restrict_to(row1, xq(8)), invert(Series::constant(1, xq(8)) - Series::monomial(1, mono(Var::x, 1, Var::q, 1), xq(8))));
}

TEST(Stacks, NumeratorPolynomials) {
  auto spec = xq(40);
  EXPECT_EQ(poly_Vn(0, spec), Series::constant(1, spec));
  EXPECT_EQ(poly_Vn(1, spec), Series::constant(1, spec));
  auto m = [&](int a, int b) { return Series::monomial(1, mono(Var::x, a, Var::q, b), spec); };
  EXPECT_EQ(poly_Vn(2, spec), Series::constant(1, spec) + m(1, 1));
  EXPECT_EQ(poly_Vn(3, spec), Series::constant(1, spec) + 2 * m(1, 1) + m(1, 2));
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(poly_Vn(n, spec), poly_Vn_closed(n, spec)) << n;
}

TEST(Stacks, FixedHeightRoutesAgree) {
  auto spec = xq(14);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(series_T0n(n, spec), series_T0n_sum(n, spec)) << n;
  Series t2 = series_T0n(2, spec);
  EXPECT_EQ(t2.constant_term(), 1);
  EXPECT_EQ(t2.coeff(mono(Var::x, 1, Var::q, 1)), 2);
  // Horizontal domino in either row.
  EXPECT_EQ(t2.coeff(mono(Var::x, 2, Var::q, 2)), 2);
  EXPECT_EQ(t2.coeff(mono(Var::x, 1, Var::q, 2)), 1);
}

TEST(Stacks, HeightSlicesRebuildT0) {
  const int n = 12;
  auto spec = xyq(n).with_cap(Var::y, n);
  Series t0 = series_T0(spec);
  SeriesBuilder b(spec);
  for (int h = 1; h <= n; ++h) {
    Series slice = series_T0n(h, xq(n)) - Series::constant(1, xq(n));
    for (const Term& t : slice.terms()) b.add(t.exp + mono(Var::y, h), t.coeff);
  }
  SeriesBuilder keep(spec);
  for (const Term& t : t0.terms())
    if (t.exp[Var::x] > 0) keep.add(t.exp, t.coeff);
  EXPECT_EQ(std::move(keep).build(), std::move(b).build());
}

TEST(ShiftedStacks, Bases) {
  auto spec = xyq(10).with_var(Var::u);
  Series p1 = series_P1(spec);
  EXPECT_EQ(p1.coeff(mono(Var::u, 1, Var::x, 1, Var::y, 1) + mono(Var::q, 1)), 1);
  EXPECT_EQ(p1.coeff(mono(Var::u, 2, Var::x, 2, Var::y, 1) + mono(Var::q, 2)), 1);
  EXPECT_EQ(p1.coeff(mono(Var::u, 3, Var::x, 3, Var::y, 2) + mono(Var::q, 4)), 1);
  EXPECT_EQ(p1, oracle_series(ClassId::P1, spec));
}

TEST(ShiftedStacks, IterationMatchesClosedForm) {
  auto spec = xyq(14).with_var(Var::u);
  Series closed = series_TS_closed(spec);
  EXPECT_EQ(series_TS_iter(spec), closed);
  EXPECT_EQ(closed.coeff(mono(Var::u, 1, Var::x, 1, Var::y, 1) + mono(Var::q, 1)), 1);
}

TEST(ShiftedStacks, FigureExampleWeightOccurs) {
  auto spec = xyq(20).with_var(Var::u).with_weighted({{Var::x, 1}, {Var::y, 1}}, 15);
  Series ts = series_TS(spec);
  EXPECT_GE(ts.coeff(mono(Var::u, 2, Var::x, 8, Var::y, 7) + mono(Var::q, 20)), 1);
}

TEST(DirectedConvex, SmallCoefficients) {
  auto spec = xyq(8).with_var(Var::s);
  Series d = series_D(spec);
  EXPECT_EQ(d.coeff(mono(Var::s, 1, Var::x, 1, Var::y, 1) + mono(Var::q, 1)), 1);
  EXPECT_EQ(total_at_q(d, 2), 2);
  EXPECT_EQ(total_at_q(d, 3), 5);
  // One row of n cells: leftmost column of height 1.
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(d.coeff(mono(Var::s, 1, Var::x, n, Var::y, 1) + mono(Var::q, n)), 1);
}

TEST(Convex, SmallCoefficients) {
  Series c = series_C(xyq(10));
  EXPECT_EQ(c.coeff(mono(Var::x, 1, Var::y, 1, Var::q, 1)), 1);
  EXPECT_EQ(total_at_q(c, 1), 1);
  EXPECT_EQ(total_at_q(c, 4), 19);
  EXPECT_EQ(total_at_q(c, 10), 9312);

  auto hp = xyq(16).with_weighted({{Var::x, 1}, {Var::y, 1}}, 4);
  Integer per8 = 0;
  Series c_hp = series_C(hp);
  for (const Term& t : c_hp.terms())
    if (t.exp[Var::x] + t.exp[Var::y] == 4) per8 += t.coeff;
  EXPECT_EQ(per8, 7);
}

TEST(Convex, DualNumberRouteMatchesSymbolic) {
  EXPECT_EQ(series_C(xyq(12)), series_C_symbolic(xyq(12)));
  auto hp = xyq(16).with_weighted({{Var::x, 1}, {Var::y, 1}}, 7);
  EXPECT_EQ(series_C(hp), series_C_symbolic(hp));
}

class OracleAgreement : public ::testing::TestWithParam<ClassId> {};

TEST_P(OracleAgreement, AllCoefficientsToArea10) {
  const int n = 10;
  ClassId id = GetParam();
  TruncationSpec spec = xyq(n);
  Series f(spec);
  switch (id) {
    case ClassId::P: f = series_P(spec); break;
    case ClassId::PS: f = series_PS(spec); break;
    case ClassId::T: f = series_T(spec); break;
    case ClassId::C: f = series_C(spec); break;
    case ClassId::P0:
      spec = spec.with_cap(Var::y, n + 2);
      f = series_P0(spec);
      break;
    case ClassId::T0:
      spec = spec.with_cap(Var::y, n + 2);
      f = series_T0(spec);
      break;
    case ClassId::D:
      spec = spec.with_var(Var::s);
      f = series_D(spec);
      break;
    case ClassId::P1:
      spec = spec.with_var(Var::u);
      f = series_P1(spec);
      break;
    case ClassId::TS:
      spec = spec.with_var(Var::u);
      f = series_TS(spec);
      break;
    default: FAIL();
  }
  EXPECT_EQ(f, oracle_series(id, spec));
  EXPECT_TRUE(nonnegative(f));
}

INSTANTIATE_TEST_SUITE_P(BaseClasses, OracleAgreement,
                         ::testing::Values(ClassId::P, ClassId::P0, ClassId::PS, ClassId::T,
                                           ClassId::T0, ClassId::P1, ClassId::TS, ClassId::D,
                                           ClassId::C),
                         [](const auto& info) { return std::string(class_name(info.param)); });

TEST(DirectedConvex, SummedOverLeftColumn) {
  auto spec = xyq(12).with_var(Var::s);
  Series d = series_D(spec);
  EXPECT_TRUE(nonnegative(d));
  EXPECT_EQ(eval_at_one(d, Var::s).coeff(mono(Var::x, 2, Var::y, 2, Var::q, 3)), 3);
}

TEST(DegreeBound, CombinesCaps) {
  auto spec = xyq(9).with_cap(Var::x, 4);
  EXPECT_EQ(degree_bound(spec, Var::x), 4);
  EXPECT_EQ(degree_bound(spec, Var::y), 9);
  auto w = xyq(20).with_weighted({{Var::x, 2}, {Var::y, 1}}, 7);
  EXPECT_EQ(degree_bound(w, Var::x), 3);
  EXPECT_EQ(degree_bound(w, Var::y), 7);
}

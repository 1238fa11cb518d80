#include <gtest/gtest.h>

#include <random>

#include "polysym/serialize.hpp"
#include "polysym/series.hpp"
#include "print.hpp"

using namespace polysym;

namespace {

const TruncationSpec kQ10(10);
const TruncationSpec kTQ(10, {Var::t, Var::q});
const TruncationSpec kSXQ(10, {Var::s, Var::x, Var::q});

Series P(std::string_view text, const TruncationSpec& spec = kQ10) { return parse_text(text, spec); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const SeriesError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no SeriesError thrown";
  return ErrorKind::Unsupported;
}

// Random series with up to 6 terms in s, x, q (s unbounded, x capped).
Series random_series(std::mt19937& rng, const TruncationSpec& spec) {
  std::uniform_int_distribution<int> n(0, 6), ex(0, 4), sx(-1, 3), cf(-3, 3);
  std::vector<Term> terms;
  int count = n(rng);
  for (int i = 0; i < count; ++i) {
    ExpVec e;
    e.set(Var::q, ex(rng));
    if (spec.has(Var::x)) e.set(Var::x, ex(rng) % 3);
    if (spec.has(Var::s)) e.set(Var::s, sx(rng));
    terms.push_back(Term{e, Integer(cf(rng))});
  }
  return Series::from_terms(spec, terms);
}

}  // namespace

TEST(Monomial, Basics) {
  Series a = Series::monomial(1, mono(Var::t, 2, Var::q, 1), kTQ);
  EXPECT_EQ(to_text(a), "t^2*q");
  EXPECT_TRUE(Series::monomial(1, mono(Var::q, 11), kQ10).is_zero());
  EXPECT_EQ(kind_of([] { Series::monomial(1, mono(Var::q, -1), kQ10); }), ErrorKind::InvalidExponent);
}

TEST(Add, Examples) {
  EXPECT_EQ(P("q + q^2") + P("1 - q"), P("1 + q^2"));
  Series s = P("s", kSXQ);
  EXPECT_EQ(s + Series(kSXQ), s);
  EXPECT_EQ(kind_of([] { (void)(Series(TruncationSpec(5)) + Series(TruncationSpec(6))); }),
            ErrorKind::SpecMismatch);
}

TEST(Mul, Examples) {
  EXPECT_EQ(P("1 + q") * P("1 - q"), P("1 - q^2"));
  EXPECT_EQ(P("t^2*q", kTQ) * P("t^4*q^4", kTQ), P("t^6*q^5", kTQ));
  EXPECT_TRUE((P("q^6") * P("q^5")).is_zero());
}

TEST(Mul, WeightedCapTruncates) {
  TruncationSpec spec = TruncationSpec(20, {Var::x, Var::y, Var::q}).with_weighted({{Var::x, 1}, {Var::y, 1}}, 3);
  Series a = P("x*q + y*q", spec);
  Series sq = a * a * a * a;
  EXPECT_TRUE(sq.is_zero());
  EXPECT_EQ(a * a, P("x^2*q^2 + 2*x*y*q^2 + y^2*q^2", spec));
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(P("1 - q", TruncationSpec(3))), P("1 + q + q^2 + q^3", TruncationSpec(3)));
  TruncationSpec xq(2, {Var::x, Var::q});
  EXPECT_EQ(invert(P("1 - x*q", xq)), P("1 + x*q + x^2*q^2", xq));
  EXPECT_EQ(kind_of([&] { invert(P("1 - x", xq)); }), ErrorKind::NotInvertible);
  EXPECT_EQ(kind_of([&] { invert(P("2 - q")); }), ErrorKind::NotInvertible);
}

TEST(Invert, CappedVariableWithoutQ) {
  TruncationSpec spec = TruncationSpec(5, {Var::y, Var::q}).with_cap(Var::y, 4);
  Series a = P("1 - y", spec);
  EXPECT_EQ(invert(a), P("1 + y + y^2 + y^3 + y^4", spec));
  Series b = P("1 - y - y*q + y^2*q", spec);
  EXPECT_EQ(mul(invert(b), b), Series::constant(1, spec));
}

TEST(Pochhammer, Examples) {
  TruncationSpec yq(10, {Var::y, Var::q});
  EXPECT_EQ(pochhammer(P("y*q", yq), 2), P("1 - y*q", yq) * P("1 - y*q^2", yq));
  EXPECT_EQ(pochhammer(P("-y*q", yq), 1), P("1 + y*q", yq));
  EXPECT_EQ(pochhammer(P("x*q^3 + 7", kSXQ), 0), Series::constant(1, kSXQ));
}

TEST(Derivative, Examples) {
  EXPECT_EQ(derivative(P("s^2*q", kSXQ), Var::s), P("2*s*q", kSXQ));
  EXPECT_TRUE(derivative(P("x*q", kSXQ), Var::s).is_zero());
  EXPECT_EQ(derivative(P("s^3 + s", kSXQ), Var::s), P("3*s^2 + 1", kSXQ));
}

TEST(Substitute, Examples) {
  TruncationSpec xyq(20, {Var::x, Var::y, Var::q});
  Series a = P("x^2*y^3*q^5", xyq);
  ImageMap m = {{Var::x, {1, mono(Var::t, 2)}},
                {Var::y, {1, mono(Var::t, 1, Var::q, -1)}},
                {Var::q, {1, mono(Var::q, 2)}}};
  EXPECT_EQ(substitute(a, m, TruncationSpec(20, {Var::t, Var::q})), P("t^7*q^7", TruncationSpec(20, {Var::t, Var::q})));
  Series b = P("x*y*q", xyq);
  EXPECT_EQ(substitute(b, {}, xyq), b);
  Series c = P("y", xyq);
  EXPECT_EQ(kind_of([&] { substitute(c, {{Var::y, {1, mono(Var::q, -1)}}}, xyq); }),
            ErrorKind::NegativeFinalExponent);
}

TEST(SubstituteGraded, Examples) {
  TruncationSpec xyq(20, {Var::x, Var::y, Var::q});
  TruncationSpec txq(20, {Var::t, Var::x, Var::q});
  GradedImage f = [](int m) { return std::vector<Term>{Term{mono(Var::t, 2 * m, Var::q, m * m), 1}}; };
  EXPECT_EQ(substitute_graded(P("y^2", xyq), Var::y, f, {}, txq), P("t^4*q^4", txq));
  EXPECT_EQ(substitute_graded(P("1", xyq), Var::y, f, {}, txq), P("1", txq));
  EXPECT_EQ(substitute_graded(P("y*x", xyq), Var::y, f, {}, txq), P("t^2*q*x", txq));
}

TEST(CoeffExtract, Examples) {
  TruncationSpec xyq(20, {Var::x, Var::y, Var::q});
  TruncationSpec xq(20, {Var::x, Var::q});
  EXPECT_EQ(coeff_extract(P("x*y*q + x*y^2*q^2", xyq), Var::y, 1), P("x*q", xq));
  EXPECT_EQ(coeff_extract(P("1 + y*q", xyq), Var::y, 0), P("1", xq));
  EXPECT_TRUE(coeff_extract(P("s^2*q", kSXQ), Var::s, 3).is_zero());
}

TEST(CoeffExtract, WeightedBoundShrinks) {
  TruncationSpec spec = TruncationSpec(20, {Var::x, Var::y, Var::q}).with_weighted({{Var::x, 1}, {Var::y, 1}}, 5);
  Series r = coeff_extract(P("x*y^2*q", spec), Var::y, 2);
  EXPECT_EQ(r.spec().weighted_bound(), 3);
}

TEST(EvalAtOne, Examples) {
  TruncationSpec xq(10, {Var::x, Var::q});
  EXPECT_EQ(eval_at_one(P("s^2*q + s*q", kSXQ), Var::s), P("2*q", xq));
  EXPECT_EQ(eval_at_one(P("1 + s", kSXQ), Var::s), P("2", xq));
  EXPECT_TRUE(eval_at_one(Series(kSXQ), Var::s).is_zero());
}

TEST(DivideExact, Examples) {
  EXPECT_EQ(divide_exact(P("1 - q^2"), P("1 + q")), P("1 - q"));
  EXPECT_EQ(divide_exact(P("2*t^2*q", kTQ), P("2", kTQ)), P("t^2*q", kTQ));
  EXPECT_EQ(kind_of([] { divide_exact(P("1 + q^2"), P("1 + q")); }), ErrorKind::InexactDivision);
  EXPECT_EQ(kind_of([] { divide_exact(P("3*q"), P("2")); }), ErrorKind::InexactDivision);
  EXPECT_EQ(divide_exact(P("t^3*q + t^2*q^2", kTQ), P("t", kTQ)), P("t^2*q + t*q^2", kTQ));
}

TEST(Json, RoundTripAndFormat) {
  Series a = P("t^2*q + 3*t^3*q^2 - 12345678901234567890123*q^4", kTQ);
  std::string j = to_json(a);
  EXPECT_EQ(j.substr(0, 33), R"({"vars":["t","q"],"qmax":10,"term)");
  EXPECT_NE(j.find(R"({"e":{"t":2,"q":1},"c":"1"})"), std::string::npos);
  EXPECT_EQ(from_json(j), a);
  TruncationSpec w = TruncationSpec(7, {Var::x, Var::y, Var::q}).with_cap(Var::y, 3).with_weighted({{Var::x, 2}, {Var::y, 1}}, 9);
  Series b = P("x*y*q + y^3", w);
  EXPECT_EQ(from_json(to_json(b)), b);
}

TEST(Text, Ordering) {
  Series a = P("16*t^6*q^7 + 8*t^5*q^5 + 32*t^6*q^5 + 8*t^5*q^4 + 24*t^6*q^6", kTQ);
  EXPECT_EQ(to_text(a), "8*t^5*q^4 + 8*t^5*q^5 + 32*t^6*q^5 + 24*t^6*q^6 + 16*t^6*q^7");
  EXPECT_EQ(to_text(Series(kTQ)), "0");
  EXPECT_EQ(to_text(P("-q + 1", kTQ)), "1 - q");
}

// Property tests over random small operands.
TEST(Properties, RingAxioms) {
  std::mt19937 rng(12345);
  TruncationSpec spec = TruncationSpec(6, {Var::s, Var::x, Var::q}).with_cap(Var::x, 3);
  for (int i = 0; i < 200; ++i) {
    Series a = random_series(rng, spec), b = random_series(rng, spec), c = random_series(rng, spec);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    (a * b).validate();
  }
}

TEST(Properties, InverseAndDerivative) {
  std::mt19937 rng(777);
  TruncationSpec spec = TruncationSpec(6, {Var::s, Var::x, Var::q}).with_cap(Var::x, 3);
  const Series one = Series::constant(1, spec);
  for (int i = 0; i < 200; ++i) {
    Series a = random_series(rng, spec), b = random_series(rng, spec);
    // Make a invertible: drop its degree-0 part in q and x, add +-1.
    std::vector<Term> keep;
    for (const auto& t : a.terms())
      if (t.exp[Var::q] > 0 || t.exp[Var::x] > 0) keep.push_back(t);
    Series inv_in = Series::from_terms(spec, keep) + Series::constant(i % 2 ? 1 : -1, spec);
    ASSERT_EQ(mul(invert(inv_in), inv_in), one);
    ASSERT_EQ(derivative(a + b, Var::s), derivative(a, Var::s) + derivative(b, Var::s));
    ASSERT_EQ(derivative(a * b, Var::s), derivative(a, Var::s) * b + a * derivative(b, Var::s));
    ASSERT_EQ(substitute(a, {}, spec), a);
    // Reassemble from s-coefficients.
    Series sum(spec);
    for (int k = -4; k <= 8; ++k) {
      Series ck = restrict_to(coeff_extract(a, Var::s, k), spec);
      sum += shift(ck, mono(Var::s, k));
    }
    ASSERT_EQ(sum, a);
    ASSERT_EQ(from_json(to_json(a)), a);
    ASSERT_EQ(parse_text(to_text(a), spec), a);
  }
}

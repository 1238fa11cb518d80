#include <gtest/gtest.h>

#include "polysym/dihedral.hpp"
#include "print.hpp"

using namespace polysym;

TEST(Dihedral, MultiplicationTable) {
  for (auto a : kAllElements) {
    EXPECT_EQ(compose(a, GroupElement::e), a);
    EXPECT_EQ(compose(GroupElement::e, a), a);
    EXPECT_EQ(compose(a, inverse(a)), GroupElement::e);
    for (auto b : kAllElements)
      for (auto c : kAllElements)
        EXPECT_EQ(compose(a, compose(b, c)), compose(compose(a, b), c));
  }
  EXPECT_EQ(inverse(GroupElement::r), GroupElement::r3);
  EXPECT_EQ(compose(GroupElement::r, GroupElement::r), GroupElement::r2);
  EXPECT_EQ(compose(GroupElement::h, GroupElement::v), GroupElement::r2);
  EXPECT_EQ(compose(GroupElement::d1, GroupElement::d2), GroupElement::r2);
}

TEST(Dihedral, ComposeMatchesCellAction) {
  Cell p{2, 5};
  for (auto a : kAllElements)
    for (auto b : kAllElements) EXPECT_EQ(apply(compose(a, b), p), apply(a, apply(b, p)));
}

TEST(Dihedral, DiagonalAxes) {
  // d1 fixes the line y = -x, d2 the line y = x.
  EXPECT_EQ(apply(GroupElement::d1, Cell{3, -3}), (Cell{3, -3}));
  EXPECT_EQ(apply(GroupElement::d2, Cell{3, 3}), (Cell{3, 3}));
}

TEST(Dihedral, SubgroupsClosedWithOrders) {
  int total = 0;
  for (auto s : kAllSubgroups) {
    auto els = elements(s);
    EXPECT_EQ(static_cast<int>(els.size()), order(s));
    for (auto a : els)
      for (auto b : els) EXPECT_TRUE(contains(s, compose(a, b)));
    EXPECT_EQ(subgroup_from_mask(element_mask(s)), s);
    total += order(s);
  }
  EXPECT_EQ(total, 1 + 2 * 5 + 4 * 3 + 8);
  EXPECT_THROW(subgroup_from_mask(0b11), std::invalid_argument);  // {1, r}
  EXPECT_EQ(generated(GroupElement::r3), Subgroup::c4);
  EXPECT_EQ(generated(GroupElement::d1), Subgroup::d1);
  EXPECT_TRUE(contains(Subgroup::d4, Subgroup::hv));
  EXPECT_TRUE(contains(Subgroup::hv, Subgroup::r2));
  EXPECT_FALSE(contains(Subgroup::c4, Subgroup::h));
}

TEST(Dihedral, MobiusValues) {
  EXPECT_EQ(mobius(Subgroup::trivial), 1);
  EXPECT_EQ(mobius(Subgroup::r2), -1);
  EXPECT_EQ(mobius(Subgroup::h), -1);
  EXPECT_EQ(mobius(Subgroup::d2), -1);
  EXPECT_EQ(mobius(Subgroup::hv), 2);
  EXPECT_EQ(mobius(Subgroup::d1d2), 2);
  EXPECT_EQ(mobius(Subgroup::c4), 0);
  EXPECT_EQ(mobius(Subgroup::d4), 0);
}

TEST(Dihedral, MobiusIntervalSumsVanish) {
  for (auto g : kAllSubgroups)
    for (auto h : kAllSubgroups) {
      if (!contains(h, g)) continue;
      int sum = 0;
      for (auto k : kAllSubgroups)
        if (contains(k, g) && contains(h, k)) sum += mobius(g, k);
      EXPECT_EQ(sum, g == h ? 1 : 0);
    }
}

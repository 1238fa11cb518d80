#include "polysym/dihedral.hpp"

#include <stdexcept>

namespace polysym {

namespace {

std::size_t gi(GroupElement g) { return static_cast<std::size_t>(g); }
std::uint8_t bit(GroupElement g) { return static_cast<std::uint8_t>(1u << gi(g)); }

std::uint8_t mask_of(std::initializer_list<GroupElement> gs) {
  std::uint8_t m = 0;
  for (auto g : gs) m |= bit(g);
  return m;
}

}  // namespace

CellMap cell_map(GroupElement g) {
  switch (g) {
    case GroupElement::e: return {1, 0, 0, 1};
    case GroupElement::r: return {0, -1, 1, 0};
    case GroupElement::r2: return {-1, 0, 0, -1};
    case GroupElement::r3: return {0, 1, -1, 0};
    case GroupElement::h: return {1, 0, 0, -1};
    case GroupElement::v: return {-1, 0, 0, 1};
    case GroupElement::d1: return {0, -1, -1, 0};
    case GroupElement::d2: return {0, 1, 1, 0};
  }
  throw std::logic_error("bad group element");
}

Cell apply(GroupElement g, Cell p) {
  CellMap m = cell_map(g);
  return Cell{m.a * p.c + m.b * p.r, m.c * p.c + m.d * p.r};
}

GroupElement compose(GroupElement g1, GroupElement g2) {
  CellMap x = cell_map(g1), y = cell_map(g2);
  CellMap p{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  for (auto g : kAllElements) {
    CellMap m = cell_map(g);
    if (m.a == p.a && m.b == p.b && m.c == p.c && m.d == p.d) return g;
  }
  throw std::logic_error("group not closed");
}

GroupElement inverse(GroupElement g) {
  for (auto h : kAllElements)
    if (compose(g, h) == GroupElement::e) return h;
  throw std::logic_error("no inverse");
}

std::string_view element_name(GroupElement g) {
  static constexpr std::array<std::string_view, 8> names = {"1", "r", "r2", "r3",
                                                            "h", "v", "d1", "d2"};
  return names[gi(g)];
}

std::uint8_t element_mask(Subgroup s) {
  using G = GroupElement;
  switch (s) {
    case Subgroup::trivial: return mask_of({G::e});
    case Subgroup::r2: return mask_of({G::e, G::r2});
    case Subgroup::h: return mask_of({G::e, G::h});
    case Subgroup::v: return mask_of({G::e, G::v});
    case Subgroup::d1: return mask_of({G::e, G::d1});
    case Subgroup::d2: return mask_of({G::e, G::d2});
    case Subgroup::c4: return mask_of({G::e, G::r, G::r2, G::r3});
    case Subgroup::hv: return mask_of({G::e, G::h, G::v, G::r2});
    case Subgroup::d1d2: return mask_of({G::e, G::d1, G::d2, G::r2});
    case Subgroup::d4: return 0xff;
  }
  throw std::logic_error("bad subgroup");
}

std::vector<GroupElement> elements(Subgroup s) {
  std::vector<GroupElement> out;
  for (auto g : kAllElements)
    if (element_mask(s) & bit(g)) out.push_back(g);
  return out;
}

int order(Subgroup s) { return static_cast<int>(elements(s).size()); }

bool contains(Subgroup big, GroupElement g) { return (element_mask(big) & bit(g)) != 0; }

bool contains(Subgroup big, Subgroup small) {
  return (element_mask(big) & element_mask(small)) == element_mask(small);
}

Subgroup subgroup_from_mask(std::uint8_t mask) {
  for (auto s : kAllSubgroups)
    if (element_mask(s) == mask) return s;
  throw std::invalid_argument("element set is not a subgroup");
}

Subgroup generated(GroupElement g) {
  std::uint8_t m = bit(GroupElement::e);
  GroupElement p = g;
  while (!(m & bit(p))) {
    m |= bit(p);
    p = compose(g, p);
  }
  return subgroup_from_mask(m);
}

std::string_view subgroup_name(Subgroup s) {
  static constexpr std::array<std::string_view, 10> names = {
      "0", "<r2>", "<h>", "<v>", "<d1>", "<d2>", "C4", "<h,v>", "<d1,d2>", "D4"};
  return names[static_cast<std::size_t>(s)];
}

int mobius(Subgroup g, Subgroup h) {
  if (!contains(h, g)) return 0;
  if (g == h) return 1;
  int sum = 0;
  for (auto k : kAllSubgroups) {
    if (k != h && contains(k, g) && contains(h, k)) sum += mobius(g, k);
  }
  return -sum;
}

}  // namespace polysym

#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace polysym {

// Elements of the symmetry group of the square acting on cells (c, r).
enum class GroupElement : std::uint8_t { e, r, r2, r3, h, v, d1, d2 };
inline constexpr std::array<GroupElement, 8> kAllElements = {
    GroupElement::e, GroupElement::r,  GroupElement::r2, GroupElement::r3,
    GroupElement::h, GroupElement::v, GroupElement::d1, GroupElement::d2};

struct Cell {
  int c = 0;  // column
  int r = 0;  // row
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Integer matrix [[a, b], [c, d]] mapping (col, row) to (a col + b row, c col + d row).
// d1 is the reflection in the line y = -x, d2 in y = x; the oracle and the
// formula layer both read the convention from here.
struct CellMap {
  int a, b, c, d;
};
CellMap cell_map(GroupElement g);
Cell apply(GroupElement g, Cell p);
GroupElement compose(GroupElement g1, GroupElement g2);  // g1 after g2
GroupElement inverse(GroupElement g);
std::string_view element_name(GroupElement g);

enum class Subgroup : std::uint8_t { trivial, r2, h, v, d1, d2, c4, hv, d1d2, d4 };
inline constexpr std::array<Subgroup, 10> kAllSubgroups = {
    Subgroup::trivial, Subgroup::r2, Subgroup::h,  Subgroup::v,    Subgroup::d1,
    Subgroup::d2,      Subgroup::c4, Subgroup::hv, Subgroup::d1d2, Subgroup::d4};

std::uint8_t element_mask(Subgroup s);
std::vector<GroupElement> elements(Subgroup s);
int order(Subgroup s);
bool contains(Subgroup big, GroupElement g);
bool contains(Subgroup big, Subgroup small);
// The subgroup with exactly this element mask; throws if the mask is not closed.
Subgroup subgroup_from_mask(std::uint8_t mask);
// Smallest subgroup containing g.
Subgroup generated(GroupElement g);
std::string_view subgroup_name(Subgroup s);

// Moebius function of the subgroup lattice, computed recursively:
// mu(G, G) = 1, mu(G, H) = -sum_{G <= K < H} mu(G, K).
int mobius(Subgroup g, Subgroup h);
inline int mobius(Subgroup h) { return mobius(Subgroup::trivial, h); }

}  // namespace polysym

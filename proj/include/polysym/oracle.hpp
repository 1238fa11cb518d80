#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "polysym/census.hpp"
#include "polysym/dihedral.hpp"
#include "polysym/ids.hpp"
#include "polysym/series.hpp"

namespace polysym {

class RefusedScale : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kOracleMaxArea = 14;
inline constexpr int kOracleMaxHalfPerimeter = 12;
inline constexpr int kUnbounded = -1;

// Finite cell set, translated so that min column = min row = 0, cells sorted.
class Polyomino {
 public:
  Polyomino() = default;
  static Polyomino from_cells(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  int area() const { return static_cast<int>(cells_.size()); }
  int width() const { return width_; }
  int height() const { return height_; }
  int half_perimeter() const { return width_ + height_; }
  bool contains(Cell p) const;

  bool is_connected() const;
  bool is_row_convex() const;
  bool is_column_convex() const;
  bool is_convex() const { return is_connected() && is_row_convex() && is_column_convex(); }

  Polyomino transformed(GroupElement g) const;

  friend bool operator==(const Polyomino& a, const Polyomino& b) { return a.cells_ == b.cells_; }
  friend auto operator<=>(const Polyomino& a, const Polyomino& b) { return a.cells_ <=> b.cells_; }

 private:
  std::vector<Cell> cells_;
  int width_ = 0, height_ = 0;
};

// Every convex polyomino (up to translation) with area <= max_area and
// half-perimeter <= max_halfperim, each exactly once. Either bound may be
// kUnbounded, but at least one must be within the practical limits.
void enumerate_convex(int max_area, int max_halfperim,
                      const std::function<void(const Polyomino&)>& visit);

Subgroup stabilizer(const Polyomino& p);
// Least normalized image under the elements of the given subgroup.
Polyomino canonical_form(const Polyomino& p, Subgroup group = Subgroup::d4);

std::vector<CensusRow> oracle_census(CensusBy by, int max);

// Orbit counts per size by canonical representatives (no Burnside).
struct OrbitCount {
  int size;
  long rotation, congruence;
};
std::vector<OrbitCount> direct_orbit_counts(CensusBy by, int max);

// Series of a class by direct summation over enumerated polyominoes. Area is
// bounded by spec.qmax; a t cap or a weighted x+y cap bounds the
// half-perimeter. Marking variables are used when present in spec.
// For the doubly shifted stack classes (E*, A*) only the terms whose
// polyomino area 4a - 2n1 - 2n2 (+1) is at most kOracleMaxArea are complete;
// see doubly_shifted_term_covered.
Series oracle_series(ClassId id, const TruncationSpec& spec);
Series oracle_series(SymClassId id, const TruncationSpec& spec);
Series oracle_series(OrbitId id, const TruncationSpec& spec);

bool doubly_shifted_term_covered(ClassId id, const ExpVec& e);

// Fully symmetric polyominoes (stabilizer D4), in (t, q). Experimental: no
// formula counterpart exists.
Series oracle_fixed_by_all(const TruncationSpec& spec);

}  // namespace polysym

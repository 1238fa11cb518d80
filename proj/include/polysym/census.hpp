#pragma once

#include <string>
#include <vector>

#include "polysym/series.hpp"

namespace polysym {

enum class CensusBy { area, perimeter };

// One row of a symmetry census. Columns r, r2, h_v, d1_d2, hv, d1d2 count
// polyominoes whose stabilizer contains that element or subgroup.
struct CensusRow {
  int size = 0;
  Integer id, r, r2, rotation, h_v, d1_d2, congruence, hv, d1d2, asym;
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

inline constexpr const char* kCensusHeader = "size,id,r,r2,rotation,h_v,d1_d2,congruence,hv,d1d2,asym";

std::string census_csv(const std::vector<CensusRow>& rows);

}  // namespace polysym

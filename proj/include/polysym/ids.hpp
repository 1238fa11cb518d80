#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace polysym {

// Base classes. Marking variables (s, u, v, z, w) are used when present in
// the requested spec: s = leftmost column height (D), u = top row width (TS,
// P1, R, Y2; PS_u marks the width), v = bottom row width (Y1).
enum class ClassId {
  P, P0, PS, PS_u, T, T0, TS, P1, D, C, Y1, Y2, DS, R,
  E1, E2, E3, Eall, A1, A2, A3, Aall,
};

// Symmetry classes: polyominoes fixed by the named element or subgroup.
enum class SymClassId {
  Fr, Fr2, Fr2_even, Fr2_odd, Fv, Fh, Fhv, Fd1, Fd2, Fd1d2, Fd1d2_even, Fd1d2_odd,
};

// Orbit-type series.
enum class OrbitId { rotation, congruence, asym };

using AnyClass = std::variant<ClassId, SymClassId, OrbitId>;

std::string_view class_name(ClassId id);
std::string_view class_name(SymClassId id);
std::string_view class_name(OrbitId id);
std::string class_name(const AnyClass& id);
std::optional<AnyClass> parse_class(std::string_view name);
std::vector<std::string> all_class_names();

}  // namespace polysym

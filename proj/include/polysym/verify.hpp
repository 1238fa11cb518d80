#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polysym/census.hpp"
#include "polysym/ids.hpp"
#include "polysym/series.hpp"

namespace polysym {

// The variables a class is computed in: base classes in (x, y, q) plus their
// marking variables (E and A in (x, z, w, q)); symmetry and orbit classes in
// (t, q). tmax bounds the half-perimeter: x + y for base classes, the x cap
// for E and A, the t cap otherwise. P0 and T0 get a y cap of qmax + 2 when
// tmax is absent.
TruncationSpec class_spec(const AnyClass& id, int qmax, std::optional<int> tmax = std::nullopt);
Series class_series(const AnyClass& id, const TruncationSpec& spec);

// First differing coefficient between two series, in canonical term order.
struct Mismatch {
  std::string series, monomial, expected, got;
};
std::optional<Mismatch> first_difference(const std::string& name, const Series& expected,
                                         const Series& got);

struct CheckResult {
  std::string name;
  std::optional<Mismatch> mismatch;
  std::string error;  // exception text, if the check threw
  double seconds = 0;
  bool ok() const { return !mismatch && error.empty(); }
};

// One named comparison; run returns the first mismatch, if any.
struct Check {
  std::string name;
  std::function<std::optional<Mismatch>()> run;
};
CheckResult run_check(const Check& c);

// Identities computed two independent ways, at the given qmax.
std::vector<Check> dual_route_checks(int qmax);
// Formula series against the enumeration oracle for every base, symmetry and
// orbit class, all terms of area <= max_area (half-perimeter <= max_area + 1).
std::vector<Check> oracle_checks(int max_area);
// Census rows from the formulas against the oracle census.
std::vector<Check> census_checks(CensusBy by, int max);

}  // namespace polysym

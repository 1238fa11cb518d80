#pragma once

#include <functional>
#include <vector>

#include "polysym/census.hpp"
#include "polysym/dihedral.hpp"
#include "polysym/ids.hpp"
#include "polysym/series.hpp"

namespace polysym {

// Series in (t, q) by half-perimeter and area. Without a t cap the
// half-perimeter is bounded by qmax + 1.

// Convex polyominoes at x = y = t.
Series series_C_tq(const TruncationSpec& spec);

// Polyominoes fixed by g.
Series series_fixed(GroupElement g, const TruncationSpec& spec);
// Polyominoes whose stabilizer contains h. D4 has no formula and comes from
// the oracle (experimental).
Series series_fixed_at_least(Subgroup h, const TruncationSpec& spec);

Series series_rotation_type(const TruncationSpec& spec);
Series series_congruence_type(const TruncationSpec& spec);
// Sum over subgroups H of mu(0, H) F_{>=H}; subgroups with mu = 0 are skipped.
Series series_asymmetric(const TruncationSpec& spec);
// C - 2F_d - F_r2 - 2F_v + 2F_d1d2 + 2F_hv.
Series series_asymmetric_expanded(const TruncationSpec& spec);
// Polyominoes whose stabilizer is exactly g, by Moebius inversion over the
// interval [g, D4].
Series series_exactly(Subgroup g, const TruncationSpec& spec);

Series orbit_series(OrbitId id, const TruncationSpec& spec);

// Census from the formulas: by area for sizes 1..max, by
// perimeter for 4, 6, ..., max.
std::vector<CensusRow> formula_census(CensusBy by, int max);

// Worker count from POLYSYM_THREADS (default 1; invalid values throw).
int thread_count();
// Runs the jobs on up to thread_count() threads; results keep job order.
std::vector<Series> run_parallel(const std::vector<std::function<Series()>>& jobs);

}  // namespace polysym

#pragma once

#include "polysym/series.hpp"

namespace polysym {

// Generating series of the base classes by width (x), height (y) and area
// (q). Results live in the given spec, which must contain the listed
// variables; auxiliary variables are handled internally. Classes that allow
// empty rows (P0, T0) need a bound on y: a y cap or a weighted cap using y.

// Partitions: x marks the largest part, y the number of parts.
Series series_P(const TruncationSpec& spec);
Series series_P_double_sum(const TruncationSpec& spec);
Series series_P0(const TruncationSpec& spec);
// Partitions into distinct parts (shifted); the _u variant also marks the
// width by u.
Series series_PS(const TruncationSpec& spec);
Series series_PS_u(const TruncationSpec& spec);

// Stacks, and stacks with empty end rows.
Series series_T0(const TruncationSpec& spec);
Series series_T(const TruncationSpec& spec);

// Numerator polynomials of height-n stacks, in (x, q).
Series poly_Vn(int n, const TruncationSpec& spec);
Series poly_Vn_closed(int n, const TruncationSpec& spec);
// Width/area series of height-n stacks with empty rows, constant 1 included,
// in (x, q): V_n / (xq)_n, and the explicit double sum.
Series series_T0n(int n, const TruncationSpec& spec);
Series series_T0n_sum(int n, const TruncationSpec& spec);

// Bases of shifted stacks and shifted stacks, u marking the top row width.
Series series_P1(const TruncationSpec& spec);
Series series_TS_iter(const TruncationSpec& spec);
Series series_TS_closed(const TruncationSpec& spec);
Series series_TS(const TruncationSpec& spec);

// Directed convex polyominoes, s marking the leftmost column height.
Series series_D(const TruncationSpec& spec);

// Convex polyominoes. series_C evaluates E(1) and E'(1) over dual numbers
// s = 1 + eps; series_C_symbolic keeps s as a variable and applies
// derivative and eval_at_one.
Series series_C(const TruncationSpec& spec);
Series series_C_symbolic(const TruncationSpec& spec);

// Largest useful exponent of v: its cap, the weighted bound over its weight,
// and qmax (every class weight carries at least one q per unit of x or y).
int degree_bound(const TruncationSpec& spec, Var v);

}  // namespace polysym

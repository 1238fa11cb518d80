#pragma once

#include "polysym/ids.hpp"
#include "polysym/series.hpp"

namespace polysym {

// Polynomials in q. Results are truncated by spec (which must contain q).

// Extended Ferrers diagrams of half-perimeter m: closed form and the two
// recurrences.
Series ferrers_Dm(int m, const TruncationSpec& spec);
Series ferrers_Dm_rec_a(int m, const TruncationSpec& spec);
Series ferrers_Dm_rec_b(int m, const TruncationSpec& spec);

// r-symmetric polyominoes of half-perimeter 2m: closed form, the two
// recurrences, and q^{m^2} D_{m-1}(q^{-4}) with D_{m-1} from recurrence (b).
Series poly_a2m(int m, const TruncationSpec& spec);
Series poly_a2m_rec_a(int m, const TruncationSpec& spec);
Series poly_a2m_rec_b(int m, const TruncationSpec& spec);
Series poly_a2m_from_ferrers(int m, const TruncationSpec& spec);

// hv-symmetric polyominoes of half-perimeter n by parity of width and height.
enum class Parity { ee, eo, oe, oo };
Series poly_f(Parity p, int n, const TruncationSpec& spec);
Series poly_f_rec(Parity p, int n, const TruncationSpec& spec);

// Symmetry classes in (t, q). Without a t cap the half-perimeter is bounded
// by qmax + 1, which loses nothing.
Series series_Fr(const TruncationSpec& spec);           // glued stacks
Series series_Fr_square(const TruncationSpec& spec);    // bounding square
Series series_Fv(const TruncationSpec& spec);
Series series_Fhv(const TruncationSpec& spec);
Series series_Fhv_part(Parity p, const TruncationSpec& spec);
Series series_Fd(const TruncationSpec& spec);
Series series_Fd1d2(const TruncationSpec& spec);
Series series_Fd1d2_even(const TruncationSpec& spec);
Series series_Fd1d2_odd(const TruncationSpec& spec);

// r^2-symmetric polyominoes, in (x, y, q) when spec has x and y, otherwise in
// (t, q) with x = y = t.
Series series_Fr2(const TruncationSpec& spec);
Series series_Fr2_even(const TruncationSpec& spec);
Series series_Fr2_odd(const TruncationSpec& spec);
// Even width through 2/(1-y) (D(1/y) - D(1)) - T, dividing exactly by 1 - y.
Series series_Fr2_even_quotient(const TruncationSpec& spec);

// Shifted directed convex polyominoes, in (x, y, z, q); z marks the length of
// the diagonal source. Y1 also carries v (bottom row width) when spec has v.
Series series_Y1(const TruncationSpec& spec);
Series series_Y1_closed(const TruncationSpec& spec);
// The bottom-width directed convex series D(v, x, y, q) in (v, x, y, q).
Series series_D_bottom(const TruncationSpec& spec);
// Shifted stacks whose North-East corner is not on the top row, in (u,x,y,q).
Series series_R(const TruncationSpec& spec);
// with_empty_stack selects whether the stack above the security line may be
// empty.
Series series_Y2(const TruncationSpec& spec, bool with_empty_stack = true);
Series series_DS(const TruncationSpec& spec);

// Doubly shifted stacks in (x, z, w, q): z and w mark the two diagonals.
// The _iter variants solve the functional equations in u (top row width) and
// return the u = 1 value.
Series series_E1(const TruncationSpec& spec);
Series series_E1_iter(const TruncationSpec& spec);
Series series_E2(const TruncationSpec& spec);
Series series_E3(const TruncationSpec& spec);
Series series_E(const TruncationSpec& spec);
Series series_A1(const TruncationSpec& spec);
Series series_A1_iter(const TruncationSpec& spec);
Series series_A2(const TruncationSpec& spec);
Series series_A3(const TruncationSpec& spec);
Series series_A(const TruncationSpec& spec);

Series symmetry_series(SymClassId id, const TruncationSpec& spec);

// Largest half-perimeter a (t, q) spec can hold.
int halfperimeter_limit(const TruncationSpec& spec);

}  // namespace polysym

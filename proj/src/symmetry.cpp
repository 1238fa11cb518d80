#include "polysym/symmetry.hpp"

#include <algorithm>
#include <climits>

#include "polysym/classes.hpp"
#include "polysym/qfun.hpp"

namespace polysym {

namespace {

void require(const TruncationSpec& spec, VarSet vars, const char* what) {
  if (!spec.vars().includes(vars))
    throw SeriesError(ErrorKind::SpecMismatch, std::string(what) + " needs more variables than " +
                                                   spec.describe());
}

TruncationSpec q_only(int qmax) { return TruncationSpec(qmax, VarSet{Var::q}); }

Series qpow(int k, const TruncationSpec& spec, const Integer& c = 1) {
  return Series::monomial(c, mono(Var::q, k), spec);
}

Series one(const TruncationSpec& spec) { return Series::constant(1, spec); }

// The truncation spec with v active and neither capped nor weighted.
TruncationSpec free_of(const TruncationSpec& spec, Var v) {
  TruncationSpec s = spec.with_var(v).without_cap(v);
  if (s.weighted_bound() && s.weight(v) > 0) {
    auto w = s.weights();
    w[idx(v)] = 0;
    int bound = *s.weighted_bound();
    s = s.without_weighted();
    if (std::any_of(w.begin(), w.end(), [](int k) { return k > 0; })) s = s.with_weighted(w, bound);
  }
  return s;
}

// Exchanges the roles of a and b: activity, caps and weights.
TruncationSpec swapped(const TruncationSpec& spec, Var a, Var b) {
  VarSet vars;
  for (Var v : kAllVars) {
    Var from = v == a ? b : v == b ? a : v;
    if (spec.has(from)) vars = vars.with(v);
  }
  TruncationSpec out(spec.qmax(), vars.with(Var::q));
  for (Var v : kAllVars) {
    if (v == Var::q) continue;
    Var from = v == a ? b : v == b ? a : v;
    if (auto c = spec.cap(from)) out = out.with_cap(v, *c);
  }
  if (auto bound = spec.weighted_bound()) {
    auto w = spec.weights();
    std::swap(w[idx(a)], w[idx(b)]);
    out = out.with_weighted(w, *bound);
  }
  return out;
}

Series swap_vars(const Series& s, Var a, Var b, const TruncationSpec& out) {
  return substitute(s, {{a, Image{1, mono(b, 1)}}, {b, Image{1, mono(a, 1)}}}, out);
}

Series rename(const Series& s, Var from, Var to, const TruncationSpec& out) {
  return substitute(s, {{from, Image{1, mono(to, 1)}}}, out);
}

// Bound on the exponent of v implied by its cap and the weighted cap.
int var_limit(const TruncationSpec& spec, Var v) {
  int b = INT_MAX;
  if (auto c = spec.cap(v)) b = *c;
  if (auto bound = spec.weighted_bound(); bound && spec.weight(v) > 0)
    b = std::min(b, *bound / spec.weight(v));
  return b;
}

TruncationSpec tq(int qmax, int tcap) {
  return TruncationSpec(std::max(qmax, 0), VarSet{Var::t, Var::q}).with_cap(Var::t, std::max(tcap, 0));
}

// Specs for sources whose terms land on t^{sum w_v e_v + shift}. The weighted
// cap keeps exactly the terms that can reach t^{tmax}.
TruncationSpec source_spec(VarSet vars, int qmax, std::initializer_list<std::pair<Var, int>> tw,
                           int tbound) {
  TruncationSpec s(std::max(qmax, 0), vars.with(Var::q));
  return s.with_weighted(tw, std::max(tbound, 0));
}

// Divides by t^k after substituting into a spec whose t cap was raised by k.
Series lower_t(const Series& a, int k, const TruncationSpec& spec) {
  return restrict_to(shift(a, mono(Var::t, -k)), spec);
}

}  // namespace

int halfperimeter_limit(const TruncationSpec& spec) {
  require(spec, {Var::t, Var::q}, "half-perimeter series");
  return std::min(var_limit(spec, Var::t), spec.qmax() + 1);
}

// ----------------------------------------------------- Ferrers and a_{2m}

Series ferrers_Dm(int m, const TruncationSpec& spec) {
  if (m < 0) throw SeriesError(ErrorKind::InvalidExponent, "D_m needs m >= 0");
  if (m == 0) return one(spec);
  Series r(spec);
  for (int i = 0; i <= m - 1; ++i) r += shift(qbinomial(m - 1, i, spec), mono(Var::q, i));
  return r;
}

Series ferrers_Dm_rec_a(int m, const TruncationSpec& spec) {
  if (m < 0) throw SeriesError(ErrorKind::InvalidExponent, "D_m needs m >= 0");
  std::vector<Series> d{one(spec)};
  Series partial(spec);  // D_0 + ... + D_{k-2}
  for (int k = 1; k <= m; ++k) {
    if (k >= 2) partial += d[k - 2];
    d.push_back(d[k - 1] + shift(partial, mono(Var::q, k - 1)));
  }
  return d[m];
}

Series ferrers_Dm_rec_b(int m, const TruncationSpec& spec) {
  if (m < 0) throw SeriesError(ErrorKind::InvalidExponent, "D_m needs m >= 0");
  Series prev = one(spec), cur = one(spec);
  const Series one_q = one(spec) + qpow(1, spec);
  for (int k = 2; k <= m; ++k) {
    Series next = one_q * cur + (qpow(k - 1, spec) - qpow(1, spec)) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Series poly_a2m(int m, const TruncationSpec& spec) {
  if (m < 0) throw SeriesError(ErrorKind::InvalidExponent, "a_2m needs m >= 0");
  if (m == 0) return one(spec);
  if (m == 1) return qpow(1, spec);
  Series r(spec);
  for (int i = 0; i <= m - 2; ++i)
    r += qbinomial_substituted(m - 2, i, mono(Var::q, -4), spec, mono(Var::q, m * m - 4 * i));
  return r;
}

Series poly_a2m_rec_a(int m, const TruncationSpec& spec) {
  if (m < 0) throw SeriesError(ErrorKind::InvalidExponent, "a_2m needs m >= 0");
  std::vector<Series> a{one(spec)};
  for (int k = 1; k <= m; ++k) {
    Series r = shift(a[k - 1], mono(Var::q, 2 * k - 1));
    for (int j = 1; j <= k - 2; ++j)
      r += shift(a[j], mono(Var::q, (k - 2) * (k - 2) + 4 - j * j));
    a.push_back(std::move(r));
  }
  return a[m];
}

Series poly_a2m_rec_b(int m, const TruncationSpec& spec) {
  if (m < 0) throw SeriesError(ErrorKind::InvalidExponent, "a_2m needs m >= 0");
  std::vector<Series> a{one(spec), qpow(1, spec), qpow(4, spec)};
  for (int k = 3; k <= m; ++k) {
    Series r = (qpow(2 * k - 5, spec) + qpow(2 * k - 1, spec)) * a[k - 1] +
               (qpow(4, spec) - qpow(4 * k - 8, spec)) * a[k - 2];
    a.push_back(std::move(r));
  }
  return a[m];
}

Series poly_a2m_from_ferrers(int m, const TruncationSpec& spec) {
  if (m < 0) throw SeriesError(ErrorKind::InvalidExponent, "a_2m needs m >= 0");
  if (m == 0) return one(spec);
  // D_{m-1} has degree at most (m-1)^2/4, so this spec holds it exactly.
  Series d = ferrers_Dm_rec_b(m - 1, q_only((m - 1) * (m - 1) / 4 + 1));
  SeriesBuilder b(spec);
  for (const Term& t : d.terms()) {
    int e = m * m - 4 * t.exp[Var::q];
    if (e < 0) throw SeriesError(ErrorKind::NegativeFinalExponent, "a_2m below q^0");
    b.add(mono(Var::q, e), t.coeff);
  }
  return std::move(b).build();
}

// ------------------------------------------------------- hv polynomials

namespace {

Series f_oo_closed(int n, const TruncationSpec& spec) {
  if (n % 2 != 0 || n < 2) return Series(spec);
  int h = (n - 2) / 2;
  Series r(spec);
  for (int i = 0; i <= h; ++i)
    r += qbinomial_substituted(h, i, mono(Var::q, 4), spec, mono(Var::q, n - 1));
  return r;
}

Series f_eo_closed(int n, const TruncationSpec& spec) {
  if (n % 2 == 0 || n < 3) return Series(spec);
  int h = (n - 3) / 2;
  Series r(spec);
  for (int i = 0; i <= h; ++i)
    r += qbinomial_substituted(h, i, mono(Var::q, 4), spec, mono(Var::q, n - 1 + 2 * i));
  return r;
}

Series f_oo_rec(int n, const TruncationSpec& spec) {
  std::vector<Series> f{Series(spec), Series(spec), qpow(1, spec), Series(spec),
                        qpow(3, spec, 2)};
  for (int k = 5; k <= n; ++k)
    f.push_back(shift(f[k - 2], mono(Var::q, 2), 2) -
                (qpow(4, spec) - qpow(2 * k - 4, spec)) * f[k - 4]);
  return f[n];
}

Series f_eo_rec(int n, const TruncationSpec& spec) {
  std::vector<Series> f{Series(spec), Series(spec), Series(spec), qpow(2, spec), Series(spec)};
  for (int k = 5; k <= n; ++k)
    f.push_back((qpow(2, spec) + qpow(4, spec)) * f[k - 2] -
                (qpow(6, spec) - qpow(2 * k - 4, spec)) * f[k - 4]);
  return f[n];
}

}  // namespace

Series poly_f(Parity p, int n, const TruncationSpec& spec) {
  if (n < 1) throw SeriesError(ErrorKind::InvalidExponent, "f_n needs n >= 1");
  switch (p) {
    case Parity::oo: return f_oo_closed(n, spec);
    case Parity::eo:
    case Parity::oe: return f_eo_closed(n, spec);
    case Parity::ee:
      return n < 3 ? Series(spec) : shift(f_oo_closed(n - 2, spec), mono(Var::q, n - 1));
  }
  return Series(spec);
}

Series poly_f_rec(Parity p, int n, const TruncationSpec& spec) {
  if (n < 1) throw SeriesError(ErrorKind::InvalidExponent, "f_n needs n >= 1");
  switch (p) {
    case Parity::oo: return f_oo_rec(n, spec);
    case Parity::eo:
    case Parity::oe: return f_eo_rec(n, spec);
    case Parity::ee:
      return n < 3 ? Series(spec) : shift(f_oo_rec(n - 2, spec), mono(Var::q, n - 1));
  }
  return Series(spec);
}

// ------------------------------------------------------------ r-symmetry

Series series_Fr(const TruncationSpec& spec) {
  const int N = spec.qmax(), T = halfperimeter_limit(spec);
  SeriesBuilder b(spec);
  for (int m = 1; m * m <= N && 2 * m <= T; ++m) {
    // Square of side m with the same stack of height m glued on each side.
    TruncationSpec xs = TruncationSpec((N - m * m) / 4, VarSet{Var::x, Var::q})
                            .with_cap(Var::x, (T - 2 * m) / 4);
    Series stack = series_T0n(m, xs);
    for (const Term& t : stack.terms())
      b.add(mono(Var::t, 2 * m + 4 * t.exp[Var::x], Var::q, m * m + 4 * t.exp[Var::q]), t.coeff);
  }
  return std::move(b).build();
}

Series series_Fr_square(const TruncationSpec& spec) {
  const int N = spec.qmax(), T = halfperimeter_limit(spec);
  SeriesBuilder b(spec);
  for (int m = 1; 2 * m <= T; ++m) {
    Series a = poly_a2m(m, q_only(N));
    for (const Term& t : a.terms())
      b.add(mono(Var::t, 2 * m, Var::q, t.exp[Var::q]), t.coeff);
  }
  return std::move(b).build();
}

// ----------------------------------------------------------- r^2-symmetry

namespace {

struct XYBounds {
  int x, y;        // caps (INT_MAX when absent)
  int wx, wy, b;   // weighted cap wx X + wy Y <= b; b < 0 when absent
};

XYBounds xy_bounds(const TruncationSpec& spec) {
  XYBounds r{spec.cap(Var::x).value_or(INT_MAX), spec.cap(Var::y).value_or(INT_MAX), 0, 0, -1};
  if (auto bound = spec.weighted_bound()) {
    r.wx = spec.weight(Var::x);
    r.wy = spec.weight(Var::y);
    r.b = *bound;
  }
  return r;
}

// Source spec for series whose terms x^a y^b land on x^{2a - dx} y^{>= b}.
TruncationSpec xy_source(VarSet vars, int qmax, const XYBounds& o, int dx) {
  TruncationSpec s(qmax, vars.with(Var::q));
  if (o.x != INT_MAX) s = s.with_cap(Var::x, (o.x + dx) / 2);
  if (o.y != INT_MAX) s = s.with_cap(Var::y, o.y);
  if (o.b >= 0 && (o.wx > 0 || o.wy > 0))
    s = s.with_weighted({{Var::x, 2 * o.wx}, {Var::y, o.wy}}, o.b + dx * o.wx);
  return s;
}

// The output spec with room for one more power of x.
TruncationSpec widen_x(const TruncationSpec& spec, const XYBounds& o) {
  TruncationSpec w = spec;
  if (o.x != INT_MAX) w = w.with_cap(Var::x, o.x + 1);
  if (o.b >= 0 && o.wx > 0) {
    w = w.without_weighted().with_weighted({{Var::x, o.wx}, {Var::y, o.wy}}, o.b + o.wx);
  }
  return w;
}

const ImageMap kDoubleXYQ = {{Var::x, Image{1, mono(Var::x, 2)}},
                             {Var::y, Image{1, mono(Var::y, 2)}},
                             {Var::q, Image{1, mono(Var::q, 2)}}};

Series fr2_even_xy(const TruncationSpec& spec) {
  const int N = spec.qmax();
  const XYBounds o = xy_bounds(spec);
  Series d = series_D(xy_source({Var::s, Var::x, Var::y}, N / 2, o, 0));
  // s^k -> (1 + y + ... + y^{k-1}) / y^k: the k glueing positions.
  auto positions = [](int k) {
    std::vector<Term> r;
    for (int j = 0; j < k; ++j) r.push_back(Term{mono(Var::y, j - k), 1});
    if (k == 0) r.push_back(Term{ExpVec{}, 1});
    return r;
  };
  Series glued = substitute_graded(d, Var::s, positions, kDoubleXYQ, spec);
  Series t = series_T(xy_source({Var::x, Var::y}, N / 2, o, 0));
  Series stacks = substitute(t, {{Var::x, Image{1, mono(Var::x, 2)}},
                                 {Var::q, Image{1, mono(Var::q, 2)}}},
                             spec);
  return Integer(2) * glued - stacks;
}

Series fr2_odd_xy(const TruncationSpec& spec) {
  const int N = spec.qmax();
  const XYBounds o = xy_bounds(spec);
  const TruncationSpec wide = widen_x(spec, o);
  Series d = series_D(xy_source({Var::s, Var::x, Var::y}, N, o, 1));
  ImageMap dmap = kDoubleXYQ;
  dmap.push_back({Var::s, Image{1, ExpVec{{Var::y, -1}, {Var::q, -1}}}});
  Series central = substitute(d, dmap, wide);
  Series t = series_T(xy_source({Var::x, Var::y}, N, o, 1));
  Series stacks = substitute(t, {{Var::x, Image{1, mono(Var::x, 2)}},
                                 {Var::y, Image{1, ExpVec{{Var::y, 1}, {Var::q, -1}}}},
                                 {Var::q, Image{1, mono(Var::q, 2)}}},
                             wide);
  Series r = Integer(2) * central - stacks;
  return restrict_to(shift(r, mono(Var::x, -1)), spec);
}

// Evaluates an (x, y, q) class at x = y = t.
Series on_diagonal(Series (*f)(const TruncationSpec&), const TruncationSpec& spec) {
  const int T = halfperimeter_limit(spec);
  TruncationSpec xy = TruncationSpec(spec.qmax(), VarSet{Var::x, Var::y, Var::q})
                          .with_weighted({{Var::x, 1}, {Var::y, 1}}, T);
  return substitute(f(xy), {{Var::x, Image{1, mono(Var::t, 1)}}, {Var::y, Image{1, mono(Var::t, 1)}}},
                    spec);
}

bool has_xy(const TruncationSpec& spec) { return spec.has(Var::x) && spec.has(Var::y); }

}  // namespace

Series series_Fr2_even(const TruncationSpec& spec) {
  if (has_xy(spec)) return fr2_even_xy(spec);
  return on_diagonal(fr2_even_xy, spec);
}

Series series_Fr2_odd(const TruncationSpec& spec) {
  if (has_xy(spec)) return fr2_odd_xy(spec);
  return on_diagonal(fr2_odd_xy, spec);
}

Series series_Fr2(const TruncationSpec& spec) {
  return series_Fr2_even(spec) + series_Fr2_odd(spec);
}

Series series_Fr2_even_quotient(const TruncationSpec& spec) {
  require(spec, {Var::x, Var::y, Var::q}, "F_r2");
  const int N = spec.qmax();
  const XYBounds o = xy_bounds(spec);
  // Dividing by 1 - y mixes y-degrees, so work with every y-degree the
  // dividend can reach and no weighted cap on y.
  int xmax = std::min({N, o.x, o.b >= 0 && o.wx > 0 ? o.b / o.wx : INT_MAX});
  int ymax = std::min({N, o.y, o.b >= 0 && o.wy > 0 ? o.b / o.wy : INT_MAX});
  TruncationSpec work = TruncationSpec(N, VarSet{Var::x, Var::y, Var::q})
                            .with_cap(Var::x, xmax)
                            .with_cap(Var::y, 2 * ymax);
  TruncationSpec dsrc = TruncationSpec(N / 2, VarSet{Var::s, Var::x, Var::y, Var::q})
                            .with_cap(Var::x, xmax / 2)
                            .with_cap(Var::y, ymax);
  Series d = series_D(dsrc);
  ImageMap at_inv_y = kDoubleXYQ;
  at_inv_y.push_back({Var::s, Image{1, mono(Var::y, -1)}});
  ImageMap at_one = kDoubleXYQ;
  at_one.push_back({Var::s, Image{1, ExpVec{}}});
  Series diff = substitute(d, at_inv_y, work) - substitute(d, at_one, work);
  Series one_minus_y = one(work) - Series::monomial(1, mono(Var::y, 1), work);
  Series glued = divide_exact(diff, one_minus_y);
  Series t = series_T(TruncationSpec(N / 2, VarSet{Var::x, Var::y, Var::q})
                          .with_cap(Var::x, xmax / 2)
                          .with_cap(Var::y, ymax));
  Series stacks = substitute(t, {{Var::x, Image{1, mono(Var::x, 2)}},
                                 {Var::q, Image{1, mono(Var::q, 2)}}},
                             work);
  return restrict_to(Integer(2) * glued - stacks, spec);
}

// ------------------------------------------------------------ v-symmetry

Series series_Fv(const TruncationSpec& spec) {
  const int N = spec.qmax(), T = halfperimeter_limit(spec);
  const TruncationSpec out = tq(N, T), wide = tq(N, T + 1);
  // Even width: the right half doubled.
  Series te = series_T(source_spec({Var::x, Var::y}, N / 2, {{Var::x, 2}, {Var::y, 1}}, T));
  Series even = substitute(te, {{Var::x, Image{1, mono(Var::t, 2)}},
                                {Var::y, Image{1, mono(Var::t, 1)}},
                                {Var::q, Image{1, mono(Var::q, 2)}}},
                           out);
  // Odd width: the central column is shared.
  Series to = series_T(source_spec({Var::x, Var::y}, N, {{Var::x, 2}, {Var::y, 1}}, T + 1));
  Series odd = substitute(to, {{Var::x, Image{1, mono(Var::t, 2)}},
                               {Var::y, Image{1, ExpVec{{Var::t, 1}, {Var::q, -1}}}},
                               {Var::q, Image{1, mono(Var::q, 2)}}},
                          wide);
  return restrict_to(even + lower_t(odd, 1, out), spec);
}

// ----------------------------------------------------------- hv-symmetry

Series series_Fhv_part(Parity p, const TruncationSpec& spec) {
  const int N = spec.qmax(), T = halfperimeter_limit(spec);
  const TruncationSpec out = tq(N, T);
  // P term x^a y^b q^c becomes t^{2a+2b-k} q^{4c - 2a [odd height] - 2b [odd width] + [oo]}.
  int k = 0, qsrc = N / 4;
  ExpVec xi = mono(Var::t, 2), yi = mono(Var::t, 2);
  switch (p) {
    case Parity::ee: break;
    case Parity::eo:
    case Parity::oe:
      k = 1;
      qsrc = N / 2;
      xi += mono(Var::q, -2);
      break;
    case Parity::oo:
      k = 2;
      qsrc = (N + 1) / 2;
      xi += mono(Var::q, -2);
      yi += mono(Var::q, -2);
      break;
  }
  Series src = series_P(source_spec({Var::x, Var::y}, qsrc, {{Var::x, 2}, {Var::y, 2}}, T + k));
  Series r = substitute(src, {{Var::x, Image{1, xi}}, {Var::y, Image{1, yi}},
                              {Var::q, Image{1, mono(Var::q, 4)}}},
                        tq(N + (p == Parity::oo ? 0 : 0), T + k));
  if (p == Parity::oo) r = shift(r, mono(Var::q, 1));
  return restrict_to(lower_t(r, k, out), spec);
}

Series series_Fhv(const TruncationSpec& spec) {
  return series_Fhv_part(Parity::ee, spec) + Integer(2) * series_Fhv_part(Parity::eo, spec) +
         series_Fhv_part(Parity::oo, spec);
}

// -------------------------------------------------- shifted directed convex

Series series_D_bottom(const TruncationSpec& spec) {
  require(spec, {Var::v, Var::x, Var::y, Var::q}, "bottom-width D");
  // Reflecting in the main diagonal turns the leftmost column into the bottom
  // row and exchanges width and height.
  TruncationSpec src = swapped(swapped(spec, Var::x, Var::y), Var::v, Var::s);
  for (Var v : kAllVars)
    if (src.has(v) && v != Var::s && v != Var::x && v != Var::y && v != Var::q)
      src = src.without_var(v);
  Series d = series_D(src);
  return substitute(d, {{Var::s, Image{1, mono(Var::v, 1)}},
                        {Var::x, Image{1, mono(Var::y, 1)}},
                        {Var::y, Image{1, mono(Var::x, 1)}}},
                    spec);
}

namespace {

TruncationSpec without(TruncationSpec s, std::initializer_list<Var> vs) {
  for (Var v : vs)
    if (s.has(v)) s = s.without_var(v);
  return s;
}

// Y1(1) by the sum over the bottom width of the directed part.
Series y1_sum(const TruncationSpec& spec) {
  const TruncationSpec base = without(spec, {Var::v});
  Series dbot = series_D_bottom(free_of(without(base, {Var::z}), Var::v));
  SeriesBuilder b(base);
  const int xmax = degree_bound(base, Var::x);
  for (int m = 1; m <= xmax; ++m) {
    Series dm = restrict_to(coeff_extract(dbot, Var::v, m), base);
    if (dm.is_zero()) continue;
    Series rows = qpochhammer(-1, mono(Var::y, 1) + mono(Var::z, 1, Var::q, 1), m - 1, base);
    b.add(shift(dm * rows, mono(Var::z, 1)));
  }
  return std::move(b).build();
}

}  // namespace

Series series_Y1(const TruncationSpec& spec) {
  require(spec, {Var::x, Var::y, Var::z, Var::q}, "Y1");
  Series at_one = y1_sum(spec);
  if (!spec.has(Var::v)) return at_one;
  // Y1(v) = z D(v) + yz/(1 - vq) (vq Y1(1) - Y1(vq)); each pass adds a row.
  const TruncationSpec w = free_of(spec, Var::v);
  const Series y1 = restrict_to(at_one, w);
  const Series zd_w = shift(restrict_to(series_D_bottom(without(w, {Var::z})), w), mono(Var::z, 1));
  const Series k = shift(qpochhammer_inverse(1, mono(Var::v, 1, Var::q, 1), 1, w),
                         mono(Var::y, 1, Var::z, 1));
  const Series vq = Series::monomial(1, mono(Var::v, 1, Var::q, 1), w);
  Series cur = zd_w;
  for (int iter = 0;; ++iter) {
    Series at_vq = substitute(cur, {{Var::v, Image{1, mono(Var::v, 1, Var::q, 1)}}}, w);
    Series next = zd_w + k * (vq * y1 - at_vq);
    if (next == cur) break;
    cur = std::move(next);
    if (iter > spec.qmax() + 2) throw SeriesError(ErrorKind::Unsupported, "Y1 iteration did not settle");
  }
  return restrict_to(cur, spec);
}

Series series_Y1_closed(const TruncationSpec& spec) {
  require(spec, {Var::x, Var::y, Var::z, Var::q}, "Y1");
  const TruncationSpec base = without(spec, {Var::v});
  const int ymax = degree_bound(base, Var::y);
  const TruncationSpec w = base.with_cap(Var::y, ymax);
  Series dbot = series_D_bottom(free_of(without(w, {Var::z}), Var::v));
  const ExpVec myz = mono(Var::y, 1, Var::z, 1);
  Series num(w), den = one(w);
  for (int n = 0; n <= ymax; ++n) {
    Series dq = n == 0 ? eval_at_one(dbot, Var::v)
                       : substitute(dbot, {{Var::v, Image{1, mono(Var::q, n)}}},
                                    without(dbot.spec(), {Var::v}));
    Integer sign = n % 2 ? -1 : 1;
    Series inv = qpochhammer_inverse(1, mono(Var::q, 1), n, w);
    num += shift(restrict_to(dq, w) * inv, n * myz + mono(Var::z, 1), sign);
    if (n >= 1) den += shift(inv, n * myz + mono(Var::q, n), sign);
  }
  return restrict_to(num * invert(den), spec);
}

Series series_R(const TruncationSpec& spec) {
  require(spec, {Var::u, Var::x, Var::y, Var::q}, "R");
  return series_TS(spec) - series_PS_u(spec);
}

Series series_Y2(const TruncationSpec& spec, bool with_empty_stack) {
  require(spec, {Var::x, Var::y, Var::z, Var::q}, "Y2");
  const int N = spec.qmax();
  // R's rows each carry one diagonal cell: y -> yz.
  TruncationSpec rs(N, VarSet{Var::u, Var::x, Var::y, Var::q});
  if (auto c = spec.cap(Var::x)) rs = rs.with_cap(Var::x, *c);
  int ycap = std::min(spec.cap(Var::y).value_or(N), spec.cap(Var::z).value_or(N));
  rs = rs.with_cap(Var::y, ycap);
  if (auto b = spec.weighted_bound())
    rs = rs.with_weighted({{Var::x, spec.weight(Var::x)},
                           {Var::y, spec.weight(Var::y) + spec.weight(Var::z)}},
                          *b);
  Series r = series_R(rs);
  const TruncationSpec stack_spec = TruncationSpec(N, VarSet{Var::x, Var::q})
                                        .with_cap(Var::x, degree_bound(spec, Var::y));
  SeriesBuilder b(spec);
  const int umax = degree_bound(rs, Var::x);
  for (int m = 1; m <= umax; ++m) {
    Series rm = coeff_extract(r, Var::u, m);
    if (rm.is_zero()) continue;
    Series low = substitute(rm, {{Var::y, Image{1, mono(Var::y, 1, Var::z, 1)}}}, spec);
    Series stack = series_T0n(m, stack_spec);
    if (!with_empty_stack) stack -= one(stack_spec);
    b.add(low * rename(stack, Var::x, Var::y, spec));
  }
  return std::move(b).build();
}

Series series_DS(const TruncationSpec& spec) {
  require(spec, {Var::x, Var::y, Var::z, Var::q}, "D_S");
  const TruncationSpec base = without(spec, {Var::u, Var::v});
  return restrict_to(series_Y1(base) + series_Y2(base), spec);
}

// ------------------------------------------------------------ d-symmetry

Series series_Fd(const TruncationSpec& spec) {
  const int N = spec.qmax(), T = halfperimeter_limit(spec);
  // Width m, height n, diagonal k: half-perimeter 2(m + n - k) >= 2 max(m, n)
  // and area 2a - k with k <= min(m, n).
  const int side = T / 2;
  const int amax = std::min(N, (N + side) / 2);
  TruncationSpec ds = TruncationSpec(amax, VarSet{Var::x, Var::y, Var::z, Var::q})
                          .with_cap(Var::x, side)
                          .with_cap(Var::y, side)
                          .with_cap(Var::z, side);
  Series s = series_DS(ds);
  return restrict_to(substitute(s, {{Var::x, Image{1, mono(Var::t, 2)}},
                                    {Var::y, Image{1, mono(Var::t, 2)}},
                                    {Var::z, Image{1, ExpVec{{Var::t, -2}, {Var::q, -1}}}},
                                    {Var::q, Image{1, mono(Var::q, 2)}}},
                                tq(N, T)),
                     spec);
}

// ---------------------------------------------------- doubly shifted stacks

namespace {

// T_{S,m}(x, z, q) for every m, each in spec.
std::vector<Series> shifted_stack_slices(const TruncationSpec& spec) {
  const int N = spec.qmax();
  TruncationSpec ts(N, VarSet{Var::u, Var::x, Var::y, Var::q});
  if (auto c = spec.cap(Var::x)) ts = ts.with_cap(Var::x, *c);
  ts = ts.with_cap(Var::y, std::min(N, spec.cap(Var::z).value_or(N)));
  Series s = series_TS(ts);
  std::vector<Series> out{Series(spec)};
  for (int m = 1; m <= degree_bound(ts, Var::x); ++m)
    out.push_back(rename(coeff_extract(s, Var::u, m), Var::y, Var::z, spec));
  return out;
}

Series rows_on_diagonal(Var d, int n, const TruncationSpec& spec) {
  return qpochhammer(-1, mono(d, 1, Var::q, 1), n, spec);
}

Series with_diagonals_swapped(Series (*f)(const TruncationSpec&), const TruncationSpec& spec) {
  return swap_vars(f(swapped(spec, Var::z, Var::w)), Var::z, Var::w, spec);
}

// Diagonal shared by both sides (E3, A3): x^m z w q^{lead m} (-zq)_{m-1} (-wq)_{m-1}.
Series both_sides(const TruncationSpec& spec, int lead) {
  SeriesBuilder b(spec);
  for (int m = 1; m <= degree_bound(spec, Var::x); ++m)
    b.add(shift(rows_on_diagonal(Var::z, m - 1, spec) * rows_on_diagonal(Var::w, m - 1, spec),
                mono(Var::x, m, Var::z, 1) + mono(Var::w, 1, Var::q, lead * m)));
  return std::move(b).build();
}

void require_zw(const TruncationSpec& spec, const char* what) {
  require(spec, {Var::x, Var::z, Var::w, Var::q}, what);
}

// Solves F(u) = base(u) + w/(1 - uq) (uq F(1) - F(uq)) by iteration, in (u,x,z,w,q).
Series solve_diagonal_equation(const Series& base, const TruncationSpec& w) {
  const Series k = shift(qpochhammer_inverse(1, mono(Var::u, 1, Var::q, 1), 1, w), mono(Var::w, 1));
  const Series uq = Series::monomial(1, mono(Var::u, 1, Var::q, 1), w);
  Series cur = base;
  for (int iter = 0;; ++iter) {
    Series at_one = restrict_to(eval_at_one(cur, Var::u), w);
    Series at_uq = substitute(cur, {{Var::u, Image{1, mono(Var::u, 1, Var::q, 1)}}}, w);
    Series next = base + k * (uq * at_one - at_uq);
    if (next == cur) return cur;
    cur = std::move(next);
    if (iter > 2 * w.qmax() + 4)
      throw SeriesError(ErrorKind::Unsupported, "diagonal iteration did not settle");
  }
}

// T_S(u, x, z, q) in the working spec.
Series shifted_stacks_u(const TruncationSpec& w) {
  TruncationSpec ts = free_of(TruncationSpec(w.qmax(), VarSet{Var::u, Var::x, Var::y, Var::q}), Var::u);
  if (auto c = w.cap(Var::x)) ts = ts.with_cap(Var::x, *c);
  ts = ts.with_cap(Var::y, std::min(w.qmax(), w.cap(Var::z).value_or(w.qmax())));
  return rename(series_TS(ts), Var::y, Var::z, w);
}

}  // namespace

Series series_E1(const TruncationSpec& spec) {
  require_zw(spec, "E1");
  auto ts = shifted_stack_slices(spec);
  SeriesBuilder b(spec);
  // Above the security line: a non-empty shifted partition with parts at most m.
  for (std::size_t m = 1; m < ts.size(); ++m)
    if (!ts[m].is_zero())
      b.add(ts[m] * (rows_on_diagonal(Var::w, static_cast<int>(m), spec) - one(spec)));
  return std::move(b).build();
}

Series series_E1_iter(const TruncationSpec& spec) {
  require_zw(spec, "E1");
  const TruncationSpec w = free_of(spec, Var::u);
  const Series ts = shifted_stacks_u(w);
  const Series ts1 = restrict_to(eval_at_one(ts, Var::u), w);
  const Series ts_uq = substitute(ts, {{Var::u, Image{1, mono(Var::u, 1, Var::q, 1)}}}, w);
  const Series lead = shift(qpochhammer_inverse(1, mono(Var::u, 1, Var::q, 1), 1, w),
                            mono(Var::u, 1, Var::q, 1) + mono(Var::w, 1));
  Series e1 = solve_diagonal_equation(lead * (ts1 - ts_uq), w);
  return restrict_to(eval_at_one(e1, Var::u), spec.has(Var::u) ? spec.without_var(Var::u) : spec);
}

Series series_E2(const TruncationSpec& spec) {
  require_zw(spec, "E2");
  return with_diagonals_swapped(series_E1, spec);
}

Series series_E3(const TruncationSpec& spec) {
  require_zw(spec, "E3");
  return both_sides(spec, 2);
}

Series series_E(const TruncationSpec& spec) {
  return series_E1(spec) + series_E2(spec) - series_E3(spec);
}

Series series_A1(const TruncationSpec& spec) {
  require_zw(spec, "A1");
  auto ts = shifted_stack_slices(spec);
  SeriesBuilder b(spec);
  // The West cell lies on both diagonals, hence the leading w.
  for (std::size_t m = 1; m < ts.size(); ++m)
    if (!ts[m].is_zero())
      b.add(shift(ts[m] * rows_on_diagonal(Var::w, static_cast<int>(m) - 1, spec), mono(Var::w, 1)));
  return std::move(b).build();
}

Series series_A1_iter(const TruncationSpec& spec) {
  require_zw(spec, "A1");
  const TruncationSpec w = free_of(spec, Var::u);
  const Series base = shift(shifted_stacks_u(w), mono(Var::w, 1));
  Series a1 = solve_diagonal_equation(base, w);
  return restrict_to(eval_at_one(a1, Var::u), spec.has(Var::u) ? spec.without_var(Var::u) : spec);
}

Series series_A2(const TruncationSpec& spec) {
  require_zw(spec, "A2");
  return with_diagonals_swapped(series_A1, spec);
}

Series series_A3(const TruncationSpec& spec) {
  require_zw(spec, "A3");
  return both_sides(spec, 1);
}

Series series_A(const TruncationSpec& spec) {
  return series_A1(spec) + series_A2(spec) - series_A3(spec);
}

// ----------------------------------------------------------- d1d2-symmetry

namespace {

const ImageMap kQuarter = {{Var::x, Image{1, mono(Var::t, 4)}},
                           {Var::z, Image{1, mono(Var::q, -2)}},
                           {Var::w, Image{1, mono(Var::q, -2)}},
                           {Var::q, Image{1, mono(Var::q, 4)}}};

// Width m, diagonals n1, n2 <= m: half-perimeter 4m - 2 odd, area 4a - 2(n1 + n2) + odd.
TruncationSpec doubly_shifted_source(int N, int T, bool odd) {
  int m = odd ? (T + 2) / 4 : T / 4;
  int a = (N - (odd ? 1 : 0) + 4 * m) / 4;
  return TruncationSpec(std::max(a, 0), VarSet{Var::x, Var::z, Var::w, Var::q})
      .with_cap(Var::x, m)
      .with_cap(Var::z, m)
      .with_cap(Var::w, m);
}

}  // namespace

Series series_Fd1d2_even(const TruncationSpec& spec) {
  const int N = spec.qmax(), T = halfperimeter_limit(spec);
  Series e = series_E(doubly_shifted_source(N, T, false));
  return restrict_to(substitute(e, kQuarter, tq(N, T)), spec);
}

Series series_Fd1d2_odd(const TruncationSpec& spec) {
  const int N = spec.qmax(), T = halfperimeter_limit(spec);
  Series a = series_A(doubly_shifted_source(N, T, true));
  Series r = substitute(a, kQuarter, tq(N + 1, T + 2));
  return restrict_to(shift(r, ExpVec{{Var::t, -2}, {Var::q, 1}}), spec);
}

Series series_Fd1d2(const TruncationSpec& spec) {
  return series_Fd1d2_even(spec) + series_Fd1d2_odd(spec);
}

// ---------------------------------------------------------------- dispatch

Series symmetry_series(SymClassId id, const TruncationSpec& spec) {
  switch (id) {
    case SymClassId::Fr: return series_Fr(spec);
    case SymClassId::Fr2: return series_Fr2(spec);
    case SymClassId::Fr2_even: return series_Fr2_even(spec);
    case SymClassId::Fr2_odd: return series_Fr2_odd(spec);
    case SymClassId::Fv:
    case SymClassId::Fh: return series_Fv(spec);
    case SymClassId::Fhv: return series_Fhv(spec);
    case SymClassId::Fd1:
    case SymClassId::Fd2: return series_Fd(spec);
    case SymClassId::Fd1d2: return series_Fd1d2(spec);
    case SymClassId::Fd1d2_even: return series_Fd1d2_even(spec);
    case SymClassId::Fd1d2_odd: return series_Fd1d2_odd(spec);
  }
  throw SeriesError(ErrorKind::Unsupported, "unknown symmetry class");
}

}  // namespace polysym

#include "polysym/classes.hpp"

#include <climits>
#include <map>

#include "polysym/qfun.hpp"

namespace polysym {

namespace {

void require(const TruncationSpec& spec, VarSet vars, const char* what) {
  if (!spec.vars().includes(vars))
    throw SeriesError(ErrorKind::SpecMismatch, std::string(what) + " needs more variables than " +
                                                   spec.describe());
}

Series monomial(const TruncationSpec& spec, const ExpVec& e, const Integer& c = 1) {
  return Series::monomial(c, e, spec);
}

// The truncation spec with v active and carrying no cap or weight, so that v may be
// evaluated at 1 or differentiated.
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

Series lift(const Series& a, const TruncationSpec& spec) { return restrict_to(a, spec); }

// Dual numbers over Series: v + d eps with eps^2 = 0.
struct Dual {
  Series v, d;
};

Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
Dual operator*(const Dual& a, const Dual& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }

// s kept as a formal variable.
class SymbolicS {
 public:
  using T = Series;
  explicit SymbolicS(TruncationSpec spec) : spec_(std::move(spec)) {}
  const TruncationSpec& spec() const { return spec_; }
  T zero() const { return Series(spec_); }
  // c s^k m
  T term(const Integer& c, int k, const ExpVec& m) const {
    return monomial(spec_, m + mono(Var::s, k), c);
  }
  // 1 / (s m; q)_n
  const T& inv_poch(const ExpVec& m, int n) {
    auto key = std::make_pair(m, n);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, qpochhammer_inverse(1, m + mono(Var::s, 1), n, spec_))
        .first->second;
  }

 private:
  TruncationSpec spec_;
  std::map<std::pair<ExpVec, int>, T> cache_;
};

// s = 1 + eps.
class DualS {
 public:
  using T = Dual;
  explicit DualS(TruncationSpec spec) : spec_(std::move(spec)) {}
  const TruncationSpec& spec() const { return spec_; }
  T zero() const { return {Series(spec_), Series(spec_)}; }
  T term(const Integer& c, int k, const ExpVec& m) const {
    return {monomial(spec_, m, c), monomial(spec_, m, c * k)};
  }
  // d/ds of 1/prod(1 - s m q^k) at s = 1 is the value times sum m q^k/(1 - m q^k).
  const T& inv_poch(const ExpVec& m, int n) {
    auto key = std::make_pair(m, n);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Series v = qpochhammer_inverse(1, m, n, spec_);
    SeriesBuilder g(spec_);
    for (int k = 0; k < n; ++k) {
      ExpVec base = m + mono(Var::q, k);
      ExpVec e = base;
      for (int j = 1; spec_.admits(e); ++j, e += base) g.add(e, 1);
    }
    Series d = v * std::move(g).build();
    return cache_.emplace(key, Dual{std::move(v), std::move(d)}).first->second;
  }

 private:
  TruncationSpec spec_;
  std::map<std::pair<ExpVec, int>, T> cache_;
};

int tri(int n) { return n * (n + 1) / 2; }

ExpVec xq(int m) { return mono(Var::x, m, Var::q, m); }
ExpVec yq(int k) { return mono(Var::y, 1, Var::q, k); }

// J_0(s) = sum_n (-1)^n x^n s^n q^{n(n+1)/2} / ((sq)_n (syq)_n)
template <class Alg>
typename Alg::T sum_J0(Alg& alg, int xmax) {
  const int N = alg.spec().qmax();
  auto r = alg.term(1, 0, {});
  for (int n = 1; n <= xmax && tri(n) <= N; ++n) {
    Integer sign = n % 2 ? -1 : 1;
    r = r + alg.term(sign, n, mono(Var::x, n, Var::q, tri(n))) * alg.inv_poch(mono(Var::q, 1), n) *
                alg.inv_poch(yq(1), n);
  }
  return r;
}

// M_1(s) = sum_{n>=1} x^n q^n/(syq)_n (s/(syq)_{n-1}
//          + sum_{m=1}^{n-1} (-1)^m s^m q^{m(m-1)/2} / ((sq)_m (syq^{m+1})_{n-m-1}))
template <class Alg>
typename Alg::T sum_M1(Alg& alg, int xmax) {
  const int N = alg.spec().qmax();
  auto r = alg.zero();
  for (int n = 1; n <= xmax && n <= N; ++n) {
    auto inner = alg.term(1, 1, {}) * alg.inv_poch(yq(1), n - 1);
    for (int m = 1; m <= n - 1 && m * (m - 1) / 2 + n <= N; ++m) {
      Integer sign = m % 2 ? -1 : 1;
      inner = inner + alg.term(sign, m, mono(Var::q, m * (m - 1) / 2)) *
                          alg.inv_poch(mono(Var::q, 1), m) * alg.inv_poch(yq(m + 1), n - m - 1);
    }
    r = r + alg.term(1, 0, xq(n)) * alg.inv_poch(yq(1), n) * inner;
  }
  return r;
}

// alpha(s) = sum_{m>=1} (-1)^m x^m s^m q^{m(m+1)/2} / (sq)_m
//            * sum_{n=1}^m (-1)^n s^n q^{n(n+1)/2} / ((sq)_{n-1} (syq^n)_{m-n+1})
template <class Alg>
typename Alg::T sum_alpha(Alg& alg, int xmax) {
  const int N = alg.spec().qmax();
  auto r = alg.zero();
  for (int m = 1; m <= xmax && tri(m) + 1 <= N; ++m) {
    auto inner = alg.zero();
    for (int n = 1; n <= m && tri(m) + tri(n) <= N; ++n) {
      Integer sign = n % 2 ? -1 : 1;
      inner = inner + alg.term(sign, n, mono(Var::q, tri(n))) *
                          alg.inv_poch(mono(Var::q, 1), n - 1) * alg.inv_poch(yq(n), m - n + 1);
    }
    Integer sign = m % 2 ? -1 : 1;
    r = r + alg.term(sign, m, mono(Var::x, m, Var::q, tri(m))) * alg.inv_poch(mono(Var::q, 1), m) *
                inner;
  }
  return r;
}

// a(s) = sum_{m>=1} x^m q^m/(1 - syq^m) ( -s^{2m-1} q^{m(m-1)} / (sq)_{m-1}^2
//        + y sum_{n=1}^{m-1} s^{2n} q^{n^2} (syq^n - 2) / ((sq)_{n-1}^2 (syq^n)_{m-n}^2)
//        + 2y sum_{1<=n<=k<m} (-1)^{n+k} s^{n+k} q^{n(n+1)/2 + k(k-1)/2}
//             / ((sq)_{n-1} (syq^n)_{m-n} (sq)_k (syq^{k+1})_{m-k-1}) )
template <class Alg>
typename Alg::T sum_a(Alg& alg, int xmax) {
  const int N = alg.spec().qmax();
  const ExpVec q1 = mono(Var::q, 1);
  const ExpVec y1 = mono(Var::y, 1);
  auto r = alg.zero();
  for (int m = 1; m <= xmax && m <= N; ++m) {
    const auto& sq = alg.inv_poch(q1, m - 1);
    auto bracket = alg.term(-1, 2 * m - 1, mono(Var::q, m * (m - 1))) * sq * sq;
    for (int n = 1; n <= m - 1 && m + n * n <= N; ++n) {
      const auto& a = alg.inv_poch(q1, n - 1);
      const auto& b = alg.inv_poch(yq(n), m - n);
      auto factor = alg.term(1, 1, yq(n)) - alg.term(2, 0, {});
      bracket = bracket + alg.term(1, 2 * n, y1 + mono(Var::q, n * n)) * factor * a * a * b * b;
    }
    // Double sum, accumulated as sum_k B(k) * (sum_{n<=k} A(n)).
    auto prefix = alg.zero();
    auto dbl = alg.zero();
    for (int k = 1; k <= m - 1 && m + 1 + k * (k - 1) / 2 <= N; ++k) {
      Integer sa = k % 2 ? -1 : 1;
      prefix = prefix + alg.term(sa, k, mono(Var::q, tri(k))) * alg.inv_poch(q1, k - 1) *
                            alg.inv_poch(yq(k), m - k);
      dbl = dbl + alg.term(sa, k, mono(Var::q, k * (k - 1) / 2)) * alg.inv_poch(q1, k) *
                      alg.inv_poch(yq(k + 1), m - k - 1) * prefix;
    }
    bracket = bracket + alg.term(2, 0, y1) * dbl;
    r = r + alg.term(1, 0, xq(m)) * alg.inv_poch(yq(m), 1) * bracket;
  }
  return r;
}

Series sum_J1(const TruncationSpec& spec, int xmax) {
  SeriesBuilder b(spec);
  for (int n = 1; n <= xmax && n <= spec.qmax(); ++n) {
    Series t = qpochhammer_inverse(1, mono(Var::q, 1), n - 1, spec) *
               qpochhammer_inverse(1, mono(Var::q, 1), n, spec);
    b.add(shift(t, xq(n)));
  }
  return std::move(b).build();
}

Series sum_K1(const TruncationSpec& spec, int xmax) {
  SeriesBuilder b(spec);
  b.add(ExpVec{}, -1);
  const int N = spec.qmax();
  // g(k) = q^k / (1 - q^k)
  auto g = [&](int k) {
    SeriesBuilder gb(spec);
    for (int e = k; e <= N; e += k) gb.add(mono(Var::q, e), 1);
    return std::move(gb).build();
  };
  Series partial(spec);  // sum_{k<n} 2 g(k)
  for (int n = 1; n <= xmax && n <= N; ++n) {
    Series t = qpochhammer_inverse(1, mono(Var::q, 1), n - 1, spec) *
               qpochhammer_inverse(1, mono(Var::q, 1), n, spec);
    b.add(shift(t * (partial + g(n)), xq(n)));
    partial += Integer(2) * g(n);
  }
  return std::move(b).build();
}

}  // namespace

int degree_bound(const TruncationSpec& spec, Var v) {
  int d = spec.qmax();
  if (auto c = spec.cap(v)) d = std::min(d, *c);
  if (auto b = spec.weighted_bound(); b && spec.weight(v) > 0) d = std::min(d, *b / spec.weight(v));
  return d;
}

// ------------------------------------------------------------- partitions

Series series_P(const TruncationSpec& spec) {
  require(spec, {Var::x, Var::y, Var::q}, "P");
  SeriesBuilder b(spec);
  for (int m = 1; m <= degree_bound(spec, Var::x); ++m)
    b.add(shift(qpochhammer_inverse(1, yq(1), m, spec), xq(m) + mono(Var::y, 1)));
  return std::move(b).build();
}

Series series_P_double_sum(const TruncationSpec& spec) {
  require(spec, {Var::x, Var::y, Var::q}, "P");
  SeriesBuilder b(spec);
  for (int m = 1; m <= degree_bound(spec, Var::x); ++m)
    for (int k = 1; m + k - 1 <= spec.qmax() && k <= degree_bound(spec, Var::y); ++k)
      b.add(qbinomial_substituted(m + k - 2, k - 1, mono(Var::q, 1), spec,
                                  mono(Var::x, m, Var::y, k, Var::q, m + k - 1)));
  return std::move(b).build();
}

Series series_P0(const TruncationSpec& spec) {
  require(spec, {Var::x, Var::y, Var::q}, "P0");
  if (!spec.bounded(Var::y))
    throw SeriesError(ErrorKind::Unsupported, "P0 allows empty rows and needs a bound on y");
  SeriesBuilder b(spec);
  for (int m = 0; m <= degree_bound(spec, Var::x); ++m)
    b.add(shift(qpochhammer_inverse(1, mono(Var::y, 1), m + 1, spec), xq(m) + mono(Var::y, 1)));
  return std::move(b).build();
}

namespace {

Series shifted_partitions(const TruncationSpec& spec, bool mark_width) {
  SeriesBuilder b(spec);
  for (int m = 1; m <= degree_bound(spec, Var::x); ++m) {
    ExpVec lead = xq(m) + mono(Var::y, 1);
    if (mark_width) lead += mono(Var::u, m);
    b.add(shift(qpochhammer(-1, yq(1), m - 1, spec), lead));
  }
  return std::move(b).build();
}

}  // namespace

Series series_PS(const TruncationSpec& spec) {
  require(spec, {Var::x, Var::y, Var::q}, "PS");
  return shifted_partitions(spec, false);
}

Series series_PS_u(const TruncationSpec& spec) {
  require(spec, {Var::u, Var::x, Var::y, Var::q}, "PS_u");
  return shifted_partitions(spec, true);
}

// ----------------------------------------------------------------- stacks

Series series_T0(const TruncationSpec& spec) {
  require(spec, {Var::x, Var::y, Var::q}, "T0");
  if (!spec.bounded(Var::y))
    throw SeriesError(ErrorKind::Unsupported, "T0 allows empty rows and needs a bound on y");
  SeriesBuilder b(spec);
  const ExpVec y1 = mono(Var::y, 1);
  for (int m = 0; m <= degree_bound(spec, Var::x); ++m) {
    Series den = qpochhammer_inverse(1, y1, m + 1, spec) * qpochhammer_inverse(1, y1, m, spec);
    b.add(shift(den, xq(m) + y1));
  }
  return std::move(b).build();
}

Series series_T(const TruncationSpec& spec) {
  require(spec, {Var::x, Var::y, Var::q}, "T");
  // T(x,y,q) = x T0(x, yq, q). A T0 term x^X y^Y q^Q lands on x^{X+1} y^Y q^{Q+Y}.
  const int N = spec.qmax();
  TruncationSpec in(N, VarSet{Var::x, Var::y, Var::q});
  in = in.with_cap(Var::y, std::min(N, spec.cap(Var::y).value_or(N)));
  if (auto c = spec.cap(Var::x)) in = in.with_cap(Var::x, std::max(0, *c - 1));
  if (auto bd = spec.weighted_bound(); bd && (spec.weight(Var::x) > 0 || spec.weight(Var::y) > 0)) {
    in = in.with_weighted({{Var::x, spec.weight(Var::x)}, {Var::y, spec.weight(Var::y)}},
                          std::max(0, *bd - spec.weight(Var::x)));
  }
  Series t0 = series_T0(in);
  Series sub = substitute(t0, {{Var::y, Image{1, yq(1)}}}, spec);
  return shift(sub, mono(Var::x, 1));
}

Series poly_Vn(int n, const TruncationSpec& spec) {
  require(spec, {Var::x, Var::q}, "V_n");
  if (n < 0) throw SeriesError(ErrorKind::InvalidExponent, "V_n needs n >= 0");
  Series prev = Series::constant(1, spec), cur = prev;
  for (int k = 2; k <= n; ++k) {
    Series next = Integer(2) * cur +
                  (monomial(spec, mono(Var::x, 1, Var::q, k - 1)) - Series::constant(1, spec)) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Series poly_Vn_closed(int n, const TruncationSpec& spec) {
  require(spec, {Var::x, Var::q}, "V_n");
  if (n < 0) throw SeriesError(ErrorKind::InvalidExponent, "V_n needs n >= 0");
  Series r = Series::constant(1, spec);
  for (int k = 1; 2 * k <= n && k * k <= spec.qmax(); ++k) {
    Series inner(spec);
    for (int m = k; m <= n - k; ++m)
      inner += qbinomial(m, k, spec) * qbinomial(n - m - 1, k - 1, spec);
    r += shift(inner, mono(Var::x, k, Var::q, k * k));
  }
  return r;
}

Series series_T0n(int n, const TruncationSpec& spec) {
  require(spec, {Var::x, Var::q}, "T_0,n");
  if (n < 1) throw SeriesError(ErrorKind::InvalidExponent, "T_0,n needs n >= 1");
  return poly_Vn(n, spec) * qpochhammer_inverse(1, xq(1), n, spec);
}

Series series_T0n_sum(int n, const TruncationSpec& spec) {
  require(spec, {Var::x, Var::q}, "T_0,n");
  if (n < 1) throw SeriesError(ErrorKind::InvalidExponent, "T_0,n needs n >= 1");
  SeriesBuilder b(spec);
  b.add(ExpVec{}, 1);  // the empty stack
  for (int m = 1; m <= degree_bound(spec, Var::x); ++m) {
    for (int j = 1; j <= n; ++j) {
      Series a = qbinomial(m + j - 1, m, spec) * qbinomial(m + n - j - 1, m - 1, spec);
      b.add(shift(a, xq(m)));
    }
  }
  return std::move(b).build();
}

// --------------------------------------------------------- shifted stacks

Series series_P1(const TruncationSpec& spec) {
  require(spec, {Var::u, Var::x, Var::y, Var::q}, "P1");
  SeriesBuilder b(spec);
  const ExpVec uxq = mono(Var::u, 1) + xq(1);
  b.add(uxq + mono(Var::y, 1), 1);
  for (int k = 2; k <= degree_bound(spec, Var::x); ++k)
    b.add(shift(qpochhammer(-1, yq(1), k - 2, spec), k * uxq + mono(Var::y, 1)));
  return std::move(b).build();
}

Series series_TS_iter(const TruncationSpec& spec) {
  require(spec, {Var::u, Var::x, Var::y, Var::q}, "T_S");
  const TruncationSpec w = free_of(spec, Var::u);
  const Series p1 = series_P1(w);
  const Series k = shift(qpochhammer_inverse(1, mono(Var::u, 1, Var::q, 1), 1, w),
                         mono(Var::x, 1, Var::y, 1) + mono(Var::u, 2, Var::q, 2));
  Series cur = p1;
  for (int iter = 0;; ++iter) {
    Series at_one = lift(eval_at_one(cur, Var::u), w);
    Series at_uq = substitute(cur, {{Var::u, Image{1, mono(Var::u, 1, Var::q, 1)}}}, w);
    Series next = p1 + k * (at_one - at_uq);
    if (next == cur) break;
    cur = std::move(next);
    if (iter > 4 * spec.qmax() + 8)
      throw SeriesError(ErrorKind::Unsupported, "shifted stack iteration did not settle");
  }
  return restrict_to(cur, spec);
}

Series series_TS_closed(const TruncationSpec& spec) {
  require(spec, {Var::u, Var::x, Var::y, Var::q}, "T_S");
  const TruncationSpec w = free_of(spec, Var::u);
  const int N = w.qmax();
  const Series p1 = series_P1(w);
  const ExpVec u1q1 = mono(Var::u, 1, Var::q, 1);
  Series e(w), f(w);
  for (int n = 0; n * n + n <= N; ++n) {
    Integer sign = n % 2 ? -1 : 1;
    Series p1n = substitute(p1, {{Var::u, Image{1, mono(Var::u, 1, Var::q, n)}}}, w);
    e += shift(p1n * qpochhammer_inverse(1, u1q1, n, w),
               mono(Var::x, n, Var::y, n) + mono(Var::u, 2 * n, Var::q, n * n + n), sign);
    f += shift(qpochhammer_inverse(1, u1q1, n + 1, w),
               mono(Var::x, n + 1, Var::y, n + 1) + mono(Var::u, 2 * n + 2, Var::q, n * n + 3 * n + 2),
               sign);
  }
  Series e1 = lift(eval_at_one(e, Var::u), w);
  Series f1 = lift(eval_at_one(f, Var::u), w);
  Series num = e + e1 * f - e * f1;
  return restrict_to(num * invert(Series::constant(1, w) - f1), spec);
}

Series series_TS(const TruncationSpec& spec) { return series_TS_closed(spec); }

// ------------------------------------------------ directed convex, convex

Series series_D(const TruncationSpec& spec) {
  require(spec, {Var::s, Var::x, Var::y, Var::q}, "D");
  const TruncationSpec w = free_of(spec, Var::s);
  SymbolicS alg(w);
  const int xmax = degree_bound(w, Var::x);
  Series j0 = sum_J0(alg, xmax);
  Series m1 = sum_M1(alg, xmax);
  Series j0_1 = lift(eval_at_one(j0, Var::s), w);
  Series m1_1 = lift(eval_at_one(m1, Var::s), w);
  Series num = m1 * j0_1 - m1_1 * j0 + m1_1;
  Series d = shift(num * invert(j0_1), mono(Var::y, 1));
  return restrict_to(d, spec);
}

Series series_C(const TruncationSpec& spec) {
  require(spec, {Var::x, Var::y, Var::q}, "C");
  const TruncationSpec w = spec.has(Var::s) ? spec.without_var(Var::s) : spec;
  DualS alg(w);
  const int xmax = degree_bound(w, Var::x);
  Series ratio = sum_M1(alg, xmax).v * invert(sum_J0(alg, xmax).v);
  Dual alpha = sum_alpha(alg, xmax);
  Dual a = sum_a(alg, xmax);
  Series lead = shift(ratio, mono(Var::y, 2), 2);
  Series e_val = lead * alpha.v - shift(a.v, mono(Var::y, 1));
  Series e_der = lead * alpha.d - shift(a.d, mono(Var::y, 1));
  Series c = sum_J1(w, xmax) * e_der - sum_K1(w, xmax) * e_val;
  return restrict_to(c, spec);
}

Series series_C_symbolic(const TruncationSpec& spec) {
  require(spec, {Var::x, Var::y, Var::q}, "C");
  const TruncationSpec w = free_of(spec, Var::s);
  const TruncationSpec w0 = w.without_var(Var::s);
  SymbolicS alg(w);
  const int xmax = degree_bound(w, Var::x);
  Series j0_1 = lift(eval_at_one(sum_J0(alg, xmax), Var::s), w);
  Series m1_1 = lift(eval_at_one(sum_M1(alg, xmax), Var::s), w);
  Series e = shift(m1_1 * invert(j0_1), mono(Var::y, 2), 2) * sum_alpha(alg, xmax) -
             shift(sum_a(alg, xmax), mono(Var::y, 1));
  Series e_val = eval_at_one(e, Var::s);
  Series e_der = eval_at_one(derivative(e, Var::s), Var::s);
  Series c = sum_J1(w0, xmax) * e_der - sum_K1(w0, xmax) * e_val;
  return restrict_to(c, spec.has(Var::s) ? spec.without_var(Var::s) : spec);
}

}  // namespace polysym

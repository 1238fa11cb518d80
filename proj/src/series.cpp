#include "polysym/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace polysym {

namespace {

constexpr std::array<char, kNumVars> kNames = {'t', 'x', 'y', 'q', 's', 'u', 'v', 'z', 'w'};

std::string exp_to_string(const ExpVec& e) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Var v : kAllVars) {
    if (e[v] == 0) continue;
    if (!first) os << ',';
    os << var_name(v) << ':' << e[v];
    first = false;
  }
  os << '}';
  return os.str();
}

[[noreturn]] void fail(ErrorKind k, const std::string& msg) { throw SeriesError(k, msg); }

void require_same_spec(const Series& a, const Series& b, const char* op) {
  if (a.spec() != b.spec()) {
    fail(ErrorKind::SpecMismatch, std::string(op) + ": " + a.spec().describe() + " vs " +
                                      b.spec().describe());
  }
}

bool term_less(const Term& a, const Term& b) { return a.exp < b.exp; }

// Sorts and merges duplicate exponents, dropping zeros.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Integer c = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].exp == terms[i].exp) {
      c += terms[j].coeff;
      ++j;
    }
    if (c != 0) {
      terms[out].exp = terms[i].exp;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

Integer int_pow(const Integer& base, int n) {
  Integer r = 1;
  for (int i = 0; i < n; ++i) r *= base;
  return r;
}

bool is_unit(const Integer& c) { return c == 1 || c == -1; }

}  // namespace

char var_name(Var v) { return kNames[idx(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  if (name.size() != 1) return std::nullopt;
  for (Var v : kAllVars) {
    if (kNames[idx(v)] == name[0]) return v;
  }
  return std::nullopt;
}

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NegativeFinalExponent: return "NegativeFinalExponent";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "?";
}

SeriesError::SeriesError(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

// ---------------------------------------------------------------- ExpVec

ExpVec::ExpVec(std::initializer_list<std::pair<Var, int>> pairs) {
  for (auto [v, k] : pairs) set(v, (*this)[v] + k);
}

void ExpVec::set(Var v, int k) {
  if (k > INT16_MAX || k < INT16_MIN) fail(ErrorKind::InvalidExponent, "exponent overflow");
  e[idx(v)] = static_cast<std::int16_t>(k);
}

bool ExpVec::is_zero() const {
  return std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; });
}

ExpVec& ExpVec::operator+=(const ExpVec& o) {
  for (std::size_t i = 0; i < kNumVars; ++i) e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
  return *this;
}

ExpVec operator-(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.e[i] = static_cast<std::int16_t>(a.e[i] - b.e[i]);
  return r;
}

ExpVec operator*(int k, const ExpVec& a) {
  ExpVec r;
  for (Var v : kAllVars) r.set(v, k * a[v]);
  return r;
}

std::size_t ExpVecHash::operator()(const ExpVec& a) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto k : a.e) {
    h ^= static_cast<std::uint16_t>(k);
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

ExpVec mono(Var v, int k) { return ExpVec{{v, k}}; }
ExpVec mono(Var v1, int k1, Var v2, int k2) { return ExpVec{{v1, k1}, {v2, k2}}; }
ExpVec mono(Var v1, int k1, Var v2, int k2, Var v3, int k3) {
  return ExpVec{{v1, k1}, {v2, k2}, {v3, k3}};
}

// ---------------------------------------------------------- TruncationSpec

TruncationSpec::TruncationSpec(int qmax, VarSet vars) : qmax_(qmax), vars_(vars.with(Var::q)) {
  if (qmax < 0) fail(ErrorKind::InvalidExponent, "qmax must be nonnegative");
  caps_.fill(-1);
}

std::optional<int> TruncationSpec::cap(Var v) const {
  if (v == Var::q) return qmax_;
  if (caps_[idx(v)] < 0) return std::nullopt;
  return caps_[idx(v)];
}

std::optional<int> TruncationSpec::weighted_bound() const {
  if (bound_ < 0) return std::nullopt;
  return bound_;
}

bool TruncationSpec::bounded(Var v) const {
  return v == Var::q || caps_[idx(v)] >= 0 || (bound_ >= 0 && weights_[idx(v)] > 0);
}

TruncationSpec TruncationSpec::with_var(Var v) const {
  TruncationSpec s = *this;
  s.vars_ = vars_.with(v);
  return s;
}

TruncationSpec TruncationSpec::without_var(Var v) const {
  if (v == Var::q) fail(ErrorKind::SpecMismatch, "q cannot be removed");
  TruncationSpec s = *this;
  s.vars_ = vars_.without(v);
  s.caps_[idx(v)] = -1;
  s.weights_[idx(v)] = 0;
  if (s.bound_ >= 0 && std::all_of(s.weights_.begin(), s.weights_.end(), [](int w) { return w == 0; }))
    s.bound_ = -1;
  return s;
}

TruncationSpec TruncationSpec::with_qmax(int qmax) const {
  TruncationSpec s = *this;
  if (qmax < 0) fail(ErrorKind::InvalidExponent, "qmax must be nonnegative");
  s.qmax_ = qmax;
  return s;
}

TruncationSpec TruncationSpec::with_cap(Var v, int c) const {
  if (v == Var::q) return with_qmax(c);
  if (!has(v)) fail(ErrorKind::SpecMismatch, "cap on inactive variable");
  if (c < 0) fail(ErrorKind::InvalidExponent, "cap must be nonnegative");
  TruncationSpec s = *this;
  s.caps_[idx(v)] = c;
  return s;
}

TruncationSpec TruncationSpec::without_cap(Var v) const {
  TruncationSpec s = *this;
  if (v != Var::q) s.caps_[idx(v)] = -1;
  return s;
}

TruncationSpec TruncationSpec::with_weighted(std::initializer_list<std::pair<Var, int>> weights,
                                             int bound) const {
  std::array<int, kNumVars> w{};
  for (auto [v, k] : weights) w[idx(v)] = k;
  return with_weighted(w, bound);
}

TruncationSpec TruncationSpec::with_weighted(const std::array<int, kNumVars>& weights,
                                             int bound) const {
  TruncationSpec s = *this;
  if (bound < 0) fail(ErrorKind::InvalidExponent, "weighted bound must be nonnegative");
  for (Var v : kAllVars) {
    int w = weights[idx(v)];
    if (w < 0) fail(ErrorKind::InvalidExponent, "weights must be nonnegative");
    if (w > 0 && (!has(v) || v == Var::q))
      fail(ErrorKind::SpecMismatch, "weighted cap on inactive variable or q");
  }
  s.weights_ = weights;
  s.bound_ = bound;
  return s;
}

TruncationSpec TruncationSpec::without_weighted() const {
  TruncationSpec s = *this;
  s.weights_.fill(0);
  s.bound_ = -1;
  return s;
}

int TruncationSpec::weighted_degree(const ExpVec& e) const {
  int d = 0;
  for (std::size_t i = 0; i < kNumVars; ++i) d += weights_[i] * e.e[i];
  return d;
}

bool TruncationSpec::admits(const ExpVec& e) const {
  if (e[Var::q] > qmax_) return false;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (caps_[i] >= 0 && e.e[i] > caps_[i]) return false;
  }
  return bound_ < 0 || weighted_degree(e) <= bound_;
}

int TruncationSpec::exponent_limit() const {
  int m = std::max(qmax_, 1);
  for (int c : caps_) m = std::max(m, c);
  m = std::max(m, bound_);
  return 4 * m;
}

void TruncationSpec::check_exponent(const ExpVec& e) const {
  int lim = exponent_limit();
  for (Var v : kAllVars) {
    int k = e[v];
    if (k == 0) continue;
    if (!has(v))
      fail(ErrorKind::InvalidExponent,
           std::string("variable ") + var_name(v) + " not in " + describe());
    if (k < 0 && bounded(v))
      fail(ErrorKind::InvalidExponent, std::string("negative exponent of bounded variable ") +
                                           var_name(v) + " in " + exp_to_string(e));
    if (k > lim || k < -lim)
      fail(ErrorKind::InvalidExponent, "exponent beyond defensive limit in " + exp_to_string(e));
  }
}

std::string TruncationSpec::describe() const {
  std::ostringstream os;
  os << "vars=";
  for (Var v : kAllVars)
    if (has(v)) os << var_name(v);
  os << " qmax=" << qmax_;
  for (Var v : kAllVars)
    if (caps_[idx(v)] >= 0) os << ' ' << var_name(v) << "<=" << caps_[idx(v)];
  if (bound_ >= 0) {
    os << ' ';
    bool first = true;
    for (Var v : kAllVars) {
      if (weights_[idx(v)] == 0) continue;
      if (!first) os << '+';
      if (weights_[idx(v)] != 1) os << weights_[idx(v)];
      os << var_name(v);
      first = false;
    }
    os << "<=" << bound_;
  }
  return os.str();
}

// ------------------------------------------------------------------ Series

Series::Series(TruncationSpec spec) : spec_(std::move(spec)) {}

Series Series::monomial(const Integer& c, const ExpVec& e, const TruncationSpec& spec) {
  if (e[Var::q] < 0) fail(ErrorKind::InvalidExponent, "negative q exponent " + exp_to_string(e));
  Series s(spec);
  if (c == 0 || !spec.admits(e)) return s;
  spec.check_exponent(e);
  s.terms_.push_back(Term{e, c});
  return s;
}

Series Series::constant(const Integer& c, const TruncationSpec& spec) {
  return monomial(c, ExpVec{}, spec);
}

Series Series::from_terms(const TruncationSpec& spec, std::vector<Term> terms) {
  SeriesBuilder b(spec);
  for (auto& t : terms) b.add(t.exp, t.coeff);
  return std::move(b).build();
}

Integer Series::coeff(const ExpVec& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const ExpVec& x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return 0;
}

Integer Series::coeff_sum() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

namespace {

Series merge(const Series& a, const Series& b, bool negate_b) {
  require_same_spec(a, b, negate_b ? "sub" : "add");
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->exp < ib->exp)) {
      out.push_back(*ia++);
    } else if (ia == ea || ib->exp < ia->exp) {
      out.push_back(Term{ib->exp, negate_b ? Integer(-ib->coeff) : ib->coeff});
      ++ib;
    } else {
      Integer c = negate_b ? Integer(ia->coeff - ib->coeff) : Integer(ia->coeff + ib->coeff);
      if (c != 0) out.push_back(Term{ia->exp, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return Series::from_terms(a.spec(), std::move(out));
}

}  // namespace

Series& Series::operator+=(const Series& o) { return *this = merge(*this, o, false); }
Series& Series::operator-=(const Series& o) { return *this = merge(*this, o, true); }
Series& Series::operator*=(const Series& o) { return *this = mul(*this, o); }

Series Series::operator-() const {
  Series r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Series operator*(const Series& a, const Series& b) { return mul(a, b); }
Series operator*(const Integer& c, const Series& a) { return scale(a, c); }

void Series::validate() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (t.coeff == 0) fail(ErrorKind::InvalidExponent, "stored zero coefficient");
    if (t.exp[Var::q] < 0) fail(ErrorKind::InvalidExponent, "negative q exponent stored");
    spec_.check_exponent(t.exp);
    if (!spec_.admits(t.exp)) fail(ErrorKind::InvalidExponent, "stored term beyond truncation");
    if (i > 0 && !(terms_[i - 1].exp < t.exp))
      fail(ErrorKind::InvalidExponent, "terms not in canonical order");
  }
}

// ----------------------------------------------------------- SeriesBuilder

SeriesBuilder::SeriesBuilder(TruncationSpec spec) : spec_(std::move(spec)) {}

void SeriesBuilder::add(const ExpVec& e, const Integer& c) {
  if (c == 0) return;
  if (e[Var::q] < 0)
    fail(ErrorKind::NegativeFinalExponent, "negative q exponent " + exp_to_string(e));
  if (!spec_.admits(e)) return;
  spec_.check_exponent(e);
  pending_.push_back(Term{e, c});
}

void SeriesBuilder::add(const Series& s) {
  for (const auto& t : s.terms()) add(t.exp, t.coeff);
}

Series SeriesBuilder::build() && {
  canonicalize(pending_);
  Series s(spec_);
  s.terms_ = std::move(pending_);
  return s;
}

// -------------------------------------------------------------- operations

Series add(const Series& a, const Series& b) { return a + b; }

Series mul(const Series& a, const Series& b) {
  require_same_spec(a, b, "mul");
  const TruncationSpec& spec = a.spec();
  if (a.is_zero() || b.is_zero()) return Series(spec);
  const Series& small = a.size() <= b.size() ? a : b;
  const Series& big = a.size() <= b.size() ? b : a;

  // Order the larger operand by q-degree so the inner loop can stop early.
  std::vector<std::uint32_t> order(big.size());
  std::iota(order.begin(), order.end(), 0u);
  auto bt = big.terms();
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t i, std::uint32_t j) {
    return bt[i].exp[Var::q] < bt[j].exp[Var::q];
  });

  std::unordered_map<ExpVec, Integer, ExpVecHash> acc;
  acc.reserve(std::min<std::size_t>(small.size() * big.size(), 1u << 20));
  const int qmax = spec.qmax();
  for (const auto& ta : small.terms()) {
    const int limit = qmax - ta.exp[Var::q];
    for (std::uint32_t j : order) {
      const Term& tb = bt[j];
      if (tb.exp[Var::q] > limit) break;
      ExpVec e = ta.exp + tb.exp;
      if (!spec.admits(e)) continue;
      auto [it, inserted] = acc.try_emplace(e);
      it->second += ta.coeff * tb.coeff;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) out.push_back(Term{e, std::move(c)});
  }
  return Series::from_terms(spec, std::move(out));
}

Series scale(const Series& a, const Integer& c) {
  if (c == 0) return Series(a.spec());
  std::vector<Term> out(a.terms().begin(), a.terms().end());
  for (auto& t : out) t.coeff *= c;
  return Series::from_terms(a.spec(), std::move(out));
}

Series shift(const Series& a, const ExpVec& e, const Integer& c) {
  SeriesBuilder b(a.spec());
  for (const auto& t : a.terms()) b.add(t.exp + e, t.coeff * c);
  return std::move(b).build();
}

Series power(const Series& a, int n) {
  if (n < 0) fail(ErrorKind::InvalidExponent, "negative power");
  Series r = Series::constant(1, a.spec());
  Series base = a;
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return r;
}

Series invert(const Series& a) {
  const TruncationSpec& spec = a.spec();
  Integer c0 = a.constant_term();
  if (!is_unit(c0)) fail(ErrorKind::NotInvertible, "constant term is not +1 or -1");
  // Every other term must be "small": positive in q or in a bounded variable,
  // so that powers of it are eventually truncated away.
  for (const auto& t : a.terms()) {
    if (t.exp.is_zero()) continue;
    bool small = false;
    for (Var v : kAllVars) {
      if (t.exp[v] > 0 && spec.bounded(v)) small = true;
    }
    if (!small)
      fail(ErrorKind::NotInvertible, "term " + exp_to_string(t.exp) +
                                         " has no positive power of a truncated variable");
  }
  const Series one = Series::constant(1, spec);
  if (a.size() == 2) {
    // c0 + c1 m: geometric series in -c0 c1 m.
    const Term& t = a.terms()[0].exp.is_zero() ? a.terms()[1] : a.terms()[0];
    Integer ratio = -c0 * t.coeff;
    SeriesBuilder b(spec);
    ExpVec e;
    Integer c = c0;
    for (int k = 0; spec.admits(e); ++k) {
      b.add(e, c);
      e += t.exp;
      c *= ratio;
      if (k > spec.exponent_limit()) fail(ErrorKind::NotInvertible, "geometric series diverges");
    }
    return std::move(b).build();
  }
  // Newton iteration b <- b + b (1 - a b); the error doubles its order.
  Series b = Series::constant(c0, spec);
  for (int iter = 0;; ++iter) {
    Series r = one - mul(a, b);
    if (r.is_zero()) return b;
    b += mul(b, r);
    if (iter > 64) fail(ErrorKind::NotInvertible, "inversion did not converge");
  }
}

Series pochhammer(const Series& a, int n) {
  if (n < 0) fail(ErrorKind::InvalidExponent, "negative Pochhammer length");
  const TruncationSpec& spec = a.spec();
  Series r = Series::constant(1, spec);
  const Series one = Series::constant(1, spec);
  for (int k = 0; k < n; ++k) {
    r = mul(r, one - shift(a, mono(Var::q, k)));
  }
  return r;
}

Series derivative(const Series& a, Var v) {
  if (a.spec().bounded(v))
    fail(ErrorKind::Unsupported, std::string("derivative in truncated variable ") + var_name(v));
  SeriesBuilder b(a.spec());
  for (const auto& t : a.terms()) {
    int k = t.exp[v];
    if (k == 0) continue;
    ExpVec e = t.exp;
    e.set(v, k - 1);
    b.add(e, t.coeff * k);
  }
  return std::move(b).build();
}

namespace {

struct Rewriter {
  std::array<bool, kNumVars> mapped{};
  std::array<Image, kNumVars> img;
  const TruncationSpec& out;

  Rewriter(const ImageMap& images, const TruncationSpec& out_spec) : out(out_spec) {
    for (const auto& [v, im] : images) {
      mapped[idx(v)] = true;
      img[idx(v)] = im;
    }
  }

  // Rewrites one term, skipping variable `skip`; returns false if the
  // coefficient would become non-integral.
  void apply(const Term& t, std::optional<Var> skip, ExpVec& e, Integer& c) const {
    e = ExpVec{};
    c = t.coeff;
    for (Var v : kAllVars) {
      int k = t.exp[v];
      if (k == 0 || (skip && *skip == v)) continue;
      if (!mapped[idx(v)]) {
        e.set(v, e[v] + k);
        continue;
      }
      const Image& im = img[idx(v)];
      if (k < 0 && !is_unit(im.coeff))
        fail(ErrorKind::Unsupported, "negative power of a non-unit image coefficient");
      if (im.coeff != 1) c *= int_pow(im.coeff, std::abs(k));
      for (Var w : kAllVars) {
        if (im.exp[w] != 0) e.set(w, e[w] + k * im.exp[w]);
      }
    }
  }

  void check_signs(const ExpVec& e) const {
    for (Var v : kAllVars) {
      int k = e[v];
      if (k == 0) continue;
      if (!out.has(v))
        fail(ErrorKind::SpecMismatch,
             std::string("substitution leaves variable ") + var_name(v) + " outside output spec");
      if (k < 0 && out.bounded(v))
        fail(ErrorKind::NegativeFinalExponent,
             std::string("negative exponent of ") + var_name(v) + " in " + exp_to_string(e));
    }
  }
};

}  // namespace

Series substitute(const Series& a, const ImageMap& images, const TruncationSpec& out_spec) {
  Rewriter rw(images, out_spec);
  SeriesBuilder b(out_spec);
  ExpVec e;
  Integer c;
  for (const auto& t : a.terms()) {
    rw.apply(t, std::nullopt, e, c);
    rw.check_signs(e);
    b.add(e, c);
  }
  return std::move(b).build();
}

Series substitute_graded(const Series& a, Var v, const GradedImage& f, const ImageMap& images,
                         const TruncationSpec& out_spec) {
  Rewriter rw(images, out_spec);
  std::vector<std::optional<std::vector<Term>>> cache;
  SeriesBuilder b(out_spec);
  ExpVec e;
  Integer c;
  for (const auto& t : a.terms()) {
    int m = t.exp[v];
    if (m < 0) fail(ErrorKind::InvalidExponent, "graded substitution of a negative power");
    if (static_cast<std::size_t>(m) >= cache.size()) cache.resize(m + 1);
    if (!cache[m]) {
      cache[m] = f(m);
      if (m == 0 && !(cache[m]->size() == 1 && (*cache[m])[0].exp.is_zero() &&
                      (*cache[m])[0].coeff == 1))
        fail(ErrorKind::Unsupported, "graded image of the zeroth power must be 1");
    }
    rw.apply(t, v, e, c);
    for (const Term& g : *cache[m]) {
      ExpVec ee = e + g.exp;
      rw.check_signs(ee);
      b.add(ee, c * g.coeff);
    }
  }
  return std::move(b).build();
}

Series coeff_extract(const Series& a, Var v, int k) {
  if (v == Var::q) fail(ErrorKind::Unsupported, "coefficient extraction in q");
  const TruncationSpec& in = a.spec();
  TruncationSpec out = in.without_var(v);
  if (in.weighted_bound() && in.weight(v) > 0) {
    auto w = in.weights();
    w[idx(v)] = 0;
    int bound = std::max(0, *in.weighted_bound() - in.weight(v) * k);
    bool any = std::any_of(w.begin(), w.end(), [](int x) { return x > 0; });
    out = in.without_var(v).without_weighted();
    if (any) out = out.with_weighted(w, bound);
  }
  SeriesBuilder b(out);
  for (const auto& t : a.terms()) {
    if (t.exp[v] != k) continue;
    ExpVec e = t.exp;
    e.set(v, 0);
    b.add(e, t.coeff);
  }
  return std::move(b).build();
}

Series eval_at_one(const Series& a, Var v) {
  if (v == Var::q || a.spec().bounded(v))
    fail(ErrorKind::Unsupported, std::string("evaluation at 1 of truncated variable ") + var_name(v));
  SeriesBuilder b(a.spec().without_var(v));
  for (const auto& t : a.terms()) {
    ExpVec e = t.exp;
    e.set(v, 0);
    b.add(e, t.coeff);
  }
  return std::move(b).build();
}

Series divide_exact(const Series& a, const Series& d) {
  require_same_spec(a, d, "divide_exact");
  if (d.is_zero()) fail(ErrorKind::InexactDivision, "division by zero");
  const TruncationSpec& spec = a.spec();
  if (a.is_zero()) return a;
  if (d.size() == 1) {
    const Term& dt = d.terms()[0];
    SeriesBuilder b(spec);
    for (const auto& t : a.terms()) {
      if (t.coeff % dt.coeff != 0)
        fail(ErrorKind::InexactDivision, "coefficient of " + exp_to_string(t.exp));
      ExpVec e = t.exp - dt.exp;
      if (e[Var::q] < 0) fail(ErrorKind::InexactDivision, "term " + exp_to_string(t.exp));
      spec.check_exponent(e);
      b.add(e, t.coeff / dt.coeff);
    }
    return std::move(b).build();
  }
  // Long division against the lexicographically least term of d; quotient
  // exponents must stay within the exponent ranges allowed by a and d.
  std::array<int, kNumVars> lo{}, hi{};
  for (Var v : kAllVars) {
    int amin = INT16_MAX, amax = INT16_MIN, dmin = INT16_MAX, dmax = INT16_MIN;
    for (const auto& t : a.terms()) amin = std::min(amin, t.exp[v]), amax = std::max(amax, t.exp[v]);
    for (const auto& t : d.terms()) dmin = std::min(dmin, t.exp[v]), dmax = std::max(dmax, t.exp[v]);
    lo[idx(v)] = amin - dmin;
    hi[idx(v)] = amax - dmax;
    // Truncated directions cannot bound the quotient from above.
    if (spec.bounded(v)) hi[idx(v)] = std::max(hi[idx(v)], amax - dmin);
  }
  const Term& lead = d.terms()[0];
  Series r = a;
  SeriesBuilder quotient(spec);
  while (!r.is_zero()) {
    const Term& t = r.terms()[0];
    ExpVec e = t.exp - lead.exp;
    bool ok = t.coeff % lead.coeff == 0;
    for (Var v : kAllVars) ok = ok && e[v] >= lo[idx(v)] && e[v] <= hi[idx(v)];
    if (!ok) fail(ErrorKind::InexactDivision, "remainder term " + exp_to_string(t.exp));
    Integer c = t.coeff / lead.coeff;
    quotient.add(e, c);
    r -= shift(d, e, c);
  }
  return std::move(quotient).build();
}

Series restrict_to(const Series& a, const TruncationSpec& spec) {
  SeriesBuilder b(spec);
  for (const auto& t : a.terms()) {
    for (Var v : kAllVars) {
      if (t.exp[v] != 0 && !spec.has(v))
        fail(ErrorKind::SpecMismatch, std::string("variable ") + var_name(v) + " not in target spec");
    }
    b.add(t.exp, t.coeff);
  }
  return std::move(b).build();
}

}  // namespace polysym

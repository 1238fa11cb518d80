#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polysym {

using Integer = boost::multiprecision::cpp_int;

// Formal variables in canonical order: t, x, y, q, s, u, v, z, w.
enum class Var : std::uint8_t { t, x, y, q, s, u, v, z, w };
inline constexpr std::size_t kNumVars = 9;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::t, Var::x, Var::y, Var::q, Var::s,
                                                       Var::u, Var::v, Var::z, Var::w};

char var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

constexpr std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

// Bit set of variables.
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr VarSet(std::initializer_list<Var> vs) {
    for (Var v : vs) bits_ |= bit(v);
  }
  constexpr bool contains(Var v) const { return (bits_ & bit(v)) != 0; }
  constexpr VarSet with(Var v) const { return VarSet(bits_ | bit(v)); }
  constexpr VarSet without(Var v) const { return VarSet(bits_ & ~bit(v)); }
  constexpr bool includes(VarSet o) const { return (o.bits_ & ~bits_) == 0; }
  constexpr std::uint16_t raw() const { return bits_; }
  friend constexpr bool operator==(VarSet, VarSet) = default;

 private:
  constexpr explicit VarSet(std::uint16_t b) : bits_(b) {}
  static constexpr std::uint16_t bit(Var v) { return static_cast<std::uint16_t>(1u << idx(v)); }
  std::uint16_t bits_ = 0;
};

enum class ErrorKind {
  InvalidExponent,
  SpecMismatch,
  NotInvertible,
  NegativeFinalExponent,
  InexactDivision,
  Unsupported,
};

const char* error_kind_name(ErrorKind k);

class SeriesError : public std::runtime_error {
 public:
  SeriesError(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Exponent vector over the nine variables. Lexicographic comparison follows
// the canonical variable order.
struct ExpVec {
  std::array<std::int16_t, kNumVars> e{};

  ExpVec() = default;
  ExpVec(std::initializer_list<std::pair<Var, int>> pairs);

  int operator[](Var v) const { return e[idx(v)]; }
  void set(Var v, int k);
  bool is_zero() const;

  ExpVec& operator+=(const ExpVec& o);
  friend ExpVec operator+(ExpVec a, const ExpVec& b) { return a += b; }
  friend ExpVec operator-(const ExpVec& a, const ExpVec& b);
  friend ExpVec operator*(int k, const ExpVec& a);
  friend auto operator<=>(const ExpVec&, const ExpVec&) = default;
  friend bool operator==(const ExpVec&, const ExpVec&) = default;
};

struct ExpVecHash {
  std::size_t operator()(const ExpVec& a) const noexcept;
};

// Shorthand for monomials: mono(Var::x, 2, Var::q, 3).
ExpVec mono(Var v, int k);
ExpVec mono(Var v1, int k1, Var v2, int k2);
ExpVec mono(Var v1, int k1, Var v2, int k2, Var v3, int k3);

// Active variables and degree caps. q is always active and capped by qmax.
// Besides per-variable caps an optional weighted cap sum_v w_v e_v <= bound
// (weights >= 0) is supported; half-perimeter bounds x + y <= n use it.
// Capped and weighted variables are "bounded": their exponents must stay
// nonnegative. Only unbounded non-q variables may carry negative exponents.
class TruncationSpec {
 public:
  explicit TruncationSpec(int qmax, VarSet vars = {Var::q});

  int qmax() const { return qmax_; }
  VarSet vars() const { return vars_; }
  bool has(Var v) const { return vars_.contains(v); }
  std::optional<int> cap(Var v) const;
  int weight(Var v) const { return weights_[idx(v)]; }
  std::optional<int> weighted_bound() const;

  bool bounded(Var v) const;

  TruncationSpec with_var(Var v) const;
  TruncationSpec without_var(Var v) const;
  TruncationSpec with_qmax(int qmax) const;
  TruncationSpec with_cap(Var v, int cap) const;
  TruncationSpec without_cap(Var v) const;
  TruncationSpec with_weighted(std::initializer_list<std::pair<Var, int>> weights,
                               int bound) const;
  TruncationSpec with_weighted(const std::array<int, kNumVars>& weights, int bound) const;
  TruncationSpec without_weighted() const;
  const std::array<int, kNumVars>& weights() const { return weights_; }

  // Whether e survives truncation (caps only; sign rules checked separately).
  bool admits(const ExpVec& e) const;
  int weighted_degree(const ExpVec& e) const;
  // Throws InvalidExponent if e uses an inactive variable, a negative exponent
  // in q or a bounded variable, or exceeds the defensive exponent limit.
  void check_exponent(const ExpVec& e) const;
  int exponent_limit() const;

  std::string describe() const;

  friend bool operator==(const TruncationSpec&, const TruncationSpec&) = default;

 private:
  int qmax_;
  VarSet vars_;
  std::array<int, kNumVars> caps_{};  // -1 when absent
  std::array<int, kNumVars> weights_{};
  int bound_ = -1;  // -1 when no weighted cap
};

struct Term {
  ExpVec exp;
  Integer coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Truncated multivariate Laurent series with exact integer coefficients.
// Terms are stored sorted by exponent in canonical order, no zero entries.
class Series {
 public:
  explicit Series(TruncationSpec spec);

  static Series monomial(const Integer& c, const ExpVec& e, const TruncationSpec& spec);
  static Series constant(const Integer& c, const TruncationSpec& spec);
  // Sums duplicate exponents, drops zeros and truncated terms.
  static Series from_terms(const TruncationSpec& spec, std::vector<Term> terms);

  const TruncationSpec& spec() const { return spec_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const ExpVec& e) const;
  Integer constant_term() const { return coeff(ExpVec{}); }
  Integer coeff_sum() const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  Series operator-() const;
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Integer& c, const Series& a);
  friend bool operator==(const Series& a, const Series& b) = default;

  // Verifies internal invariants; throws on violation.
  void validate() const;

 private:
  friend class SeriesBuilder;
  TruncationSpec spec_;
  std::vector<Term> terms_;
};

// Accumulates terms through a hash map and produces a canonical Series.
class SeriesBuilder {
 public:
  explicit SeriesBuilder(TruncationSpec spec);
  // Adds c * x^e when e is admitted; exponent sign rules are checked.
  void add(const ExpVec& e, const Integer& c);
  void add(const Series& s);
  Series build() &&;
  const TruncationSpec& spec() const { return spec_; }

 private:
  TruncationSpec spec_;
  std::vector<Term> pending_;
};

Series add(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, const Integer& c);
// Multiplies by c * x^e, truncating.
Series shift(const Series& a, const ExpVec& e, const Integer& c = 1);
Series power(const Series& a, int n);
Series invert(const Series& a);
// prod_{k=0}^{n-1} (1 - a q^k)
Series pochhammer(const Series& a, int n);
Series derivative(const Series& a, Var v);

struct Image {
  Integer coeff = 1;
  ExpVec exp;
};
using ImageMap = std::vector<std::pair<Var, Image>>;

// Rewrites each variable through a monomial image; variables without an image
// are kept. Resulting terms must have nonnegative exponents in q and all
// bounded variables of out_spec, else NegativeFinalExponent.
Series substitute(const Series& a, const ImageMap& images, const TruncationSpec& out_spec);

// As substitute, but v^m is replaced by the series-valued image f(m) (a list
// of terms in out_spec exponents). f(0) must be 1.
using GradedImage = std::function<std::vector<Term>(int m)>;
Series substitute_graded(const Series& a, Var v, const GradedImage& f, const ImageMap& images,
                         const TruncationSpec& out_spec);

// Terms with v-exponent k, with v removed. A weighted cap involving v is
// tightened by the weight of the extracted power.
Series coeff_extract(const Series& a, Var v, int k);
Series eval_at_one(const Series& a, Var v);
Series divide_exact(const Series& a, const Series& d);
// Re-expresses a under another spec, dropping terms it does not admit.
Series restrict_to(const Series& a, const TruncationSpec& spec);

}  // namespace polysym

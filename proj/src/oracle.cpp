#include "polysym/oracle.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <sstream>

namespace polysym {

// ---------------------------------------------------------------- Polyomino

Polyomino Polyomino::from_cells(std::vector<Cell> cells) {
  Polyomino p;
  if (cells.empty()) return p;
  int minc = INT_MAX, minr = INT_MAX, maxc = INT_MIN, maxr = INT_MIN;
  for (const auto& x : cells) {
    minc = std::min(minc, x.c);
    minr = std::min(minr, x.r);
    maxc = std::max(maxc, x.c);
    maxr = std::max(maxr, x.r);
  }
  for (auto& x : cells) x = Cell{x.c - minc, x.r - minr};
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  p.cells_ = std::move(cells);
  p.width_ = maxc - minc + 1;
  p.height_ = maxr - minr + 1;
  return p;
}

bool Polyomino::contains(Cell x) const { return std::binary_search(cells_.begin(), cells_.end(), x); }

bool Polyomino::is_connected() const {
  if (cells_.empty()) return false;
  std::set<Cell> seen{cells_[0]};
  std::vector<Cell> stack{cells_[0]};
  while (!stack.empty()) {
    Cell x = stack.back();
    stack.pop_back();
    for (Cell n : {Cell{x.c + 1, x.r}, Cell{x.c - 1, x.r}, Cell{x.c, x.r + 1}, Cell{x.c, x.r - 1}}) {
      if (contains(n) && seen.insert(n).second) stack.push_back(n);
    }
  }
  return seen.size() == cells_.size();
}

bool Polyomino::is_row_convex() const {
  std::map<int, std::vector<int>> rows;
  for (const auto& x : cells_) rows[x.r].push_back(x.c);
  for (auto& [r, cs] : rows) {
    std::sort(cs.begin(), cs.end());
    if (cs.back() - cs.front() + 1 != static_cast<int>(cs.size())) return false;
  }
  return true;
}

bool Polyomino::is_column_convex() const {
  std::map<int, std::vector<int>> cols;
  for (const auto& x : cells_) cols[x.c].push_back(x.r);
  for (auto& [c, rs] : cols) {
    std::sort(rs.begin(), rs.end());
    if (rs.back() - rs.front() + 1 != static_cast<int>(rs.size())) return false;
  }
  return true;
}

Polyomino Polyomino::transformed(GroupElement g) const {
  std::vector<Cell> out;
  out.reserve(cells_.size());
  for (const auto& x : cells_) out.push_back(apply(g, x));
  return from_cells(std::move(out));
}

// -------------------------------------------------------------- enumeration

namespace {

class ConvexEnumerator {
 public:
  ConvexEnumerator(int max_area, int max_hp, const std::function<void(const Polyomino&)>& visit)
      : A_(max_area), H_(max_hp), visit_(visit) {
    span_ = std::min(A_, H_) + 2;
    closed_.assign(2 * span_ + 1, 0);
  }

  void run() {
    for (int t = 0; t + 1 <= A_ && 1 + (t + 1) <= H_; ++t) {
      cols_.push_back({0, t});
      descend(t + 1, 0, t);
      cols_.pop_back();
    }
  }

 private:
  char& closed(int row) { return closed_[row + span_]; }

  void emit(int minb) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < cols_.size(); ++i)
      for (int r = cols_[i].first; r <= cols_[i].second; ++r)
        cells.push_back(Cell{static_cast<int>(i), r - minb});
    visit_(Polyomino::from_cells(std::move(cells)));
  }

  void descend(int area, int minb, int maxt) {
    emit(minb);
    const auto [pb, pt] = cols_.back();
    const int w = static_cast<int>(cols_.size()) + 1;
    if (w + 1 > H_ || area + 1 > A_) return;
    const int room = A_ - area;
    // Rows below pb are tried in decreasing order, so rows strictly between b
    // and pb have already been checked against the closed set.
    for (int b = pt; b >= pb - room + 1; --b) {
      if (b < pb && pb - b + 1 > room) break;
      if (w + maxt - std::min(minb, b) + 1 > H_) break;
      if (closed(b)) break;
      for (int t = std::max(b, pb); t - b + 1 <= room; ++t) {
        if (w + std::max(maxt, t) - std::min(minb, b) + 1 > H_) break;
        if (closed(t)) break;
        // Rows of the previous column that this column drops become closed.
        std::vector<int> newly;
        for (int r = pb; r <= pt; ++r) {
          if (r < b || r > t) {
            closed(r) = 1;
            newly.push_back(r);
          }
        }
        cols_.push_back({b, t});
        descend(area + (t - b + 1), std::min(minb, b), std::max(maxt, t));
        cols_.pop_back();
        for (int r : newly) closed(r) = 0;
      }
    }
  }

  int A_, H_;
  int span_;
  const std::function<void(const Polyomino&)>& visit_;
  std::vector<std::pair<int, int>> cols_;
  std::vector<char> closed_;
};

}  // namespace

void enumerate_convex(int max_area, int max_halfperim,
                      const std::function<void(const Polyomino&)>& visit) {
  bool area_ok = max_area != kUnbounded && max_area <= kOracleMaxArea;
  bool hp_ok = max_halfperim != kUnbounded && max_halfperim <= kOracleMaxHalfPerimeter;
  if (!area_ok && !hp_ok) {
    std::ostringstream os;
    os << "oracle enumeration refused: area bound " << max_area << ", half-perimeter bound "
       << max_halfperim << " (limits " << kOracleMaxArea << " / " << kOracleMaxHalfPerimeter << ")";
    throw RefusedScale(os.str());
  }
  // Each bound implies the other: area <= floor(h/2) ceil(h/2), h <= area + 1.
  int a = area_ok ? max_area : (max_halfperim / 2) * ((max_halfperim + 1) / 2);
  int h = hp_ok ? max_halfperim : max_area + 1;
  if (a < 1 || h < 2) return;
  a = std::min(a, (h / 2) * ((h + 1) / 2));
  h = std::min(h, a + 1);
  ConvexEnumerator(a, h, visit).run();
}

Subgroup stabilizer(const Polyomino& p) {
  std::uint8_t mask = 0;
  for (auto g : kAllElements) {
    if (p.transformed(g) == p) mask |= static_cast<std::uint8_t>(1u << static_cast<int>(g));
  }
  return subgroup_from_mask(mask);
}

Polyomino canonical_form(const Polyomino& p, Subgroup group) {
  Polyomino best = p;
  for (auto g : elements(group)) {
    Polyomino img = p.transformed(g);
    if (img < best) best = std::move(img);
  }
  return best;
}

// ------------------------------------------------------------------- census

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << kCensusHeader << '\n';
  for (const auto& r : rows) {
    os << r.size << ',' << r.id << ',' << r.r << ',' << r.r2 << ',' << r.rotation << ',' << r.h_v
       << ',' << r.d1_d2 << ',' << r.congruence << ',' << r.hv << ',' << r.d1d2 << ',' << r.asym
       << '\n';
  }
  return os.str();
}

namespace {

void for_each_in_census(CensusBy by, int max,
                        const std::function<void(int size, const Polyomino&)>& f) {
  if (by == CensusBy::area) {
    enumerate_convex(max, kUnbounded, [&](const Polyomino& p) { f(p.area(), p); });
  } else {
    enumerate_convex(kUnbounded, max / 2, [&](const Polyomino& p) { f(2 * p.half_perimeter(), p); });
  }
}

std::vector<int> census_sizes(CensusBy by, int max) {
  std::vector<int> out;
  if (by == CensusBy::area) {
    for (int n = 1; n <= max; ++n) out.push_back(n);
  } else {
    for (int n = 4; n <= max; n += 2) out.push_back(n);
  }
  return out;
}

}  // namespace

std::vector<CensusRow> oracle_census(CensusBy by, int max) {
  std::map<int, std::array<long, 8>> counts;  // id r r2 h_v d1_d2 hv d1d2 asym
  for_each_in_census(by, max, [&](int size, const Polyomino& p) {
    Subgroup s = stabilizer(p);
    auto& c = counts[size];
    c[0] += 1;
    c[1] += contains(s, GroupElement::r);
    c[2] += contains(s, GroupElement::r2);
    c[3] += contains(s, GroupElement::h);
    c[4] += contains(s, GroupElement::d1);
    c[5] += contains(s, Subgroup::hv);
    c[6] += contains(s, Subgroup::d1d2);
    c[7] += s == Subgroup::trivial;
  });
  std::vector<CensusRow> rows;
  for (int n : census_sizes(by, max)) {
    auto c = counts[n];
    CensusRow row;
    row.size = n;
    row.id = c[0];
    row.r = c[1];
    row.r2 = c[2];
    row.h_v = c[3];
    row.d1_d2 = c[4];
    row.hv = c[5];
    row.d1d2 = c[6];
    row.asym = c[7];
    Integer rot = row.id + 2 * row.r + row.r2;
    Integer con = rot + 2 * row.h_v + 2 * row.d1_d2;
    if (rot % 4 != 0 || con % 8 != 0) throw std::logic_error("Burnside sums not divisible");
    row.rotation = rot / 4;
    row.congruence = con / 8;
    rows.push_back(row);
  }
  return rows;
}

std::vector<OrbitCount> direct_orbit_counts(CensusBy by, int max) {
  std::map<int, std::pair<std::set<Polyomino>, std::set<Polyomino>>> orbits;
  for_each_in_census(by, max, [&](int size, const Polyomino& p) {
    orbits[size].first.insert(canonical_form(p, Subgroup::c4));
    orbits[size].second.insert(canonical_form(p, Subgroup::d4));
  });
  std::vector<OrbitCount> out;
  for (int n : census_sizes(by, max)) {
    auto& o = orbits[n];
    out.push_back(OrbitCount{n, static_cast<long>(o.first.size()), static_cast<long>(o.second.size())});
  }
  return out;
}

// ------------------------------------------------------------ class series

namespace {

struct RowExtent {
  int a, b;  // first and last column of the row
};

std::vector<RowExtent> row_extents(const Polyomino& p) {
  std::vector<RowExtent> rows(p.height(), RowExtent{INT_MAX, INT_MIN});
  for (const auto& x : p.cells()) {
    rows[x.r].a = std::min(rows[x.r].a, x.c);
    rows[x.r].b = std::max(rows[x.r].b, x.c);
  }
  return rows;
}

int column_height(const Polyomino& p, int c) {
  int n = 0;
  for (const auto& x : p.cells()) n += x.c == c;
  return n;
}

// Topmost and bottommost row of the rightmost column.
std::pair<int, int> rightmost_column_rows(const Polyomino& p) {
  int lo = INT_MAX, hi = INT_MIN;
  for (const auto& x : p.cells()) {
    if (x.c != p.width() - 1) continue;
    lo = std::min(lo, x.r);
    hi = std::max(hi, x.r);
  }
  return {lo, hi};
}

bool unimodal(const std::vector<int>& v) {
  std::size_t i = 1;
  while (i < v.size() && v[i] >= v[i - 1]) ++i;
  while (i < v.size() && v[i] <= v[i - 1]) ++i;
  return i >= v.size();
}

bool reachable_north_east(const Polyomino& p, const std::vector<Cell>& sources) {
  std::set<Cell> seen(sources.begin(), sources.end());
  std::vector<Cell> stack(sources.begin(), sources.end());
  while (!stack.empty()) {
    Cell x = stack.back();
    stack.pop_back();
    for (Cell n : {Cell{x.c + 1, x.r}, Cell{x.c, x.r + 1}}) {
      if (p.contains(n) && seen.insert(n).second) stack.push_back(n);
    }
  }
  return seen.size() == p.cells().size();
}

// Left-justified rows.
bool left_justified(const std::vector<RowExtent>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const RowExtent& r) { return r.a == 0; });
}

// Each row starts one column left of the row below.
bool left_staircase(const std::vector<RowExtent>& rows) {
  for (std::size_t r = 1; r < rows.size(); ++r)
    if (rows[r].a != rows[r - 1].a - 1) return false;
  return true;
}

std::vector<int> row_ends(const std::vector<RowExtent>& rows) {
  std::vector<int> out;
  for (const auto& r : rows) out.push_back(r.b);
  return out;
}

std::vector<int> row_lengths(const std::vector<RowExtent>& rows) {
  std::vector<int> out;
  for (const auto& r : rows) out.push_back(r.b - r.a + 1);
  return out;
}

bool is_shifted_stack(const std::vector<RowExtent>& rows) {
  return left_staircase(rows) && unimodal(row_ends(rows));
}

// Diagonal-source data of a shifted directed convex polyomino, if it is one.
struct DiagonalSource {
  int length;
  int flotation_row;
};

std::optional<DiagonalSource> diagonal_source(const Polyomino& p) {
  int k = INT_MAX;
  for (const auto& x : p.cells()) k = std::min(k, x.c + x.r);
  std::vector<Cell> diag;
  for (const auto& x : p.cells())
    if (x.c + x.r == k) diag.push_back(x);
  std::sort(diag.begin(), diag.end());
  for (std::size_t i = 1; i < diag.size(); ++i)
    if (diag[i].c != diag[i - 1].c + 1) return std::nullopt;
  if (!reachable_north_east(p, diag)) return std::nullopt;
  return DiagonalSource{static_cast<int>(diag.size()), diag.front().r};
}

// Fundamental region of a polyomino symmetric in both diagonals.
struct DoublyShifted {
  bool even;
  int width, n1, n2, area;
  int se_row_sign, ne_row_sign;  // sign of doubled row coordinate (-1, 0, 1)
  bool valid;
};

DoublyShifted fundamental_region(const Polyomino& p) {
  DoublyShifted d{};
  const int W = p.width();
  d.even = W % 2 == 0;
  int maxX = INT_MIN;
  std::vector<std::pair<int, int>> q;
  for (const auto& x : p.cells()) {
    int X = 2 * x.c + 1 - W, Y = 2 * x.r + 1 - W;
    if (X < std::abs(Y)) continue;
    q.push_back({X, Y});
    maxX = std::max(maxX, X);
    d.area += 1;
    d.n1 += Y == -X;
    d.n2 += Y == X;
  }
  d.width = d.even ? (maxX - 1) / 2 + 1 : maxX / 2 + 1;
  int lo = INT_MAX, hi = INT_MIN;
  for (auto [X, Y] : q) {
    if (X != maxX) continue;
    lo = std::min(lo, Y);
    hi = std::max(hi, Y);
  }
  auto sign = [](int y) { return (y > 0) - (y < 0); };
  d.se_row_sign = sign(lo);
  d.ne_row_sign = sign(hi);
  d.valid = !q.empty();
  return d;
}

bool is_doubly_shifted_class(ClassId id) {
  switch (id) {
    case ClassId::E1: case ClassId::E2: case ClassId::E3: case ClassId::Eall:
    case ClassId::A1: case ClassId::A2: case ClassId::A3: case ClassId::Aall:
      return true;
    default:
      return false;
  }
}

bool in_doubly_shifted_class(ClassId id, const DoublyShifted& d) {
  const bool se_low = d.even ? d.se_row_sign < 0 : d.se_row_sign <= 0;
  const bool ne_high = d.even ? d.ne_row_sign > 0 : d.ne_row_sign >= 0;
  switch (id) {
    case ClassId::E1: return d.even && se_low;
    case ClassId::E2: return d.even && ne_high;
    case ClassId::E3: return d.even && se_low && ne_high;
    case ClassId::Eall: return d.even;
    case ClassId::A1: return !d.even && se_low;
    case ClassId::A2: return !d.even && ne_high;
    case ClassId::A3: return !d.even && se_low && ne_high;
    case ClassId::Aall: return !d.even;
    default: return false;
  }
}

int halfperimeter_bound(const TruncationSpec& spec) {
  int h = kUnbounded;
  auto tighten = [&](int b) { h = h == kUnbounded ? b : std::min(h, b); };
  if (spec.has(Var::t) && spec.cap(Var::t)) tighten(*spec.cap(Var::t));
  if (auto b = spec.weighted_bound()) {
    if (spec.weight(Var::x) == 1 && spec.weight(Var::y) == 1) tighten(*b);
  }
  return h;
}

void add_weight(SeriesBuilder& out, const Polyomino& p, ExpVec extra = {}) {
  const TruncationSpec& spec = out.spec();
  ExpVec e = extra;
  e.set(Var::q, p.area());
  if (spec.has(Var::t)) e.set(Var::t, p.half_perimeter());
  if (spec.has(Var::x)) e.set(Var::x, p.width());
  if (spec.has(Var::y)) e.set(Var::y, p.height());
  out.add(e, 1);
}

void maybe_set(const TruncationSpec& spec, ExpVec& e, Var v, int k) {
  if (spec.has(v)) e.set(v, k);
}

// Row-length sequences for partitions and stacks with empty rows allowed.
Series sequence_series(ClassId id, const TruncationSpec& spec) {
  int kmax = spec.cap(Var::y).value_or(INT_MAX);
  if (auto b = spec.weighted_bound(); b && spec.weight(Var::y) > 0) kmax = std::min(kmax, *b / spec.weight(Var::y));
  if (kmax == INT_MAX) throw RefusedScale("empty rows need a cap on y");
  const int Q = spec.qmax();
  SeriesBuilder out(spec);
  std::vector<int> seq;
  // Generates nonnegative sequences of length <= kmax with sum <= Q; prunes
  // sequences that cannot extend to a valid shape.
  std::function<void(int)> rec = [&](int sum) {
    if (!seq.empty()) {
      bool ok = id == ClassId::P0 ? std::is_sorted(seq.rbegin(), seq.rend()) : unimodal(seq);
      if (ok) {
        int mx = *std::max_element(seq.begin(), seq.end());
        out.add(ExpVec{{Var::x, mx}, {Var::y, static_cast<int>(seq.size())}, {Var::q, sum}}, 1);
      }
    }
    if (static_cast<int>(seq.size()) >= kmax) return;
    for (int k = 0; sum + k <= Q; ++k) {
      seq.push_back(k);
      bool prefix_ok = id == ClassId::P0 ? std::is_sorted(seq.rbegin(), seq.rend()) : unimodal(seq);
      if (prefix_ok) rec(sum + k);
      seq.pop_back();
    }
  };
  rec(0);
  return std::move(out).build();
}

// Fundamental regions of every d1d2-symmetric convex polyomino up to the
// oracle's area limit, enumerated once.
const std::vector<DoublyShifted>& d1d2_regions() {
  static const std::vector<DoublyShifted> regions = [] {
    std::vector<DoublyShifted> r;
    enumerate_convex(kOracleMaxArea, kUnbounded, [&](const Polyomino& p) {
      if (!contains(stabilizer(p), Subgroup::d1d2)) return;
      DoublyShifted d = fundamental_region(p);
      if (d.valid) r.push_back(d);
    });
    return r;
  }();
  return regions;
}

}  // namespace

bool doubly_shifted_term_covered(ClassId id, const ExpVec& e) {
  bool acute = id == ClassId::A1 || id == ClassId::A2 || id == ClassId::A3 || id == ClassId::Aall;
  int area = 4 * e[Var::q] - 2 * e[Var::z] - 2 * e[Var::w] + (acute ? 1 : 0);
  return area <= kOracleMaxArea;
}

Series oracle_series(ClassId id, const TruncationSpec& spec) {
  if (id == ClassId::P0 || id == ClassId::T0) return sequence_series(id, spec);
  SeriesBuilder out(spec);
  if (is_doubly_shifted_class(id)) {
    for (const DoublyShifted& d : d1d2_regions()) {
      if (!in_doubly_shifted_class(id, d)) continue;
      ExpVec e{{Var::x, d.width}, {Var::q, d.area}};
      maybe_set(spec, e, Var::z, d.n1);
      maybe_set(spec, e, Var::w, d.n2);
      out.add(e, 1);
    }
    return std::move(out).build();
  }
  const int hp = halfperimeter_bound(spec);
  const int area = spec.qmax() <= kOracleMaxArea ? spec.qmax() : kUnbounded;
  enumerate_convex(area, hp, [&](const Polyomino& p) {
    auto rows = row_extents(p);
    ExpVec extra;
    switch (id) {
      case ClassId::C:
        break;
      case ClassId::P: {
        auto len = row_lengths(rows);
        if (!left_justified(rows) || !std::is_sorted(len.rbegin(), len.rend())) return;
        break;
      }
      case ClassId::PS:
      case ClassId::PS_u: {
        for (std::size_t r = 0; r < rows.size(); ++r)
          if (rows[r].a != static_cast<int>(r)) return;
        auto ends = row_ends(rows);
        if (!std::is_sorted(ends.rbegin(), ends.rend())) return;
        if (id == ClassId::PS_u) maybe_set(spec, extra, Var::u, p.width());
        break;
      }
      case ClassId::T:
        if (!left_justified(rows) || !unimodal(row_lengths(rows))) return;
        break;
      case ClassId::TS:
      case ClassId::P1:
      case ClassId::R: {
        if (!is_shifted_stack(rows)) return;
        auto ends = row_ends(rows);
        int top = ends.back();
        int mx = *std::max_element(ends.begin(), ends.end());
        bool top_is_unique_max = std::count(ends.begin(), ends.end(), mx) == 1 && top == mx;
        if (id == ClassId::P1 && !(top_is_unique_max && std::is_sorted(ends.begin(), ends.end())))
          return;
        if (id == ClassId::R && top == mx) return;
        maybe_set(spec, extra, Var::u, rows.back().b - rows.back().a + 1);
        break;
      }
      case ClassId::D:
        if (!p.contains(Cell{0, 0}) || !reachable_north_east(p, {Cell{0, 0}})) return;
        maybe_set(spec, extra, Var::s, column_height(p, 0));
        break;
      case ClassId::DS:
      case ClassId::Y1:
      case ClassId::Y2: {
        auto src = diagonal_source(p);
        if (!src) return;
        int ne_row = rightmost_column_rows(p).second;
        if (id == ClassId::Y1 && ne_row < src->flotation_row) return;
        if (id == ClassId::Y2 && ne_row >= src->flotation_row) return;
        maybe_set(spec, extra, Var::z, src->length);
        if (id == ClassId::Y1) maybe_set(spec, extra, Var::v, rows.front().b - rows.front().a + 1);
        if (id == ClassId::Y2) maybe_set(spec, extra, Var::u, rows.back().b - rows.back().a + 1);
        break;
      }
      default:
        throw std::logic_error("unhandled class in oracle");
    }
    add_weight(out, p, extra);
  });
  return std::move(out).build();
}

Series oracle_series(SymClassId id, const TruncationSpec& spec) {
  SeriesBuilder out(spec);
  const int hp = halfperimeter_bound(spec);
  const int area = spec.qmax() <= kOracleMaxArea ? spec.qmax() : kUnbounded;
  enumerate_convex(area, hp, [&](const Polyomino& p) {
    Subgroup s = stabilizer(p);
    bool even = p.width() % 2 == 0;
    bool in = false;
    switch (id) {
      case SymClassId::Fr: in = contains(s, GroupElement::r); break;
      case SymClassId::Fr2: in = contains(s, GroupElement::r2); break;
      case SymClassId::Fr2_even: in = contains(s, GroupElement::r2) && even; break;
      case SymClassId::Fr2_odd: in = contains(s, GroupElement::r2) && !even; break;
      case SymClassId::Fv: in = contains(s, GroupElement::v); break;
      case SymClassId::Fh: in = contains(s, GroupElement::h); break;
      case SymClassId::Fhv: in = contains(s, Subgroup::hv); break;
      case SymClassId::Fd1: in = contains(s, GroupElement::d1); break;
      case SymClassId::Fd2: in = contains(s, GroupElement::d2); break;
      case SymClassId::Fd1d2: in = contains(s, Subgroup::d1d2); break;
      case SymClassId::Fd1d2_even: in = contains(s, Subgroup::d1d2) && even; break;
      case SymClassId::Fd1d2_odd: in = contains(s, Subgroup::d1d2) && !even; break;
    }
    if (in) add_weight(out, p);
  });
  return std::move(out).build();
}

Series oracle_series(OrbitId id, const TruncationSpec& spec) {
  SeriesBuilder out(spec);
  const int hp = halfperimeter_bound(spec);
  const int area = spec.qmax() <= kOracleMaxArea ? spec.qmax() : kUnbounded;
  enumerate_convex(area, hp, [&](const Polyomino& p) {
    bool in = false;
    switch (id) {
      case OrbitId::rotation: in = canonical_form(p, Subgroup::c4) == p; break;
      case OrbitId::congruence: in = canonical_form(p, Subgroup::d4) == p; break;
      case OrbitId::asym: in = stabilizer(p) == Subgroup::trivial; break;
    }
    if (in) add_weight(out, p);
  });
  return std::move(out).build();
}

Series oracle_fixed_by_all(const TruncationSpec& spec) {
  SeriesBuilder out(spec);
  const int area = spec.qmax() <= kOracleMaxArea ? spec.qmax() : kUnbounded;
  enumerate_convex(area, halfperimeter_bound(spec), [&](const Polyomino& p) {
    if (stabilizer(p) == Subgroup::d4) add_weight(out, p);
  });
  return std::move(out).build();
}

}  // namespace polysym

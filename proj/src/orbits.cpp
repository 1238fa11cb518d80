#include "polysym/orbits.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "polysym/classes.hpp"
#include "polysym/oracle.hpp"
#include "polysym/symmetry.hpp"

namespace polysym {

namespace {

// The seven series every orbit count is built from.
struct Constituents {
  Series C, Fr, Fr2, Fv, Fd, Fhv, Fd1d2;
};

Constituents constituents(const TruncationSpec& spec) {
  auto s = run_parallel({
      [&] { return series_C_tq(spec); },
      [&] { return series_Fr(spec); },
      [&] { return series_Fr2(spec); },
      [&] { return series_Fv(spec); },
      [&] { return series_Fd(spec); },
      [&] { return series_Fhv(spec); },
      [&] { return series_Fd1d2(spec); },
  });
  return {s[0], s[1], s[2], s[3], s[4], s[5], s[6]};
}

Series at_least(Subgroup h, const Constituents& c, const TruncationSpec& spec) {
  switch (h) {
    case Subgroup::trivial: return c.C;
    case Subgroup::r2: return c.Fr2;
    case Subgroup::h:
    case Subgroup::v: return c.Fv;
    case Subgroup::d1:
    case Subgroup::d2: return c.Fd;
    case Subgroup::c4: return c.Fr;
    case Subgroup::hv: return c.Fhv;
    case Subgroup::d1d2: return c.Fd1d2;
    case Subgroup::d4: return oracle_fixed_by_all(spec);
  }
  throw SeriesError(ErrorKind::Unsupported, "unknown subgroup");
}

Series divide_counts(const Series& a, int d) {
  SeriesBuilder b(a.spec());
  for (const Term& t : a.terms()) {
    if (t.coeff % d != 0)
      throw SeriesError(ErrorKind::InexactDivision, "orbit sum not divisible by " + std::to_string(d));
    b.add(t.exp, t.coeff / d);
  }
  return std::move(b).build();
}

void require_nonnegative(const Series& a, const char* what) {
  for (const Term& t : a.terms())
    if (t.coeff < 0)
      throw SeriesError(ErrorKind::NegativeFinalExponent, std::string(what) + " has a negative coefficient");
}

Series rotation(const Constituents& c) { return divide_counts(c.C + Integer(2) * c.Fr + c.Fr2, 4); }

Series congruence(const Constituents& c) {
  return divide_counts(c.C + Integer(2) * c.Fr + c.Fr2 + Integer(2) * c.Fd + Integer(2) * c.Fv, 8);
}

Series asymmetric(const Constituents& c, const TruncationSpec& spec) {
  Series r(c.C.spec());
  for (Subgroup h : kAllSubgroups) {
    int mu = mobius(h);
    if (mu != 0) r += Integer(mu) * at_least(h, c, spec);
  }
  require_nonnegative(r, "asymmetric series");
  return r;
}

Series asymmetric_expanded(const Constituents& c) {
  Series r = c.C - Integer(2) * c.Fd - c.Fr2 - Integer(2) * c.Fv + Integer(2) * c.Fd1d2 +
             Integer(2) * c.Fhv;
  require_nonnegative(r, "asymmetric series");
  return r;
}

}  // namespace

int thread_count() {
  const char* env = std::getenv("POLYSYM_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1 || n > 1024)
    throw std::invalid_argument("POLYSYM_THREADS must be an integer >= 1");
  return static_cast<int>(n);
}

std::vector<Series> run_parallel(const std::vector<std::function<Series()>>& jobs) {
  std::vector<std::optional<Series>> out(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      try {
        out[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n = std::min<int>(thread_count(), static_cast<int>(jobs.size()));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < n; ++k) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Series> r;
  r.reserve(out.size());
  for (auto& s : out) r.push_back(std::move(*s));
  return r;
}

Series series_C_tq(const TruncationSpec& spec) {
  const int T = halfperimeter_limit(spec);
  auto xy = TruncationSpec(spec.qmax(), VarSet{Var::x, Var::y, Var::q})
                .with_weighted({{Var::x, 1}, {Var::y, 1}}, T);
  return substitute(series_C(xy),
                    {{Var::x, Image{1, mono(Var::t, 1)}}, {Var::y, Image{1, mono(Var::t, 1)}}}, spec);
}

Series series_fixed(GroupElement g, const TruncationSpec& spec) {
  switch (g) {
    case GroupElement::e: return series_C_tq(spec);
    case GroupElement::r:
    case GroupElement::r3: return series_Fr(spec);
    case GroupElement::r2: return series_Fr2(spec);
    case GroupElement::h:
    case GroupElement::v: return series_Fv(spec);
    case GroupElement::d1:
    case GroupElement::d2: return series_Fd(spec);
  }
  throw SeriesError(ErrorKind::Unsupported, "unknown group element");
}

Series series_fixed_at_least(Subgroup h, const TruncationSpec& spec) {
  switch (h) {
    case Subgroup::trivial: return series_C_tq(spec);
    case Subgroup::r2: return series_Fr2(spec);
    case Subgroup::h:
    case Subgroup::v: return series_Fv(spec);
    case Subgroup::d1:
    case Subgroup::d2: return series_Fd(spec);
    case Subgroup::c4: return series_Fr(spec);
    case Subgroup::hv: return series_Fhv(spec);
    case Subgroup::d1d2: return series_Fd1d2(spec);
    case Subgroup::d4: return oracle_fixed_by_all(spec);
  }
  throw SeriesError(ErrorKind::Unsupported, "unknown subgroup");
}

Series series_rotation_type(const TruncationSpec& spec) {
  auto s = run_parallel({[&] { return series_C_tq(spec); }, [&] { return series_Fr(spec); },
                         [&] { return series_Fr2(spec); }});
  return divide_counts(s[0] + Integer(2) * s[1] + s[2], 4);
}

Series series_congruence_type(const TruncationSpec& spec) {
  auto s = run_parallel({[&] { return series_C_tq(spec); }, [&] { return series_Fr(spec); },
                         [&] { return series_Fr2(spec); }, [&] { return series_Fd(spec); },
                         [&] { return series_Fv(spec); }});
  return divide_counts(s[0] + Integer(2) * s[1] + s[2] + Integer(2) * s[3] + Integer(2) * s[4], 8);
}

Series series_asymmetric(const TruncationSpec& spec) { return asymmetric(constituents(spec), spec); }

Series series_asymmetric_expanded(const TruncationSpec& spec) {
  return asymmetric_expanded(constituents(spec));
}

Series series_exactly(Subgroup g, const TruncationSpec& spec) {
  std::vector<Subgroup> above;
  for (Subgroup h : kAllSubgroups)
    if (contains(h, g) && mobius(g, h) != 0) above.push_back(h);
  std::vector<std::function<Series()>> jobs;
  for (Subgroup h : above) jobs.push_back([&spec, h] { return series_fixed_at_least(h, spec); });
  auto f = run_parallel(jobs);
  Series r(spec);
  for (std::size_t i = 0; i < above.size(); ++i) r += Integer(mobius(g, above[i])) * f[i];
  require_nonnegative(r, "exact-stabilizer series");
  return r;
}

Series orbit_series(OrbitId id, const TruncationSpec& spec) {
  switch (id) {
    case OrbitId::rotation: return series_rotation_type(spec);
    case OrbitId::congruence: return series_congruence_type(spec);
    case OrbitId::asym: return series_asymmetric(spec);
  }
  throw SeriesError(ErrorKind::Unsupported, "unknown orbit series");
}

std::vector<CensusRow> formula_census(CensusBy by, int max) {
  // Perimeter 2n needs t^n with area at most n^2/4; area n needs t up to n + 1.
  const bool area = by == CensusBy::area;
  const int tcap = area ? max + 1 : max / 2;
  const int qmax = area ? max : tcap * tcap / 4;
  const auto spec = TruncationSpec(qmax, VarSet{Var::t, Var::q}).with_cap(Var::t, tcap);
  const Constituents c = constituents(spec);
  const Series rot = rotation(c), con = congruence(c), asym = asymmetric(c, spec);
  auto column = [&](const Series& s, int n) {
    Integer sum = 0;
    for (const Term& t : s.terms())
      if ((area ? t.exp[Var::q] : 2 * t.exp[Var::t]) == n) sum += t.coeff;
    return sum;
  };
  std::vector<CensusRow> rows;
  for (int n = area ? 1 : 4; n <= max; n += area ? 1 : 2) {
    CensusRow row;
    row.size = n;
    row.id = column(c.C, n);
    row.r = column(c.Fr, n);
    row.r2 = column(c.Fr2, n);
    row.rotation = column(rot, n);
    row.h_v = column(c.Fv, n);
    row.d1_d2 = column(c.Fd, n);
    row.congruence = column(con, n);
    row.hv = column(c.Fhv, n);
    row.d1d2 = column(c.Fd1d2, n);
    row.asym = column(asym, n);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace polysym

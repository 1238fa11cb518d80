#include "polysym/verify.hpp"

#include <chrono>
#include <exception>

#include "polysym/classes.hpp"
#include "polysym/oracle.hpp"
#include "polysym/orbits.hpp"
#include "polysym/serialize.hpp"
#include "polysym/symmetry.hpp"

namespace polysym {

namespace {

VarSet base_vars(ClassId id) {
  switch (id) {
    case ClassId::PS_u:
    case ClassId::TS:
    case ClassId::P1:
    case ClassId::R: return {Var::u, Var::x, Var::y, Var::q};
    case ClassId::D: return {Var::s, Var::x, Var::y, Var::q};
    case ClassId::Y1: return {Var::v, Var::x, Var::y, Var::z, Var::q};
    case ClassId::Y2:
    case ClassId::DS: return {Var::x, Var::y, Var::z, Var::q};
    case ClassId::E1:
    case ClassId::E2:
    case ClassId::E3:
    case ClassId::Eall:
    case ClassId::A1:
    case ClassId::A2:
    case ClassId::A3:
    case ClassId::Aall: return {Var::x, Var::z, Var::w, Var::q};
    default: return {Var::x, Var::y, Var::q};
  }
}

bool doubly_shifted(ClassId id) { return base_vars(id).includes({Var::w}); }

Series base_series(ClassId id, const TruncationSpec& spec) {
  switch (id) {
    case ClassId::P: return series_P(spec);
    case ClassId::P0: return series_P0(spec);
    case ClassId::PS: return series_PS(spec);
    case ClassId::PS_u: return series_PS_u(spec);
    case ClassId::T: return series_T(spec);
    case ClassId::T0: return series_T0(spec);
    case ClassId::TS: return series_TS(spec);
    case ClassId::P1: return series_P1(spec);
    case ClassId::D: return series_D(spec);
    case ClassId::C: return series_C(spec);
    case ClassId::Y1: return series_Y1(spec);
    case ClassId::Y2: return series_Y2(spec);
    case ClassId::DS: return series_DS(spec);
    case ClassId::R: return series_R(spec);
    case ClassId::E1: return series_E1(spec);
    case ClassId::E2: return series_E2(spec);
    case ClassId::E3: return series_E3(spec);
    case ClassId::Eall: return series_E(spec);
    case ClassId::A1: return series_A1(spec);
    case ClassId::A2: return series_A2(spec);
    case ClassId::A3: return series_A3(spec);
    case ClassId::Aall: return series_A(spec);
  }
  throw SeriesError(ErrorKind::Unsupported, "unknown class");
}

std::string coeff_text(const Integer& c) { return c.str(); }

std::string monomial_text(const ExpVec& e, const TruncationSpec& spec) {
  return to_text(Series::monomial(1, e, spec));
}

Check compare(std::string name, std::function<Series()> expected, std::function<Series()> got) {
  return {name, [name, expected, got] { return first_difference(name, expected(), got()); }};
}

Series keep_covered(ClassId id, const Series& s) {
  SeriesBuilder b(s.spec());
  for (const Term& t : s.terms())
    if (doubly_shifted_term_covered(id, t.exp)) b.add(t.exp, t.coeff);
  return std::move(b).build();
}

TruncationSpec xq(int n) { return TruncationSpec(n, VarSet{Var::x, Var::q}); }
TruncationSpec tq(int n) {
  return TruncationSpec(n, VarSet{Var::t, Var::q}).with_cap(Var::t, n + 1);
}

}  // namespace

TruncationSpec class_spec(const AnyClass& id, int qmax, std::optional<int> tmax) {
  if (!std::holds_alternative<ClassId>(id)) {
    TruncationSpec s(qmax, VarSet{Var::t, Var::q});
    return s.with_cap(Var::t, tmax.value_or(qmax + 1));
  }
  ClassId c = std::get<ClassId>(id);
  TruncationSpec s(qmax, base_vars(c));
  if (doubly_shifted(c)) {
    int cap = tmax.value_or(qmax);
    return s.with_cap(Var::x, cap).with_cap(Var::z, cap).with_cap(Var::w, cap);
  }
  if (tmax) return s.with_weighted({{Var::x, 1}, {Var::y, 1}}, *tmax);
  if (c == ClassId::P0 || c == ClassId::T0) return s.with_cap(Var::y, qmax + 2);
  return s;
}

Series class_series(const AnyClass& id, const TruncationSpec& spec) {
  return std::visit(
      [&](auto v) -> Series {
        using V = decltype(v);
        if constexpr (std::is_same_v<V, ClassId>) return base_series(v, spec);
        else if constexpr (std::is_same_v<V, SymClassId>) return symmetry_series(v, spec);
        else return orbit_series(v, spec);
      },
      id);
}

std::optional<Mismatch> first_difference(const std::string& name, const Series& expected,
                                         const Series& got) {
  if (!(expected.spec() == got.spec()))
    return Mismatch{name, "(spec)", expected.spec().describe(), got.spec().describe()};
  auto a = expected.terms(), b = got.terms();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp))
      return Mismatch{name, monomial_text(a[i].exp, expected.spec()), coeff_text(a[i].coeff), "0"};
    if (i == a.size() || b[j].exp < a[i].exp)
      return Mismatch{name, monomial_text(b[j].exp, got.spec()), "0", coeff_text(b[j].coeff)};
    if (a[i].coeff != b[j].coeff)
      return Mismatch{name, monomial_text(a[i].exp, expected.spec()), coeff_text(a[i].coeff),
                      coeff_text(b[j].coeff)};
    ++i, ++j;
  }
  return std::nullopt;
}

CheckResult run_check(const Check& c) {
  CheckResult r;
  r.name = c.name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.mismatch = c.run();
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<Check> dual_route_checks(int N) {
  std::vector<Check> out;
  const TruncationSpec q(N);
  out.push_back(compare("V_n recurrence vs closed form (n <= 10)",
                        [=] {
                          Series all(xq(N).with_var(Var::y));
                          for (int n = 0; n <= 10; ++n)
                            all += shift(restrict_to(poly_Vn_closed(n, xq(N)), all.spec()), mono(Var::y, n));
                          return all;
                        },
                        [=] {
                          Series all(xq(N).with_var(Var::y));
                          for (int n = 0; n <= 10; ++n)
                            all += shift(restrict_to(poly_Vn(n, xq(N)), all.spec()), mono(Var::y, n));
                          return all;
                        }));
  out.push_back(compare("T_0,n quotient vs double sum (n <= 10)",
                        [=] {
                          Series all(xq(N).with_var(Var::y));
                          for (int n = 1; n <= 10; ++n)
                            all += shift(restrict_to(series_T0n_sum(n, xq(N)), all.spec()), mono(Var::y, n));
                          return all;
                        },
                        [=] {
                          Series all(xq(N).with_var(Var::y));
                          for (int n = 1; n <= 10; ++n)
                            all += shift(restrict_to(series_T0n(n, xq(N)), all.spec()), mono(Var::y, n));
                          return all;
                        }));
  const auto uxyq = TruncationSpec(N, VarSet{Var::u, Var::x, Var::y, Var::q});
  out.push_back(compare("T_S iteration vs closed form", [=] { return series_TS_closed(uxyq); },
                        [=] { return series_TS_iter(uxyq); }));
  const auto xyq = TruncationSpec(N, VarSet{Var::x, Var::y, Var::q});
  out.push_back(compare("P product vs double sum", [=] { return series_P(xyq); },
                        [=] { return series_P_double_sum(xyq); }));
  out.push_back(compare("C dual numbers vs symbolic derivative", [=] { return series_C_symbolic(xyq); },
                        [=] { return series_C(xyq); }));
  const auto xyzq = TruncationSpec(N, VarSet{Var::x, Var::y, Var::z, Var::q});
  out.push_back(compare("Y1 sum vs closed form", [=] { return series_Y1(xyzq); },
                        [=] { return series_Y1_closed(xyzq); }));
  const auto xzwq = TruncationSpec(N, VarSet{Var::x, Var::z, Var::w, Var::q})
                        .with_cap(Var::x, 5)
                        .with_cap(Var::z, 5)
                        .with_cap(Var::w, 5);
  out.push_back(compare("E1 sum vs functional equation", [=] { return series_E1(xzwq); },
                        [=] { return series_E1_iter(xzwq); }));
  out.push_back(compare("A1 sum vs functional equation", [=] { return series_A1(xzwq); },
                        [=] { return series_A1_iter(xzwq); }));
  auto family = [=](auto f) {
    Series all(q.with_var(Var::y));
    for (int m = 0; m <= 12; ++m) all += shift(restrict_to(f(m, q), all.spec()), mono(Var::y, m));
    return all;
  };
  out.push_back(compare("D_m closed vs recurrence (a)", [=] { return family(ferrers_Dm); },
                        [=] { return family(ferrers_Dm_rec_a); }));
  out.push_back(compare("D_m closed vs recurrence (b)", [=] { return family(ferrers_Dm); },
                        [=] { return family(ferrers_Dm_rec_b); }));
  out.push_back(compare("a_2m closed vs recurrence (a)", [=] { return family(poly_a2m); },
                        [=] { return family(poly_a2m_rec_a); }));
  out.push_back(compare("a_2m closed vs recurrence (b)", [=] { return family(poly_a2m); },
                        [=] { return family(poly_a2m_rec_b); }));
  out.push_back(compare("a_2m closed vs Ferrers", [=] { return family(poly_a2m); },
                        [=] { return family(poly_a2m_from_ferrers); }));
  for (Parity p : {Parity::ee, Parity::eo, Parity::oo}) {
    static const char* names[] = {"ee", "eo", "oe", "oo"};
    std::string name = std::string("f^") + names[static_cast<int>(p)] + " closed vs recurrence";
    auto closed = [=] {
      Series all(q.with_var(Var::t));
      for (int n = 1; n <= 16; ++n) all += shift(restrict_to(poly_f(p, n, q), all.spec()), mono(Var::t, n));
      return all;
    };
    auto rec = [=] {
      Series all(q.with_var(Var::t));
      for (int n = 1; n <= 16; ++n) all += shift(restrict_to(poly_f_rec(p, n, q), all.spec()), mono(Var::t, n));
      return all;
    };
    out.push_back(compare(name, closed, rec));
  }
  out.push_back(compare("F_r stacks vs bounding square", [=] { return series_Fr(tq(N)); },
                        [=] { return series_Fr_square(tq(N)); }));
  out.push_back(compare("F_r2 even: Laurent reduction vs exact division",
                        [=] { return series_Fr2_even(xyq); },
                        [=] { return series_Fr2_even_quotient(xyq); }));
  out.push_back(compare("asym: Moebius sum vs expanded form",
                        [=] { return series_asymmetric_expanded(tq(N)); },
                        [=] { return series_asymmetric(tq(N)); }));
  return out;
}

std::vector<Check> oracle_checks(int A) {
  std::vector<Check> out;
  for (const std::string& name : all_class_names()) {
    AnyClass id = *parse_class(name);
    TruncationSpec spec = class_spec(id, A);
    if (auto c = std::get_if<ClassId>(&id); c && doubly_shifted(*c)) {
      // The oracle holds every doubly shifted stack of polyomino area <= its limit.
      ClassId k = *c;
      spec = class_spec(id, A, 4);
      out.push_back(compare(name + " vs oracle (covered terms)",
                            [=] { return keep_covered(k, oracle_series(k, spec)); },
                            [=] { return keep_covered(k, base_series(k, spec)); }));
      continue;
    }
    out.push_back(compare(name + " vs oracle", [=] {
      return std::visit([&](auto v) { return oracle_series(v, spec); }, id);
    }, [=] { return class_series(id, spec); }));
  }
  out.push_back({"Fr2 in (x, y, q) vs oracle", [A] {
                   auto xyq = TruncationSpec(A, VarSet{Var::x, Var::y, Var::q});
                   return first_difference("Fr2(x,y,q)", oracle_series(SymClassId::Fr2, xyq),
                                           series_Fr2(xyq));
                 }});
  const int B = std::min(A, 8);
  out.push_back({"Burnside vs direct orbit count (area <= " + std::to_string(B) + ")", [B] {
                   auto rows = formula_census(CensusBy::area, B);
                   auto direct = direct_orbit_counts(CensusBy::area, B);
                   for (const auto& d : direct) {
                     const CensusRow& r = rows.at(d.size - 1);
                     if (r.rotation != d.rotation)
                       return std::optional<Mismatch>(Mismatch{"rotation orbits", "area " + std::to_string(d.size),
                                                               std::to_string(d.rotation), r.rotation.str()});
                     if (r.congruence != d.congruence)
                       return std::optional<Mismatch>(Mismatch{"congruence orbits", "area " + std::to_string(d.size),
                                                               std::to_string(d.congruence), r.congruence.str()});
                   }
                   return std::optional<Mismatch>();
                 }});
  return out;
}

std::vector<Check> census_checks(CensusBy by, int max) {
  std::string what = by == CensusBy::area ? "area" : "perimeter";
  return {{"census by " + what + " to " + std::to_string(max) + ": formulas vs oracle", [by, max, what] {
    auto f = formula_census(by, max);
    auto o = oracle_census(by, max);
    static const char* cols[] = {"id", "r", "r2", "rotation", "h_v", "d1_d2", "congruence", "hv", "d1d2", "asym"};
    for (std::size_t i = 0; i < std::min(f.size(), o.size()); ++i) {
      const Integer* fv[] = {&f[i].id, &f[i].r, &f[i].r2, &f[i].rotation, &f[i].h_v, &f[i].d1_d2,
                             &f[i].congruence, &f[i].hv, &f[i].d1d2, &f[i].asym};
      const Integer* ov[] = {&o[i].id, &o[i].r, &o[i].r2, &o[i].rotation, &o[i].h_v, &o[i].d1_d2,
                             &o[i].congruence, &o[i].hv, &o[i].d1d2, &o[i].asym};
      for (int k = 0; k < 10; ++k)
        if (*fv[k] != *ov[k])
          return std::optional<Mismatch>(Mismatch{"census " + what, std::to_string(f[i].size) + "," + cols[k],
                                                  ov[k]->str(), fv[k]->str()});
    }
    if (f.size() != o.size())
      return std::optional<Mismatch>(Mismatch{"census " + what, "rows", std::to_string(o.size()),
                                              std::to_string(f.size())});
    return std::optional<Mismatch>();
  }}};
}

}  // namespace polysym

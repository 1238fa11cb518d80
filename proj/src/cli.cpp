#include "polysym/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>

#include "polysym/census.hpp"
#include "polysym/ids.hpp"
#include "polysym/oracle.hpp"
#include "polysym/orbits.hpp"
#include "polysym/serialize.hpp"
#include "polysym/verify.hpp"

#ifndef POLYSYM_VERSION
#define POLYSYM_VERSION "0.0.0"
#endif

namespace polysym::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_mismatch(std::ostream& out, const Mismatch& m) {
  out << "  first difference: (" << m.series << ", " << m.monomial << ", " << m.expected << ", "
      << m.got << ")\n";
}

int verify(const std::string& level, std::ostream& out) {
  const bool full = level == "full";
  std::vector<Check> checks = dual_route_checks(full ? 14 : 10);
  for (auto& c : oracle_checks(full ? 10 : 8)) checks.push_back(std::move(c));
  for (auto& c : census_checks(CensusBy::area, full ? 10 : 8)) checks.push_back(std::move(c));
  if (full)
    for (auto& c : census_checks(CensusBy::perimeter, 20)) checks.push_back(std::move(c));
  int failed = 0;
  for (const Check& c : checks) {
    CheckResult r = run_check(c);
    out << (r.ok() ? "ok   " : "FAIL ") << r.name << "\n";
    if (r.mismatch) print_mismatch(out, *r.mismatch);
    if (!r.error.empty()) out << "  error: " << r.error << "\n";
    failed += !r.ok();
  }
  out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

std::string series_csv(const Series& s) {
  std::vector<Var> vars;
  for (Var v : kAllVars)
    if (s.spec().vars().contains(v)) vars.push_back(v);
  std::ostringstream os;
  for (Var v : vars) os << var_name(v) << ',';
  os << "coeff\n";
  for (const Term& t : s.terms()) {
    for (Var v : vars) os << t.exp[v] << ',';
    os << t.coeff.str() << '\n';
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generating functions of symmetric convex polyominoes"};
  app.name("polysym");
  app.require_subcommand(1);

  std::string cls, format = "text";
  int qmax = 0;
  std::optional<int> tmax;
  auto* series = app.add_subcommand("series", "print the series of one class");
  series->add_option("--class", cls, "class id, e.g. C, Fr2, asym")->required();
  series->add_option("--qmax", qmax, "highest power of q")->required()->check(CLI::PositiveNumber);
  series->add_option("--tmax", tmax, "half-perimeter bound")->check(CLI::PositiveNumber);
  series->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  std::string by = "area", source = "formula";
  int max = 0;
  auto* table = app.add_subcommand("table", "print a census table as CSV");
  table->add_option("--by", by)->check(CLI::IsMember({"area", "perimeter"}));
  table->add_option("--max", max, "largest area or perimeter")->required()->check(CLI::PositiveNumber);
  table->add_option("--source", source)->check(CLI::IsMember({"formula", "oracle"}));

  std::string level = "quick";
  auto* verify_cmd = app.add_subcommand("verify", "check every identity two ways");
  verify_cmd->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));

  auto* version = app.add_subcommand("version", "print the version");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*version) {
      out << "polysym " << POLYSYM_VERSION << "\n";
      return 0;
    }
    if (*series) {
      auto id = parse_class(cls);
      if (!id) throw UsageError("unknown class id: " + cls);
      Series s = class_series(*id, class_spec(*id, qmax, tmax));
      if (format == "json") out << to_json(s) << "\n";
      else if (format == "csv") out << series_csv(s);
      else out << to_text(s) << "\n";
      return 0;
    }
    if (*table) {
      CensusBy b = by == "area" ? CensusBy::area : CensusBy::perimeter;
      if (b == CensusBy::perimeter && max < 4) throw UsageError("--max must be at least 4 for perimeter");
      out << census_csv(source == "formula" ? formula_census(b, max) : oracle_census(b, max));
      return 0;
    }
    return verify(level, out);
  } catch (const UsageError& e) {
    err << "polysym: " << e.what() << "\n";
    return 2;
  } catch (const RefusedScale& e) {
    err << "polysym: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "polysym: " << e.what() << "\n";
    return 2;
  } catch (const SeriesError& e) {
    err << "polysym: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace polysym::cli

#include "polysym/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>

namespace polysym {

using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw SeriesError(ErrorKind::InvalidExponent, "parse error: " + msg);
}

Var var_or_throw(std::string_view name) {
  auto v = var_from_name(name);
  if (!v) bad("unknown variable '" + std::string(name) + "'");
  return *v;
}

// t, q, then the rest in canonical order.
constexpr std::array<Var, kNumVars> kTextOrder = {Var::t, Var::q, Var::x, Var::y, Var::s,
                                                  Var::u, Var::v, Var::z, Var::w};

}  // namespace

std::string to_json(const Series& s) {
  const TruncationSpec& spec = s.spec();
  ojson j;
  ojson vars = ojson::array();
  for (Var v : kAllVars)
    if (spec.has(v)) vars.push_back(std::string(1, var_name(v)));
  j["vars"] = vars;
  j["qmax"] = spec.qmax();
  ojson caps = ojson::object();
  for (Var v : kAllVars)
    if (v != Var::q && spec.cap(v)) caps[std::string(1, var_name(v))] = *spec.cap(v);
  if (!caps.empty()) j["caps"] = caps;
  if (auto b = spec.weighted_bound()) {
    ojson w = ojson::object();
    for (Var v : kAllVars)
      if (spec.weight(v) != 0) w[std::string(1, var_name(v))] = spec.weight(v);
    j["weighted"] = {{"weights", w}, {"bound", *b}};
  }
  ojson terms = ojson::array();
  for (const auto& t : s.terms()) {
    ojson e = ojson::object();
    for (Var v : kAllVars)
      if (t.exp[v] != 0) e[std::string(1, var_name(v))] = t.exp[v];
    terms.push_back({{"e", e}, {"c", t.coeff.str()}});
  }
  j["terms"] = terms;
  return j.dump();
}

Series from_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    bad(e.what());
  }
  try {
    VarSet vars;
    for (const auto& name : j.at("vars")) vars = vars.with(var_or_throw(name.get<std::string>()));
    TruncationSpec spec(j.at("qmax").get<int>(), vars);
    if (j.contains("caps")) {
      for (const auto& [name, cap] : j["caps"].items())
        spec = spec.with_cap(var_or_throw(name), cap.get<int>());
    }
    if (j.contains("weighted")) {
      std::array<int, kNumVars> w{};
      for (const auto& [name, k] : j["weighted"].at("weights").items())
        w[idx(var_or_throw(name))] = k.get<int>();
      spec = spec.with_weighted(w, j["weighted"].at("bound").get<int>());
    }
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      ExpVec e;
      for (const auto& [name, k] : t.at("e").items()) e.set(var_or_throw(name), k.get<int>());
      spec.check_exponent(e);
      if (!spec.admits(e)) bad("term beyond truncation");
      terms.push_back(Term{e, Integer(t.at("c").get<std::string>())});
    }
    return Series::from_terms(spec, std::move(terms));
  } catch (const ojson::exception& e) {
    bad(e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const SeriesError*>(&e)) throw;
    bad(e.what());
  }
}

std::string to_text(const Series& s) {
  std::vector<const Term*> order;
  for (const auto& t : s.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    for (Var v : kTextOrder) {
      if (a->exp[v] != b->exp[v]) return a->exp[v] < b->exp[v];
    }
    return false;
  });
  if (order.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term* t : order) {
    Integer c = t->coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (Var v : kAllVars) {
      int k = t->exp[v];
      if (k == 0) continue;
      if (!body.empty()) body += "*";
      body += var_name(v);
      if (k != 1) body += "^" + std::to_string(k);
    }
    if (body.empty()) {
      out += c.str();
    } else {
      if (c != 1) out += c.str() + "*";
      out += body;
    }
  }
  return out;
}

Series parse_text(std::string_view text, const TruncationSpec& spec) {
  std::string src;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) src += ch;
  std::vector<Term> terms;
  std::size_t i = 0;
  auto read_int = [&]() {
    std::size_t start = i;
    if (i < src.size() && src[i] == '-') ++i;
    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
    if (start == i || (src[start] == '-' && start + 1 == i)) bad("expected integer");
    return src.substr(start, i - start);
  };
  if (src == "0") return Series(spec);
  while (i < src.size()) {
    int sign = 1;
    if (src[i] == '+' || src[i] == '-') {
      sign = src[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      bad("expected '+' or '-'");
    }
    Integer c = 1;
    ExpVec e;
    bool have_factor = false;
    while (i < src.size() && src[i] != '+' && src[i] != '-') {
      if (have_factor) {
        if (src[i] != '*') bad("expected '*'");
        ++i;
      }
      if (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        c *= Integer(read_int());
      } else if (i < src.size()) {
        Var v = var_or_throw(src.substr(i, 1));
        ++i;
        int k = 1;
        if (i < src.size() && src[i] == '^') {
          ++i;
          k = std::stoi(read_int());
        }
        e.set(v, e[v] + k);
      }
      have_factor = true;
    }
    if (!have_factor) bad("empty term");
    terms.push_back(Term{e, sign * c});
  }
  return Series::from_terms(spec, std::move(terms));
}

}  // namespace polysym

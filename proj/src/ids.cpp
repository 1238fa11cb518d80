#include "polysym/ids.hpp"

#include <array>
#include <utility>

namespace polysym {

namespace {

constexpr std::array<std::pair<ClassId, std::string_view>, 22> kBase = {{
    {ClassId::P, "P"},       {ClassId::P0, "P0"},     {ClassId::PS, "PS"},
    {ClassId::PS_u, "PS_u"}, {ClassId::T, "T"},       {ClassId::T0, "T0"},
    {ClassId::TS, "TS"},     {ClassId::P1, "P1"},     {ClassId::D, "D"},
    {ClassId::C, "C"},       {ClassId::Y1, "Y1"},     {ClassId::Y2, "Y2"},
    {ClassId::DS, "DS"},     {ClassId::R, "R"},       {ClassId::E1, "E1"},
    {ClassId::E2, "E2"},     {ClassId::E3, "E3"},     {ClassId::Eall, "E"},
    {ClassId::A1, "A1"},     {ClassId::A2, "A2"},     {ClassId::A3, "A3"},
    {ClassId::Aall, "A"},
}};

constexpr std::array<std::pair<SymClassId, std::string_view>, 12> kSym = {{
    {SymClassId::Fr, "Fr"},
    {SymClassId::Fr2, "Fr2"},
    {SymClassId::Fr2_even, "Fr2_even"},
    {SymClassId::Fr2_odd, "Fr2_odd"},
    {SymClassId::Fv, "Fv"},
    {SymClassId::Fh, "Fh"},
    {SymClassId::Fhv, "Fhv"},
    {SymClassId::Fd1, "Fd1"},
    {SymClassId::Fd2, "Fd2"},
    {SymClassId::Fd1d2, "Fd1d2"},
    {SymClassId::Fd1d2_even, "Fd1d2_even"},
    {SymClassId::Fd1d2_odd, "Fd1d2_odd"},
}};

constexpr std::array<std::pair<OrbitId, std::string_view>, 3> kOrbit = {{
    {OrbitId::rotation, "rotation"},
    {OrbitId::congruence, "congruence"},
    {OrbitId::asym, "asym"},
}};

template <class Table, class Id>
std::string_view lookup(const Table& t, Id id) {
  for (const auto& [k, n] : t)
    if (k == id) return n;
  return "?";
}

}  // namespace

std::string_view class_name(ClassId id) { return lookup(kBase, id); }
std::string_view class_name(SymClassId id) { return lookup(kSym, id); }
std::string_view class_name(OrbitId id) { return lookup(kOrbit, id); }

std::string class_name(const AnyClass& id) {
  return std::visit([](auto v) { return std::string(class_name(v)); }, id);
}

std::optional<AnyClass> parse_class(std::string_view name) {
  for (const auto& [k, n] : kBase)
    if (n == name) return AnyClass{k};
  for (const auto& [k, n] : kSym)
    if (n == name) return AnyClass{k};
  for (const auto& [k, n] : kOrbit)
    if (n == name) return AnyClass{k};
  return std::nullopt;
}

std::vector<std::string> all_class_names() {
  std::vector<std::string> out;
  for (const auto& [k, n] : kBase) out.emplace_back(n);
  for (const auto& [k, n] : kSym) out.emplace_back(n);
  for (const auto& [k, n] : kOrbit) out.emplace_back(n);
  return out;
}

}  // namespace polysym

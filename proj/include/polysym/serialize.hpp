#pragma once

#include <string>
#include <string_view>

#include "polysym/series.hpp"

namespace polysym {

// {"vars":[...],"qmax":N,"terms":[{"e":{"t":2,"q":1},"c":"1"},...]} with
// terms in canonical order. Per-variable caps and a weighted cap, when
// present, are written under "caps" and "weighted".
std::string to_json(const Series& s);
Series from_json(std::string_view json);

// Human-readable sum, ordered by (t, q, then the remaining variables):
// "8*t^5*q^4 + 8*t^5*q^5". Zero prints as "0".
std::string to_text(const Series& s);

// Parses the text format (any term order, "-" allowed) into the given spec.
Series parse_text(std::string_view text, const TruncationSpec& spec);

}  // namespace polysym

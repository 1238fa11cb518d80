#pragma once

#include <vector>

#include "polysym/series.hpp"

namespace polysym {

// Dense coefficient list of the Gaussian polynomial [n k]_q (index = q-degree),
// by the recurrence [n k] = [n-1 k-1] + q^k [n-1 k]. Empty when k < 0 or k > n.
const std::vector<Integer>& qbinomial_coeffs(int n, int k);

// [n k]_q as a series in spec (which must contain q).
Series qbinomial(int n, int k, const TruncationSpec& spec);

// prefactor * [n k]_{q -> image}. The image and prefactor may carry negative
// exponents as long as every resulting term is a valid exponent of spec.
Series qbinomial_substituted(int n, int k, const ExpVec& image, const TruncationSpec& spec,
                             const ExpVec& prefactor = {});

// (c x^a; q)_n for a monomial c x^a.
Series qpochhammer(const Integer& c, const ExpVec& a, int n, const TruncationSpec& spec);

// 1 / (c x^a; q)_n via the q-binomial theorem: sum_j [n+j-1 j]_q (c x^a)^j.
// x^a must contain a positive power of a truncated variable.
Series qpochhammer_inverse(const Integer& c, const ExpVec& a, int n, const TruncationSpec& spec);

}  // namespace polysym

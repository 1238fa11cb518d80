#include "polysym/qfun.hpp"

#include <map>
#include <mutex>

namespace polysym {

namespace {

std::mutex g_mutex;
std::map<std::pair<int, int>, std::vector<Integer>> g_cache;

std::vector<Integer> compute(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return {Integer(1)};
  std::vector<Integer> a = qbinomial_coeffs(n - 1, k - 1);
  const std::vector<Integer>& b = qbinomial_coeffs(n - 1, k);
  std::vector<Integer> r(static_cast<std::size_t>(k * (n - k) + 1));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i + k] += b[i];
  return r;
}

}  // namespace

const std::vector<Integer>& qbinomial_coeffs(int n, int k) {
  {
    std::lock_guard lock(g_mutex);
    auto it = g_cache.find({n, k});
    if (it != g_cache.end()) return it->second;
  }
  std::vector<Integer> r = compute(n, k);
  std::lock_guard lock(g_mutex);
  // std::map nodes are stable, so returned references stay valid.
  return g_cache.try_emplace({n, k}, std::move(r)).first->second;
}

Series qbinomial(int n, int k, const TruncationSpec& spec) {
  return qbinomial_substituted(n, k, mono(Var::q, 1), spec);
}

Series qbinomial_substituted(int n, int k, const ExpVec& image, const TruncationSpec& spec,
                             const ExpVec& prefactor) {
  const auto& c = qbinomial_coeffs(n, k);
  SeriesBuilder b(spec);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    ExpVec e = prefactor + static_cast<int>(i) * image;
    if (e[Var::q] < 0)
      throw SeriesError(ErrorKind::NegativeFinalExponent, "q-binomial substitution below q^0");
    b.add(e, c[i]);
  }
  return std::move(b).build();
}

Series qpochhammer(const Integer& c, const ExpVec& a, int n, const TruncationSpec& spec) {
  return pochhammer(Series::monomial(c, a, spec), n);
}

Series qpochhammer_inverse(const Integer& c, const ExpVec& a, int n, const TruncationSpec& spec) {
  if (n == 0) return Series::constant(1, spec);
  bool small = false;
  for (Var v : kAllVars) small = small || (a[v] > 0 && spec.bounded(v));
  if (!small) throw SeriesError(ErrorKind::NotInvertible, "Pochhammer base is not truncated");
  SeriesBuilder b(spec);
  ExpVec e;
  Integer cj = 1;
  for (int j = 0; spec.admits(e); ++j) {
    const auto& coeffs = qbinomial_coeffs(n + j - 1, j);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      ExpVec ei = e + mono(Var::q, static_cast<int>(i));
      if (!spec.admits(ei)) break;
      b.add(ei, cj * coeffs[i]);
    }
    e += a;
    cj *= c;
  }
  return std::move(b).build();
}

}  // namespace polysym

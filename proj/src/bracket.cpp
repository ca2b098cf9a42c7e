#include "bihom/bracket.hpp"

#include <algorithm>
#include <map>

namespace bihom {

SparseVec sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return s;
}

Vec dense(const SparseVec& v, std::size_t n) {
  Vec d(n);
  for (const auto& [i, c] : v) d.at(i) = c;
  return d;
}

void axpy(Vec& v, const Scalar& s, const SparseVec& w) {
  if (s.is_zero()) return;
  for (const auto& [i, c] : w) v[i].add_product(s, c);
}

template <std::size_t Arity>
Bracket<Arity> skew_extend(const Bracket<Arity>& b, const GradedSpace& s) {
  using Index = typename Bracket<Arity>::Index;
  const std::size_t n = b.dim();
  std::map<Index, Vec> filled;
  for (const auto& idx : b.support()) {
    const Vec value = b.eval(idx);
    // Walk all orderings via adjacent transpositions, tracking the sign.
    std::vector<std::pair<Index, int>> stack{{idx, 1}};
    std::map<Index, int> seen;
    while (!stack.empty()) {
      auto [cur, sign] = stack.back();
      stack.pop_back();
      if (auto it = seen.find(cur); it != seen.end()) {
        if (it->second != sign)
          throw Error(ErrorKind::ValidationError, "bracket: entry is forced to vanish by skewsymmetry",
                      std::vector<std::size_t>(idx.begin(), idx.end()));
        continue;
      }
      seen[cur] = sign;
      for (std::size_t a = 0; a + 1 < Arity; ++a) {
        Index nxt = cur;
        std::swap(nxt[a], nxt[a + 1]);
        const int sw = -sign * koszul(s.parity(cur[a]) * s.parity(cur[a + 1]));
        stack.emplace_back(nxt, sw);
      }
    }
    for (const auto& [perm, sign] : seen) {
      Vec v = Scalar(sign) * value;
      auto it = filled.find(perm);
      if (it == filled.end()) {
        filled.emplace(perm, std::move(v));
      } else if (it->second != v) {
        throw Error(ErrorKind::ValidationError, "bracket: stored entries contradict skewsymmetry",
                    std::vector<std::size_t>(perm.begin(), perm.end()));
      }
    }
  }
  Bracket<Arity> out(n, b.out_dim());
  for (const auto& [idx, v] : filled) out.set(idx, v);
  return out;
}

template Bracket<2> skew_extend(const Bracket<2>&, const GradedSpace&);
template Bracket<3> skew_extend(const Bracket<3>&, const GradedSpace&);

}  // namespace bihom

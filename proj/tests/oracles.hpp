#pragma once

// Independent dense evaluations used as oracles by the unit tests and the
// acceptance runner. Nothing here calls the library's verifiers.

#include "bihom/corpus.hpp"
#include "bihom/representation.hpp"
#include "support.hpp"

namespace test {

using namespace bihom;

/// Untwisted fundamental identity on a basis 5-tuple:
/// [x,y,[z,u,v]] − [[x,y,z],u,v] − (−1)^{z(x+y)}[z,[x,y,u],v] − (−1)^{(z+u)(x+y)}[z,u,[x,y,v]].
inline Vec fundamental_identity(const ThreeBihomLieSuper& g, std::size_t x, std::size_t y, std::size_t z,
                                std::size_t u, std::size_t v) {
  const std::size_t n = g.dim();
  const auto& p = g.space.parities();
  auto br = [&](const Vec& a, const Vec& b, const Vec& c) { return g.bracket_of(a, b, c); };
  auto ev = [&](std::size_t i) { return e(n, i); };
  const unsigned sxy = p[x] + p[y];
  Vec r = br(ev(x), ev(y), br(ev(z), ev(u), ev(v)));
  r = r - br(br(ev(x), ev(y), ev(z)), ev(u), ev(v));
  r = r - Scalar(koszul(p[z] * sxy)) * br(ev(z), br(ev(x), ev(y), ev(u)), ev(v));
  r = r - Scalar(koszul((p[z] + p[u]) * sxy)) * br(ev(z), ev(u), br(ev(x), ev(y), ev(v)));
  return r;
}

inline bool brute_force_jacobi(const ThreeBihomLieSuper& g) {
  const std::size_t n = g.dim();
  for (std::size_t a = 0; a < n * n * n * n * n; ++a) {
    std::size_t t = a, i[5];
    for (auto& k : i) k = t % n, t /= n;
    if (!is_zero(fundamental_identity(g, i[0], i[1], i[2], i[3], i[4]))) return false;
  }
  return true;
}

/// Rank by plain Gaussian elimination, independent of the library's rref.
inline std::size_t dense_rank(std::vector<Vec> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c].is_zero()) continue;
      const Scalar f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Dimension of the untwisted derivations of one parity: a dense nullspace over unit maps.
inline std::size_t oracle_derivation_dim(const ThreeBihomLieSuper& g, unsigned parity) {
  const std::size_t n = g.dim();
  const auto& p = g.space.parities();
  auto ev = [&](std::size_t i) { return e(n, i); };
  std::vector<Vec> columns;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (((p[a] + p[b]) & 1U) != parity) continue;
      Matrix d(n, n);
      d(a, b) = Scalar(1);
      Vec col;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) {
            Vec r = d * g.bracket_of(ev(x), ev(y), ev(z));
            r = r - g.bracket_of(d * ev(x), ev(y), ev(z));
            r = r - Scalar(koszul(parity * p[x])) * g.bracket_of(ev(x), d * ev(y), ev(z));
            r = r - Scalar(koszul(parity * (p[x] + p[y]))) * g.bracket_of(ev(x), ev(y), d * ev(z));
            col.insert(col.end(), r.begin(), r.end());
          }
      columns.push_back(col);
    }
  return columns.size() - dense_rank(columns);
}

inline EvenMap n4_map(std::initializer_list<Scalar> d) { return EvenMap(diag(d), GradedSpace::even(4)); }

/// Twisted N4 with α = diag(1,1,2,2), β = diag(1,1,3,3): regular, with e1 and e2 fixed.
inline ThreeBihomLieSuper fixed_point_n4() {
  return twist_from_3lie(corpus::n4(), n4_map({1, 1, 2, 2}), n4_map({1, 1, 3, 3}));
}

/// θ(e_a, e_b, e_c) = Σ_d ε_abcd e_d* on a 4-dim even algebra.
inline CocycleTensor epsilon_theta(const Scalar& c = 1) {
  CocycleTensor t(4, 4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t k = 0; k < 4; ++k) {
        Vec v = zero_vec(4);
        for (std::size_t d = 0; d < 4; ++d) v[d] = c * Scalar(levi_civita({a, b, k, d}));
        if (!is_zero(v)) t.set({a, b, k}, v);
      }
  return t;
}

/// θ(e_a, e_b, e_c) = e_d*, extended skew-symmetrically over the three even arguments.
inline CocycleTensor single_theta(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  CocycleTensor t(4, 4);
  const std::size_t idx[3] = {a, b, c};
  const std::size_t perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  const int sign[6] = {1, -1, -1, -1, 1, 1};
  for (int p = 0; p < 6; ++p)
    t.set({idx[perms[p][0]], idx[perms[p][1]], idx[perms[p][2]]}, Scalar(sign[p]) * e(4, d));
  return t;
}

inline CocycleTensor sum(const CocycleTensor& a, const CocycleTensor& b) {
  CocycleTensor out(a.dim(), a.out_dim());
  for (const auto& i : a.support()) out.set(i, a.eval(i));
  for (const auto& i : b.support()) out.set(i, out.eval(i) + b.eval(i));
  return out;
}

/// The adjoint with c·E_{nn} added to ρ(e_1, e_2), so it stops commuting with the other actions.
inline Representation perturbed_adjoint(const ThreeBihomLieSuper& g, const Scalar& c) {
  const Representation ad = adjoint(g);
  std::vector<Representation::Entry> entries;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) {
      Matrix bump(g.dim(), g.dim());
      bump(g.dim() - 1, g.dim() - 1) = c;
      entries.push_back({{i, j}, (i == 0 && j == 1) ? ad.at(i, j) + bump : ad.at(i, j)});
    }
  return Representation::from_pairs(g.space, ad.module, entries, ad.alpha_M, ad.beta_M);
}

/// ad with α_M = α⁻¹ and β_M = β⁻¹.
inline Representation inverse_adjoint(const ThreeBihomLieSuper& g) {
  Representation r = adjoint(g);
  r.alpha_M = invert(g.alpha);
  r.beta_M = invert(g.beta);
  return r;
}

inline std::vector<corpus::Named> twisted_corpus() {
  std::vector<corpus::Named> out;
  for (const auto& [name, g] : corpus::three_lie()) {
    const auto aut = corpus::automorphisms(name);
    out.push_back({name, twist_from_3lie(g, aut[0], aut[1])});
  }
  return out;
}

inline Subspace dual_half(std::size_t n) {
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(e(2 * n, n + i));
  return Subspace(2 * n, basis);
}

}  // namespace test

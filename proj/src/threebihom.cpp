#include "bihom/threebihom.hpp"

#include "bihom/sweep.hpp"
#include "detail.hpp"

namespace bihom {

void validate(const ThreeBihomLieSuper& g) {
  const std::size_t n = g.space.dim();
  detail::require_dim(g.bracket.dim(), n, "bracket dimension");
  detail::require_dim(g.alpha.rows(), n, "alpha rows");
  detail::require_dim(g.alpha.cols(), n, "alpha cols");
  detail::require_dim(g.beta.rows(), n, "beta rows");
  detail::require_dim(g.beta.cols(), n, "beta cols");
}

ThreeBihomLieSuper untwisted(GradedSpace space, TriBracket bracket) {
  ThreeBihomLieSuper g{space, std::move(bracket), EvenMap::identity(space), EvenMap::identity(space)};
  validate(g);
  g.bracket.check_even(g.space);
  return g;
}

bool is_regular(const ThreeBihomLieSuper& g) {
  return !determinant(g.alpha.matrix()).is_zero() && !determinant(g.beta.matrix()).is_zero();
}

JacobiEvaluator::JacobiEvaluator(const ThreeBihomLieSuper& g) : g_(g), n_(g.dim()) {
  validate(g);
  const auto al = detail::images(g.alpha.matrix());
  const auto be = detail::images(g.beta.matrix());
  be2_ = detail::images(g.beta.matrix() * g.beta.matrix());
  inner_.resize(n_ * n_ * n_);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      for (std::size_t z = 0; z < n_; ++z)
        inner_[(x * n_ + y) * n_ + z] = sparse(g.bracket.apply_sparse({be[x], be[y], al[z]}));
}

void JacobiEvaluator::add_outer(Vec& res, int sign, std::size_t a, std::size_t b, const SparseVec& w) const {
  for (const auto& [k, c3] : w)
    for (const auto& [i, c1] : be2_[a])
      for (const auto& [j, c2] : be2_[b]) {
        const SparseVec& e = g_.bracket.at({i, j, k});
        if (!e.empty()) axpy(res, Scalar(sign) * c1 * c2 * c3, e);
      }
}

Vec JacobiEvaluator::three_term(std::size_t x, std::size_t y, std::size_t z, std::size_t u,
                                std::size_t v) const {
  const auto& p = g_.space.parities();
  const unsigned xy = p[x] + p[y];
  Vec res(n_);
  add_outer(res, 1, x, y, inner(z, u, v));
  add_outer(res, -koszul((p[u] + p[v]) * (xy + p[z])), u, v, inner(x, y, z));
  add_outer(res, koszul((p[z] + p[v]) * xy + p[u] * p[v]), z, v, inner(x, y, u));
  add_outer(res, -koszul((p[z] + p[u]) * xy), z, u, inner(x, y, v));
  return res;
}

Vec JacobiEvaluator::cyclic(std::size_t x, std::size_t y, std::size_t z, std::size_t u,
                            std::size_t v) const {
  const auto& p = g_.space.parities();
  const unsigned xy = p[x] + p[y];
  const int outer_sign = koszul(p[z] * p[v]);
  Vec res(n_);
  add_outer(res, 1, x, y, inner(z, u, v));
  auto term = [&](std::size_t a, std::size_t b, std::size_t c) {
    const unsigned gamma = (p[a] + p[b]) * xy + p[c] * p[a];
    add_outer(res, -outer_sign * koszul(gamma), a, b, inner(x, y, c));
  };
  term(u, v, z);
  term(v, z, u);
  term(z, u, v);
  return res;
}

namespace {

Vec homomorphism_defect(const TriBracket& b, const Matrix& f, const std::vector<SparseVec>& img,
                        const std::vector<std::size_t>& t) {
  return f * b.eval({t[0], t[1], t[2]}) - b.apply_sparse({img[t[0]], img[t[1]], img[t[2]]});
}

Check multiplicativity(const std::string& name, const ThreeBihomLieSuper& g, const EvenMap& f) {
  const auto img = detail::images(f.matrix());
  return sweep_check(name, g.dim(), 3, [&](const std::vector<std::size_t>& t) {
    return homomorphism_defect(g.bracket, f.matrix(), img, t);
  });
}

void require_homomorphism(const ThreeBihomLieSuper& g, const EvenMap& f, const std::string& label) {
  detail::require_dim(f.rows(), g.dim(), label + " rows");
  detail::require_dim(f.cols(), g.dim(), label + " cols");
  const auto img = detail::images(f.matrix());
  if (auto w = first_failure(g.dim(), 3, [&](const std::vector<std::size_t>& t) {
        return homomorphism_defect(g.bracket, f.matrix(), img, t);
      }))
    throw Error(ErrorKind::NotAHomomorphism, label + " is not a bracket homomorphism", w->tuple);
}

void require_verified(const ThreeBihomLieSuper& g, const std::string& what) {
  const auto r = verify3(g);
  if (!r.overall())
    throw Error(ErrorKind::FailedPrecondition, what + " fails " + r.first_failure());
}

TriBracket precompose(const TriBracket& b, const Matrix& f1, const Matrix& f2, const Matrix& f3) {
  const std::size_t n = b.dim();
  const auto i1 = detail::images(f1), i2 = detail::images(f2), i3 = detail::images(f3);
  TriBracket out(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) out.set({x, y, z}, sparse(b.apply_sparse({i1[x], i2[y], i3[z]})));
  return out;
}

}  // namespace

VerificationReport verify3(const ThreeBihomLieSuper& g) {
  validate(g);
  const std::size_t n = g.dim();
  const auto& p = g.space.parities();
  const JacobiEvaluator jac(g);

  VerificationReport r;
  r.subject = "3-bihom-lie-superalgebra";
  r.add(detail::commute_check("commutation", g.alpha.matrix(), g.beta.matrix()));
  r.add(multiplicativity("alpha-multiplicativity", g, g.alpha));
  r.add(multiplicativity("beta-multiplicativity", g, g.beta));
  r.add(sweep_check("skewsymmetry-12", n, 3, [&](const std::vector<std::size_t>& t) {
    Vec res = dense(jac.inner(t[0], t[1], t[2]), n);
    axpy(res, Scalar(koszul(p[t[0]] * p[t[1]])), jac.inner(t[1], t[0], t[2]));
    return res;
  }));
  r.add(sweep_check("skewsymmetry-23", n, 3, [&](const std::vector<std::size_t>& t) {
    Vec res = dense(jac.inner(t[0], t[1], t[2]), n);
    axpy(res, Scalar(koszul(p[t[1]] * p[t[2]])), jac.inner(t[0], t[2], t[1]));
    return res;
  }));
  r.add(sweep_check("jacobi", n, 5, [&](const std::vector<std::size_t>& t) {
    return jac.three_term(t[0], t[1], t[2], t[3], t[4]);
  }));
  return r;
}

ThreeBihomLieSuper twist_from_3lie(const ThreeBihomLieSuper& g, const EvenMap& a, const EvenMap& b) {
  validate(g);
  const EvenMap id = EvenMap::identity(g.space);
  if (!(g.alpha == id) || !(g.beta == id))
    throw Error(ErrorKind::FailedPrecondition, "input structure maps must be the identity");
  require_verified(g, "input 3-Lie superalgebra");
  require_homomorphism(g, a, "a");
  require_homomorphism(g, b, "b");
  if (!commute(a, b)) throw Error(ErrorKind::MapsDoNotCommute, "a and b do not commute");
  return {g.space, precompose(g.bracket, a.matrix(), a.matrix(), b.matrix()), a, b};
}

ThreeBihomLieSuper twist_compose(const ThreeBihomLieSuper& g, const EvenMap& a2, const EvenMap& b2) {
  validate(g);
  require_verified(g, "input algebra");
  require_homomorphism(g, a2, "a2");
  require_homomorphism(g, b2, "b2");
  const EvenMap* maps[] = {&g.alpha, &g.beta, &a2, &b2};
  const char* names[] = {"alpha", "beta", "a2", "b2"};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!commute(*maps[i], *maps[j]))
        throw Error(ErrorKind::MapsDoNotCommute, std::string(names[i]) + " and " + names[j] + " do not commute");
  return {g.space, precompose(g.bracket, a2.matrix(), a2.matrix(), b2.matrix()), compose(g.alpha, a2),
          compose(g.beta, b2)};
}

ThreeBihomLieSuper twist_power_k(const ThreeBihomLieSuper& g, unsigned k) {
  return twist_compose(g, power(g.alpha, k), power(g.beta, k));
}

ThreeBihomLieSuper direct_sum(const ThreeBihomLieSuper& g, const ThreeBihomLieSuper& h) {
  validate(g);
  validate(h);
  const std::size_t n = g.dim(), m = h.dim();
  TriBracket b(n + m);
  for (const auto& idx : g.bracket.support()) {
    Vec v = concat(g.bracket.eval(idx), Vec(m));
    b.set(idx, v);
  }
  for (const auto& idx : h.bracket.support()) {
    Vec v = concat(Vec(n), h.bracket.eval(idx));
    b.set({idx[0] + n, idx[1] + n, idx[2] + n}, v);
  }
  return {direct_sum(g.space, h.space), std::move(b), direct_sum(g.alpha, h.alpha), direct_sum(g.beta, h.beta)};
}

// ---------------------------------------------------------------------------
// Associative factors

namespace {

struct AssocCache {
  std::size_t n;
  std::vector<SparseVec> al, be;
  std::vector<SparseVec> mu;  // μ(a, b, c) sparse, flat index

  explicit AssocCache(const TotAssoc3& a) : n(a.space.dim()) {
    al = detail::images(a.alpha.matrix());
    be = detail::images(a.beta.matrix());
    mu.resize(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) mu[(i * n + j) * n + k] = a.mu.at({i, j, k});
  }
  const SparseVec& m(std::size_t i, std::size_t j, std::size_t k) const { return mu[(i * n + j) * n + k]; }
};

void validate_assoc(const TotAssoc3& a) {
  const std::size_t n = a.space.dim();
  detail::require_dim(a.mu.dim(), n, "mu dimension");
  detail::require_dim(a.alpha.rows(), n, "alpha rows");
  detail::require_dim(a.beta.rows(), n, "beta rows");
}

// The three associativity terms on a basis 5-tuple.
std::array<Vec, 3> assoc_terms(const TotAssoc3& a, const AssocCache& c, const std::vector<std::size_t>& t) {
  const SparseVec m123 = c.m(t[0], t[1], t[2]);
  const SparseVec m234 = c.m(t[1], t[2], t[3]);
  const SparseVec m345 = c.m(t[2], t[3], t[4]);
  return {a.mu.apply_sparse({m123, c.be[t[3]], c.be[t[4]]}),
          a.mu.apply_sparse({c.al[t[0]], m234, c.be[t[4]]}),
          a.mu.apply_sparse({c.al[t[0]], c.al[t[1]], m345})};
}

VerificationReport assoc_common(const TotAssoc3& a) {
  validate_assoc(a);
  VerificationReport r;
  r.add(detail::commute_check("commutation", a.alpha.matrix(), a.beta.matrix()));
  for (const auto* f : {&a.alpha, &a.beta}) {
    const auto img = detail::images(f->matrix());
    r.add(sweep_check(f == &a.alpha ? "alpha-multiplicativity" : "beta-multiplicativity", a.space.dim(), 3,
                      [&](const std::vector<std::size_t>& t) { return homomorphism_defect(a.mu, f->matrix(), img, t); }));
  }
  return r;
}

}  // namespace

VerificationReport verify_tot_assoc(const TotAssoc3& a) {
  VerificationReport r = assoc_common(a);
  r.subject = "3-totally-bihom-associative";
  const AssocCache c(a);
  r.add(sweep_check("total-associativity", a.space.dim(), 5, [&](const std::vector<std::size_t>& t) {
    const auto terms = assoc_terms(a, c, t);
    return concat(terms[0] - terms[1], terms[1] - terms[2]);
  }));
  return r;
}

VerificationReport verify_partial_assoc(const TotAssoc3& a) {
  VerificationReport r = assoc_common(a);
  r.subject = "3-partially-bihom-associative";
  const AssocCache c(a);
  r.add(sweep_check("partial-associativity", a.space.dim(), 5, [&](const std::vector<std::size_t>& t) {
    const auto terms = assoc_terms(a, c, t);
    return terms[0] + terms[1] + terms[2];
  }));
  return r;
}

Check tensor_symmetry_check(const TotAssoc3& a) {
  validate_assoc(a);
  const AssocCache c(a);
  return sweep_check("tensor-symmetry", a.space.dim(), 3, [&](const std::vector<std::size_t>& t) {
    auto m = [&](std::size_t i, std::size_t j, std::size_t k) {
      return a.mu.apply_sparse({c.be[i], c.be[j], c.al[k]});
    };
    const Vec base = m(t[0], t[1], t[2]);
    return concat(base - m(t[1], t[0], t[2]), base - m(t[0], t[2], t[1]));
  });
}

ThreeBihomLieSuper tensor_assoc(const TotAssoc3& a, const ThreeBihomLieSuper& g, TensorOptions options) {
  validate_assoc(a);
  validate(g);
  bool odd = false;
  for (auto p : a.space.parities()) odd = odd || p == 1;
  if (odd && !options.allow_odd_factor)
    throw Error(ErrorKind::OddAssociativeFactor, "the associative factor must be purely even");
  const Check sym = tensor_symmetry_check(a);
  if (!sym.pass) throw Error(ErrorKind::SymmetryConditionFails, "mu symmetry condition fails", sym.witness->tuple);
  const auto ar = verify_tot_assoc(a);
  if (!ar.overall())
    throw Error(ErrorKind::FailedPrecondition, "associative factor fails " + ar.first_failure());
  require_verified(g, "Lie factor");

  const std::size_t na = a.space.dim(), ng = g.dim(), n = na * ng;
  std::vector<unsigned> parity(n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t x = 0; x < ng; ++x) {
      parity[i * ng + x] = (a.space.parity(i) + g.space.parity(x)) & 1U;
      names.push_back(a.space.name(i) + "*" + g.space.name(x));
    }
  TriBracket b(n);
  for (const auto& ia : a.mu.support())
    for (const auto& ig : g.bracket.support()) {
      const Vec val = kronecker(Matrix::from_columns({a.mu.eval(ia)}), Matrix::from_columns({g.bracket.eval(ig)})).column(0);
      b.set({ia[0] * ng + ig[0], ia[1] * ng + ig[1], ia[2] * ng + ig[2]}, val);
    }
  GradedSpace space(parity, names);
  ThreeBihomLieSuper out{space, std::move(b), EvenMap(kronecker(a.alpha.matrix(), g.alpha.matrix()), space),
                         EvenMap(kronecker(a.beta.matrix(), g.beta.matrix()), space)};
  if (odd) require_verified(out, "tensor product with an odd factor");
  return out;
}

// ---------------------------------------------------------------------------
// Morphisms and subobjects

MorphismResult is_morphism(const EvenMap& f, const ThreeBihomLieSuper& g, const ThreeBihomLieSuper& h) {
  validate(g);
  validate(h);
  detail::require_dim(f.rows(), h.dim(), "morphism rows");
  detail::require_dim(f.cols(), g.dim(), "morphism cols");
  MorphismResult res;
  const auto img = detail::images(f.matrix());
  if (auto w = first_failure(g.dim(), 3, [&](const std::vector<std::size_t>& t) {
        return f(g.bracket.eval({t[0], t[1], t[2]})) - h.bracket.apply_sparse({img[t[0]], img[t[1]], img[t[2]]});
      })) {
    res = {false, "bracket", w};
    return res;
  }
  auto intertwine = [&](const EvenMap& m, const EvenMap& mp, const char* label) {
    const Matrix lhs = f.matrix() * m.matrix();
    const Matrix rhs = mp.matrix() * f.matrix();
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      Vec r = lhs.column(j) - rhs.column(j);
      if (!is_zero(r)) {
        res = {false, label, Witness{{j}, std::move(r)}};
        return false;
      }
    }
    return true;
  };
  if (!intertwine(g.alpha, h.alpha, "alpha")) return res;
  intertwine(g.beta, h.beta, "beta");
  return res;
}

Subspace graph_of(const EvenMap& f, std::size_t dim_g, std::size_t dim_h) {
  detail::require_dim(f.rows(), dim_h, "graph map rows");
  detail::require_dim(f.cols(), dim_g, "graph map cols");
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < dim_g; ++i) basis.push_back(concat(unit_vec(dim_g, i), f.image(i)));
  return Subspace(dim_g + dim_h, std::move(basis));
}

bool graph_is_subalgebra(const EvenMap& f, const ThreeBihomLieSuper& g, const ThreeBihomLieSuper& h) {
  const ThreeBihomLieSuper sum = direct_sum(g, h);
  return is_subalgebra(graph_of(f, g.dim(), h.dim()), sum);
}

Subspace image(const EvenMap& f, const Subspace& s) {
  std::vector<Vec> v;
  for (const auto& b : s.basis()) v.push_back(f(b));
  return Subspace::span(f.rows(), v);
}

Subspace bracket_span(const ThreeBihomLieSuper& g, const Subspace& a, const Subspace& b, const Subspace& c) {
  std::vector<Vec> out;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis())
      for (const auto& z : c.basis()) {
        Vec v = g.bracket_of(x, y, z);
        if (!is_zero(v)) out.push_back(std::move(v));
      }
  return Subspace::span(g.dim(), out);
}

bool is_subalgebra(const Subspace& s, const ThreeBihomLieSuper& g) {
  validate(g);
  return s.contains(image(g.alpha, s)) && s.contains(image(g.beta, s)) && s.contains(bracket_span(g, s, s, s));
}

bool is_ideal(const Subspace& s, const ThreeBihomLieSuper& g) {
  validate(g);
  const Subspace all = Subspace::whole(g.dim());
  return s.contains(image(g.alpha, s)) && s.contains(image(g.beta, s)) && s.contains(bracket_span(g, s, all, all));
}

namespace {

// {x : [x, f e_i, f e_j] = 0 for all i, j}
Subspace annihilator(const ThreeBihomLieSuper& g, const Matrix& f) {
  const std::size_t n = g.dim();
  const auto img = detail::images(f);
  std::vector<SparseVec> unit(n);
  for (std::size_t k = 0; k < n; ++k) unit[k] = {{static_cast<std::uint32_t>(k), Scalar(1)}};
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Vec> cols(n);
      for (std::size_t k = 0; k < n; ++k) cols[k] = g.bracket.apply_sparse({unit[k], img[i], img[j]});
      const Matrix block = Matrix::from_columns(cols, n);
      for (std::size_t l = 0; l < n; ++l) {
        Vec row = block.row(l);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  return Subspace(n, nullspace(Matrix::from_rows(rows, n)));
}

}  // namespace

Subspace center(const ThreeBihomLieSuper& g) {
  validate(g);
  return annihilator(g, Matrix::identity(g.dim()));
}

Subspace ab_center(const ThreeBihomLieSuper& g) {
  validate(g);
  return annihilator(g, g.alpha.matrix() * g.beta.matrix());
}

// ---------------------------------------------------------------------------
// Derivations

Vec derivation_residual(const ThreeBihomLieSuper& g, const Matrix& d, unsigned parity, unsigned s, unsigned r) {
  validate(g);
  const std::size_t n = g.dim();
  detail::require_dim(d.rows(), n, "derivation rows");
  detail::require_dim(d.cols(), n, "derivation cols");
  const auto& p = g.space.parities();
  const Matrix& al = g.alpha.matrix();
  const Matrix& be = g.beta.matrix();
  Vec res = concat(detail::flatten(d * al - al * d), detail::flatten(d * be - be * d));
  const Matrix twist = al.pow(s) * be.pow(r);
  const auto dimg = detail::images(d);
  const auto aimg = detail::images(twist);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vec v = d * g.bracket.eval({x, y, z});
        v = v - g.bracket.apply_sparse({dimg[x], aimg[y], aimg[z]});
        axpy(v, Scalar(-koszul(p[x] * parity)), g.bracket.apply_sparse({aimg[x], dimg[y], aimg[z]}));
        axpy(v, Scalar(-koszul((p[x] + p[y]) * parity)), g.bracket.apply_sparse({aimg[x], aimg[y], dimg[z]}));
        res.insert(res.end(), v.begin(), v.end());
      }
  return res;
}

bool is_derivation(const ThreeBihomLieSuper& g, const GradedMap& d, unsigned s, unsigned r) {
  return is_zero(derivation_residual(g, d.matrix(), d.parity(), s, r));
}

std::vector<GradedMap> derivation_space(const ThreeBihomLieSuper& g, const DerivationRequest& req) {
  validate(g);
  const std::size_t n = g.dim();
  const unsigned par = req.parity & 1U;
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (((g.space.parity(a) + g.space.parity(b)) & 1U) == par) unknowns.emplace_back(a, b);
  std::vector<Vec> cols;
  for (const auto& [a, b] : unknowns) {
    Matrix e(n, n);
    e(a, b) = 1;
    cols.push_back(derivation_residual(g, e, par, req.s, req.r));
  }
  const std::size_t eqs = 2 * n * n + n * n * n * n;
  std::vector<GradedMap> out;
  for (const Vec& k : nullspace(Matrix::from_columns(cols, eqs))) {
    Matrix d(n, n);
    for (std::size_t u = 0; u < unknowns.size(); ++u) d(unknowns[u].first, unknowns[u].second) = k[u];
    out.emplace_back(std::move(d), g.space, g.space, par);
  }
  return out;
}

GradedMap supercommutator(const ThreeBihomLieSuper& g, const GradedMap& d1, const GradedMap& d2) {
  const Matrix m = d1.matrix() * d2.matrix() -
                   (d2.matrix() * d1.matrix()).scaled(Scalar(koszul(d1.parity() * d2.parity())));
  return GradedMap(m, g.space, g.space, d1.parity() + d2.parity());
}

GradedMap inner_derivation(const ThreeBihomLieSuper& g, const Vec& u1, const Vec& u2, unsigned r, unsigned s) {
  validate(g);
  invert(g.alpha);
  invert(g.beta);
  const std::size_t n = g.dim();
  detail::require_dim(u1.size(), n, "u1 length");
  detail::require_dim(u2.size(), n, "u2 length");
  const auto p1 = parity_of(g.space, u1), p2 = parity_of(g.space, u2);
  if (!p1 || !p2) throw Error(ErrorKind::ValidationError, "u1 and u2 must be homogeneous");
  const Vec* us[] = {&u1, &u2};
  for (int i = 0; i < 2; ++i) {
    const std::string label = "u" + std::to_string(i + 1);
    if (g.alpha(*us[i]) != *us[i]) throw Error(ErrorKind::NotFixedPoint, "alpha(" + label + ") != " + label);
    if (g.beta(*us[i]) != *us[i]) throw Error(ErrorKind::NotFixedPoint, "beta(" + label + ") != " + label);
  }
  const Matrix twist = g.alpha.matrix().pow(r) * g.beta.matrix().pow(s);
  std::vector<Vec> cols(n);
  for (std::size_t w = 0; w < n; ++w) {
    const Vec tw = twist.column(w);
    cols[w] = g.bracket_of(u1, u2, tw);
  }
  GradedMap d(Matrix::from_columns(cols, n), g.space, g.space, *p1 + *p2);
  if (!is_derivation(g, d, r, s + 1))
    throw Error(ErrorKind::ReportedMismatch, "inner map fails the derivation identities");
  return d;
}

// ---------------------------------------------------------------------------
// Series

namespace {

template <class Next>
std::vector<Subspace> chain(const ThreeBihomLieSuper& g, Next next) {
  validate(g);
  std::vector<Subspace> out{Subspace::whole(g.dim())};
  while (out.back().dim() > 0) {
    Subspace s = next(out.back());
    if (s.same_as(out.back())) break;
    out.push_back(std::move(s));
  }
  return out;
}

SeriesVerdict verdict(const std::vector<Subspace>& c) {
  if (c.back().dim() == 0) return {true, c.size() - 1};
  return {false, 0};
}

}  // namespace

std::vector<Subspace> derived_series(const ThreeBihomLieSuper& g) {
  const Subspace all = Subspace::whole(g.dim());
  return chain(g, [&](const Subspace& s) { return bracket_span(g, s, s, all); });
}

std::vector<Subspace> central_series(const ThreeBihomLieSuper& g) {
  const Subspace all = Subspace::whole(g.dim());
  return chain(g, [&](const Subspace& s) { return bracket_span(g, s, all, all); });
}

SeriesVerdict is_solvable(const ThreeBihomLieSuper& g) { return verdict(derived_series(g)); }
SeriesVerdict is_nilpotent(const ThreeBihomLieSuper& g) { return verdict(central_series(g)); }

}  // namespace bihom

#include "bihom/representation.hpp"

#include <map>

#include "bihom/sweep.hpp"
#include "detail.hpp"

namespace bihom {

namespace {

Matrix rho_of(const Representation& r, const SparseVec& x, const SparseVec& y) {
  const std::size_t m = r.module.dim();
  Matrix out(m, m);
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) out = out + r.at(i, j).scaled(a * b);
  return out;
}

// ρ(A e_i, B e_j) for all basis pairs.
std::vector<Matrix> pair_table(const Representation& r, const Matrix& a, const Matrix& b) {
  const std::size_t n = r.algebra_dim;
  const auto ai = detail::images(a), bi = detail::images(b);
  std::vector<Matrix> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = rho_of(r, ai[i], bi[j]);
  return t;
}

Check pair_sweep(std::string name, std::size_t n, const std::function<Matrix(std::size_t, std::size_t)>& f) {
  return sweep_check(std::move(name), n, 2, [&](const std::vector<std::size_t>& t) {
    return detail::flatten(f(t[0], t[1]));
  });
}

// Shared images and tables for the quadruple conditions.
struct RepCache {
  std::size_t n;
  const Representation& r;
  Matrix id, al, be, ab;
  std::vector<Matrix> rho, rho_a, rho_b, rho_ab;       // ρ(Fx, Fy) for F = Id, α, β, αβ
  std::vector<Matrix> ab_b, a_id, b_ab;                 // ρ(αβx, βy), ρ(αx, y), ρ(βx, αβy)
  std::vector<SparseVec> be_img;                        // β e_y
  std::vector<SparseVec> tb;                            // [β e_u, β e_v, e_x]

  RepCache(const ThreeBihomLieSuper& g, const Representation& rep) : n(g.dim()), r(rep) {
    id = Matrix::identity(n);
    al = g.alpha.matrix();
    be = g.beta.matrix();
    ab = al * be;
    rho = pair_table(r, id, id);
    rho_a = pair_table(r, al, al);
    rho_b = pair_table(r, be, be);
    rho_ab = pair_table(r, ab, ab);
    ab_b = pair_table(r, ab, be);
    a_id = pair_table(r, al, id);
    b_ab = pair_table(r, be, ab);
    be_img = detail::images(be);
    const auto bi = detail::images(be);
    tb.resize(n * n * n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t x = 0; x < n; ++x)
          tb[(u * n + v) * n + x] =
              sparse(g.bracket.apply_sparse({bi[u], bi[v], {{static_cast<std::uint32_t>(x), Scalar(1)}}}));
  }
  const Matrix& at(const std::vector<Matrix>& t, std::size_t i, std::size_t j) const { return t[i * n + j]; }
  // ρ([βu, βv, x], βy)
  Matrix left_inner(std::size_t u, std::size_t v, std::size_t x, std::size_t y) const {
    return rho_of(r, tb[(u * n + v) * n + x], be_img[y]);
  }
  // ρ(βx, [βu, βv, y])
  Matrix right_inner(std::size_t u, std::size_t v, std::size_t x, std::size_t y) const {
    return rho_of(r, be_img[x], tb[(u * n + v) * n + y]);
  }
};

VerificationReport structural(const ThreeBihomLieSuper& g, const Representation& r) {
  validate(g, r);
  const std::size_t n = g.dim();
  const auto& p = g.space.parities();
  VerificationReport rep;
  rep.add(detail::commute_check("module-commutation", r.alpha_M.matrix(), r.beta_M.matrix()));
  Check even;
  even.name = "rho-evenness";
  for (std::size_t i = 0; i < n && even.pass; ++i)
    for (std::size_t j = 0; j < n && even.pass; ++j) {
      try {
        GradedMap(r.at(i, j), r.module, r.module, p[i] + p[j]);
      } catch (const Error&) {
        even.pass = false;
        even.witness = Witness{{i, j}, detail::flatten(r.at(i, j))};
      }
    }
  rep.add(even);
  rep.add(pair_sweep("super-skewsymmetry", n, [&](std::size_t i, std::size_t j) {
    return r.at(i, j) + r.at(j, i).scaled(Scalar(koszul(p[i] * p[j])));
  }));
  return rep;
}

}  // namespace

Matrix Representation::of(const Vec& x, const Vec& y) const {
  detail::require_dim(x.size(), algebra_dim, "rho argument");
  detail::require_dim(y.size(), algebra_dim, "rho argument");
  return rho_of(*this, sparse(x), sparse(y));
}

Representation Representation::from_pairs(const GradedSpace& algebra, GradedSpace module,
                                          const std::vector<Entry>& entries, EvenMap alpha_M, EvenMap beta_M) {
  const std::size_t n = algebra.dim(), m = module.dim();
  std::map<std::array<std::size_t, 2>, Matrix> table;
  auto place = [&](std::array<std::size_t, 2> idx, const Matrix& mat) {
    auto [it, fresh] = table.emplace(idx, mat);
    if (!fresh && !(it->second == mat))
      throw Error(ErrorKind::ValidationError, "rho: entries contradict super-skewsymmetry", {idx[0], idx[1]});
  };
  for (const auto& [idx, mat] : entries) {
    if (idx[0] >= n || idx[1] >= n) throw Error(ErrorKind::ValidationError, "rho: index out of range");
    if (mat.rows() != m || mat.cols() != m) throw Error(ErrorKind::ValidationError, "rho: matrix shape");
    place(idx, mat);
    place({idx[1], idx[0]}, mat.scaled(Scalar(-koszul(algebra.parity(idx[0]) * algebra.parity(idx[1])))));
  }
  Representation r{std::move(module), n, std::vector<Matrix>(n * n, Matrix(m, m)), std::move(alpha_M),
                   std::move(beta_M)};
  for (auto& [idx, mat] : table) r.rho[idx[0] * n + idx[1]] = mat;
  return r;
}

Representation Representation::zero(const GradedSpace& algebra, GradedSpace module, EvenMap alpha_M, EvenMap beta_M) {
  return from_pairs(algebra, std::move(module), {}, std::move(alpha_M), std::move(beta_M));
}

void validate(const ThreeBihomLieSuper& g, const Representation& r) {
  validate(g);
  const std::size_t m = r.module.dim();
  detail::require_dim(r.algebra_dim, g.dim(), "representation algebra dimension");
  detail::require_dim(r.rho.size(), g.dim() * g.dim(), "rho table size");
  for (const auto& mat : r.rho) {
    detail::require_dim(mat.rows(), m, "rho rows");
    detail::require_dim(mat.cols(), m, "rho cols");
  }
  detail::require_dim(r.alpha_M.rows(), m, "alpha_M rows");
  detail::require_dim(r.alpha_M.cols(), m, "alpha_M cols");
  detail::require_dim(r.beta_M.rows(), m, "beta_M rows");
  detail::require_dim(r.beta_M.cols(), m, "beta_M cols");
}

Representation adjoint(const ThreeBihomLieSuper& g) {
  validate(g);
  const std::size_t n = g.dim();
  Representation r{g.space, n, std::vector<Matrix>(n * n), g.alpha, g.beta};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Vec> cols(n);
      for (std::size_t k = 0; k < n; ++k) cols[k] = g.bracket.eval({i, j, k});
      r.rho[i * n + j] = Matrix::from_columns(cols, n);
    }
  return r;
}

VerificationReport verify_rep(const ThreeBihomLieSuper& g, const Representation& r) {
  VerificationReport rep = structural(g, r);
  rep.subject = "representation";
  const std::size_t n = g.dim();
  const auto& p = g.space.parities();
  const RepCache c(g, r);
  const Matrix& aM = r.alpha_M.matrix();
  const Matrix& bM = r.beta_M.matrix();
  rep.add(pair_sweep("condition-1", n, [&](std::size_t u, std::size_t v) {
    return c.at(c.rho_a, u, v) * aM - aM * c.at(c.rho, u, v);
  }));
  rep.add(pair_sweep("condition-2", n, [&](std::size_t u, std::size_t v) {
    return c.at(c.rho_b, u, v) * bM - bM * c.at(c.rho, u, v);
  }));
  rep.add(sweep_check("condition-3", n, 4, [&](const std::vector<std::size_t>& t) {
    const auto u = t[0], v = t[1], x = t[2], y = t[3];
    const unsigned uv = p[u] + p[v];
    Matrix res = c.at(c.rho_ab, u, v) * c.at(c.rho, x, y);
    res = res - (c.at(c.rho_b, x, y) * c.at(c.rho_a, u, v)).scaled(Scalar(koszul(uv * (p[x] + p[y]))));
    res = res - c.left_inner(u, v, x, y) * bM;
    res = res - (c.right_inner(u, v, x, y) * bM).scaled(Scalar(koszul(p[x] * uv)));
    return detail::flatten(res);
  }));
  rep.add(sweep_check("condition-4", n, 4, [&](const std::vector<std::size_t>& t) {
    const auto u = t[0], v = t[1], x = t[2], y = t[3];
    Matrix res = c.left_inner(u, v, x, y) * bM;
    res = res - (c.at(c.ab_b, v, x) * c.at(c.a_id, u, y)).scaled(Scalar(koszul(p[u] * (p[x] + p[v]))));
    res = res - (c.at(c.b_ab, x, u) * c.at(c.a_id, v, y)).scaled(Scalar(koszul(p[x] * (p[u] + p[v]))));
    res = res - c.at(c.rho_ab, u, v) * c.at(c.rho, x, y);
    return detail::flatten(res);
  }));
  return rep;
}

VerificationReport theorem_conditions(const ThreeBihomLieSuper& g, const Representation& r) {
  VerificationReport rep = structural(g, r);
  rep.subject = "dual-admissibility";
  const std::size_t n = g.dim();
  const auto& p = g.space.parities();
  const RepCache c(g, r);
  const Matrix& aM = r.alpha_M.matrix();
  const Matrix& bM = r.beta_M.matrix();
  rep.add(pair_sweep("theorem-condition-1", n, [&](std::size_t x, std::size_t y) {
    return aM * c.at(c.rho_a, x, y) - c.at(c.rho, x, y) * aM;
  }));
  rep.add(pair_sweep("theorem-condition-2", n, [&](std::size_t x, std::size_t y) {
    return bM * c.at(c.rho_b, x, y) - c.at(c.rho, x, y) * bM;
  }));
  rep.add(sweep_check("theorem-condition-3", n, 4, [&](const std::vector<std::size_t>& t) {
    const auto u = t[0], v = t[1], x = t[2], y = t[3];
    const unsigned uv = p[u] + p[v], xy = p[x] + p[y];
    Matrix res = c.at(c.rho, x, y) * c.at(c.rho_ab, u, v);
    res = res - (c.at(c.rho_a, u, v) * c.at(c.rho_b, x, y)).scaled(Scalar(koszul(xy * uv)));
    res = res + (bM * c.left_inner(u, v, x, y)).scaled(Scalar(koszul(xy * uv)));
    res = res + (bM * c.right_inner(u, v, x, y)).scaled(Scalar(koszul(p[y] * uv)));
    return detail::flatten(res);
  }));
  rep.add(sweep_check("theorem-condition-4", n, 4, [&](const std::vector<std::size_t>& t) {
    const auto u = t[0], v = t[1], x = t[2], y = t[3];
    const unsigned uv = p[u] + p[v], xy = p[x] + p[y];
    Matrix res = bM * c.left_inner(u, v, x, y);
    res = res + (c.at(c.a_id, u, y) * c.at(c.ab_b, v, x)).scaled(Scalar(koszul(p[y] * (p[v] + p[x]))));
    res = res + (c.at(c.a_id, v, y) * c.at(c.b_ab, x, u))
                    .scaled(Scalar(koszul(p[u] * (p[x] + p[y] + p[v]) + p[x] * p[y])));
    res = res + (c.at(c.rho, x, y) * c.at(c.rho_ab, u, v)).scaled(Scalar(koszul(xy * uv)));
    return detail::flatten(res);
  }));
  return rep;
}

CocycleTensor zero_cocycle(const ThreeBihomLieSuper& g, const Representation& r) {
  return CocycleTensor(g.dim(), r.module.dim());
}

VerificationReport verify_cocycle(const ThreeBihomLieSuper& g, const Representation& r, const CocycleTensor& theta) {
  validate(g, r);
  const std::size_t n = g.dim(), m = r.module.dim();
  detail::require_dim(theta.dim(), n, "theta argument dimension");
  detail::require_dim(theta.out_dim(), m, "theta value dimension");
  const auto& p = g.space.parities();
  const auto al = detail::images(g.alpha.matrix());
  const auto be = detail::images(g.beta.matrix());
  const auto be2 = detail::images(g.beta.matrix() * g.beta.matrix());
  const JacobiEvaluator jac(g);

  VerificationReport rep;
  rep.subject = "3-cocycle";
  Check even;
  even.name = "theta-evenness";
  try {
    theta.check_even(g.space, r.module);
  } catch (const Error& e) {
    even.pass = false;
    even.witness = Witness{e.witness(), theta.eval({e.witness()[0], e.witness()[1], e.witness()[2]})};
  }
  rep.add(even);
  for (int k = 0; k < 2; ++k) {
    const auto& img = k == 0 ? al : be;
    const EvenMap& fm = k == 0 ? r.alpha_M : r.beta_M;
    rep.add(sweep_check(k == 0 ? "condition-1" : "condition-2", n, 3, [&](const std::vector<std::size_t>& t) {
      return fm(theta.eval({t[0], t[1], t[2]})) - theta.apply_sparse({img[t[0]], img[t[1]], img[t[2]]});
    }));
  }
  // θ(βx, βy, αz)
  std::vector<SparseVec> tin(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) tin[(x * n + y) * n + z] = sparse(theta.apply_sparse({be[x], be[y], al[z]}));
  auto T = [&](std::size_t x, std::size_t y, std::size_t z) -> const SparseVec& { return tin[(x * n + y) * n + z]; };
  rep.add(sweep_check("condition-3", n, 3, [&](const std::vector<std::size_t>& t) {
    const auto x = t[0], y = t[1], z = t[2];
    Vec a = dense(T(x, y, z), m), b = dense(T(x, y, z), m);
    axpy(a, Scalar(koszul(p[x] * p[y])), T(y, x, z));
    axpy(b, Scalar(koszul(p[y] * p[z])), T(x, z, y));
    return concat(a, b);
  }));
  // ρ(β² e_a, β² e_b)
  const std::vector<Matrix> rb2 = pair_table(r, g.beta.matrix() * g.beta.matrix(), g.beta.matrix() * g.beta.matrix());
  auto term = [&](std::size_t a, std::size_t b, std::size_t x, std::size_t y, std::size_t z) {
    Vec v = theta.apply_sparse({be2[a], be2[b], jac.inner(x, y, z)});
    return v + rb2[a * n + b] * dense(T(x, y, z), m);
  };
  rep.add(sweep_check("condition-4", n, 5, [&](const std::vector<std::size_t>& t) {
    const auto x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3], x5 = t[4];
    const unsigned s12 = p[x1] + p[x2];
    Vec res = term(x1, x2, x3, x4, x5);
    axpy(res, Scalar(-koszul((p[x4] + p[x5]) * (s12 + p[x3]))), term(x4, x5, x1, x2, x3));
    axpy(res, Scalar(koszul((p[x3] + p[x5]) * s12 + p[x4] * p[x5])), term(x3, x5, x1, x2, x4));
    axpy(res, Scalar(-koszul((p[x3] + p[x4]) * s12)), term(x3, x4, x1, x2, x5));
    return res;
  }));
  return rep;
}

ThreeBihomLieSuper t_theta_bracket(const ThreeBihomLieSuper& g, const Representation& r, const CocycleTensor& theta) {
  validate(g, r);
  const std::size_t n = g.dim(), m = r.module.dim(), N = n + m;
  detail::require_dim(theta.dim(), n, "theta argument dimension");
  detail::require_dim(theta.out_dim(), m, "theta value dimension");
  Matrix alpha_inv, beta_M_inv;
  try {
    alpha_inv = inverse(g.alpha.matrix());
  } catch (const Error&) {
    throw Error(ErrorKind::SingularMap, "alpha is not invertible");
  }
  try {
    beta_M_inv = inverse(r.beta_M.matrix());
  } catch (const Error&) {
    throw Error(ErrorKind::SingularMap, "beta_M is not invertible");
  }
  const Matrix C = alpha_inv * g.beta.matrix();
  const Matrix D = r.alpha_M.matrix() * beta_M_inv;
  const auto Ci = detail::images(C);
  const auto Di = detail::images(D);
  const GradedSpace space = direct_sum(g.space, r.module);
  auto par = [&](std::size_t i) { return space.parity(i); };

  TriBracket b(N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t bb = 0; bb < N; ++bb)
      for (std::size_t c = 0; c < N; ++c) {
        const int in_m = (a >= n) + (bb >= n) + (c >= n);
        if (in_m >= 2) continue;
        Vec out(N);
        if (in_m == 0) {
          const Vec gv = g.bracket.eval({a, bb, c});
          const Vec mv = theta.eval({a, bb, c});
          out = concat(gv, mv);
        } else if (c >= n) {
          out = concat(Vec(n), r.at(a, bb).column(c - n));
        } else if (bb >= n) {
          const Vec mv = rho_of(r, {{static_cast<std::uint32_t>(a), Scalar(1)}}, Ci[c]) * dense(Di[bb - n], m);
          out = concat(Vec(n), Scalar(-koszul(par(bb) * par(c))) * mv);
        } else {
          const Vec mv = rho_of(r, {{static_cast<std::uint32_t>(bb), Scalar(1)}}, Ci[c]) * dense(Di[a - n], m);
          out = concat(Vec(n), Scalar(koszul(par(a) * (par(bb) + par(c)))) * mv);
        }
        if (!is_zero(out)) b.set({a, bb, c}, out);
      }
  return {space, std::move(b), direct_sum(g.alpha, r.alpha_M), direct_sum(g.beta, r.beta_M)};
}

namespace {

void gate(const VerificationReport& r, ErrorKind kind, const std::string& what) {
  if (!r.overall()) throw Error(kind, what + " fails " + r.first_failure());
}

}  // namespace

ThreeBihomLieSuper semidirect(const ThreeBihomLieSuper& g, const Representation& r) {
  validate(g, r);
  gate(verify3(g), ErrorKind::FailedPrecondition, "algebra");
  gate(verify_rep(g, r), ErrorKind::FailedPrecondition, "representation");
  return t_theta_bracket(g, r, zero_cocycle(g, r));
}

ThreeBihomLieSuper t_theta_extension(const ThreeBihomLieSuper& g, const Representation& r, const CocycleTensor& theta) {
  validate(g, r);
  gate(verify3(g), ErrorKind::FailedPrecondition, "algebra");
  gate(verify_rep(g, r), ErrorKind::FailedPrecondition, "representation");
  gate(verify_cocycle(g, r, theta), ErrorKind::CocycleFails, "cocycle");
  return t_theta_bracket(g, r, theta);
}

CocycleTensor coboundary_theta_f(const ThreeBihomLieSuper& g, const Representation& r, const EvenMap& f) {
  validate(g, r);
  const std::size_t n = g.dim(), m = r.module.dim();
  detail::require_dim(f.rows(), m, "f rows");
  detail::require_dim(f.cols(), n, "f cols");
  Matrix alpha_inv, beta_inv;
  try {
    alpha_inv = inverse(g.alpha.matrix());
  } catch (const Error&) {
    throw Error(ErrorKind::SingularMap, "alpha is not invertible");
  }
  try {
    beta_inv = inverse(g.beta.matrix());
  } catch (const Error&) {
    throw Error(ErrorKind::SingularMap, "beta is not invertible");
  }
  if (!(f.matrix() * g.alpha.matrix() == r.alpha_M.matrix() * f.matrix()))
    throw Error(ErrorKind::IntertwiningFails, "f∘alpha != alpha_M∘f");
  if (!(f.matrix() * g.beta.matrix() == r.beta_M.matrix() * f.matrix()))
    throw Error(ErrorKind::IntertwiningFails, "f∘beta != beta_M∘f");
  const auto& p = g.space.parities();
  const auto Ci = detail::images(alpha_inv * g.beta.matrix());
  const Matrix fC = f.matrix() * g.alpha.matrix() * beta_inv;  // f∘αβ⁻¹
  CocycleTensor th(n, m);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const SparseVec ex{{static_cast<std::uint32_t>(x), Scalar(1)}};
        const SparseVec ey{{static_cast<std::uint32_t>(y), Scalar(1)}};
        Vec v = f(g.bracket.eval({x, y, z}));
        v = v - r.at(x, y) * f.image(z);
        axpy(v, Scalar(koszul(p[y] * p[z])), rho_of(r, ex, Ci[z]) * fC.column(y));
        axpy(v, Scalar(-koszul((p[y] + p[z]) * p[x])), rho_of(r, ey, Ci[z]) * fC.column(x));
        if (!is_zero(v)) th.set({x, y, z}, v);
      }
  return th;
}

SigmaResult sigma_iso(const ThreeBihomLieSuper& g, const Representation& r, const CocycleTensor& theta,
                      const EvenMap& f) {
  const CocycleTensor thf = coboundary_theta_f(g, r, f);
  const std::size_t n = g.dim(), m = r.module.dim();
  CocycleTensor sum(n, m);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vec v = theta.eval({x, y, z}) + thf.eval({x, y, z});
        if (!is_zero(v)) sum.set({x, y, z}, v);
      }
  ThreeBihomLieSuper source = t_theta_extension(g, r, theta);
  ThreeBihomLieSuper target = t_theta_extension(g, r, sum);
  Matrix s = Matrix::identity(n + m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) s(n + i, j) = f.matrix()(i, j);
  EvenMap sigma(s, source.space);

  VerificationReport rep;
  rep.subject = "sigma-isomorphism";
  const Scalar det = determinant(s);
  rep.add("bijective", !det.is_zero(), "det = " + det.str());
  const Check ca = detail::commute_check("alpha-intertwining", s, source.alpha.matrix());
  const Check cb = detail::commute_check("beta-intertwining", s, source.beta.matrix());
  rep.add(ca);
  rep.add(cb);
  const MorphismResult mr = is_morphism(sigma, source, target);
  Check hom;
  hom.name = "bracket-homomorphism";
  if (!mr.ok && mr.failed == "bracket") {
    hom.pass = false;
    hom.witness = mr.witness;
  }
  rep.add(hom);
  return {sigma, std::move(source), std::move(target), std::move(rep)};
}

Representation dual_of(const Representation& r) {
  const std::size_t n = r.algebra_dim, m = r.module.dim();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back(r.module.name(i) + "*");
  GradedSpace dual_space(r.module.parities(), names);
  Representation d{dual_space, n, std::vector<Matrix>(n * n, Matrix(m, m)),
                   EvenMap(r.alpha_M.matrix().transpose(), dual_space),
                   EvenMap(r.beta_M.matrix().transpose(), dual_space)};
  // The parity of ρ(e_i, e_j) is read off its nonzero entries; a zero block contributes nothing.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix& src = r.at(i, j);
      Matrix& dst = d.rho[i * n + j];
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          if (src(k, l).is_zero()) continue;
          const unsigned rho_parity = (r.module.parity(k) + r.module.parity(l)) & 1U;
          dst(l, k) = -(src(k, l) * Scalar(koszul(r.module.parity(k) * rho_parity)));
        }
    }
  return d;
}

DualResult dual_rep(const ThreeBihomLieSuper& g, const Representation& r) {
  validate(g, r);
  Representation d = dual_of(r);
  const VerificationReport thm = theorem_conditions(g, r);
  const VerificationReport dv = verify_rep(g, d);
  VerificationReport rep;
  rep.subject = "dual-representation";
  rep.merge(thm);
  rep.merge(dv, "dual-");
  rep.add("verdict-agreement", thm.overall() == dv.overall(),
          std::string("theorem ") + (thm.overall() ? "pass" : "fail") + ", dual " + (dv.overall() ? "pass" : "fail"));
  return {std::move(d), std::move(rep)};
}

}  // namespace bihom

#include "bihom/quadratic.hpp"

#include "bihom/sweep.hpp"
#include "detail.hpp"

namespace bihom {

namespace {

Scalar dot(const SparseVec& v, const Matrix& m, std::size_t col) {
  Scalar s;
  for (const auto& [k, a] : v) s.add_product(a, m(k, col));
  return s;
}

Vec head(const Vec& v, std::size_t n) { return Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)); }
Vec tail(const Vec& v, std::size_t n) { return Vec(v.end() - static_cast<std::ptrdiff_t>(n), v.end()); }

Check pair_check(std::string name, std::size_t n, const std::function<Scalar(std::size_t, std::size_t)>& f) {
  return sweep_check(std::move(name), n, 2, [&](const std::vector<std::size_t>& t) { return Vec{f(t[0], t[1])}; });
}

Check isotropy_check(const SuperForm& q, const std::vector<Vec>& basis, const std::string& name) {
  return pair_check(name, basis.size(), [&](std::size_t a, std::size_t b) { return q(basis[a], basis[b]); });
}

Subspace perp(const SuperForm& q, const Subspace& s) {
  std::vector<Vec> rows;
  for (const auto& v : s.basis()) rows.push_back(q.gram * v);
  return Subspace(s.ambient(), nullspace(Matrix::from_rows(rows, s.ambient())));
}

}  // namespace

Scalar SuperForm::operator()(const Vec& x, const Vec& y) const {
  detail::require_dim(x.size(), gram.rows(), "form argument");
  detail::require_dim(y.size(), gram.cols(), "form argument");
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) s.add_product(x[i] * gram(i, j), y[j]);
  }
  return s;
}

VerificationReport verify_quadratic(const QuadraticAlgebra& qa) {
  const ThreeBihomLieSuper& g = qa.algebra;
  validate(g);
  const std::size_t n = g.dim();
  const Matrix& G = qa.form.gram;
  detail::require_dim(G.rows(), n, "gram rows");
  detail::require_dim(G.cols(), n, "gram cols");
  const auto& p = g.space.parities();
  const Matrix& al = g.alpha.matrix();
  const Matrix& be = g.beta.matrix();

  VerificationReport rep;
  rep.subject = "quadratic";
  rep.add(pair_check("evenness", n, [&](std::size_t i, std::size_t j) {
    return p[i] == p[j] ? Scalar() : G(i, j);
  }));
  const std::size_t r = rank(G);
  rep.add("nondegeneracy", r == n, "rank " + std::to_string(r) + " of " + std::to_string(n));
  rep.add(pair_check("supersymmetry", n, [&](std::size_t i, std::size_t j) {
    return G(i, j) - G(j, i) * Scalar(koszul(p[i] * p[j]));
  }));
  const JacobiEvaluator jac(g);
  const Matrix g_al = G * al;                // q(w, α e_k) = (wᵀ G α)_k
  const Matrix alt_g = (al.transpose() * G).transpose();  // q(α e_k, w) = Σ_m (αᵀG)(k,m) w_m
  rep.add(sweep_check("invariance", n, 4, [&](const std::vector<std::size_t>& t) {
    const auto x1 = t[0], x2 = t[1], x3 = t[2], x4 = t[3];
    Scalar v = dot(jac.inner(x1, x2, x3), g_al, x4);
    v += Scalar(koszul(p[x3] * (p[x1] + p[x2]))) * dot(jac.inner(x1, x2, x4), alt_g, x3);
    return Vec{v};
  }));
  const Matrix da = al.transpose() * G - G * al;
  const Matrix db = be.transpose() * G - G * be;
  rep.add(sweep_check("form-symmetry", n, 2, [&](const std::vector<std::size_t>& t) {
    return Vec{da(t[0], t[1]), db(t[0], t[1])};
  }));
  return rep;
}

SuperForm qg_form(const GradedSpace& g) {
  const std::size_t n = g.dim();
  Matrix G(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    G(n + i, i) = Scalar(1);
    G(i, n + i) = Scalar(koszul(g.parity(i)));
  }
  return {G};
}

Representation coadjoint(const ThreeBihomLieSuper& g) { return dual_of(adjoint(g)); }

Check lemma_theta_condition(const ThreeBihomLieSuper& g, const CocycleTensor& theta) {
  validate(g);
  const std::size_t n = g.dim();
  detail::require_dim(theta.dim(), n, "theta argument dimension");
  detail::require_dim(theta.out_dim(), n, "theta value dimension");
  const auto& p = g.space.parities();
  const Matrix& al = g.alpha.matrix();
  const auto ai = detail::images(al);
  const auto bi = detail::images(g.beta.matrix());
  std::vector<SparseVec> t(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) t[(x * n + y) * n + z] = sparse(theta.apply_sparse({bi[x], bi[y], ai[z]}));
  return sweep_check("lemma-theta-condition", n, 4, [&](const std::vector<std::size_t>& q) {
    const auto x1 = q[0], x2 = q[1], x3 = q[2], x4 = q[3];
    Scalar v = dot(t[(x1 * n + x2) * n + x3], al, x4);
    v += Scalar(koszul(p[x3] * p[x4])) * dot(t[(x1 * n + x2) * n + x4], al, x3);
    return Vec{v};
  });
}

QuadraticAlgebra tstar_bracket(const ThreeBihomLieSuper& g, const CocycleTensor& theta) {
  return {t_theta_bracket(g, coadjoint(g), theta), qg_form(g.space)};
}

QuadraticAlgebra tstar_extension(const ThreeBihomLieSuper& g, const CocycleTensor& theta) {
  auto gate = [](bool ok, const std::string& name, const std::string& why) {
    if (!ok) throw Error(ErrorKind::FailedPrecondition, name + " fails" + (why.empty() ? "" : " at " + why));
  };
  const VerificationReport v = verify3(g);
  gate(v.overall(), "verify3", v.first_failure());
  const DualResult d = dual_rep(g, adjoint(g));
  gate(d.report.overall(), "coadjoint-admissibility", d.report.first_failure());
  const Representation co = coadjoint(g);
  const VerificationReport c = verify_cocycle(g, co, theta);
  gate(c.overall(), "cocycle", c.first_failure());
  gate(lemma_theta_condition(g, theta).pass, "lemma-theta-condition", "");
  QuadraticAlgebra qa{t_theta_bracket(g, co, theta), qg_form(g.space)};
  const VerificationReport v3 = verify3(qa.algebra);
  if (!v3.overall()) throw Error(ErrorKind::ReportedMismatch, "T*_theta fails verify3 at " + v3.first_failure());
  const VerificationReport vq = verify_quadratic(qa);
  if (!vq.overall())
    throw Error(ErrorKind::ReportedMismatch, "T*_theta fails verify_quadratic at " + vq.first_failure());
  return qa;
}

VerificationReport series_lift_check(const ThreeBihomLieSuper& g, const CocycleTensor& theta) {
  const QuadraticAlgebra qa = tstar_extension(g, theta);
  const SeriesVerdict gs = is_solvable(g), gn = is_nilpotent(g);
  const SeriesVerdict es = is_solvable(qa.algebra), en = is_nilpotent(qa.algebra);
  auto describe = [](const SeriesVerdict& a, const SeriesVerdict& b) {
    auto one = [](const SeriesVerdict& s) { return s.holds ? "yes (length " + std::to_string(s.length) + ")" : std::string("no"); };
    return "algebra " + one(a) + ", extension " + one(b);
  };
  VerificationReport rep;
  rep.subject = "series-lift";
  rep.add("solvable-lifts", !gs.holds || es.holds, describe(gs, es));
  rep.add("nilpotent-lifts", !gn.holds || en.holds, describe(gn, en));
  return rep;
}

VerificationReport isotropic_ideal_check(const QuadraticAlgebra& qa, const Subspace& i) {
  const ThreeBihomLieSuper& g = qa.algebra;
  validate(g);
  const std::size_t n = g.dim();
  detail::require_dim(i.ambient(), n, "ideal ambient dimension");
  VerificationReport rep;
  rep.subject = "isotropic-ideal";
  rep.add("half-dimension", n % 2 == 0 && 2 * i.dim() == n,
          "dim I = " + std::to_string(i.dim()) + ", dim g = " + std::to_string(n));
  rep.add(isotropy_check(qa.form, i.basis(), "isotropy"));
  rep.add("perp-equals-ideal", perp(qa.form, i).same_as(i));
  rep.add("ideal", is_ideal(i, g));
  rep.add("alpha-invariance", i.contains(image(g.alpha, i)));
  rep.add("beta-invariance", i.contains(image(g.beta, i)));
  if (!rep.overall()) return rep;
  const Subspace all = Subspace::whole(n);
  const Subspace bi = image(g.beta, i), bg = image(g.beta, all);
  const Subspace proof = bracket_span(g, bi, bg, image(g.alpha, i));
  rep.add("lemma-conclusion", proof.dim() == 0, "dim [β(I),β(g),α(I)] = " + std::to_string(proof.dim()));
  const Subspace strong = bracket_span(g, bi, bg, image(g.alpha, all));
  Check c{"lemma-conclusion-strong", strong.dim() == 0, true, std::nullopt,
          "dim [β(I),β(g),α(g)] = " + std::to_string(strong.dim())};
  rep.add(c);
  return rep;
}

Subspace isotropic_complement(const QuadraticAlgebra& qa, const Subspace& i) {
  const GradedSpace& space = qa.algebra.space;
  const std::size_t n = space.dim();
  detail::require_dim(i.ambient(), n, "ideal ambient dimension");
  const SuperForm& q = qa.form;
  if (n % 2 != 0 || 2 * i.dim() != n) throw Error(ErrorKind::FailedPrecondition, "I is not of half dimension");
  if (!isotropy_check(q, i.basis(), "isotropy").pass) throw Error(ErrorKind::FailedPrecondition, "I is not isotropic");
  const std::size_t h = i.dim();

  std::array<std::size_t, 2> ideal_count{0, 0};
  for (const auto& v : i.basis()) {
    const auto par = parity_of(space, v);
    if (!par) throw Error(ErrorKind::ParityObstruction, "I has no homogeneous basis");
    ++ideal_count[*par];
  }
  // Coordinate complement: greedily add unit vectors independent of what is already chosen.
  std::vector<Vec> chosen = i.basis(), c;
  for (std::size_t k = 0; k < n && c.size() < h; ++k) {
    chosen.push_back(unit_vec(n, k));
    if (rank(Matrix::from_rows(chosen, n)) == chosen.size())
      c.push_back(chosen.back());
    else
      chosen.pop_back();
  }
  std::array<std::size_t, 2> comp_count{0, 0};
  for (const auto& v : c) ++comp_count[*parity_of(space, v)];
  if (comp_count != ideal_count)
    throw Error(ErrorKind::ParityObstruction, "parity dimensions of I and its complement differ");

  Matrix m(h, h);  // m(a, k) = q(i_a, c_k)
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t k = 0; k < h; ++k) m(a, k) = q(i.basis()[a], c[k]);
  Matrix x;
  try {
    x = inverse(m).transpose();
  } catch (const Error&) {
    throw Error(ErrorKind::NoDualBasis, "q pairs I with its complement degenerately");
  }
  std::vector<Vec> d(h, zero_vec(n));  // q(d_j, c_k) = δ_jk
  for (std::size_t j = 0; j < h; ++j)
    for (std::size_t a = 0; a < h; ++a) axpy(d[j], x(a, j), i.basis()[a]);
  const Scalar half(1, 2);
  std::vector<Vec> b;
  for (std::size_t k = 0; k < h; ++k) {
    Vec v = c[k];
    for (std::size_t j = 0; j < h; ++j) axpy(v, -(half * q(c[k], c[j])), d[j]);
    b.push_back(std::move(v));
  }
  if (!isotropy_check(q, b, "complement-isotropy").pass)
    throw Error(ErrorKind::ReportedMismatch, "Witt correction left a non-isotropic complement");
  return Subspace(n, b);
}

Reconstruction reconstruct_tstar(const QuadraticAlgebra& qa, const Subspace& i) {
  const ThreeBihomLieSuper& g = qa.algebra;
  if (!is_regular(g)) throw Error(ErrorKind::FailedPrecondition, "alpha or beta is not invertible");
  const VerificationReport pre = isotropic_ideal_check(qa, i);
  if (!pre.overall()) throw Error(ErrorKind::FailedPrecondition, "isotropic_ideal_check fails at " + pre.first_failure());
  const std::size_t N = g.dim(), n = i.dim();
  const SuperForm& q = qa.form;
  const Subspace b0 = isotropic_complement(qa, i);
  const std::vector<Vec>& b = b0.basis();

  std::vector<Vec> cols = b;
  cols.insert(cols.end(), i.basis().begin(), i.basis().end());
  const Matrix s_inv = inverse(Matrix::from_columns(cols, N));
  auto p0 = [&](const Vec& v) { return head(s_inv * v, n); };
  auto p1 = [&](const Vec& v) { return tail(s_inv * v, n); };

  // Quotient B = g/I on the classes of b_j; unit-vector representatives keep their names.
  std::vector<unsigned> par;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) {
    par.push_back(*parity_of(g.space, b[j]));
    std::string name = "b" + std::to_string(j + 1);
    for (std::size_t k = 0; k < N; ++k)
      if (b[j] == unit_vec(N, k)) name = g.space.name(k);
    names.push_back(name);
  }
  const GradedSpace bs(par, names);
  TriBracket bb(n);
  CocycleTensor theta(n, n);
  Matrix qstar(n, n);  // column k: q*(i_k) in B* coordinates
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) qstar(j, k) = q(i.basis()[k], b[j]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Vec w = g.bracket.apply({&b[x], &b[y], &b[z]});
        const Vec c0 = p0(w), c1 = qstar * p1(w);
        if (!is_zero(c0)) bb.set({x, y, z}, c0);
        if (!is_zero(c1)) theta.set({x, y, z}, c1);
      }
  auto induced = [&](const EvenMap& f) {
    std::vector<Vec> c;
    for (const auto& v : b) c.push_back(p0(f(v)));
    return EvenMap(Matrix::from_columns(c, n), bs);
  };
  ThreeBihomLieSuper quotient{bs, std::move(bb), induced(g.alpha), induced(g.beta)};
  QuadraticAlgebra rebuilt = tstar_bracket(quotient, theta);

  Matrix proj(n, N);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < N; ++c) proj(r, c) = s_inv(r, c);
  const Matrix phi_m = block_diag(Matrix::identity(n), qstar) * s_inv;
  EvenMap phi(phi_m, g.space, rebuilt.algebra.space);

  VerificationReport rep;
  rep.subject = "reconstruction";
  rep.add(isotropy_check(q, b, "complement-isotropy"));
  rep.add(Check{"complement-invariance", b0.contains(image(g.alpha, b0)) && b0.contains(image(g.beta, b0)), true,
                std::nullopt, "α(B0) ⊆ B0 and β(B0) ⊆ B0"});
  const std::size_t qr = rank(qstar);
  rep.add("q-star-isomorphism", qr == n, "rank " + std::to_string(qr) + " of " + std::to_string(n));
  const EvenMap pi(proj, g.space, bs);
  bool kernel_is_i = rank(proj) == n;
  for (const auto& v : i.basis()) kernel_is_i = kernel_is_i && is_zero(proj * v);
  const MorphismResult pm = is_morphism(pi, g, quotient);
  Check qp{"quotient-projection", pm.ok && kernel_is_i, false, pm.witness,
           pm.ok ? (kernel_is_i ? "" : "kernel differs from I") : "fails on " + pm.failed};
  rep.add(qp);
  rep.merge(verify3(quotient), "quotient-");
  rep.merge(verify_cocycle(quotient, coadjoint(quotient), theta), "theta-");
  rep.add(lemma_theta_condition(quotient, theta));
  rep.merge(verify3(rebuilt.algebra), "rebuilt-");
  rep.merge(verify_quadratic(rebuilt), "rebuilt-");
  const Scalar det = determinant(phi_m);
  rep.add("phi-bijective", !det.is_zero(), "det = " + det.str());
  rep.add("phi-alpha-intertwining", (phi_m * g.alpha.matrix() - rebuilt.algebra.alpha.matrix() * phi_m).is_zero());
  rep.add("phi-beta-intertwining", (phi_m * g.beta.matrix() - rebuilt.algebra.beta.matrix() * phi_m).is_zero());
  const MorphismResult fm = is_morphism(phi, g, rebuilt.algebra);
  Check hom{"phi-bracket-homomorphism", true, false, std::nullopt, ""};
  if (!fm.ok && fm.failed == "bracket") {
    hom.pass = false;
    hom.witness = fm.witness;
  }
  rep.add(hom);
  const Matrix iso = phi_m.transpose() * rebuilt.form.gram * phi_m - q.gram;
  rep.add("phi-isometry", iso.is_zero());
  if (!rep.overall()) throw Error(ErrorKind::ReportedMismatch, "reconstruction certificate fails: " + rep.first_failure());
  return {std::move(quotient), std::move(theta), std::move(rebuilt), std::move(phi), b0, std::move(rep)};
}

}  // namespace bihom

#include "bihom/binary.hpp"

#include "bihom/sweep.hpp"
#include "detail.hpp"

namespace bihom {

void validate(const BihomLieSuper2& a) {
  const std::size_t n = a.space.dim();
  detail::require_dim(a.bracket.dim(), n, "bracket dimension");
  detail::require_dim(a.alpha.rows(), n, "alpha rows");
  detail::require_dim(a.alpha.cols(), n, "alpha cols");
  detail::require_dim(a.beta.rows(), n, "beta rows");
  detail::require_dim(a.beta.cols(), n, "beta cols");
}

namespace {

Check multiplicativity(const std::string& name, const BihomLieSuper2& a, const EvenMap& f) {
  const auto img = detail::images(f.matrix());
  return sweep_check(name, a.space.dim(), 2, [&](const std::vector<std::size_t>& t) {
    return f(a.bracket.eval({t[0], t[1]})) - a.bracket.apply_sparse({img[t[0]], img[t[1]]});
  });
}

}  // namespace

VerificationReport verify2(const BihomLieSuper2& a) {
  validate(a);
  const std::size_t n = a.space.dim();
  const auto& p = a.space.parities();
  const auto al = detail::images(a.alpha.matrix());
  const auto be = detail::images(a.beta.matrix());
  const auto be2 = detail::images(a.beta.matrix() * a.beta.matrix());

  // inner[y][z] = [β e_y, α e_z]
  std::vector<SparseVec> inner(n * n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z) inner[y * n + z] = sparse(a.bracket.apply_sparse({be[y], al[z]}));

  VerificationReport r;
  r.subject = "bihom-lie-superalgebra";
  r.add(detail::commute_check("commutation", a.alpha.matrix(), a.beta.matrix()));
  r.add(multiplicativity("alpha-multiplicativity", a, a.alpha));
  r.add(multiplicativity("beta-multiplicativity", a, a.beta));
  r.add(sweep_check("skewsymmetry", n, 2, [&](const std::vector<std::size_t>& t) {
    const auto x = t[0], y = t[1];
    Vec res = dense(inner[x * n + y], n);
    axpy(res, Scalar(koszul(p[x] * p[y])), inner[y * n + x]);
    return res;
  }));
  r.add(sweep_check("jacobi", n, 3, [&](const std::vector<std::size_t>& t) {
    const auto x = t[0], y = t[1], z = t[2];
    Vec res(n);
    auto term = [&](std::size_t i, std::size_t j, std::size_t k) {
      const Vec v = a.bracket.apply_sparse({be2[i], inner[j * n + k]});
      axpy(res, Scalar(koszul(p[i] * p[k])), v);
    };
    term(x, y, z);
    term(y, z, x);
    term(z, x, y);
    return res;
  }));
  return r;
}

BihomLieSuper2 yau_twist2(const BihomLieSuper2& lie, const EvenMap& a, const EvenMap& b) {
  validate(lie);
  const std::size_t n = lie.space.dim();
  detail::require_dim(a.rows(), n, "twist map a");
  detail::require_dim(b.rows(), n, "twist map b");
  const EvenMap id = EvenMap::identity(lie.space);
  if (!(lie.alpha == id) || !(lie.beta == id))
    throw Error(ErrorKind::FailedPrecondition, "input structure maps must be the identity");
  if (!verify2(lie).overall())
    throw Error(ErrorKind::FailedPrecondition, "input is not a Lie superalgebra");
  for (const EvenMap* f : {&a, &b}) {
    const auto img = detail::images(f->matrix());
    if (auto w = first_failure(n, 2, [&](const std::vector<std::size_t>& t) {
          return (*f)(lie.bracket.eval({t[0], t[1]})) - lie.bracket.apply_sparse({img[t[0]], img[t[1]]});
        }))
      throw Error(ErrorKind::NotAHomomorphism,
                  std::string(f == &a ? "a" : "b") + " is not a bracket homomorphism", w->tuple);
  }
  if (!commute(a, b)) throw Error(ErrorKind::MapsDoNotCommute, "a and b do not commute");

  const auto ai = detail::images(a.matrix());
  const auto bi = detail::images(b.matrix());
  BihomLieSuper2 out{lie.space, BiBracket(n), a, b};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.bracket.set({i, j}, sparse(lie.bracket.apply_sparse({ai[i], bi[j]})));
  return out;
}

BihomLieSuper2 osp12() {
  enum { H, X, Y, F, G };
  GradedSpace s({0, 0, 0, 1, 1}, {"H", "X", "Y", "F", "G"});
  BiBracket b(5);
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
    Vec v(5);
    v[k] = c;
    b.set({i, j}, v);
  };
  put(H, X, X, 2);
  put(H, Y, Y, -2);
  put(X, Y, H, 1);
  put(Y, G, F, 1);
  put(X, F, G, 1);
  put(H, F, F, -1);
  put(H, G, G, 1);
  put(G, F, H, 1);
  put(G, G, X, -2);
  put(F, F, Y, 2);
  BihomLieSuper2 out{s, skew_extend(b, s), EvenMap::identity(s), EvenMap::identity(s)};
  return out;
}

EvenMap osp12_alpha(const Scalar& lambda) {
  if (lambda.is_zero()) throw Error(ErrorKind::ZeroParameter, "twist parameter must be nonzero");
  const Scalar inv = Scalar(1) / lambda;
  return EvenMap(Matrix::diagonal({Scalar(1), lambda * lambda, inv * inv, inv, lambda}), osp12().space);
}

BihomLieSuper2 osp12_family(const Scalar& lambda, const Scalar& mu) {
  if (lambda.is_zero() || mu.is_zero())
    throw Error(ErrorKind::ZeroParameter, "lambda and mu must be nonzero");
  return yau_twist2(osp12(), osp12_alpha(lambda), osp12_alpha(mu));
}

}  // namespace bihom

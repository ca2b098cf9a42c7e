#include <doctest.h>

#include "bihom/corpus.hpp"
#include "bihom/representation.hpp"
#include "oracles.hpp"

using namespace bihom;
using test::inverse_adjoint;
using test::n4_map;
using test::perturbed_adjoint;
using test::twisted_corpus;

namespace {

/// ρ ≡ 0 on an even module of the given dimension with identity maps.
Representation trivial(const ThreeBihomLieSuper& g, std::size_t m) {
  const GradedSpace mod = GradedSpace::even(m);
  return Representation::zero(g.space, mod, EvenMap::identity(mod), EvenMap::identity(mod));
}

/// θ(e_x, e_y, e_z) = value, extended super-skewsymmetrically.
CocycleTensor single(const ThreeBihomLieSuper& g, std::size_t m, std::array<std::size_t, 3> idx, const Vec& value) {
  CocycleTensor t(g.dim(), m);
  t.set(idx, value);
  std::vector<unsigned> par(g.space.parities());
  // Skew-extend inside g ⊕ M so the output parity is tracked, then restrict.
  TriBracket b(g.dim() + m);
  b.set(idx, concat(zero_vec(g.dim()), value));
  par.resize(g.dim() + m, 0);
  const auto ext = skew_extend(b, GradedSpace(par));
  for (const auto& i : ext.support())
    if (i[0] < g.dim() && i[1] < g.dim() && i[2] < g.dim()) {
      const Vec full = ext.eval(i);
      t.set(i, Vec(full.begin() + static_cast<long>(g.dim()), full.end()));
    }
  return t;
}

/// Fundamental identity of the untwisted even algebra g ⊕ M with [x,y,z]' = [x,y,z] + θ(x,y,z), M central.
bool central_extension_is_3lie(const ThreeBihomLieSuper& g, const CocycleTensor& theta) {
  const std::size_t n = g.dim(), m = theta.out_dim(), N = n + m;
  auto br = [&](const Vec& a, const Vec& b, const Vec& c) {
    const Vec ga(a.begin(), a.begin() + static_cast<long>(n)), gb(b.begin(), b.begin() + static_cast<long>(n)),
        gc(c.begin(), c.begin() + static_cast<long>(n));
    return concat(g.bracket_of(ga, gb, gc), theta.apply({&ga, &gb, &gc}));
  };
  auto e = [&](std::size_t i) { return test::e(N, i); };
  for (std::size_t a = 0; a < N * N * N * N * N; ++a) {
    std::size_t t = a, i[5];
    for (auto& k : i) k = t % N, t /= N;
    Vec r = br(e(i[0]), e(i[1]), br(e(i[2]), e(i[3]), e(i[4])));
    r = r - br(br(e(i[0]), e(i[1]), e(i[2])), e(i[3]), e(i[4]));
    r = r - br(e(i[2]), br(e(i[0]), e(i[1]), e(i[3])), e(i[4]));
    r = r - br(e(i[2]), e(i[3]), br(e(i[0]), e(i[1]), e(i[4])));
    if (!is_zero(r)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("trivial and adjoint representations") {
  const auto n4 = corpus::n4();
  CHECK(verify_rep(n4, trivial(n4, 0)).overall());
  CHECK(verify_rep(n4, trivial(n4, 3)).overall());
  const GradedSpace mod({0, 1});
  const EvenMap a(test::diag({2, 3}), mod), b(test::diag({5, 7}), mod);
  CHECK(verify_rep(n4, Representation::zero(n4.space, mod, a, b)).overall());
  const auto ad = adjoint(n4);
  CHECK(ad.at(0, 1) * test::e(4, 2) == test::e(4, 3));
  CHECK(ad.at(1, 0) * test::e(4, 2) == test::vec({0, 0, 0, -1}));
  const auto rep = verify_rep(n4, ad);
  CHECK(rep.overall());
  CHECK(rep.checks.size() == 7);
  for (const auto& [name, g] : corpus::three_lie()) {
    CAPTURE(name);
    CHECK(verify_rep(g, adjoint(g)).overall());
    CHECK(theorem_conditions(g, adjoint(g)).overall());
  }
  for (const auto& [name, g] : twisted_corpus()) {
    CAPTURE(name);
    CHECK(verify_rep(g, adjoint(g)).overall());
  }
}

TEST_CASE("representation negatives") {
  const auto n4 = corpus::n4();
  const auto bad = perturbed_adjoint(n4, 2);
  const auto rep = verify_rep(n4, bad);
  CHECK_FALSE(rep.overall());
  CHECK(rep.passed("super-skewsymmetry"));
  CHECK_FALSE(rep.passed("condition-3"));

  const GradedSpace mod = GradedSpace::even(2);
  Matrix m(2, 2);
  m(0, 1) = 1;
  CHECK_THROWS_WITH_AS(Representation::from_pairs(n4.space, mod, {{{0, 1}, m}, {{1, 0}, m}}, EvenMap::identity(mod),
                                                  EvenMap::identity(mod)),
                       doctest::Contains("ValidationError"), Error);
  Representation skew = Representation::zero(n4.space, mod, EvenMap::identity(mod), EvenMap::identity(mod));
  skew.rho[0 * 4 + 1] = m;
  const auto r2 = verify_rep(n4, skew);
  CHECK_FALSE(r2.passed("super-skewsymmetry"));
  REQUIRE(r2.find("super-skewsymmetry")->witness);
  CHECK(r2.find("super-skewsymmetry")->witness->tuple == std::vector<std::size_t>{0, 1});

  const EvenMap a(test::rows({{1, 1}, {0, 1}}), mod), b(test::diag({1, 2}), mod);
  CHECK_FALSE(verify_rep(n4, Representation::zero(n4.space, mod, a, b)).passed("module-commutation"));
}

TEST_CASE("semidirect products") {
  const auto n4 = corpus::n4();
  const auto same = semidirect(n4, trivial(n4, 0));
  CHECK(same.bracket == n4.bracket);
  CHECK(same.alpha == n4.alpha);

  const auto line = semidirect(n4, trivial(n4, 1));
  CHECK(line.dim() == 5);
  CHECK(line.bracket.nonzero_count() == 6);
  CHECK(line.bracket.eval({0, 1, 2}) == test::e(5, 3));
  CHECK(verify3(line).overall());

  const auto sd = semidirect(n4, adjoint(n4));
  CHECK(sd.dim() == 8);
  CHECK(verify3(sd).overall());
  // [e1, e2, e3'] = ρ(e1, e2) e3 = e4'
  CHECK(sd.bracket.eval({0, 1, 6}) == test::e(8, 7));
  CHECK(sd.bracket.eval({4, 5, 6}) == zero_vec(8));

  for (const auto& [name, g] : corpus::three_lie()) {
    CAPTURE(name);
    CHECK(verify3(semidirect(g, adjoint(g))).overall());
  }
  for (const auto& [name, g] : twisted_corpus()) {
    CAPTURE(name);
    CHECK(verify3(semidirect(g, adjoint(g))).overall());
  }
  CHECK_THROWS_WITH_AS(semidirect(n4, perturbed_adjoint(n4, 2)), doctest::Contains("FailedPrecondition"), Error);
}

TEST_CASE("cocycle verdicts match the central-extension oracle") {
  const auto n4 = corpus::n4();
  CHECK(verify_cocycle(n4, trivial(n4, 1), zero_cocycle(n4, trivial(n4, 1))).overall());

  int passes = 0, fails = 0;
  // Every 3-form on a 4-dim algebra is closed here; N4 ⊕ line has non-closed ones such as θ(e1, e4, e5).
  for (const auto& g : {corpus::n4(), corpus::a4(), corpus::s3(), direct_sum(corpus::n4(), corpus::abelian({0}))}) {
    const auto rep = trivial(g, 1);
    const std::size_t n = g.dim();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        for (std::size_t z = y + 1; z < n; ++z) {
          const auto th = single(g, 1, {x, y, z}, test::vec({1}));
          const bool verdict = verify_cocycle(g, rep, th).overall();
          CHECK(verdict == central_extension_is_3lie(g, th));
          (verdict ? passes : fails)++;
          if (verdict)
            CHECK(verify3(t_theta_extension(g, rep, th)).overall());
          else
            CHECK_THROWS_WITH_AS(t_theta_extension(g, rep, th), doctest::Contains("CocycleFails"), Error);
        }
  }
  CHECK(passes > 0);
  CHECK(fails > 0);
}

TEST_CASE("a cocycle failure is reported by condition") {
  const auto n4 = corpus::n4();
  CocycleTensor th(4, 1);
  th.set({0, 1, 2}, test::vec({1}));  // not skew-extended
  const auto rep = verify_cocycle(n4, trivial(n4, 1), th);
  CHECK_FALSE(rep.passed("condition-3"));
  try {
    t_theta_extension(n4, trivial(n4, 1), th);
    FAIL("expected CocycleFails");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CocycleFails);
    CHECK(std::string(e.what()).find("condition-3") != std::string::npos);
  }
  const auto ad = adjoint(n4);
  CocycleTensor odd(4, 4);
  odd.set({0, 1, 2}, test::e(4, 3));
  CHECK(verify_cocycle(n4, ad, skew_extend(odd, n4.space)).passed("theta-evenness"));
}

TEST_CASE("t_theta with zero cocycle is the semidirect product") {
  for (const auto& [name, g] : corpus::three_lie()) {
    const auto ad = adjoint(g);
    const auto t = t_theta_extension(g, ad, zero_cocycle(g, ad));
    const auto s = semidirect(g, ad);
    CHECK(t.bracket == s.bracket);
    CHECK(t.alpha == s.alpha);
    CHECK(t.beta == s.beta);
  }
  const auto g = corpus::n4();
  auto ad = adjoint(g);
  ad.beta_M = EvenMap::zero(g.space, g.space);
  CHECK_THROWS_WITH_AS(t_theta_bracket(g, ad, zero_cocycle(g, ad)), doctest::Contains("beta_M is not invertible"),
                       Error);
}

TEST_CASE("coboundaries") {
  const auto n4 = corpus::n4();
  const auto ad = adjoint(n4);
  CHECK(coboundary_theta_f(n4, ad, EvenMap::zero(n4.space, n4.space)).is_zero());
  const auto ab = corpus::abelian({0, 0, 1});
  const GradedSpace mod({0, 1});
  const auto zr = Representation::zero(ab.space, mod, EvenMap::identity(mod), EvenMap::identity(mod));
  CHECK(coboundary_theta_f(ab, zr, EvenMap(test::rows({{1, 2, 0}, {0, 0, 3}}), ab.space, mod)).is_zero());

  // θ_f(x,y,z) = f[x,y,z] − [x,y,fz] + [x,z,fy] − [y,z,fx] for the adjoint with identity maps.
  auto oracle = [&](const Matrix& f, std::size_t x, std::size_t y, std::size_t z) {
    auto e = [](std::size_t i) { return test::e(4, i); };
    return f * n4.bracket_of(e(x), e(y), e(z)) - n4.bracket_of(e(x), e(y), f * e(z)) +
           n4.bracket_of(e(x), e(z), f * e(y)) - n4.bracket_of(e(y), e(z), f * e(x));
  };
  for (const Matrix& f : {Matrix::identity(4), test::diag({1, 1, 1, 2}),
                          test::rows({{1, 2, 0, 0}, {0, 1, 0, 0}, {3, 0, 1, 0}, {1, 1, 1, 1}})}) {
    const auto th = coboundary_theta_f(n4, ad, EvenMap(f, n4.space));
    bool match = true;
    for (std::size_t i = 0; i < 64; ++i) match = match && th.eval({i / 16, (i / 4) % 4, i % 4}) == oracle(f, i / 16, (i / 4) % 4, i % 4);
    CHECK(match);
    CHECK(verify_cocycle(n4, ad, th).overall());
  }
  CHECK(coboundary_theta_f(n4, ad, EvenMap::identity(n4.space)).eval({0, 1, 2}) == test::vec({0, 0, 0, -2}));
  CHECK(coboundary_theta_f(n4, ad, n4_map({1, 1, 1, 2})).eval({0, 1, 2}) == test::vec({0, 0, 0, -1}));

  for (const auto& [name, g] : twisted_corpus()) {
    CAPTURE(name);
    Representation r = adjoint(g);
    const auto aut = corpus::automorphisms(name);
    // f must intertwine α and β; the third automorphism commutes with both.
    const auto th = coboundary_theta_f(g, r, aut[2]);
    CHECK(verify_cocycle(g, r, th).overall());
  }
  CHECK_THROWS_WITH_AS(coboundary_theta_f(twisted_corpus()[0].algebra, adjoint(twisted_corpus()[0].algebra),
                                          EvenMap(test::rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
                                                  GradedSpace::even(4))),
                       doctest::Contains("IntertwiningFails"), Error);
}

TEST_CASE("cocycles stay cocycles after adding a coboundary") {
  const auto n4 = corpus::n4();
  const auto rep = trivial(n4, 1);
  const auto th = single(n4, 1, {0, 1, 2}, test::vec({1}));
  REQUIRE(verify_cocycle(n4, rep, th).overall());
  const GradedSpace mod = GradedSpace::even(1);
  test::RationalSource src(7);
  for (int k = 0; k < 5; ++k) {
    Matrix f(1, 4);
    for (std::size_t j = 0; j < 4; ++j) f(0, j) = src.any();
    const auto thf = coboundary_theta_f(n4, rep, EvenMap(f, n4.space, mod));
    CocycleTensor sum(4, 1);
    for (std::size_t i = 0; i < 64; ++i) {
      const std::array<std::size_t, 3> idx{i / 16, (i / 4) % 4, i % 4};
      sum.set(idx, th.eval(idx) + thf.eval(idx));
    }
    CHECK(verify_cocycle(n4, rep, sum).overall());
  }
}

TEST_CASE("sigma isomorphisms") {
  const auto n4 = corpus::n4();
  const auto ad = adjoint(n4);
  const auto zero = sigma_iso(n4, ad, zero_cocycle(n4, ad), EvenMap::zero(n4.space, n4.space));
  CHECK(zero.sigma.matrix() == Matrix::identity(8));
  CHECK(zero.report.overall());

  const auto s = sigma_iso(n4, ad, zero_cocycle(n4, ad), n4_map({1, 1, 1, 2}));
  CHECK(s.report.overall());
  CHECK(s.report.checks.size() == 4);
  CHECK(determinant(s.sigma.matrix()) == Scalar(1));
  for (const auto& [name, g] : twisted_corpus()) {
    CAPTURE(name);
    const auto r = adjoint(g);
    const auto aut = corpus::automorphisms(name);
    const auto th = coboundary_theta_f(g, r, aut[0]);
    CHECK(sigma_iso(g, r, th, aut[2]).report.overall());
  }
}

TEST_CASE("dual representations") {
  const auto n4 = corpus::n4();
  const auto z = dual_rep(n4, trivial(n4, 2));
  CHECK(z.report.overall());
  for (const auto& m : z.dual.rho) CHECK(m.is_zero());

  const auto co = dual_rep(n4, adjoint(n4));
  CHECK(co.report.overall());
  CHECK(co.dual.module.name(0) == "e1*");
  // ad*(e1, e2) sends e4* to −e3*.
  CHECK(co.dual.at(0, 1) * test::e(4, 3) == test::vec({0, 0, -1, 0}));

  const auto neg = dual_rep(n4, perturbed_adjoint(n4, 2));
  CHECK_FALSE(neg.report.passed("theorem-condition-3"));
  CHECK(neg.report.passed("verdict-agreement"));
}

TEST_CASE("dual biconditional across representations") {
  std::vector<std::pair<ThreeBihomLieSuper, Representation>> cases;
  for (const auto& [name, g] : corpus::three_lie()) {
    cases.emplace_back(g, adjoint(g));
    cases.emplace_back(g, perturbed_adjoint(g, 3));
  }
  for (const auto& [name, g] : twisted_corpus()) {
    cases.emplace_back(g, adjoint(g));
    cases.emplace_back(g, inverse_adjoint(g));
  }
  int positive = 0, negative = 0;
  for (const auto& [g, r] : cases) {
    const bool theorem = theorem_conditions(g, r).overall();
    const bool dual = verify_rep(g, dual_of(r)).overall();
    CHECK(theorem == dual);
    CHECK(dual_rep(g, r).report.passed("verdict-agreement"));
    (theorem ? positive : negative)++;
  }
  CHECK(cases.size() >= 10);
  CHECK(positive > 0);
  CHECK(negative > 0);
}

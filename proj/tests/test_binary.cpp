#include <doctest.h>

#include "bihom/binary.hpp"
#include "support.hpp"

using namespace bihom;
using test::q;

namespace {

enum { H, X, Y, F, G };

/// The 3×3 matrix realization of osp(1,2), used as an independent oracle.
std::vector<Matrix> realization() {
  return {test::rows({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}}), test::rows({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}),
          test::rows({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}), test::rows({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}),
          test::rows({{0, 1, 0}, {0, 0, -1}, {0, 0, 0}})};
}

/// Coordinates of a 3×3 matrix in the basis (H, X, Y, F, G).
Vec coordinates(const Matrix& m) {
  const auto basis = realization();
  std::vector<Vec> cols;
  for (const auto& b : basis) {
    Vec flat;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) flat.push_back(b(i, j));
    cols.push_back(flat);
  }
  Vec target;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) target.push_back(m(i, j));
  const auto s = solve_linear(Matrix::from_columns(cols), target);
  REQUIRE(s.particular);
  return *s.particular;
}

/// exp(ad X): H ↦ H − 2X, Y ↦ Y + H − X, F ↦ F + G; an automorphism that does not commute with α_λ.
EvenMap exp_ad_x(const GradedSpace& s) {
  Matrix m = Matrix::identity(5);
  m(X, H) = q(-2);
  m(H, Y) = q(1);
  m(X, Y) = q(-1);
  m(G, F) = q(1);
  return EvenMap(m, s);
}

Vec scaled_unit(std::size_t i, const Scalar& c) { return c * test::e(5, i); }

}  // namespace

TEST_CASE("osp(1,2) table matches the supercommutator of its matrix realization") {
  const auto m = realization();
  const auto a = osp12();
  const unsigned par[5] = {0, 0, 0, 1, 1};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      const Matrix comm = m[i] * m[j] - (m[j] * m[i]).scaled(Scalar(par[i] * par[j] ? -1 : 1));
      CHECK(a.bracket.eval({i, j}) == coordinates(comm));
    }
  CHECK(a.bracket.eval({X, Y}) == test::e(5, H));
  CHECK(a.bracket.eval({F, F}) == scaled_unit(Y, 2));
  CHECK(a.bracket.eval({G, G}) == scaled_unit(X, -2));
  CHECK(verify2(a).overall());
}

TEST_CASE("twisted osp(1,2) family follows the twist formula entrywise") {
  test::RationalSource src(7);
  std::vector<std::pair<Scalar, Scalar>> params{{1, 1}, {2, 3}, {q(1, 2), 5}, {-1, q(2, 3)}};
  for (int i = 0; i < 6; ++i) params.emplace_back(src.nonzero(), src.nonzero());
  for (const auto& [l, mu] : params) {
    CAPTURE(l.str());
    CAPTURE(mu.str());
    const auto a = osp12_family(l, mu);
    const auto& b = a.bracket;
    CHECK(b.eval({H, X}) == scaled_unit(X, 2 * mu * mu));
    CHECK(b.eval({H, Y}) == scaled_unit(Y, q(-2) / (mu * mu)));
    CHECK(b.eval({X, Y}) == scaled_unit(H, (l / mu) * (l / mu)));
    CHECK(b.eval({Y, G}) == scaled_unit(F, mu / (l * l)));
    CHECK(b.eval({X, F}) == scaled_unit(G, l * l / mu));
    CHECK(b.eval({H, F}) == scaled_unit(F, q(-1) / mu));
    CHECK(b.eval({G, F}) == scaled_unit(H, l / mu));
    CHECK(b.eval({G, G}) == scaled_unit(X, -2 * l * mu));
    CHECK(b.eval({H, G}) == scaled_unit(G, mu));
    // The value forced by [α_λ F, β_μ F]; the printed table has 2λ/μ here.
    CHECK(b.eval({F, F}) == scaled_unit(Y, q(2) / (l * mu)));
    const auto rep = verify2(a);
    CHECK(rep.overall());
    CHECK(rep.checks.size() == 5);
  }
}

TEST_CASE("osp(1,2) family: specific entries") {
  CHECK(osp12_family(1, 1).bracket == osp12().bracket);
  CHECK(osp12_family(2, 3).bracket.eval({G, F}) == scaled_unit(H, q(2, 3)));
  CHECK(osp12_family(2, 3).bracket.eval({X, Y}) == scaled_unit(H, q(4, 9)));
  CHECK(osp12_family(1, 2).bracket.eval({H, Y}) == scaled_unit(Y, q(-1, 2)));
  CHECK(compose(osp12_alpha(2), osp12_alpha(3)).matrix() == test::diag({1, 36, q(1, 36), q(1, 6), 6}));
  CHECK_THROWS_WITH_AS(osp12_family(0, 1), doctest::Contains("ZeroParameter"), Error);
  CHECK_THROWS_WITH_AS(osp12_family(1, 0), doctest::Contains("ZeroParameter"), Error);
}

TEST_CASE("the printed [F,F] entry breaks the Jacobi identity unless lambda^2 = 1") {
  auto literal = [](const Scalar& l, const Scalar& mu) {
    auto a = osp12_family(l, mu);
    a.bracket.set({F, F}, scaled_unit(Y, 2 * l / mu));
    return a;
  };
  const auto bad = verify2(literal(2, 3));
  CHECK_FALSE(bad.overall());
  CHECK(bad.first_failure() == "jacobi");
  const Check* j = bad.find("jacobi");
  REQUIRE(j->witness);
  CHECK(j->witness->tuple == std::vector<std::size_t>{X, F, F});
  CHECK_FALSE(is_zero(j->witness->residual));
  CHECK(verify2(literal(-1, 3)).overall());
}

TEST_CASE("verify2 negative controls report witnesses") {
  auto a = osp12_family(2, 3);
  a.bracket.set({H, X}, scaled_unit(X, 3 * 9));
  const auto rep = verify2(a);
  CHECK_FALSE(rep.overall());
  const Check* c = rep.find(rep.first_failure());
  REQUIRE(c->witness);
  CHECK_FALSE(is_zero(c->witness->residual));

  BihomLieSuper2 ab{GradedSpace({0, 0, 1}), BiBracket(3), EvenMap::identity(GradedSpace({0, 0, 1})),
                    EvenMap::identity(GradedSpace({0, 0, 1}))};
  CHECK(verify2(ab).overall());
}

TEST_CASE("yau_twist2 preconditions") {
  const auto lie = osp12();
  const auto& s = lie.space;
  CHECK(yau_twist2(lie, EvenMap::identity(s), EvenMap::identity(s)).bracket == lie.bracket);

  const EvenMap e = exp_ad_x(s);
  const auto t = yau_twist2(lie, e, e);
  CHECK(verify2(t).overall());

  CHECK_THROWS_WITH_AS(yau_twist2(lie, e, osp12_alpha(2)), doctest::Contains("MapsDoNotCommute"), Error);
  try {
    yau_twist2(lie, EvenMap(test::diag({1, 2, 1, 1, 1}), s), EvenMap::identity(s));
    FAIL("expected NotAHomomorphism");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotAHomomorphism);
    CHECK(err.witness().size() == 2);
  }
  CHECK_THROWS_WITH_AS(yau_twist2(osp12_family(2, 3), osp12_alpha(1), osp12_alpha(1)),
                       doctest::Contains("FailedPrecondition"), Error);
}

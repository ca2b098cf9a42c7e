#include "bihom/corpus.hpp"

#include <algorithm>
#include <array>

namespace bihom::corpus {

namespace {

void put(TriBracket& b, std::size_t i, std::size_t j, std::size_t k, std::size_t out, Scalar c) {
  Vec v(b.dim());
  v[out] = c;
  b.set({i, j, k}, v);
}

EvenMap diag(const GradedSpace& s, std::initializer_list<Scalar> d) {
  return EvenMap(Matrix::diagonal(Vec(d)), s);
}

}  // namespace

ThreeBihomLieSuper n4() {
  GradedSpace s = GradedSpace::even(4);
  TriBracket b(4);
  put(b, 0, 1, 2, 3, 1);
  return untwisted(s, skew_extend(b, s));
}

ThreeBihomLieSuper a4() {
  GradedSpace s = GradedSpace::even(4);
  TriBracket b(4);
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    put(b, perm[0], perm[1], perm[2], perm[3], inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return untwisted(s, b);
}

ThreeBihomLieSuper s3() {
  GradedSpace s = GradedSpace::even(3);
  TriBracket b(3);
  put(b, 0, 1, 2, 0, 1);
  return untwisted(s, skew_extend(b, s));
}

ThreeBihomLieSuper super_n() {
  GradedSpace s({0, 0, 1}, {"e1", "e2", "f"});
  TriBracket b(3);
  put(b, 2, 2, 0, 1, 1);
  return untwisted(s, skew_extend(b, s));
}

ThreeBihomLieSuper gl11_ternary() {
  // Basis E11, E22, E12, E21 as 2x2 matrices.
  GradedSpace s({0, 0, 1, 1}, {"E11", "E22", "E12", "E21"});
  const std::array<std::array<int, 4>, 4> mat{{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}};
  const int str[4] = {1, -1, 0, 0};
  auto mul = [](const std::array<int, 4>& x, const std::array<int, 4>& y) {
    return std::array<int, 4>{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                              x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  };
  // Coordinates of a 2x2 matrix (m11, m12, m21, m22) in the basis above.
  auto coords = [](const std::array<int, 4>& m) { return Vec{m[0], m[3], m[1], m[2]}; };
  auto br = [&](std::size_t i, std::size_t j) {
    const auto ab = mul(mat[i], mat[j]);
    const auto ba = mul(mat[j], mat[i]);
    const int sign = koszul(s.parity(i) * s.parity(j));
    std::array<int, 4> m{};
    for (int k = 0; k < 4; ++k) m[k] = ab[k] - sign * ba[k];
    return coords(m);
  };
  TriBracket b(4);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      for (std::size_t z = 0; z < 4; ++z) {
        const unsigned px = s.parity(x), py = s.parity(y), pz = s.parity(z);
        Vec v = Scalar(str[x]) * br(y, z);
        axpy(v, Scalar(-koszul(px * py) * str[y]), br(x, z));
        axpy(v, Scalar(koszul(pz * (px + py)) * str[z]), br(x, y));
        b.set({x, y, z}, v);
      }
  return untwisted(s, b);
}

ThreeBihomLieSuper abelian(std::vector<unsigned> parity) {
  GradedSpace s(std::move(parity));
  return untwisted(s, TriBracket(s.dim()));
}

std::vector<Named> three_lie() {
  return {{"n4", n4()}, {"a4", a4()}, {"s3", s3()}, {"super_n", super_n()}, {"gl11_ternary", gl11_ternary()}};
}

std::vector<EvenMap> automorphisms(const std::string& name) {
  if (name == "n4") {
    const GradedSpace s = GradedSpace::even(4);
    return {diag(s, {2, 3, 5, 30}), diag(s, {1, 2, 1, 2}), diag(s, {-1, Scalar(1, 2), 3, Scalar(-3, 2)})};
  }
  if (name == "a4") {
    const GradedSpace s = GradedSpace::even(4);
    // Rotations in the (1,2) and (3,4) planes commute with each other and with diag(±1).
    Matrix r12 = Matrix::identity(4), r34 = Matrix::identity(4);
    r12(0, 0) = Scalar(3, 5), r12(0, 1) = Scalar(-4, 5), r12(1, 0) = Scalar(4, 5), r12(1, 1) = Scalar(3, 5);
    r34(2, 2) = Scalar(5, 13), r34(2, 3) = Scalar(-12, 13), r34(3, 2) = Scalar(12, 13), r34(3, 3) = Scalar(5, 13);
    return {EvenMap(r12, s), EvenMap(r34, s), diag(s, {-1, -1, 1, 1})};
  }
  if (name == "s3") {
    const GradedSpace s = GradedSpace::even(3);
    return {diag(s, {2, 3, Scalar(1, 3)}), diag(s, {5, Scalar(1, 2), 2}), diag(s, {-1, -1, -1})};
  }
  if (name == "super_n") {
    const GradedSpace s({0, 0, 1}, {"e1", "e2", "f"});
    return {diag(s, {2, 18, 3}), diag(s, {1, 4, 2}), diag(s, {Scalar(1, 2), Scalar(1, 2), 1})};
  }
  if (name == "gl11_ternary") {
    const GradedSpace s({0, 0, 1, 1}, {"E11", "E22", "E12", "E21"});
    return {diag(s, {1, 1, 2, Scalar(1, 2)}), diag(s, {1, 1, Scalar(-3, 4), Scalar(-4, 3)}),
            diag(s, {1, 1, -1, -1})};
  }
  return {};
}

}  // namespace bihom::corpus

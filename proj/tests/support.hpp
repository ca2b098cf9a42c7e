#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "bihom/linalg.hpp"

namespace test {

using bihom::Matrix;
using bihom::Scalar;
using bihom::Vec;

inline Scalar q(long n, long d = 1) { return Scalar(n, d); }

inline Vec vec(std::initializer_list<Scalar> xs) { return Vec(xs); }

inline Matrix diag(std::initializer_list<Scalar> xs) { return Matrix::diagonal(Vec(xs)); }

inline Matrix rows(std::initializer_list<std::initializer_list<Scalar>> rs) {
  std::vector<Vec> v;
  for (auto r : rs) v.emplace_back(r);
  return Matrix::from_rows(v);
}

inline Vec e(std::size_t n, std::size_t i) { return bihom::unit_vec(n, i); }

/// Sign of the permutation (a,b,c,d) of distinct indices, 0 on repeats.
inline int levi_civita(std::initializer_list<std::size_t> idx) {
  std::vector<std::size_t> v(idx);
  int s = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return 0;
      if (v[i] > v[j]) s = -s;
    }
  return s;
}

/// Nonzero rationals with small numerators and denominators, deterministic per seed.
class RationalSource {
 public:
  explicit RationalSource(unsigned seed) : rng_(seed) {}
  Scalar nonzero() {
    std::uniform_int_distribution<long> num(1, 9), den(1, 7), sign(0, 1);
    return Scalar(sign(rng_) ? num(rng_) : -num(rng_), den(rng_));
  }
  Scalar any() {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    return Scalar(num(rng_), den(rng_));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace test

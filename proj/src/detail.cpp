#include "detail.hpp"

namespace bihom::detail {

std::vector<SparseVec> images(const Matrix& f) {
  std::vector<SparseVec> out(f.cols());
  for (std::size_t j = 0; j < f.cols(); ++j) out[j] = sparse(f.column(j));
  return out;
}

Check commute_check(std::string name, const Matrix& a, const Matrix& b) {
  Check c;
  c.name = std::move(name);
  const Matrix ab = a * b;
  const Matrix ba = b * a;
  for (std::size_t j = 0; j < ab.cols(); ++j) {
    Vec r = ab.column(j) - ba.column(j);
    if (!is_zero(r)) {
      c.pass = false;
      c.witness = Witness{{j}, std::move(r)};
      break;
    }
  }
  return c;
}

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

void require_dim(std::size_t got, std::size_t want, const std::string& what) {
  if (got != want)
    throw Error(ErrorKind::DimensionMismatch,
                what + ": got " + std::to_string(got) + ", expected " + std::to_string(want));
}

}  // namespace bihom::detail

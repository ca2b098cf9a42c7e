#include "bihom/graded.hpp"

#include <algorithm>

#include "bihom/error.hpp"

namespace bihom {

GradedSpace::GradedSpace(std::vector<unsigned> parity, std::vector<std::string> names)
    : parity_(std::move(parity)), names_(std::move(names)) {
  for (auto p : parity_)
    if (p > 1) throw Error(ErrorKind::ValidationError, "parity: entries must be 0 or 1");
  if (names_.empty())
    for (std::size_t i = 0; i < parity_.size(); ++i) names_.push_back("e" + std::to_string(i + 1));
  if (names_.size() != parity_.size()) throw Error(ErrorKind::ValidationError, "basis: length mismatch");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw Error(ErrorKind::ValidationError, "basis: duplicate label " + names_[i]);
}

GradedSpace GradedSpace::even(std::size_t dim) { return GradedSpace(std::vector<unsigned>(dim, 0)); }

std::string GradedSpace::name(std::size_t i) const { return names_[i]; }

std::optional<std::size_t> GradedSpace::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (name(i) == label) return i;
  return std::nullopt;
}

GradedSpace direct_sum(const GradedSpace& a, const GradedSpace& b) {
  std::vector<unsigned> p = a.parities();
  p.insert(p.end(), b.parities().begin(), b.parities().end());
  std::vector<std::string> names = a.names();
  for (const auto& label : b.names()) {
    std::string n = label;
    while (std::find(names.begin(), names.end(), n) != names.end()) n += "'";
    names.push_back(n);
  }
  return GradedSpace(std::move(p), std::move(names));
}

std::optional<unsigned> parity_of(const GradedSpace& s, const Vec& v) {
  if (v.size() != s.dim()) throw Error(ErrorKind::DimensionMismatch, "vector length vs space");
  std::optional<unsigned> seen;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (seen && *seen != s.parity(i)) return std::nullopt;
    seen = s.parity(i);
  }
  return seen.value_or(0);
}

static void check_blocks(const Matrix& m, const GradedSpace& dom, const GradedSpace& cod,
                         unsigned parity) {
  if (m.rows() != cod.dim() || m.cols() != dom.dim())
    throw Error(ErrorKind::DimensionMismatch, "map shape " + std::to_string(m.rows()) + "x" +
                                                  std::to_string(m.cols()) + " vs spaces");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && ((cod.parity(i) + dom.parity(j) + parity) & 1U))
        throw Error(ErrorKind::OddMap,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") crosses parity blocks",
                    {i, j});
}

GradedMap::GradedMap(Matrix m, const GradedSpace& domain, const GradedSpace& codomain,
                     unsigned parity)
    : m_(std::move(m)), parity_(parity & 1U) {
  check_blocks(m_, domain, codomain, parity_);
}

EvenMap::EvenMap(Matrix m, const GradedSpace& space) : EvenMap(std::move(m), space, space) {}

EvenMap::EvenMap(Matrix m, const GradedSpace& domain, const GradedSpace& codomain)
    : m_(std::move(m)) {
  check_blocks(m_, domain, codomain, 0);
}

EvenMap EvenMap::identity(const GradedSpace& s) { return EvenMap(Matrix::identity(s.dim()), Trusted{}); }

EvenMap EvenMap::zero(const GradedSpace& domain, const GradedSpace& codomain) {
  return EvenMap(Matrix(codomain.dim(), domain.dim()), Trusted{});
}

EvenMap compose(const EvenMap& f, const EvenMap& g) { return EvenMap(f.m_ * g.m_, EvenMap::Trusted{}); }

EvenMap invert(const EvenMap& f) { return EvenMap(inverse(f.m_), EvenMap::Trusted{}); }

EvenMap power(const EvenMap& f, unsigned k) { return EvenMap(f.m_.pow(k), EvenMap::Trusted{}); }

EvenMap direct_sum(const EvenMap& f, const EvenMap& g) {
  return EvenMap(block_diag(f.m_, g.m_), EvenMap::Trusted{});
}

EvenMap tensor(const EvenMap& f, const EvenMap& g) {
  return EvenMap(kronecker(f.m_, g.m_), EvenMap::Trusted{});
}

bool commute(const EvenMap& f, const EvenMap& g) {
  return f.matrix() * g.matrix() == g.matrix() * f.matrix();
}

Subspace::Subspace(std::size_t ambient, std::vector<Vec> basis)
    : ambient_(ambient), basis_(std::move(basis)) {
  for (const auto& v : basis_)
    if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspace vector length");
  if (rank(Matrix::from_rows(basis_, ambient_)) != basis_.size())
    throw Error(ErrorKind::ValidationError, "subspace: basis vectors are linearly dependent");
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  const RowEchelon e = rref(Matrix::from_rows(vectors, ambient));
  Subspace s(ambient);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.basis_.push_back(unit_vec(ambient, i));
  return s;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length vs subspace");
  auto sol = solve_linear(Matrix::from_columns(basis_, ambient_), v);
  return sol.particular;
}

bool Subspace::contains(const Vec& v) const {
  if (bihom::is_zero(v)) return true;
  return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

bool Subspace::same_as(const Subspace& other) const {
  return ambient_ == other.ambient_ && dim() == other.dim() && contains(other);
}

}  // namespace bihom

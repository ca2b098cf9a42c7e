#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bihom/linalg.hpp"

namespace bihom {

/// Finite basis with a parity (0 even, 1 odd) per basis element.
class GradedSpace {
 public:
  GradedSpace() = default;
  /// Throws ValidationError if a parity is not 0/1 or names has the wrong length.
  explicit GradedSpace(std::vector<unsigned> parity, std::vector<std::string> names = {});
  static GradedSpace even(std::size_t dim);

  std::size_t dim() const { return parity_.size(); }
  unsigned parity(std::size_t i) const { return parity_[i]; }
  const std::vector<unsigned>& parities() const { return parity_; }
  /// Label of basis element i ("e1", "e2", ... when none were given).
  std::string name(std::size_t i) const;
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
    return a.parity_ == b.parity_ && a.names_ == b.names_;
  }

 private:
  std::vector<unsigned> parity_;
  std::vector<std::string> names_;
};

GradedSpace direct_sum(const GradedSpace& a, const GradedSpace& b);

/// Parity of a vector: 0/1 when homogeneous, nullopt when mixed.
/// The zero vector is reported as even.
std::optional<unsigned> parity_of(const GradedSpace& s, const Vec& v);

/// Linear map between graded spaces together with its parity. Column j is
/// the image of basis element j. Constructors reject entries crossing the
/// wrong parity blocks.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(Matrix m, const GradedSpace& domain, const GradedSpace& codomain, unsigned parity);

  const Matrix& matrix() const { return m_; }
  unsigned parity() const { return parity_; }
  Vec operator()(const Vec& v) const { return m_ * v; }

  friend bool operator==(const GradedMap& a, const GradedMap& b) {
    return a.parity_ == b.parity_ && a.m_ == b.m_;
  }

 private:
  Matrix m_;
  unsigned parity_ = 0;
};

/// Parity-preserving map. Square maps (α, β, ...) use the one-space constructor.
class EvenMap {
 public:
  EvenMap() = default;
  EvenMap(Matrix m, const GradedSpace& space);
  EvenMap(Matrix m, const GradedSpace& domain, const GradedSpace& codomain);
  static EvenMap identity(const GradedSpace& s);
  static EvenMap zero(const GradedSpace& domain, const GradedSpace& codomain);

  const Matrix& matrix() const { return m_; }
  std::size_t rows() const { return m_.rows(); }
  std::size_t cols() const { return m_.cols(); }
  Vec operator()(const Vec& v) const { return m_ * v; }
  Vec image(std::size_t j) const { return m_.column(j); }

  friend bool operator==(const EvenMap& a, const EvenMap& b) { return a.m_ == b.m_; }

 private:
  struct Trusted {};
  EvenMap(Matrix m, Trusted) : m_(std::move(m)) {}
  friend EvenMap compose(const EvenMap&, const EvenMap&);
  friend EvenMap invert(const EvenMap&);
  friend EvenMap power(const EvenMap&, unsigned);
  friend EvenMap direct_sum(const EvenMap&, const EvenMap&);
  friend EvenMap tensor(const EvenMap&, const EvenMap&);

  Matrix m_;
};

/// f ∘ g (apply g first).
EvenMap compose(const EvenMap& f, const EvenMap& g);
/// Throws Error(SingularMap) when f is not invertible.
EvenMap invert(const EvenMap& f);
EvenMap power(const EvenMap& f, unsigned k);
EvenMap direct_sum(const EvenMap& f, const EvenMap& g);
/// Kronecker product; only meaningful when the left factor acts on an even space.
EvenMap tensor(const EvenMap& f, const EvenMap& g);

bool commute(const EvenMap& f, const EvenMap& g);

/// Linearly independent list of vectors in an ambient space of fixed dimension.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  /// Keeps the given vectors; throws ValidationError if they are dependent.
  Subspace(std::size_t ambient, std::vector<Vec> basis);
  /// Independent spanning subset (a reduced echelon basis) of arbitrary vectors.
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in this basis, or nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  /// Same subspace (possibly different bases).
  bool same_as(const Subspace& other) const;

 private:
  std::size_t ambient_;
  std::vector<Vec> basis_;
};

}  // namespace bihom

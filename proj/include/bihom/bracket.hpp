#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bihom/error.hpp"
#include "bihom/graded.hpp"

namespace bihom {

using Term = std::pair<std::uint32_t, Scalar>;
using SparseVec = std::vector<Term>;

SparseVec sparse(const Vec& v);
Vec dense(const SparseVec& v, std::size_t n);
/// v += s * w
void axpy(Vec& v, const Scalar& s, const SparseVec& w);

/// Structure constants of an even multilinear map with `Arity` arguments.
/// Every index tuple owns a sparse output vector; absent entries are zero.
template <std::size_t Arity>
class Bracket {
 public:
  using Index = std::array<std::size_t, Arity>;

  Bracket() = default;
  explicit Bracket(std::size_t dim) : Bracket(dim, dim) {}
  /// Arguments in a space of dimension `dim`, values in one of dimension `out_dim`.
  Bracket(std::size_t dim, std::size_t out_dim) : dim_(dim), out_dim_(out_dim), entries_(count(dim)) {}

  std::size_t dim() const { return dim_; }
  std::size_t out_dim() const { return out_dim_; }

  const SparseVec& at(const Index& idx) const { return entries_[flat(idx)]; }
  Vec eval(const Index& idx) const { return dense(at(idx), out_dim_); }
  void set(const Index& idx, const Vec& value) {
    if (value.size() != out_dim_) throw Error(ErrorKind::DimensionMismatch, "bracket value length");
    entries_[flat(idx)] = sparse(value);
  }
  void set(const Index& idx, SparseVec value) { entries_[flat(idx)] = std::move(value); }

  /// Multilinear evaluation on arbitrary (dense) arguments.
  Vec apply(const std::array<const Vec*, Arity>& args) const {
    std::array<SparseVec, Arity> s;
    for (std::size_t a = 0; a < Arity; ++a) s[a] = sparse(*args[a]);
    return apply_sparse(s);
  }

  Vec apply_sparse(const std::array<SparseVec, Arity>& args) const {
    Vec out(out_dim_);
    Index idx{};
    accumulate(args, 0, Scalar(1), idx, out);
    return out;
  }

  /// Nonzero index tuples in lexicographic order.
  std::vector<Index> support() const {
    std::vector<Index> out;
    for (std::size_t f = 0; f < entries_.size(); ++f)
      if (!entries_[f].empty()) out.push_back(unflat(f));
    return out;
  }
  std::size_t nonzero_count() const { return support().size(); }
  bool is_zero() const { return support().empty(); }

  /// Throws ValidationError if some output coordinate has the wrong parity.
  void check_even(const GradedSpace& s) const { check_even(s, s); }
  void check_even(const GradedSpace& s, const GradedSpace& out) const {
    if (s.dim() != dim_ || out.dim() != out_dim_)
      throw Error(ErrorKind::DimensionMismatch, "bracket vs space dimension");
    for (std::size_t f = 0; f < entries_.size(); ++f) {
      if (entries_[f].empty()) continue;
      const Index idx = unflat(f);
      unsigned p = 0;
      for (auto i : idx) p += s.parity(i);
      for (const auto& [l, c] : entries_[f])
        if (((p + out.parity(l)) & 1U) != 0)
          throw Error(ErrorKind::ValidationError,
                      "bracket: output " + out.name(l) + " breaks evenness",
                      std::vector<std::size_t>(idx.begin(), idx.end()));
    }
  }

  friend bool operator==(const Bracket& a, const Bracket& b) {
    return a.dim_ == b.dim_ && a.out_dim_ == b.out_dim_ && a.entries_ == b.entries_;
  }

 private:
  static std::size_t count(std::size_t n) {
    std::size_t c = 1;
    for (std::size_t a = 0; a < Arity; ++a) c *= n;
    return c;
  }
  std::size_t flat(const Index& idx) const {
    std::size_t f = 0;
    for (auto i : idx) {
      if (i >= dim_) throw Error(ErrorKind::DimensionMismatch, "bracket index out of range");
      f = f * dim_ + i;
    }
    return f;
  }
  Index unflat(std::size_t f) const {
    Index idx{};
    for (std::size_t a = Arity; a-- > 0;) {
      idx[a] = f % dim_;
      f /= dim_;
    }
    return idx;
  }
  void accumulate(const std::array<SparseVec, Arity>& args, std::size_t slot, const Scalar& coeff,
                  Index& idx, Vec& out) const {
    if (slot == Arity) {
      axpy(out, coeff, entries_[flat(idx)]);
      return;
    }
    for (const auto& [i, c] : args[slot]) {
      idx[slot] = i;
      accumulate(args, slot + 1, coeff * c, idx, out);
    }
  }

  std::size_t dim_ = 0;
  std::size_t out_dim_ = 0;
  std::vector<SparseVec> entries_;
};

using BiBracket = Bracket<2>;
using TriBracket = Bracket<3>;

/// Fills in every permutation of each stored entry by super-skewsymmetry.
/// Throws ValidationError when two stored entries contradict each other.
template <std::size_t Arity>
Bracket<Arity> skew_extend(const Bracket<Arity>& b, const GradedSpace& s);

extern template Bracket<2> skew_extend(const Bracket<2>&, const GradedSpace&);
extern template Bracket<3> skew_extend(const Bracket<3>&, const GradedSpace&);

}  // namespace bihom

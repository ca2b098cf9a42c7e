#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bihom/bracket.hpp"
#include "bihom/graded.hpp"
#include "bihom/report.hpp"

namespace bihom {

/// 3-Bihom-Lie superalgebra (g, [.,.,.], α, β).
struct ThreeBihomLieSuper {
  GradedSpace space;
  TriBracket bracket;
  EvenMap alpha;
  EvenMap beta;

  std::size_t dim() const { return space.dim(); }
  Vec bracket_of(const Vec& x, const Vec& y, const Vec& z) const { return bracket.apply({&x, &y, &z}); }
};

void validate(const ThreeBihomLieSuper& g);
/// Bundle with α = β = Id.
ThreeBihomLieSuper untwisted(GradedSpace space, TriBracket bracket);
bool is_regular(const ThreeBihomLieSuper& g);

/// Jacobi residuals on a basis 5-tuple (x, y, z, u, v), with all images and
/// inner brackets cached. Read-only after construction, so it can be shared
/// across sweep threads.
class JacobiEvaluator {
 public:
  explicit JacobiEvaluator(const ThreeBihomLieSuper& g);
  /// LHS − RHS of the three-term form.
  Vec three_term(std::size_t x, std::size_t y, std::size_t z, std::size_t u, std::size_t v) const;
  /// LHS − RHS of the cyclic form (−1)^{|z||v|} ↻_{u,v,z} (−1)^γ [...].
  Vec cyclic(std::size_t x, std::size_t y, std::size_t z, std::size_t u, std::size_t v) const;
  /// [β e_x, β e_y, α e_z]
  const SparseVec& inner(std::size_t x, std::size_t y, std::size_t z) const {
    return inner_[(x * n_ + y) * n_ + z];
  }

 private:
  // res += sign · [β² e_a, β² e_b, w]
  void add_outer(Vec& res, int sign, std::size_t a, std::size_t b, const SparseVec& w) const;

  const ThreeBihomLieSuper& g_;
  std::size_t n_;
  std::vector<SparseVec> be2_;
  std::vector<SparseVec> inner_;
};

/// Checks: commutation, alpha-multiplicativity, beta-multiplicativity,
/// skewsymmetry-12, skewsymmetry-23, jacobi (three-term form, all 5-tuples).
VerificationReport verify3(const ThreeBihomLieSuper& g);

/// Bracket [a x, a y, b z] with maps (a, b) on a 3-Lie superalgebra.
ThreeBihomLieSuper twist_from_3lie(const ThreeBihomLieSuper& g, const EvenMap& a, const EvenMap& b);
/// Bracket [.,.,.]∘(a2⊗a2⊗b2) with maps (α∘a2, β∘b2).
ThreeBihomLieSuper twist_compose(const ThreeBihomLieSuper& g, const EvenMap& a2, const EvenMap& b2);
ThreeBihomLieSuper twist_power_k(const ThreeBihomLieSuper& g, unsigned k);
ThreeBihomLieSuper direct_sum(const ThreeBihomLieSuper& g, const ThreeBihomLieSuper& h);

/// 3-totally (or partially) Bihom-associative superalgebra (A, μ, α₁, β₁).
struct TotAssoc3 {
  GradedSpace space;
  TriBracket mu;
  EvenMap alpha;
  EvenMap beta;
};

VerificationReport verify_tot_assoc(const TotAssoc3& a);
VerificationReport verify_partial_assoc(const TotAssoc3& a);
/// μ(β₁a₁, β₁a₂, α₁a₃) = μ(β₁a₂, β₁a₁, α₁a₃) = μ(β₁a₁, β₁a₃, α₁a₂) on basis triples.
Check tensor_symmetry_check(const TotAssoc3& a);

struct TensorOptions {
  /// Accept an A with odd basis elements (no Koszul signs are inserted for
  /// them); the result must still pass verify3.
  bool allow_odd_factor = false;
};
/// A⊗g with index a·dim(g) + x, bracket μ⊗[.,.,.], maps α₁⊗α, β₁⊗β.
ThreeBihomLieSuper tensor_assoc(const TotAssoc3& a, const ThreeBihomLieSuper& g,
                                TensorOptions options = {});

struct MorphismResult {
  bool ok = true;
  std::string failed;  // "alpha", "beta" or "bracket"
  std::optional<Witness> witness;
  explicit operator bool() const { return ok; }
};
MorphismResult is_morphism(const EvenMap& f, const ThreeBihomLieSuper& g, const ThreeBihomLieSuper& h);
/// Φ_f = {x + f(x)} as a subspace of g ⊕ h.
Subspace graph_of(const EvenMap& f, std::size_t dim_g, std::size_t dim_h);
bool graph_is_subalgebra(const EvenMap& f, const ThreeBihomLieSuper& g, const ThreeBihomLieSuper& h);

bool is_subalgebra(const Subspace& s, const ThreeBihomLieSuper& g);
bool is_ideal(const Subspace& s, const ThreeBihomLieSuper& g);
/// span{[a, b, c] : a ∈ A, b ∈ B, c ∈ C}
Subspace bracket_span(const ThreeBihomLieSuper& g, const Subspace& a, const Subspace& b, const Subspace& c);
Subspace image(const EvenMap& f, const Subspace& s);

Subspace center(const ThreeBihomLieSuper& g);
Subspace ab_center(const ThreeBihomLieSuper& g);

/// Stacked residual of the (α^s β^r)-derivation system for the map D of
/// parity `parity`: [Dα − αD | Dβ − βD | Leibniz defect on every basis triple].
Vec derivation_residual(const ThreeBihomLieSuper& g, const Matrix& d, unsigned parity, unsigned s, unsigned r);
bool is_derivation(const ThreeBihomLieSuper& g, const GradedMap& d, unsigned s, unsigned r);

struct DerivationRequest {
  unsigned r = 0;  // power of β
  unsigned s = 0;  // power of α
  unsigned parity = 0;
};
/// Basis of Der_{α^s β^r} restricted to maps of the requested parity.
std::vector<GradedMap> derivation_space(const ThreeBihomLieSuper& g, const DerivationRequest& req);
/// D D' − (−1)^{|D||D'|} D' D
GradedMap supercommutator(const ThreeBihomLieSuper& g, const GradedMap& d1, const GradedMap& d2);
/// w ↦ [u1, u2, α^r β^s w]; an (α^r β^{s+1})-derivation on a regular algebra.
GradedMap inner_derivation(const ThreeBihomLieSuper& g, const Vec& u1, const Vec& u2, unsigned r, unsigned s);

std::vector<Subspace> derived_series(const ThreeBihomLieSuper& g);
std::vector<Subspace> central_series(const ThreeBihomLieSuper& g);
struct SeriesVerdict {
  bool holds = false;
  std::size_t length = 0;  // smallest k with the k-th term zero (when holds)
};
SeriesVerdict is_solvable(const ThreeBihomLieSuper& g);
SeriesVerdict is_nilpotent(const ThreeBihomLieSuper& g);

}  // namespace bihom

#pragma once

#include <array>
#include <utility>
#include <vector>

#include "bihom/threebihom.hpp"

namespace bihom {

/// Representation (M, ρ, α_M, β_M) of a 3-Bihom-Lie superalgebra of dimension
/// `algebra_dim`. ρ is stored for every ordered basis pair.
struct Representation {
  GradedSpace module;
  std::size_t algebra_dim = 0;
  std::vector<Matrix> rho;  // rho[i * algebra_dim + j] = ρ(e_i, e_j)
  EvenMap alpha_M;
  EvenMap beta_M;

  const Matrix& at(std::size_t i, std::size_t j) const { return rho[i * algebra_dim + j]; }
  /// ρ(x, y) for arbitrary vectors, by bilinearity.
  Matrix of(const Vec& x, const Vec& y) const;

  using Entry = std::pair<std::array<std::size_t, 2>, Matrix>;
  /// Builds the full table from the given pairs and their super-skew mirrors
  /// ρ(e_j, e_i) = −(−1)^{p_i p_j} ρ(e_i, e_j). Throws ValidationError on
  /// contradictory entries.
  static Representation from_pairs(const GradedSpace& algebra, GradedSpace module,
                                   const std::vector<Entry>& entries, EvenMap alpha_M, EvenMap beta_M);
  /// ρ ≡ 0.
  static Representation zero(const GradedSpace& algebra, GradedSpace module, EvenMap alpha_M, EvenMap beta_M);
};

void validate(const ThreeBihomLieSuper& g, const Representation& r);

/// ρ(x, y) = [x, y, ·] on M = g with α_M = α, β_M = β.
Representation adjoint(const ThreeBihomLieSuper& g);

/// Checks: module-commutation, rho-evenness, super-skewsymmetry,
/// condition-1 .. condition-4 (α_M, β_M on the right).
VerificationReport verify_rep(const ThreeBihomLieSuper& g, const Representation& r);
/// The four conditions of the dual-representation theorem on (g, ρ), with
/// α_M, β_M on the left: theorem-condition-1 .. theorem-condition-4.
VerificationReport theorem_conditions(const ThreeBihomLieSuper& g, const Representation& r);

/// θ : g × g × g → M, stored as structure constants.
using CocycleTensor = Bracket<3>;
CocycleTensor zero_cocycle(const ThreeBihomLieSuper& g, const Representation& r);

/// Checks: theta-evenness, condition-1, condition-2, condition-3 (both
/// skew forms), condition-4 (all basis 5-tuples).
VerificationReport verify_cocycle(const ThreeBihomLieSuper& g, const Representation& r, const CocycleTensor& theta);

/// g ⋉ M: the T_θ bracket with θ = 0.
ThreeBihomLieSuper semidirect(const ThreeBihomLieSuper& g, const Representation& r);
/// T_θ(g) on g ⊕ M. Gates: verify3, verify_rep, verify_cocycle, α and β_M invertible.
ThreeBihomLieSuper t_theta_extension(const ThreeBihomLieSuper& g, const Representation& r, const CocycleTensor& theta);
/// The bracket alone, without gates (used by constructions that certify afterwards).
ThreeBihomLieSuper t_theta_bracket(const ThreeBihomLieSuper& g, const Representation& r, const CocycleTensor& theta);

/// θ_f(x,y,z) = f[x,y,z] − ρ(x,y)f(z) + (−1)^{|y||z|}ρ(x, α⁻¹βz) f(αβ⁻¹y)
///              − (−1)^{|x|(|y|+|z|)} ρ(y, α⁻¹βz) f(αβ⁻¹x).
CocycleTensor coboundary_theta_f(const ThreeBihomLieSuper& g, const Representation& r, const EvenMap& f);

struct SigmaResult {
  EvenMap sigma;
  ThreeBihomLieSuper source;  // T_θ
  ThreeBihomLieSuper target;  // T_{θ+θ_f}
  VerificationReport report;
};
/// σ(v + x) = v + f(v) + x, certified as an isomorphism T_θ → T_{θ+θ_f}.
SigmaResult sigma_iso(const ThreeBihomLieSuper& g, const Representation& r, const CocycleTensor& theta, const EvenMap& f);

struct DualResult {
  Representation dual;
  VerificationReport report;
};
/// (M*, ρ̃, α̃_M, β̃_M) with |e_i*| = |e_i|, α̃_M = α_Mᵀ and
/// ρ̃(x,y)(φ) = −(−1)^{|φ|(|x|+|y|)} φ∘ρ(x,y). The report sets the theorem
/// conditions on (g, ρ) against verify_rep on the dual.
DualResult dual_rep(const ThreeBihomLieSuper& g, const Representation& r);
/// Just the dual representation.
Representation dual_of(const Representation& r);

}  // namespace bihom

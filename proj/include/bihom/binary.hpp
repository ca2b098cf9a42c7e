#pragma once

#include "bihom/bracket.hpp"
#include "bihom/graded.hpp"
#include "bihom/report.hpp"

namespace bihom {

/// Binary Bihom-Lie superalgebra (g, [.,.], α, β).
struct BihomLieSuper2 {
  GradedSpace space;
  BiBracket bracket;
  EvenMap alpha;
  EvenMap beta;
};

/// Shape checks shared by all entry points; throws DimensionMismatch.
void validate(const BihomLieSuper2& a);

/// Checks: commutation, alpha-multiplicativity, beta-multiplicativity,
/// skewsymmetry, jacobi. Skewsymmetry and Jacobi are evaluated on the
/// (β, α)-images of basis vectors exactly as written, so α and β need not be
/// invertible.
VerificationReport verify2(const BihomLieSuper2& a);

/// Bracket [a(x), b(y)] with structure maps (a, b). The input must be a Lie
/// superalgebra (α = β = Id) and a, b commuting bracket homomorphisms.
BihomLieSuper2 yau_twist2(const BihomLieSuper2& lie, const EvenMap& a, const EvenMap& b);

/// osp(1,2) on the basis (H, X, Y | F, G) with α = β = Id.
BihomLieSuper2 osp12();
/// α_λ = diag(1, λ², λ⁻², λ⁻¹, λ) on (H, X, Y, F, G).
EvenMap osp12_alpha(const Scalar& lambda);
/// osp(1,2) twisted by (α_λ, β_μ). Throws ZeroParameter if λ or μ is 0.
BihomLieSuper2 osp12_family(const Scalar& lambda, const Scalar& mu);

}  // namespace bihom

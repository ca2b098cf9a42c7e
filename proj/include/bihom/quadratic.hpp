#pragma once

#include "bihom/representation.hpp"

namespace bihom {

/// Even bilinear form given by its Gram matrix over the space's basis.
struct SuperForm {
  Matrix gram;
  Scalar operator()(const Vec& x, const Vec& y) const;
};

struct QuadraticAlgebra {
  ThreeBihomLieSuper algebra;
  SuperForm form;
};

/// Checks: evenness, nondegeneracy, supersymmetry, invariance, form-symmetry.
/// Invariance is q([βx1,βx2,αx3],αx4) + (−1)^{|x3|(|x1|+|x2|)} q(αx3,[βx1,βx2,αx4]) = 0;
/// form-symmetry is q(αx,y) = q(x,αy) and the same for β.
VerificationReport verify_quadratic(const QuadraticAlgebra& qa);

/// q_g(x+f, y+g) = f(y) + (−1)^{|x||y|} g(x) on g ⊕ g*, with |e_i*| = |e_i|.
SuperForm qg_form(const GradedSpace& g);

/// (g*, ad*, αᵀ, βᵀ): the dual of the adjoint representation.
Representation coadjoint(const ThreeBihomLieSuper& g);

/// θ(βx1,βx2,αx3)(αx4) + (−1)^{|x3||x4|} θ(βx1,βx2,αx4)(αx3) = 0 on basis quadruples,
/// for θ valued in g*.
Check lemma_theta_condition(const ThreeBihomLieSuper& g, const CocycleTensor& theta);

/// (g ⊕ g*, [·,·,·]_θ, α+αᵀ, β+βᵀ) with q_g, without gates.
QuadraticAlgebra tstar_bracket(const ThreeBihomLieSuper& g, const CocycleTensor& theta);
/// T*_θ(g). Gates, in order: verify3, coadjoint-admissibility, cocycle,
/// lemma-theta-condition (FailedPrecondition names the first failing one).
/// The result is re-verified; a failure there raises ReportedMismatch.
QuadraticAlgebra tstar_extension(const ThreeBihomLieSuper& g, const CocycleTensor& theta);

/// g solvable ⇒ T*_θ(g) solvable, g nilpotent ⇒ T*_θ(g) nilpotent.
VerificationReport series_lift_check(const ThreeBihomLieSuper& g, const CocycleTensor& theta);

/// Checks: half-dimension, isotropy, perp-equals-ideal, ideal, alpha-invariance,
/// beta-invariance and, when those hold, lemma-conclusion ([β(I),β(g),α(I)] = 0)
/// plus the informational lemma-conclusion-strong ([β(I),β(g),α(g)] = 0).
VerificationReport isotropic_ideal_check(const QuadraticAlgebra& qa, const Subspace& i);

/// q-orthogonal complement to I: a homogeneous subspace B0 with g = B0 ∔ I and
/// q(B0, B0) = 0, by Witt correction of a coordinate complement.
Subspace isotropic_complement(const QuadraticAlgebra& qa, const Subspace& i);

struct Reconstruction {
  ThreeBihomLieSuper quotient;  // B = g/I on the classes of the B0 basis
  CocycleTensor theta;          // valued in B*
  QuadraticAlgebra rebuilt;     // T*_θ(B) with q_B
  EvenMap phi;                  // g → B ⊕ B*
  Subspace complement;          // B0
  VerificationReport report;
};
/// Recovers (B, θ, φ) from a quadratic algebra with an isotropic ideal of half
/// dimension. Throws FailedPrecondition if qa is not regular or I fails
/// isotropic_ideal_check, ReportedMismatch if a certificate fails.
Reconstruction reconstruct_tstar(const QuadraticAlgebra& qa, const Subspace& i);

}  // namespace bihom

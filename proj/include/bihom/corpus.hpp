#pragma once

#include <string>
#include <vector>

#include "bihom/threebihom.hpp"

namespace bihom::corpus {

/// Purely even 4-dim, [e1,e2,e3] = e4, α = β = Id.
ThreeBihomLieSuper n4();
/// The simple 3-Lie algebra: [e_i,e_j,e_k] = Σ_l ε_{ijkl} e_l.
ThreeBihomLieSuper a4();
/// 3-dim, [e1,e2,e3] = e1: solvable, not nilpotent.
ThreeBihomLieSuper s3();
/// Basis (e1, e2 | f), [f,f,e1] = e2 and its skew images.
ThreeBihomLieSuper super_n();
/// gl(1,1) with [x,y,z] = str(x)[y,z] − (−1)^{|x||y|} str(y)[x,z] + (−1)^{|z|(|x|+|y|)} str(z)[x,y],
/// basis (E11, E22 | E12, E21).
ThreeBihomLieSuper gl11_ternary();
/// Zero bracket on the given parities with α = β = Id.
ThreeBihomLieSuper abelian(std::vector<unsigned> parity);

struct Named {
  std::string name;
  ThreeBihomLieSuper algebra;
};
/// The untwisted 3-Lie superalgebras above (abelian excluded).
std::vector<Named> three_lie();

/// Bracket homomorphisms of each corpus algebra, pairwise commuting.
std::vector<EvenMap> automorphisms(const std::string& name);

}  // namespace bihom::corpus

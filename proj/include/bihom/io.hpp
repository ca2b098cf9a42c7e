#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bihom/binary.hpp"
#include "bihom/quadratic.hpp"

namespace bihom::io {

using Json = nlohmann::ordered_json;

/// Everything one input file can describe. Exactly one of binary, ternary,
/// associative is set; the optional blocks refer to the ternary algebra.
struct AlgebraFile {
  std::string name;
  unsigned arity = 3;
  std::optional<BihomLieSuper2> binary;
  std::optional<ThreeBihomLieSuper> ternary;
  std::optional<TotAssoc3> associative;
  /// "" (absent), "adjoint", "coadjoint" or "explicit".
  std::string module_kind;
  std::optional<Representation> module;
  std::optional<CocycleTensor> theta;
  std::optional<SuperForm> form;
  std::optional<Matrix> f;
  std::optional<std::pair<Matrix, Matrix>> twist;
  std::vector<std::pair<std::string, Subspace>> subspaces;

  const GradedSpace& space() const;
};

/// Throws ParseError (with a JSON path) or ValidationError ("field: reason").
AlgebraFile parse_algebra(std::string_view text);
AlgebraFile load_algebra(const std::string& path);

Json render(const AlgebraFile& file);
AlgebraFile bundle(std::string name, ThreeBihomLieSuper g);
AlgebraFile bundle(std::string name, BihomLieSuper2 g);
AlgebraFile bundle(std::string name, const QuadraticAlgebra& qa);

/// Indented JSON in which every container that fits in `width` characters stays on one line.
std::string pretty(const Json& j, std::size_t width = 100);

Json render_report(const VerificationReport& report);
Json render_subspace(const Subspace& s);
Json render_matrix(const Matrix& m);

/// One line per nonzero entry, "[H,X] = 18 X".
template <std::size_t Arity>
std::vector<std::string> bracket_table(const GradedSpace& space, const Bracket<Arity>& b);
std::string render_vector(const GradedSpace& space, const Vec& v);

}  // namespace bihom::io

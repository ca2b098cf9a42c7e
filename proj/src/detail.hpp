#pragma once

#include <string>
#include <vector>

#include "bihom/bracket.hpp"
#include "bihom/graded.hpp"
#include "bihom/report.hpp"

namespace bihom::detail {

/// Sparse images f(e_i) for every basis index.
std::vector<SparseVec> images(const Matrix& f);

/// Check that two square maps commute; witness is the first differing column.
Check commute_check(std::string name, const Matrix& a, const Matrix& b);

/// Dense matrix flattened row-major, used as a residual for matrix identities.
Vec flatten(const Matrix& m);

void require_dim(std::size_t got, std::size_t want, const std::string& what);

}  // namespace bihom::detail

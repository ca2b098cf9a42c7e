#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "bihom/report.hpp"

namespace bihom {

/// Worker count for tuple sweeps: BIHOMLIE_THREADS if set and positive,
/// otherwise the hardware concurrency.
unsigned sweep_threads();

/// Residual of one basis tuple; an all-zero vector means the tuple passes.
using TupleCheck = std::function<Vec(const std::vector<std::size_t>&)>;

/// Evaluates `check` on every tuple of [0,n)^k and returns the
/// lexicographically first tuple with a nonzero residual. The sweep is split
/// across threads by the first index; the result does not depend on the
/// thread count.
std::optional<Witness> first_failure(std::size_t n, std::size_t k, const TupleCheck& check);

/// Runs a sweep and wraps the outcome as a named check.
Check sweep_check(std::string name, std::size_t n, std::size_t k, const TupleCheck& check);

}  // namespace bihom

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bihom/linalg.hpp"

namespace bihom {

/// First offending basis tuple together with the nonzero residual.
struct Witness {
  std::vector<std::size_t> tuple;
  Vec residual;
};

struct Check {
  std::string name;
  bool pass = true;
  /// Informational checks are reported but do not enter the overall verdict.
  bool informational = false;
  std::optional<Witness> witness;
  std::string detail;
};

struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;

  bool overall() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  void add(std::string name, bool pass, std::string detail = {});
  /// Appends every check of `other`, prefixing names with `prefix`.
  void merge(const VerificationReport& other, const std::string& prefix = {});
  const Check* find(const std::string& name) const;
  bool passed(const std::string& name) const;
  /// Name of the first failing required check, or empty.
  std::string first_failure() const;
};

}  // namespace bihom

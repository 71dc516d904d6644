#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace cfc {

/// Positive 3-CNF. Variables are 0-based internally, 1-based in files.
struct Formula {
  using Clause = std::array<std::uint32_t, 3>;

  std::uint32_t num_vars = 0;
  std::vector<Clause> clauses;

  /// Throws InputError unless every clause has 3 distinct in-range variables.
  void validate() const;
};

using TruthAssignment = std::vector<bool>;

/// Exactly one true variable in every clause.
bool is_one_in_three(const Formula& phi, const TruthAssignment& a);

}  // namespace cfc

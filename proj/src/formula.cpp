#include "cfc/formula.hpp"

#include <string>

#include "cfc/errors.hpp"

namespace cfc {

void Formula::validate() const {
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const auto& c = clauses[i];
    for (auto x : c) {
      if (x >= num_vars) {
        throw InputError("clause " + std::to_string(i + 1) + " uses variable " + std::to_string(x + 1) +
                         " but the formula has " + std::to_string(num_vars));
      }
    }
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
      throw InputError("clause " + std::to_string(i + 1) + " repeats a variable");
    }
  }
}

bool is_one_in_three(const Formula& phi, const TruthAssignment& a) {
  if (a.size() != phi.num_vars) return false;
  for (const auto& c : phi.clauses) {
    if (a[c[0]] + a[c[1]] + a[c[2]] != 1) return false;
  }
  return true;
}

}  // namespace cfc

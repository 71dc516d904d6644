#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cfc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration exceeded its configured budget. Never a "no".
class ResourceExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed; indicates a bug or an out-of-contract input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The resampling loop hit its round cap.
class ResampleFailure : public Error {
 public:
  ResampleFailure(std::uint64_t rounds, std::size_t worst_edge)
      : Error("resampling did not converge after " + std::to_string(rounds) +
              " rounds (worst edge " + std::to_string(worst_edge) + ")"),
        rounds_(rounds),
        worst_edge_(worst_edge) {}

  std::uint64_t rounds() const noexcept { return rounds_; }
  std::size_t worst_edge() const noexcept { return worst_edge_; }

 private:
  std::uint64_t rounds_;
  std::size_t worst_edge_;
};

}  // namespace cfc

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cfc {

struct SweepOptions {
  std::string suite;           // propositions | reductions | lemma | pipeline
  std::size_t max_n = 5;       // propositions
  std::size_t trials = 50;     // reductions, lemma, pipeline
  std::uint64_t seed = 0;
  std::size_t edges = 100;     // lemma
  std::size_t min_size = 64;   // lemma
  std::size_t max_size = 128;  // lemma
  std::size_t base_n = 15;     // pipeline
  bool scaled = false;         // pipeline
};

struct SweepRow {
  std::size_t index = 0;
  std::string instance;
  bool pass = false;
  std::string counters;  // space-separated key=value pairs
};

struct SweepReport {
  std::vector<SweepRow> rows;
  bool all_pass() const;
  std::size_t failures() const;
  void write(std::ostream& out) const;
};

/// Throws InputError for an unknown suite.
SweepReport run_sweep(const SweepOptions& opts);

}  // namespace cfc

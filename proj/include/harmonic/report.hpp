#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace harmonic {

enum class Verdict { Verified, Falsified, Observed, Error };

const char* verdict_name(Verdict v);

// The one report shape every checker emits. sizes keeps insertion order so
// reports serialize stably.
struct VerificationReport {
  std::string claim;
  Verdict verdict = Verdict::Error;
  std::vector<std::pair<std::string, long>> sizes;
  int stages = 0;
  double elapsed_ms = 0.0;
  uint64_t seed = 0;
  std::string counterexample;  // empty unless falsified

  void size(std::string key, long value) { sizes.emplace_back(std::move(key), value); }
};

}  // namespace harmonic

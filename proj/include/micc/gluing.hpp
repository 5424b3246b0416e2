#pragma once

#include "micc/distance.hpp"
#include "micc/ladder.hpp"

#include <optional>
#include <stop_token>
#include <string>
#include <vector>

namespace micc {

struct GluingResult {
  int offset = 0;
  Ladder ladder;
  bool single_curve = false;
  std::optional<DistanceResult> verdict;
  // Set when a single-curve gluing could not be classified, e.g. genus below 2.
  std::optional<std::string> note;
};

struct GluingOptions {
  bool classify = true;
  // Fixed ambient genus for every gluing; by default each gluing uses its own.
  std::optional<int> ambient_genus;
  std::size_t circuit_cap = default_circuit_cap;
  std::stop_token stop;
};

// One result per offset 0..k-1, the top row rotated left by the offset.
std::vector<GluingResult> enumerate_gluings(const Ladder& ladder, const GluingOptions& options = {});

// "Curve n Distance: d" then both rows, for each single-curve gluing.
std::string format_gluings(const std::vector<GluingResult>& gluings);

}  // namespace micc

#pragma once

#include "micc/circuits.hpp"
#include "micc/ladder.hpp"

#include <cstddef>
#include <optional>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

namespace micc {

enum class CandidateStatus : std::uint8_t { fills, non_filling };

// Candidate ladders are never bigon-reduced: a face with a single alpha side
// cannot bound a disc in the surface, so it marks a region the pair does not fill.
struct CandidatePair {
  Circuit circuit;
  Ladder gamma_ladder;
  int fill_genus = 0;
  int degree_two_faces = 0;
  CandidateStatus status = CandidateStatus::fills;
};

enum class Verdict : std::uint8_t { distance_2, distance_3, distance_4_plus };

// "2", "3", "4+"
std::string_view verdict_text(Verdict v) noexcept;
std::optional<Verdict> parse_verdict(std::string_view text) noexcept;

struct DistanceOptions {
  std::optional<int> ambient_genus;
  std::size_t circuit_cap = default_circuit_cap;
  // Keep every evaluated candidate instead of stopping at the first witness.
  bool collect_all = false;
  std::stop_token stop;
};

struct DistanceResult {
  Verdict verdict = Verdict::distance_4_plus;
  std::optional<CandidatePair> witness;
  int ambient_genus = 0;  // declared, else the genus of the unreduced input
  int genus = 0;          // genus filled by the reduced pair
  int k = 0;
  int input_bigons_removed = 0;
  std::size_t circuit_count = 0;
  std::size_t side_conflicts = 0;
  std::vector<CandidatePair> candidates;
};

// Ladder of (alpha, gamma) for the curve gamma that follows the circuit
// through the faces of (alpha, beta).
Ladder candidate_ladder(const DualGraph& graph, const Circuit& circuit);

CandidatePair candidate_fill_genus(Circuit circuit, Ladder gamma_ladder, int ambient_genus);

DistanceResult distance(const Ladder& ladder, const DistanceOptions& options = {});

}  // namespace micc

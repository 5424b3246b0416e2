#include "micc/distance.hpp"

#include "micc/error.hpp"
#include "micc/faces.hpp"

#include <algorithm>
#include <array>

namespace micc {

std::string_view verdict_text(Verdict v) noexcept {
  switch (v) {
    case Verdict::distance_2: return "2";
    case Verdict::distance_3: return "3";
    case Verdict::distance_4_plus: return "4+";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view text) noexcept {
  if (text == "2") return Verdict::distance_2;
  if (text == "3") return Verdict::distance_3;
  if (text == "4+" || text == "4") return Verdict::distance_4_plus;
  return std::nullopt;
}

Ladder candidate_ladder(const DualGraph& graph, const Circuit& circuit) {
  const int m = circuit.length();
  struct Crossing {
    int label;
    std::array<int, 2> arc{-1, -1};  // indexed by Row
  };
  std::vector<Crossing> crossings;
  crossings.reserve(m);
  for (int j = 0; j < m; ++j) {
    const DualEdge& e = graph.edges[circuit.edges[j]];
    const int face_in = circuit.vertices[j];
    const int face_out = circuit.vertices[(j + 1) % m];
    Row side_in = Row::top;
    Row side_out = Row::bottom;
    if (m > 1) {
      side_in = e.upper == face_in ? Row::top : Row::bottom;
      side_out = e.upper == face_out ? Row::top : Row::bottom;
    }
    if (side_in == side_out) {
      throw Error(ErrorCode::side_conflict, "both arcs at crossing " + std::to_string(e.label) + " use one side");
    }
    Crossing c{e.label};
    // Arc j-1 runs through face_in and ends here; arc j starts here into face_out.
    c.arc[static_cast<int>(side_in)] = (j - 1 + m) % m;
    c.arc[static_cast<int>(side_out)] = j;
    crossings.push_back(c);
  }
  std::sort(crossings.begin(), crossings.end(),
            [](const Crossing& a, const Crossing& b) { return a.label < b.label; });
  std::vector<int> top, bottom;
  for (const auto& c : crossings) {
    top.push_back(c.arc[static_cast<int>(Row::top)]);
    bottom.push_back(c.arc[static_cast<int>(Row::bottom)]);
  }
  return Ladder(std::move(top), std::move(bottom));
}

CandidatePair candidate_fill_genus(Circuit circuit, Ladder gamma_ladder, int ambient_genus) {
  const auto all = trace_faces(gamma_ladder);
  CandidatePair pair{std::move(circuit), std::move(gamma_ladder), 0, 0, CandidateStatus::fills};
  pair.fill_genus = genus_from_counts(pair.gamma_ladder.k(), static_cast<int>(all.size()));
  pair.degree_two_faces = static_cast<int>(
      std::count_if(all.begin(), all.end(), [](const Face& f) { return f.alpha.size() == 1; }));
  pair.status = pair.fill_genus == ambient_genus ? CandidateStatus::fills : CandidateStatus::non_filling;
  return pair;
}

DistanceResult distance(const Ladder& input, const DistanceOptions& options) {
  const auto beta = beta_components(input);
  if (!beta.single_curve()) {
    throw Error(ErrorCode::multi_curve, "beta has " + std::to_string(beta.cycles.size()) + " components");
  }
  // Without a declared genus the surface is the one the input ladder fills.
  const int input_genus = genus_from_counts(input.k(), static_cast<int>(trace_faces(input).size()));
  BigonReduction reduction = reduce_bigons(input);
  if (reduction.disjoint()) throw Error(ErrorCode::disjoint_curves, "the curves can be isotoped apart");
  const Ladder& ladder = *reduction.reduced;

  DistanceResult result;
  result.k = ladder.k();
  result.input_bigons_removed = reduction.removed;
  const auto all_faces = trace_faces(ladder);
  result.genus = genus_from_counts(ladder.k(), static_cast<int>(all_faces.size()));
  result.ambient_genus = options.ambient_genus.value_or(input_genus);
  if (result.ambient_genus < 2) {
    throw Error(ErrorCode::genus_too_small, "genus " + std::to_string(result.ambient_genus) + " is below 2");
  }
  if (result.ambient_genus < result.genus) {
    throw Error(ErrorCode::ambient_too_small, "the pair fills a surface of genus " + std::to_string(result.genus));
  }
  if (result.genus < result.ambient_genus) {
    result.verdict = Verdict::distance_2;
    return result;
  }

  const DualGraph graph = dual_graph(all_faces);
  const auto circuits = elementary_circuits(graph, options.circuit_cap);
  result.circuit_count = circuits.size();
  result.verdict = Verdict::distance_4_plus;
  for (const auto& circuit : circuits) {
    if (options.stop.stop_requested()) throw Error(ErrorCode::cancelled, "distance evaluation interrupted");
    std::optional<Ladder> gamma;
    try {
      gamma = candidate_ladder(graph, circuit);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::side_conflict) throw;
      ++result.side_conflicts;
      continue;
    }
    CandidatePair pair = candidate_fill_genus(circuit, std::move(*gamma), result.ambient_genus);
    const bool witness = pair.status == CandidateStatus::non_filling && !result.witness;
    if (witness) {
      result.verdict = Verdict::distance_3;
      result.witness = pair;
    }
    if (options.collect_all) {
      result.candidates.push_back(std::move(pair));
    } else if (witness) {
      break;
    }
  }
  return result;
}

}  // namespace micc

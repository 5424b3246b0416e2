#pragma once

#include "micc/circuits.hpp"
#include "micc/distance.hpp"
#include "micc/ilp.hpp"
#include "micc/ladder.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

namespace micc {

// How the w copies of a class pair up: parallel keeps both endpoint groups in
// the same order, reversed nests them.
enum class Matching : std::uint8_t { parallel, reversed };

struct TemplateClass {
  ArcClass arc;
  Matching matching = Matching::parallel;
};

// Arc classes of a disc with handles. The top row runs along the minus
// boundary and the bottom row along the plus boundary; each row lists one
// entry per endpoint group, by class index.
struct ArcTemplate {
  std::string name;
  int genus = 2;
  bool separating = false;
  std::vector<TemplateClass> classes;
  DualGraph graph;  // edge labels are class indices
  std::vector<int> top;
  std::vector<int> bottom;

  std::vector<ArcClass> arc_classes() const;
  ConstraintSystem constraints() const;
};

ArcTemplate parse_template(std::string_view text, std::string name = {});
ArcTemplate load_template(const std::filesystem::path& path);
std::string format_template(const ArcTemplate& t);

// Throws BAD_TEMPLATE when groups, kinds, and the dual graph disagree.
void validate_template(const ArcTemplate& t);

struct ExpandedConfiguration {
  std::vector<int> top;
  std::vector<int> bottom;

  int k() const noexcept { return static_cast<int>(top.size()); }
  Ladder ladder(int offset = 0) const { return Ladder(top, bottom).rotated_top(offset); }
};

ExpandedConfiguration expand(const ArcTemplate& t, std::span<const int> weights);

struct CatalogRecord {
  int objective = 0;
  WeightVector weights;
  int offset = 0;
  int k = 0;
  Verdict verdict = Verdict::distance_4_plus;

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

struct PipelineOptions {
  int p_min = 0;
  int p_max = 0;
  unsigned threads = 0;  // 0 picks the hardware concurrency
  std::stop_token stop;
  // Called in catalog order once each objective value is finished.
  std::function<void(int objective, std::size_t solutions)> progress;
};

// Sorted by (objective, weights, offset).
std::vector<CatalogRecord> pipeline(const ArcTemplate& t, const PipelineOptions& options);

// Single-curve gluings of one expansion, classified against the template genus.
std::vector<CatalogRecord> classify_expansion(const ArcTemplate& t, std::span<const int> weights,
                                              std::stop_token stop = {});

}  // namespace micc

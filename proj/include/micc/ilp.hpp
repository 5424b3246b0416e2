#pragma once

#include "micc/circuits.hpp"

#include <Eigen/Core>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace micc {

// pp: both ends on the plus boundary, mm: both on the minus boundary, pm: one each.
enum class ArcKind : std::uint8_t { pp, mm, pm };

std::string_view kind_text(ArcKind kind) noexcept;
std::optional<ArcKind> parse_kind(std::string_view text) noexcept;

struct ArcClass {
  int index = 1;  // 1-based, w1, w2, ...
  ArcKind kind = ArcKind::pm;
};

using WeightVector = std::vector<int>;

struct ConstraintSystem {
  std::vector<ArcClass> classes;
  // One 0/1 row per elementary circuit; column c is class c+1.
  Eigen::MatrixXi circuit_rows;
  int threshold = 4;

  int variables() const noexcept { return static_cast<int>(classes.size()); }
  bool satisfied_by(std::span<const int> w) const;
  bool balanced(std::span<const int> w) const;
};

int circuit_threshold(int genus);

// Graph edges carry 1-based class indices as labels.
ConstraintSystem build_constraints(std::span<const ArcClass> classes, const DualGraph& graph, int genus);

// All feasible vectors with the given total, in lexicographic order.
std::vector<WeightVector> enumerate_solutions(const ConstraintSystem& system, int objective);

struct Optimum {
  int objective = 0;
  std::vector<WeightVector> solutions;
};

Optimum minimize(const ConstraintSystem& system);

// "w1 + w4 + w5 + w6 >= 4" per circuit, then the balance row if any.
std::string format_constraints(const ConstraintSystem& system);
// "[2, 2, 2, 0, 2, 0]"
std::string format_weights(std::span<const int> w);

nlohmann::json constraints_to_json(const ConstraintSystem& system);
ConstraintSystem constraints_from_json(const nlohmann::json& j);

}  // namespace micc

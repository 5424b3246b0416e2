#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace micc {

enum class Row : std::uint8_t { top, bottom };

constexpr Row opposite(Row r) noexcept { return r == Row::top ? Row::bottom : Row::top; }

struct Slot {
  Row row = Row::top;
  int position = 0;

  friend bool operator==(const Slot&, const Slot&) = default;
};

// Two rows of arc labels recording where the arcs of beta meet the two sides
// of alpha. Labels are renamed by rank to 0..k-1 on construction, so input
// already using 0..k-1 keeps its labels.
class Ladder {
 public:
  Ladder(std::vector<int> top, std::vector<int> bottom);

  int k() const noexcept { return static_cast<int>(top_.size()); }
  const std::vector<int>& top() const noexcept { return top_; }
  const std::vector<int>& bottom() const noexcept { return bottom_; }

  int label(Slot s) const { return s.row == Row::top ? top_[s.position] : bottom_[s.position]; }
  Slot mate(Slot s) const { return mate_[index(s)]; }

  // Position reached through the half-arc leaving the top (resp. bottom) of i.
  int up(int i) const { return mate({Row::top, i}).position; }
  int down(int i) const { return mate({Row::bottom, i}).position; }

  // Top row rotated left by offset over a fixed bottom row.
  Ladder rotated_top(int offset) const;
  // Both rows rotated left by offset (moves alpha's basepoint).
  Ladder shifted(int offset) const;
  Ladder rows_swapped() const;
  // Reverses alpha's direction.
  Ladder reversed() const;
  // Relabels arcs in order of first appearance along top then bottom.
  Ladder canonical_labels() const;

  friend bool operator==(const Ladder& a, const Ladder& b) {
    return a.top_ == b.top_ && a.bottom_ == b.bottom_;
  }

 private:
  std::size_t index(Slot s) const {
    return static_cast<std::size_t>(s.row == Row::top ? 0 : k()) + static_cast<std::size_t>(s.position);
  }

  std::vector<int> top_;
  std::vector<int> bottom_;
  std::vector<Slot> mate_;
};

bool same_up_to_relabeling(const Ladder& a, const Ladder& b);
// Also allows a simultaneous rotation of both rows.
bool same_up_to_shift(const Ladder& a, const Ladder& b);

std::vector<int> parse_row(std::string_view text);
Ladder parse_ladder(std::string_view top_text, std::string_view bottom_text);

// "[1, 6, 11]"
std::string format_row(std::span<const int> row);

enum class Direction : std::uint8_t { down, up };

enum class OrientationRule : std::uint8_t { down_at_min, up_at_min };

struct BetaTraversal {
  std::vector<std::vector<int>> cycles;
  std::vector<Direction> orientation;

  bool single_curve() const noexcept { return cycles.size() == 1; }
};

BetaTraversal beta_components(const Ladder& ladder,
                              OrientationRule rule = OrientationRule::down_at_min);

using MatrixRows = Eigen::Matrix<int, Eigen::Dynamic, 4, Eigen::RowMajor>;

// Row i holds [v-(i), w+(i), v+(i), w-(i)]; magnitudes lie in 1..k with k
// standing in for residue 0.
struct CharacteristicMatrix {
  MatrixRows rows;

  int k() const noexcept { return static_cast<int>(rows.rows()); }
};

CharacteristicMatrix characteristic_matrix(const Ladder& ladder,
                                           OrientationRule rule = OrientationRule::down_at_min);

Ladder ladder_from_matrix(const CharacteristicMatrix& matrix);

// One "[a, b, c, d]" line per row.
std::string format_matrix(const CharacteristicMatrix& matrix);

}  // namespace micc

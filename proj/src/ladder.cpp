#include "micc/ladder.hpp"

#include "micc/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <sstream>

namespace micc {

namespace {

std::vector<int> rotate_left(const std::vector<int>& row, int offset) {
  std::vector<int> out(row.size());
  const int k = static_cast<int>(row.size());
  for (int i = 0; i < k; ++i) out[i] = row[((i + offset) % k + k) % k];
  return out;
}

// 0 is written as k so that the sign survives.
int residue(int value, int k) {
  const int r = ((value % k) + k) % k;
  return r == 0 ? k : r;
}

}  // namespace

Ladder::Ladder(std::vector<int> top, std::vector<int> bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
  if (top_.empty() && bottom_.empty()) throw Error(ErrorCode::empty_input, "ladder has no intersections");
  if (top_.size() != bottom_.size()) {
    throw Error(ErrorCode::length_mismatch, "top has " + std::to_string(top_.size()) +
                                                " labels, bottom has " + std::to_string(bottom_.size()));
  }

  std::map<int, int> count;
  for (int a : top_) ++count[a];
  for (int a : bottom_) ++count[a];
  std::map<int, int> rank;
  for (const auto& [label, n] : count) {
    if (n != 2) {
      throw Error(ErrorCode::bad_multiplicity,
                  "label " + std::to_string(label) + " occurs " + std::to_string(n) + " times");
    }
    const int r = static_cast<int>(rank.size());
    rank[label] = r;
  }
  for (int& a : top_) a = rank[a];
  for (int& a : bottom_) a = rank[a];

  const int n = k();
  std::vector<Slot> first(n, Slot{Row::top, -1});
  mate_.assign(2 * static_cast<std::size_t>(n), Slot{});
  auto visit = [&](Slot s) {
    Slot& f = first[label(s)];
    if (f.position < 0) {
      f = s;
    } else {
      mate_[index(f)] = s;
      mate_[index(s)] = f;
    }
  };
  for (int i = 0; i < n; ++i) visit({Row::top, i});
  for (int i = 0; i < n; ++i) visit({Row::bottom, i});
}

Ladder Ladder::rotated_top(int offset) const { return Ladder(rotate_left(top_, offset), bottom_); }

Ladder Ladder::shifted(int offset) const {
  return Ladder(rotate_left(top_, offset), rotate_left(bottom_, offset));
}

Ladder Ladder::rows_swapped() const { return Ladder(bottom_, top_); }

Ladder Ladder::reversed() const {
  return Ladder(std::vector<int>(top_.rbegin(), top_.rend()),
                std::vector<int>(bottom_.rbegin(), bottom_.rend()));
}

Ladder Ladder::canonical_labels() const {
  std::vector<int> name(k(), -1);
  int next = 0;
  std::vector<int> t(top_), b(bottom_);
  for (int& a : t) {
    if (name[a] < 0) name[a] = next++;
    a = name[a];
  }
  for (int& a : b) {
    if (name[a] < 0) name[a] = next++;
    a = name[a];
  }
  return Ladder(std::move(t), std::move(b));
}

bool same_up_to_relabeling(const Ladder& a, const Ladder& b) {
  return a.k() == b.k() && a.canonical_labels() == b.canonical_labels();
}

bool same_up_to_shift(const Ladder& a, const Ladder& b) {
  if (a.k() != b.k()) return false;
  const Ladder target = b.canonical_labels();
  for (int r = 0; r < a.k(); ++r) {
    if (a.shifted(r).canonical_labels() == target) return true;
  }
  return false;
}

std::vector<int> parse_row(std::string_view text) {
  std::vector<int> row;
  std::string_view rest = text;
  bool any = false;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    const auto b = token.find_first_not_of(" \t\r\n[]");
    const auto e = token.find_last_not_of(" \t\r\n[]");
    if (b == std::string_view::npos) {
      if (comma != std::string_view::npos || any) {
        throw Error(ErrorCode::parse_error, "empty entry in \"" + std::string(text) + "\"");
      }
    } else {
      token = token.substr(b, e - b + 1);
      int value = 0;
      const auto* end = token.data() + token.size();
      const auto [ptr, ec] = std::from_chars(token.data(), end, value);
      if (ec != std::errc{} || ptr != end) {
        throw Error(ErrorCode::parse_error, "not an integer: \"" + std::string(token) + "\"");
      }
      row.push_back(value);
      any = true;
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return row;
}

Ladder parse_ladder(std::string_view top_text, std::string_view bottom_text) {
  std::vector<int> top = parse_row(top_text);
  std::vector<int> bottom = parse_row(bottom_text);
  if (top.empty() || bottom.empty()) throw Error(ErrorCode::empty_input, "both rows must be nonempty");
  return Ladder(std::move(top), std::move(bottom));
}

std::string format_row(std::span<const int> row) {
  std::string out = "[";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(row[i]);
  }
  out += "]";
  return out;
}

BetaTraversal beta_components(const Ladder& ladder, OrientationRule rule) {
  const int k = ladder.k();
  const Direction start = rule == OrientationRule::down_at_min ? Direction::down : Direction::up;
  BetaTraversal out;
  out.orientation.assign(k, Direction::down);
  std::vector<bool> seen(k, false);
  for (int s = 0; s < k; ++s) {
    if (seen[s]) continue;
    std::vector<int> cycle;
    int i = s;
    Direction d = start;
    while (true) {
      seen[i] = true;
      cycle.push_back(i);
      out.orientation[i] = d;
      const Slot exit{d == Direction::down ? Row::bottom : Row::top, i};
      const Slot next = ladder.mate(exit);
      const Direction nd = next.row == Row::top ? Direction::down : Direction::up;
      if (next.position == s && nd == start) break;
      i = next.position;
      d = nd;
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

CharacteristicMatrix characteristic_matrix(const Ladder& ladder, OrientationRule rule) {
  const BetaTraversal beta = beta_components(ladder, rule);
  if (!beta.single_curve()) {
    throw Error(ErrorCode::multi_curve,
                "beta has " + std::to_string(beta.cycles.size()) + " components");
  }
  const int k = ladder.k();
  CharacteristicMatrix m;
  m.rows.resize(k, 4);
  for (int i = 0; i < k; ++i) {
    const int up = residue(ladder.up(i), k);
    const int down = residue(ladder.down(i), k);
    const bool pointing_down = beta.orientation[i] == Direction::down;
    m.rows(i, 0) = -residue(i - 1, k);
    m.rows(i, 1) = pointing_down ? -up : up;
    m.rows(i, 2) = residue(i + 1, k);
    m.rows(i, 3) = pointing_down ? down : -down;
  }
  return m;
}

Ladder ladder_from_matrix(const CharacteristicMatrix& matrix) {
  const int k = matrix.k();
  if (k == 0) throw Error(ErrorCode::empty_input, "matrix has no rows");
  auto position = [k](int entry) { return std::abs(entry) % k; };
  auto pointing_down = [&](int i) { return matrix.rows(i, 1) < 0; };
  for (int i = 0; i < k; ++i) {
    if ((matrix.rows(i, 1) < 0) == (matrix.rows(i, 3) < 0)) {
      throw Error(ErrorCode::parse_error, "row " + std::to_string(i) + " has no unique negative w entry");
    }
  }

  // Walk beta forward: leaving i through the exit side, arriving at the next
  // intersection on the side its own direction dictates.
  std::vector<int> top(k, -1), bottom(k, -1);
  int label = 0;
  for (int i = 0; i < k; ++i) {
    const bool down = pointing_down(i);
    const int j = down ? position(matrix.rows(i, 3)) : position(matrix.rows(i, 1));
    int& from = down ? bottom[i] : top[i];
    int& to = pointing_down(j) ? top[j] : bottom[j];
    if (from >= 0 || to >= 0) throw Error(ErrorCode::parse_error, "matrix does not describe a ladder");
    from = to = label++;
  }
  return Ladder(std::move(top), std::move(bottom));
}

std::string format_matrix(const CharacteristicMatrix& matrix) {
  std::ostringstream out;
  for (int i = 0; i < matrix.k(); ++i) {
    const int row[4] = {matrix.rows(i, 0), matrix.rows(i, 1), matrix.rows(i, 2), matrix.rows(i, 3)};
    out << format_row(row) << '\n';
  }
  return out.str();
}

}  // namespace micc

#pragma once

#include "micc/ladder.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace micc {

// Side of alpha a face boundary runs along: right means the face lies above.
enum class Side : std::uint8_t { right, left };

// The alpha segment from intersection i to i+1 (mod k) carries label (i+1) mod k.
struct AlphaEdge {
  int label = 0;
  Side side = Side::right;

  friend bool operator==(const AlphaEdge&, const AlphaEdge&) = default;
};

struct BetaEdge {
  int source = 0;
  int terminus = 0;
  Row exit = Row::top;

  friend bool operator==(const BetaEdge&, const BetaEdge&) = default;
};

// Boundary of a complementary region: alpha[j] is followed by beta[j].
struct Face {
  std::vector<AlphaEdge> alpha;
  std::vector<BetaEdge> beta;

  int degree() const noexcept { return 2 * static_cast<int>(alpha.size()); }
  std::vector<int> truncated() const;
};

// Works for multi-curves too; faces() is the single-curve entry point.
std::vector<Face> trace_faces(const Ladder& ladder);
std::vector<Face> faces(const Ladder& ladder);

using FaceVector = std::map<int, int>;

FaceVector face_vector(std::span<const Face> faces);

// "{4: 6, 6: 4}"
std::string format_face_vector(const FaceVector& census);

// "Vector solution:  {...}" followed by one "(a, b, c)" line per face.
std::string format_faces(std::span<const Face> faces);

int genus_from_counts(int k, int face_count);
int genus(const Ladder& ladder);

struct BigonReduction {
  std::optional<Ladder> reduced;  // empty once the curves are disjoint
  int removed = 0;

  bool disjoint() const noexcept { return !reduced.has_value(); }
};

BigonReduction reduce_bigons(const Ladder& ladder);

}  // namespace micc

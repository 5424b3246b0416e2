#include "micc/faces.hpp"

#include "micc/error.hpp"

#include <algorithm>
#include <sstream>

namespace micc {

std::vector<int> Face::truncated() const {
  std::vector<int> out;
  out.reserve(alpha.size());
  for (const auto& e : alpha) out.push_back(e.label);
  return out;
}

std::vector<Face> trace_faces(const Ladder& ladder) {
  const int k = ladder.k();
  // used[2*v + side]: the alpha step leaving v to the right or left
  std::vector<bool> used(2 * static_cast<std::size_t>(k), false);
  std::vector<Face> out;
  for (int start = 0; start < k; ++start) {
    for (Side s0 : {Side::right, Side::left}) {
      int v = start;
      Side s = s0;
      if (used[2 * v + (s == Side::left)]) continue;
      Face face;
      while (!used[2 * v + (s == Side::left)]) {
        used[2 * v + (s == Side::left)] = true;
        int j = 0;
        Slot exit;
        if (s == Side::right) {
          j = (v + 1) % k;
          face.alpha.push_back({j, Side::right});
          exit = {Row::top, j};
        } else {
          j = (v - 1 + k) % k;
          face.alpha.push_back({v, Side::left});
          exit = {Row::bottom, j};
        }
        const Slot arrival = ladder.mate(exit);
        face.beta.push_back({j, arrival.position, exit.row});
        v = arrival.position;
        s = arrival.row == Row::top ? Side::right : Side::left;
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

std::vector<Face> faces(const Ladder& ladder) {
  const auto beta = beta_components(ladder);
  if (!beta.single_curve()) {
    throw Error(ErrorCode::multi_curve, "beta has " + std::to_string(beta.cycles.size()) + " components");
  }
  return trace_faces(ladder);
}

FaceVector face_vector(std::span<const Face> faces) {
  FaceVector census;
  for (const auto& f : faces) ++census[f.degree()];
  return census;
}

std::string format_face_vector(const FaceVector& census) {
  std::string out = "{";
  bool first = true;
  for (const auto& [degree, count] : census) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(degree) + ": " + std::to_string(count);
  }
  return out + "}";
}

std::string format_faces(std::span<const Face> faces) {
  std::ostringstream out;
  out << "Vector solution:  " << format_face_vector(face_vector(faces)) << '\n';
  for (const auto& f : faces) {
    out << '(';
    for (std::size_t i = 0; i < f.alpha.size(); ++i) out << (i ? ", " : "") << f.alpha[i].label;
    out << ")\n";
  }
  return out.str();
}

int genus_from_counts(int k, int face_count) {
  if ((k - face_count) % 2 != 0) {
    throw Error(ErrorCode::parity, "k = " + std::to_string(k) + " and " + std::to_string(face_count) +
                                       " faces have odd difference");
  }
  return 1 + (k - face_count) / 2;
}

int genus(const Ladder& ladder) {
  return genus_from_counts(ladder.k(), static_cast<int>(faces(ladder).size()));
}

BigonReduction reduce_bigons(const Ladder& ladder) {
  BigonReduction result;
  std::vector<int> top = ladder.top();
  std::vector<int> bottom = ladder.bottom();
  while (true) {
    Ladder current(top, bottom);
    const int k = current.k();
    if (k == 1) {
      result.reduced = std::move(current);
      return result;
    }
    const auto all = trace_faces(current);
    const auto bigon = std::find_if(all.begin(), all.end(), [](const Face& f) { return f.alpha.size() == 1; });
    if (bigon == all.end()) {
      result.reduced = std::move(current);
      return result;
    }
    // The bigon's beta side joins the two ends of its alpha segment; the arcs
    // on the far side are spliced into one.
    const AlphaEdge e = bigon->alpha.front();
    const int i = (e.label - 1 + k) % k;
    const int j = e.label;
    const std::vector<int>& far = e.side == Side::right ? bottom : top;
    const int keep = far[i];
    const int drop = far[j];
    std::vector<int> t, b;
    for (int p = 0; p < k; ++p) {
      if (p == i || p == j) continue;
      t.push_back(top[p] == drop ? keep : top[p]);
      b.push_back(bottom[p] == drop ? keep : bottom[p]);
    }
    ++result.removed;
    if (t.empty()) return result;
    top = std::move(t);
    bottom = std::move(b);
  }
}

}  // namespace micc

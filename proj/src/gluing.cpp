#include "micc/gluing.hpp"

#include "micc/error.hpp"
#include "micc/faces.hpp"

#include <sstream>

namespace micc {

std::vector<GluingResult> enumerate_gluings(const Ladder& ladder, const GluingOptions& options) {
  std::vector<GluingResult> out;
  out.reserve(ladder.k());
  for (int offset = 0; offset < ladder.k(); ++offset) {
    if (options.stop.stop_requested()) throw Error(ErrorCode::cancelled, "gluing search interrupted");
    GluingResult g{offset, ladder.rotated_top(offset), false, std::nullopt, std::nullopt};
    g.single_curve = beta_components(g.ladder).single_curve();
    if (g.single_curve && options.classify) {
      DistanceOptions d;
      d.ambient_genus = options.ambient_genus;
      d.circuit_cap = options.circuit_cap;
      d.stop = options.stop;
      try {
        g.verdict = distance(g.ladder, d);
      } catch (const Error& e) {
        switch (e.code()) {
          case ErrorCode::genus_too_small:
          case ErrorCode::ambient_too_small:
          case ErrorCode::disjoint_curves:
            g.note = e.what();
            break;
          default:
            throw;
        }
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::string format_gluings(const std::vector<GluingResult>& gluings) {
  std::ostringstream out;
  int n = 0;
  for (const auto& g : gluings) {
    if (!g.single_curve) continue;
    if (n) out << '\n';
    out << "Curve " << ++n << " Distance: ";
    if (g.verdict) {
      out << verdict_text(g.verdict->verdict);
    } else {
      out << "n/a (" << g.note.value_or("not classified") << ")";
    }
    out << '\n' << format_row(g.ladder.top()) << '\n' << format_row(g.ladder.bottom()) << '\n';
  }
  return out.str();
}

}  // namespace micc

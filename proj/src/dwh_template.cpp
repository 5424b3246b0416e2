#include "micc/dwh_template.hpp"

#include "micc/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace micc {

namespace {

std::string_view matching_text(Matching m) { return m == Matching::parallel ? "parallel" : "reversed"; }

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::bad_template, message); }

int to_int(const std::string& token, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  bad("line " + std::to_string(line) + ": expected an integer, got \"" + token + "\"");
}

}  // namespace

std::vector<ArcClass> ArcTemplate::arc_classes() const {
  std::vector<ArcClass> out;
  for (const auto& c : classes) out.push_back(c.arc);
  return out;
}

ConstraintSystem ArcTemplate::constraints() const {
  const auto arcs = arc_classes();
  return build_constraints(arcs, graph, genus);
}

void validate_template(const ArcTemplate& t) {
  const int n = static_cast<int>(t.classes.size());
  if (n == 0) bad("no arc classes");
  for (int c = 0; c < n; ++c) {
    if (t.classes[c].arc.index != c + 1) bad("classes must be numbered 1.." + std::to_string(n) + " in order");
  }
  std::vector<int> on_top(n, 0), on_bottom(n, 0);
  for (int c : t.top) {
    if (c < 1 || c > n) bad("top row names unknown class " + std::to_string(c));
    ++on_top[c - 1];
  }
  for (int c : t.bottom) {
    if (c < 1 || c > n) bad("bottom row names unknown class " + std::to_string(c));
    ++on_bottom[c - 1];
  }
  for (int c = 0; c < n; ++c) {
    const std::string name = "class " + std::to_string(c + 1);
    if (on_top[c] + on_bottom[c] != 2) bad(name + " needs exactly two endpoint groups");
    switch (t.classes[c].arc.kind) {
      case ArcKind::pp:
        if (on_bottom[c] != 2) bad(name + " is pp but is not on the bottom row twice");
        break;
      case ArcKind::mm:
        if (on_top[c] != 2) bad(name + " is mm but is not on the top row twice");
        break;
      case ArcKind::pm:
        if (on_top[c] != 1) bad(name + " is pm but does not meet both rows");
        if (t.separating) bad(name + " is pm, impossible when the boundaries lie on different pieces");
        break;
    }
  }
  std::vector<int> edges(n, 0);
  for (const auto& e : t.graph.edges) {
    if (e.label < 1 || e.label > n) bad("dual graph edge names unknown class " + std::to_string(e.label));
    if (e.upper < 0 || e.lower < 0 || e.upper >= t.graph.vertex_count || e.lower >= t.graph.vertex_count) {
      bad("dual graph edge for class " + std::to_string(e.label) + " has a bad region");
    }
    ++edges[e.label - 1];
  }
  for (int c = 0; c < n; ++c) {
    if (edges[c] != 1) bad("class " + std::to_string(c + 1) + " needs exactly one dual graph edge");
  }
}

ArcTemplate parse_template(std::string_view text, std::string name) {
  ArcTemplate t;
  t.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool have_top = false, have_bottom = false;
  int regions = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string key;
    if (!(fields >> key)) continue;
    std::vector<std::string> args;
    for (std::string a; fields >> a;) args.push_back(a);
    const std::string where = "line " + std::to_string(line) + ": ";
    if (key == "name") {
      if (args.empty()) bad(where + "name needs a value");
      t.name = args.front();
    } else if (key == "genus") {
      if (args.size() != 1) bad(where + "genus takes one value");
      t.genus = to_int(args[0], line);
    } else if (key == "separating") {
      if (args.size() != 1 || (args[0] != "yes" && args[0] != "no")) bad(where + "separating takes yes or no");
      t.separating = args[0] == "yes";
    } else if (key == "class") {
      if (args.size() != 3) bad(where + "class takes index, kind, matching");
      const auto kind = parse_kind(args[1]);
      if (!kind) bad(where + "unknown kind \"" + args[1] + "\"");
      if (args[2] != "parallel" && args[2] != "reversed") bad(where + "matching must be parallel or reversed");
      t.classes.push_back({{to_int(args[0], line), *kind},
                           args[2] == "parallel" ? Matching::parallel : Matching::reversed});
    } else if (key == "edge") {
      if (args.size() != 3) bad(where + "edge takes class, region, region");
      DualEdge e{to_int(args[0], line), to_int(args[1], line), to_int(args[2], line)};
      regions = std::max({regions, e.upper + 1, e.lower + 1});
      t.graph.edges.push_back(e);
    } else if (key == "top" || key == "bottom") {
      std::vector<int>& row = key == "top" ? t.top : t.bottom;
      (key == "top" ? have_top : have_bottom) = true;
      for (const auto& a : args) row.push_back(to_int(a, line));
    } else {
      bad(where + "unknown key \"" + key + "\"");
    }
  }
  if (!have_top || !have_bottom) bad("template needs top and bottom rows");
  t.graph.vertex_count = regions;
  validate_template(t);
  return t;
}

ArcTemplate load_template(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::bad_template, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_template(text.str(), path.stem().string());
}

std::string format_template(const ArcTemplate& t) {
  std::ostringstream out;
  if (!t.name.empty()) out << "name " << t.name << '\n';
  out << "genus " << t.genus << '\n';
  out << "separating " << (t.separating ? "yes" : "no") << '\n';
  for (const auto& c : t.classes) {
    out << "class " << c.arc.index << ' ' << kind_text(c.arc.kind) << ' ' << matching_text(c.matching) << '\n';
  }
  for (const auto& e : t.graph.edges) out << "edge " << e.label << ' ' << e.upper << ' ' << e.lower << '\n';
  out << "top";
  for (int c : t.top) out << ' ' << c;
  out << "\nbottom";
  for (int c : t.bottom) out << ' ' << c;
  out << '\n';
  return out.str();
}

ExpandedConfiguration expand(const ArcTemplate& t, std::span<const int> weights) {
  const int n = static_cast<int>(t.classes.size());
  if (static_cast<int>(weights.size()) != n) {
    throw Error(ErrorCode::parse_error,
                "expected " + std::to_string(n) + " weights, got " + std::to_string(weights.size()));
  }
  int plus = 0, minus = 0;
  for (int c = 0; c < n; ++c) {
    if (weights[c] < 0) throw Error(ErrorCode::negative_weight, "w" + std::to_string(c + 1) + " is negative");
    if (t.classes[c].arc.kind == ArcKind::pp) plus += weights[c];
    if (t.classes[c].arc.kind == ArcKind::mm) minus += weights[c];
  }
  if (plus != minus) {
    throw Error(ErrorCode::unbalanced, "pp total " + std::to_string(plus) + " differs from mm total " +
                                           std::to_string(minus));
  }
  if (std::accumulate(weights.begin(), weights.end(), 0) == 0) {
    throw Error(ErrorCode::empty_configuration, "all weights are zero");
  }

  std::vector<int> base(n, 0);
  for (int c = 1; c < n; ++c) base[c] = base[c - 1] + weights[c - 1];
  std::vector<int> seen(n, 0);
  auto emit = [&](std::vector<int>& row, int cls) {
    const int c = cls - 1;
    const int w = weights[c];
    const bool descending = seen[c]++ == 1 && t.classes[c].matching == Matching::reversed;
    for (int i = 0; i < w; ++i) row.push_back(base[c] + (descending ? w - 1 - i : i));
  };
  ExpandedConfiguration out;
  for (int c : t.top) emit(out.top, c);
  for (int c : t.bottom) emit(out.bottom, c);
  return out;
}

std::vector<CatalogRecord> classify_expansion(const ArcTemplate& t, std::span<const int> weights,
                                              std::stop_token stop) {
  const ExpandedConfiguration config = expand(t, weights);
  const int total = std::accumulate(weights.begin(), weights.end(), 0);
  const Ladder base(config.top, config.bottom);
  std::vector<CatalogRecord> out;
  for (int offset = 0; offset < base.k(); ++offset) {
    const Ladder ladder = base.rotated_top(offset);
    if (!beta_components(ladder).single_curve()) continue;
    DistanceOptions d;
    d.ambient_genus = t.genus;
    d.stop = stop;
    const DistanceResult r = distance(ladder, d);
    out.push_back({total, WeightVector(weights.begin(), weights.end()), offset, ladder.k(), r.verdict});
  }
  return out;
}

std::vector<CatalogRecord> pipeline(const ArcTemplate& t, const PipelineOptions& options) {
  const ConstraintSystem system = t.constraints();
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<CatalogRecord> catalog;
  for (int p = options.p_min; p <= options.p_max; ++p) {
    const auto solutions = enumerate_solutions(system, p);
    std::vector<std::vector<CatalogRecord>> slots(solutions.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto work = [&] {
      for (std::size_t i = next++; i < solutions.size(); i = next++) {
        try {
          slots[i] = classify_expansion(t, solutions[i], options.stop);
        } catch (...) {
          std::lock_guard lock(failure_lock);
          if (!failure) failure = std::current_exception();
          next = solutions.size();
        }
      }
    };
    {
      std::vector<std::jthread> pool;
      const unsigned n = std::min<std::size_t>(threads, std::max<std::size_t>(1, solutions.size()));
      for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
      work();
    }
    if (failure) std::rethrow_exception(failure);
    for (auto& s : slots) catalog.insert(catalog.end(), s.begin(), s.end());
    if (options.progress) options.progress(p, solutions.size());
  }
  return catalog;
}

}  // namespace micc

#include "micc/ilp.hpp"

#include "micc/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace micc {

std::string_view kind_text(ArcKind kind) noexcept {
  switch (kind) {
    case ArcKind::pp: return "pp";
    case ArcKind::mm: return "mm";
    case ArcKind::pm: return "pm";
  }
  return "?";
}

std::optional<ArcKind> parse_kind(std::string_view text) noexcept {
  if (text == "pp" || text == "++") return ArcKind::pp;
  if (text == "mm" || text == "--") return ArcKind::mm;
  if (text == "pm" || text == "+-" || text == "mp" || text == "-+") return ArcKind::pm;
  return std::nullopt;
}

bool ConstraintSystem::balanced(std::span<const int> w) const {
  long plus = 0, minus = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].kind == ArcKind::pp) plus += w[c];
    if (classes[c].kind == ArcKind::mm) minus += w[c];
  }
  return plus == minus;
}

bool ConstraintSystem::satisfied_by(std::span<const int> w) const {
  if (w.size() != classes.size()) return false;
  if (std::any_of(w.begin(), w.end(), [](int x) { return x < 0; })) return false;
  const Eigen::Map<const Eigen::VectorXi> v(w.data(), static_cast<Eigen::Index>(w.size()));
  if (circuit_rows.rows() > 0 && (circuit_rows * v).minCoeff() < threshold) return false;
  return balanced(w);
}

int circuit_threshold(int genus) {
  if (genus < 2) throw Error(ErrorCode::genus_too_small, "genus " + std::to_string(genus) + " is below 2");
  return genus == 2 ? 4 : 2 * genus - 1;
}

ConstraintSystem build_constraints(std::span<const ArcClass> classes, const DualGraph& graph, int genus) {
  ConstraintSystem s;
  s.classes.assign(classes.begin(), classes.end());
  s.threshold = circuit_threshold(genus);
  const auto circuits = elementary_circuits(graph);
  if (circuits.empty()) throw Error(ErrorCode::no_circuits, "the dual graph has no circuits");
  const int n = s.variables();
  s.circuit_rows = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(circuits.size()), n);
  for (std::size_t r = 0; r < circuits.size(); ++r) {
    for (int label : circuits[r].labels) {
      if (label < 1 || label > n) {
        throw Error(ErrorCode::bad_template, "edge label " + std::to_string(label) + " is not a class index");
      }
      s.circuit_rows(static_cast<Eigen::Index>(r), label - 1) += 1;
    }
  }
  return s;
}

namespace {

class SolutionSearch {
 public:
  SolutionSearch(const ConstraintSystem& s, int objective)
      : s_(s), n_(s.variables()), rows_(static_cast<int>(s.circuit_rows.rows())), w_(n_, 0), sums_(rows_, 0) {
    if (s_.circuit_rows.size() > 0) maximum_coefficient_ = std::max(1, s_.circuit_rows.maxCoeff());
    last_var_.assign(rows_, -1);
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < n_; ++c) {
        if (s_.circuit_rows(r, c) != 0) last_var_[r] = c;
      }
    }
    plus_left_.assign(n_ + 1, 0);
    minus_left_.assign(n_ + 1, 0);
    for (int c = n_ - 1; c >= 0; --c) {
      plus_left_[c] = plus_left_[c + 1] + (s_.classes[c].kind == ArcKind::pp);
      minus_left_[c] = minus_left_[c + 1] + (s_.classes[c].kind == ArcKind::mm);
    }
    if (n_ > 0) assign(0, objective, 0);
  }

  std::vector<WeightVector> take() { return std::move(found_); }

 private:
  // Can rows still reach the threshold, and can the balance still close, with
  // `budget` left to spread over classes >= next?
  bool viable(int next, int budget, int balance) const {
    for (int r = 0; r < rows_; ++r) {
      if (sums_[r] >= s_.threshold) continue;
      if (last_var_[r] < next) return false;
      if (sums_[r] + budget * maximum_coefficient_ < s_.threshold) return false;
    }
    if (balance > 0 && minus_left_[next] == 0) return false;
    if (balance < 0 && plus_left_[next] == 0) return false;
    return std::abs(balance) <= budget;
  }

  void set(int c, int value) {
    for (int r = 0; r < rows_; ++r) sums_[r] += s_.circuit_rows(r, c) * (value - w_[c]);
    w_[c] = value;
  }

  void assign(int c, int budget, int balance) {
    const ArcKind kind = s_.classes[c].kind;
    const int sign = kind == ArcKind::pp ? 1 : kind == ArcKind::mm ? -1 : 0;
    const int low = c + 1 == n_ ? budget : 0;
    for (int value = low; value <= budget; ++value) {
      set(c, value);
      const int b = balance + sign * value;
      if (c + 1 == n_) {
        if (b == 0 && viable(n_, 0, 0)) found_.push_back(w_);
      } else if (viable(c + 1, budget - value, b)) {
        assign(c + 1, budget - value, b);
      }
    }
    set(c, 0);
  }

  const ConstraintSystem& s_;
  int n_;
  int rows_;
  int maximum_coefficient_ = 1;
  WeightVector w_;
  std::vector<int> sums_;
  std::vector<int> last_var_;
  std::vector<int> plus_left_;
  std::vector<int> minus_left_;
  std::vector<WeightVector> found_;
};

// A vector satisfying every row whenever the system is feasible at all.
std::optional<WeightVector> feasibility_witness(const ConstraintSystem& s) {
  const int n = s.variables();
  int plus = 0, minus = 0;
  for (const auto& c : s.classes) {
    plus += c.kind == ArcKind::pp;
    minus += c.kind == ArcKind::mm;
  }
  WeightVector w(n, s.threshold);
  for (int c = 0; c < n; ++c) {
    const ArcKind kind = s.classes[c].kind;
    if (kind == ArcKind::pp) w[c] = minus ? s.threshold * minus : 0;
    if (kind == ArcKind::mm) w[c] = plus ? s.threshold * plus : 0;
  }
  if (!s.satisfied_by(w)) return std::nullopt;
  return w;
}

}  // namespace

std::vector<WeightVector> enumerate_solutions(const ConstraintSystem& system, int objective) {
  if (objective < 0 || system.variables() == 0) return {};
  if (system.circuit_rows.size() > 0 && system.circuit_rows.minCoeff() < 0) {
    throw Error(ErrorCode::bad_template, "circuit rows must be nonnegative");
  }
  return SolutionSearch(system, objective).take();
}

Optimum minimize(const ConstraintSystem& system) {
  const auto witness = feasibility_witness(system);
  if (!witness) throw Error(ErrorCode::infeasible, "no nonnegative weights satisfy the system");
  const int upper = std::accumulate(witness->begin(), witness->end(), 0);
  for (int p = 0; p <= upper; ++p) {
    auto solutions = enumerate_solutions(system, p);
    if (!solutions.empty()) return {p, std::move(solutions)};
  }
  throw Error(ErrorCode::infeasible, "search exhausted below the witness total");
}

std::string format_weights(std::span<const int> w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(w[i]);
  }
  return out + "]";
}

std::string format_constraints(const ConstraintSystem& system) {
  std::string out;
  const int n = system.variables();
  for (Eigen::Index r = 0; r < system.circuit_rows.rows(); ++r) {
    std::string row;
    for (int c = 0; c < n; ++c) {
      const int coeff = system.circuit_rows(r, c);
      if (coeff == 0) continue;
      if (!row.empty()) row += " + ";
      if (coeff != 1) row += std::to_string(coeff) + " ";
      row += "w" + std::to_string(system.classes[c].index);
    }
    out += row + " >= " + std::to_string(system.threshold) + "\n";
  }
  std::string plus, minus;
  for (const auto& c : system.classes) {
    std::string& side = c.kind == ArcKind::pp ? plus : minus;
    if (c.kind == ArcKind::pm) continue;
    if (!side.empty()) side += " + ";
    side += "w" + std::to_string(c.index);
  }
  if (!plus.empty() || !minus.empty()) {
    out += (plus.empty() ? "0" : plus) + " = " + (minus.empty() ? "0" : minus) + "\n";
  }
  return out;
}

nlohmann::json constraints_to_json(const ConstraintSystem& system) {
  nlohmann::json j;
  j["threshold"] = system.threshold;
  j["classes"] = nlohmann::json::array();
  for (const auto& c : system.classes) {
    j["classes"].push_back({{"index", c.index}, {"kind", kind_text(c.kind)}});
  }
  j["rows"] = nlohmann::json::array();
  for (Eigen::Index r = 0; r < system.circuit_rows.rows(); ++r) {
    std::vector<int> row(system.circuit_rows.cols());
    for (Eigen::Index c = 0; c < system.circuit_rows.cols(); ++c) row[c] = system.circuit_rows(r, c);
    j["rows"].push_back(row);
  }
  return j;
}

ConstraintSystem constraints_from_json(const nlohmann::json& j) {
  ConstraintSystem s;
  s.threshold = j.at("threshold").get<int>();
  for (const auto& c : j.at("classes")) {
    const auto kind = parse_kind(c.at("kind").get<std::string>());
    if (!kind) throw Error(ErrorCode::parse_error, "unknown arc kind");
    s.classes.push_back({c.at("index").get<int>(), *kind});
  }
  const auto& rows = j.at("rows");
  s.circuit_rows = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(rows.size()), s.variables());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto row = rows[r].get<std::vector<int>>();
    if (static_cast<int>(row.size()) != s.variables()) throw Error(ErrorCode::parse_error, "row width mismatch");
    for (int c = 0; c < s.variables(); ++c) s.circuit_rows(static_cast<Eigen::Index>(r), c) = row[c];
  }
  return s;
}

}  // namespace micc

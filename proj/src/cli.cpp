#include "micc/cli.hpp"

#include "micc/catalog.hpp"
#include "micc/distance.hpp"
#include "micc/dwh_template.hpp"
#include "micc/error.hpp"
#include "micc/faces.hpp"
#include "micc/gluing.hpp"
#include "micc/ilp.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <tuple>

namespace micc {

using nlohmann::json;

namespace {

std::string_view status_text(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::fills: return "fills";
    case CandidateStatus::non_filling: return "non-filling";
  }
  return "?";
}

json candidate_json(const CandidatePair& c) {
  return {{"path", c.circuit.labels},
          {"genus", c.fill_genus},
          {"status", status_text(c.status)},
          {"degree_two_faces", c.degree_two_faces}};
}

DistanceOptions distance_options(const CommandOptions& o, bool collect_all) {
  DistanceOptions d;
  d.ambient_genus = o.ambient_genus;
  d.circuit_cap = o.circuit_cap;
  d.collect_all = collect_all;
  d.stop = o.stop;
  return d;
}

json distance_json(const DistanceResult& r) {
  json j{{"k", r.k},
         {"genus", r.genus},
         {"ambient_genus", r.ambient_genus},
         {"distance", verdict_text(r.verdict)},
         {"circuits", r.circuit_count},
         {"bigons_removed", r.input_bigons_removed},
         {"side_conflicts", r.side_conflicts},
         {"witness", nullptr}};
  if (r.witness) j["witness"] = candidate_json(*r.witness);
  return j;
}

std::vector<std::vector<int>> rows_of(const CharacteristicMatrix& m) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < m.k(); ++i) rows.push_back({m.rows(i, 0), m.rows(i, 1), m.rows(i, 2), m.rows(i, 3)});
  return rows;
}

std::string curves_text(const json& curves) {
  std::ostringstream out;
  bool first = true;
  for (const auto& c : curves) {
    if (!first) out << '\n';
    first = false;
    out << "Path " << format_row(c.at("path").get<std::vector<int>>()) << '\n';
    out << "Curve genus:  " << c.at("genus").get<int>() << '\n';
  }
  return out.str();
}

}  // namespace

bool is_verb(std::string_view word) {
  return std::find(std::begin(kVerbs), std::end(kVerbs), word) != std::end(kVerbs);
}

json command_payload(const Ladder& ladder, std::string_view verb, const CommandOptions& options) {
  json j{{"command", verb}, {"top", ladder.top()}, {"bottom", ladder.bottom()}};
  if (verb == "genus") {
    const auto f = faces(ladder);
    j["k"] = ladder.k();
    j["faces"] = f.size();
    j["genus"] = genus_from_counts(ladder.k(), static_cast<int>(f.size()));
  } else if (verb == "distance") {
    j.update(distance_json(distance(ladder, distance_options(options, false))));
  } else if (verb == "curves") {
    const DistanceResult r = distance(ladder, distance_options(options, true));
    j.update(distance_json(r));
    j["curves"] = json::array();
    for (const auto& c : r.candidates) j["curves"].push_back(candidate_json(c));
  } else if (verb == "matrix") {
    j["rows"] = rows_of(characteristic_matrix(ladder));
  } else if (verb == "faces") {
    const auto f = faces(ladder);
    json census = json::object();
    for (const auto& [degree, count] : face_vector(f)) census[std::to_string(degree)] = count;
    j["vector"] = census;
    j["faces"] = json::array();
    for (const auto& face : f) j["faces"].push_back(face.truncated());
  } else if (verb == "perm") {
    GluingOptions g;
    g.ambient_genus = options.ambient_genus;
    g.circuit_cap = options.circuit_cap;
    g.stop = options.stop;
    j["gluings"] = json::array();
    for (const auto& r : enumerate_gluings(ladder, g)) {
      if (!r.single_curve) continue;
      json item{{"offset", r.offset}, {"top", r.ladder.top()}, {"bottom", r.ladder.bottom()},
                {"distance", nullptr}, {"note", nullptr}};
      if (r.verdict) item["distance"] = verdict_text(r.verdict->verdict);
      if (r.note) item["note"] = *r.note;
      j["gluings"].push_back(item);
    }
  } else {
    throw Error(ErrorCode::parse_error, "unknown command \"" + std::string(verb) + "\"");
  }
  return j;
}

std::string render_payload(const json& p) {
  const std::string verb = p.at("command").get<std::string>();
  std::ostringstream out;
  if (verb == "genus") {
    out << "Genus:  " << p.at("genus").get<int>() << '\n';
  } else if (verb == "distance") {
    out << "Distance:  " << p.at("distance").get<std::string>() << '\n';
  } else if (verb == "curves") {
    out << curves_text(p.at("curves"));
  } else if (verb == "matrix") {
    for (const auto& row : p.at("rows")) out << format_row(row.get<std::vector<int>>()) << '\n';
  } else if (verb == "faces") {
    FaceVector census;
    for (const auto& [degree, count] : p.at("vector").items()) census[std::stoi(degree)] = count.get<int>();
    out << "Vector solution:  " << format_face_vector(census) << '\n';
    for (const auto& f : p.at("faces")) {
      const auto labels = f.get<std::vector<int>>();
      out << '(';
      for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? ", " : "") << labels[i];
      out << ")\n";
    }
  } else if (verb == "perm") {
    int n = 0;
    for (const auto& g : p.at("gluings")) {
      if (n) out << '\n';
      out << "Curve " << ++n << " Distance: ";
      if (g.at("distance").is_null()) {
        out << "n/a (" << (g.at("note").is_null() ? "not classified" : g.at("note").get<std::string>()) << ")";
      } else {
        out << g.at("distance").get<std::string>();
      }
      out << '\n'
          << format_row(g.at("top").get<std::vector<int>>()) << '\n'
          << format_row(g.at("bottom").get<std::vector<int>>()) << '\n';
    }
    if (n == 0) out << "No single-curve gluings.\n";
  } else {
    throw Error(ErrorCode::parse_error, "unknown payload \"" + verb + "\"");
  }
  return out.str();
}

std::vector<std::string> payload_warnings(const json& p) {
  std::vector<std::string> out;
  if (const auto it = p.find("bigons_removed"); it != p.end() && it->get<int>() > 0) {
    out.push_back("warning: input was not in minimal position; removed " + std::to_string(it->get<int>()) +
                  " bigon(s) before evaluating");
  }
  if (const auto it = p.find("side_conflicts"); it != p.end() && it->get<int>() > 0) {
    out.push_back("warning: discarded " + std::to_string(it->get<int>()) + " circuit(s) with a side conflict");
  }
  return out;
}

std::string help_text() {
  return "Commands:\n"
         "  genus     genus of the surface the pair fills\n"
         "  distance  curve complex distance: 2, 3, or 4+\n"
         "  curves    candidate curves with the genus each fills with alpha\n"
         "  matrix    characteristic matrix, one row per intersection\n"
         "  faces     face census and truncated boundary of each face\n"
         "  perm      gluings of the two rows that give a single curve\n"
         "  new       enter another ladder\n"
         "  help      this text\n"
         "  quit      leave\n";
}

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool prompt(std::istream& in, std::ostream& out, std::string_view text, std::string& line) {
  out << text << std::flush;
  if (!std::getline(in, line)) {
    out << '\n';
    return false;
  }
  line = trim(line);
  return true;
}

void report(std::ostream& err, const std::exception& e) { err << "error: " << e.what() << '\n'; }

}  // namespace

int run_repl(std::istream& in, std::ostream& out, std::ostream& err, const CommandOptions& options) {
  std::vector<std::string> history;
  std::string line;
  while (true) {
    std::string top, bottom;
    if (!prompt(in, out, kTopPrompt, top)) return 0;
    if (top == "quit" || top == "exit") return 0;
    if (!prompt(in, out, kBottomPrompt, bottom)) return 0;
    std::optional<Ladder> ladder;
    try {
      ladder = parse_ladder(top, bottom);
    } catch (const Error& e) {
      report(err, e);
      continue;
    }

    if (!beta_components(*ladder).single_curve()) {
      if (!prompt(in, out, kShearPrompt, line)) return 0;
      if (line == "yes" || line == "y") {
        try {
          out << render_payload(command_payload(*ladder, "perm", options));
        } catch (const Error& e) {
          report(err, e);
        }
      }
    }

    while (true) {
      if (!prompt(in, out, kCommandPrompt, line)) return 0;
      if (line.empty()) continue;
      history.push_back(line);
      if (line == "quit" || line == "exit") return 0;
      if (line == "new") break;
      if (!is_verb(line)) {
        out << help_text();
        continue;
      }
      try {
        const json payload = command_payload(*ladder, line, options);
        for (const auto& w : payload_warnings(payload)) err << w << '\n';
        out << render_payload(payload);
      } catch (const Error& e) {
        report(err, e);
      }
    }
  }
}

namespace {

struct Sink {
  std::ostream* stream;
  std::ofstream file;

  Sink(std::ostream& out, const std::string& path) : stream(&out) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw Error(ErrorCode::parse_error, "cannot write " + path);
    stream = &file;
  }
};

std::pair<std::string, std::string> read_ladder_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot read " + path);
  std::vector<std::string> rows;
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    for (std::string_view key : {"top:", "bottom:"}) {
      if (line.starts_with(key)) line = trim(line.substr(key.size()));
    }
    rows.push_back(line);
  }
  if (rows.size() != 2) throw Error(ErrorCode::parse_error, path + " must hold exactly two rows");
  return {rows[0], rows[1]};
}

std::string solutions_text(const std::vector<WeightVector>& solutions) {
  std::string out;
  for (const auto& w : solutions) out += format_weights(w) + "\n";
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
            std::stop_token stop) {
  CLI::App app{"Curve complex distance for filling pairs given as ladders"};
  app.require_subcommand(0, 1);

  std::string top, bottom, input, command, out_path;
  std::optional<int> ambient;
  std::size_t cap = default_circuit_cap;
  bool as_json = false;
  auto* top_opt = app.add_option("--top", top, "top identifications, comma separated");
  auto* bottom_opt = app.add_option("--bottom", bottom, "bottom identifications, comma separated");
  auto* input_opt = app.add_option("--input", input, "file with the top row and the bottom row");
  input_opt->excludes(top_opt)->excludes(bottom_opt);
  top_opt->needs(bottom_opt);
  bottom_opt->needs(top_opt);
  app.add_option("--command", command, "genus, distance, curves, matrix, faces, or perm")
      ->check(CLI::IsMember({"genus", "distance", "curves", "matrix", "faces", "perm"}));
  app.add_option("--ambient-genus", ambient, "genus of the surface the curves live on");
  app.add_option("--circuit-cap", cap, "stop after this many circuits")->check(CLI::PositiveNumber);
  app.add_flag("--json", as_json, "structured output");
  app.add_option("--out", out_path, "write output to this file");

  auto* repl = app.add_subcommand("repl", "interactive session");

  auto* ilp = app.add_subcommand("ilp", "weight inequalities of an arc template");
  std::string ilp_template;
  std::optional<int> objective;
  bool minimize_flag = false;
  ilp->add_option("template", ilp_template, "template file")->required()->check(CLI::ExistingFile);
  auto* min_opt = ilp->add_flag("--minimize", minimize_flag, "smallest total weight and its solutions");
  auto* obj_opt = ilp->add_option("--objective", objective, "all solutions with this total")
                      ->check(CLI::NonNegativeNumber);
  min_opt->excludes(obj_opt);
  ilp->add_flag("--json", as_json, "structured output");
  ilp->add_option("--out", out_path, "write output to this file");

  auto* pipe = app.add_subcommand("pipeline", "classify every gluing of every weight solution");
  std::string pipe_template, catalog_path;
  int p_min = 0, p_max = 0;
  unsigned threads = 0;
  pipe->add_option("template", pipe_template, "template file")->required()->check(CLI::ExistingFile);
  pipe->add_option("--p-min", p_min, "smallest total weight")->required()->check(CLI::NonNegativeNumber);
  pipe->add_option("--p-max", p_max, "largest total weight")->required()->check(CLI::NonNegativeNumber);
  pipe->add_option("--catalog", catalog_path, "append records to this catalog");
  pipe->add_option("--threads", threads, "worker threads, 0 for all cores");
  pipe->add_flag("--json", as_json, "structured output");
  pipe->add_option("--out", out_path, "write output to this file");

  auto* cat = app.add_subcommand("catalog", "query a saved catalog");
  std::string cat_path, cat_distance;
  std::optional<int> cat_objective;
  cat->add_option("file", cat_path, "catalog file")->required()->check(CLI::ExistingFile);
  cat->add_option("--objective", cat_objective, "only this total weight");
  cat->add_option("--distance", cat_distance, "only records at this distance")
      ->check(CLI::IsMember({"2", "3", "4+"}));
  bool spectrum = false;
  cat->add_flag("--spectrum", spectrum, "distance 4+ weight vectors with multiplicities");
  cat->add_flag("--json", as_json, "structured output, one record per line");
  cat->add_option("--out", out_path, "write output to this file");

  auto* exp = app.add_subcommand("expand", "rows of a template at given weights");
  std::string exp_template, exp_weights;
  int exp_offset = 0;
  exp->add_option("template", exp_template, "template file")->required()->check(CLI::ExistingFile);
  exp->add_option("--weights", exp_weights, "comma separated weights")->required();
  exp->add_option("--offset", exp_offset, "rotate the top row left by this much");
  exp->add_flag("--json", as_json, "structured output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  CommandOptions options;
  options.ambient_genus = ambient;
  options.circuit_cap = cap;
  options.stop = stop;

  try {
    if (*ilp) {
      if (!minimize_flag && !objective) throw Error(ErrorCode::parse_error, "ilp needs --minimize or --objective");
      const ArcTemplate t = load_template(ilp_template);
      const ConstraintSystem system = t.constraints();
      Sink sink(out, out_path);
      json j{{"template", t.name}, {"constraints", constraints_to_json(system)}};
      std::string text = format_constraints(system);
      if (minimize_flag) {
        const Optimum best = minimize(system);
        j["P"] = best.objective;
        j["solutions"] = best.solutions;
        text += "P* = " + std::to_string(best.objective) + "\n" + solutions_text(best.solutions);
      } else {
        const auto solutions = enumerate_solutions(system, *objective);
        j["P"] = *objective;
        j["solutions"] = solutions;
        text += "P = " + std::to_string(*objective) + ": " + std::to_string(solutions.size()) + " solutions\n" +
                solutions_text(solutions);
      }
      *sink.stream << (as_json ? j.dump(2) + "\n" : text);
      return 0;
    }

    if (*pipe) {
      if (p_max < p_min) throw Error(ErrorCode::parse_error, "--p-max is below --p-min");
      const ArcTemplate t = load_template(pipe_template);
      std::map<int, std::size_t> solution_counts;
      PipelineOptions po;
      po.p_min = p_min;
      po.p_max = p_max;
      po.threads = threads;
      po.stop = stop;
      po.progress = [&](int p, std::size_t n) { solution_counts[p] = n; };
      const auto records = pipeline(t, po);
      if (!catalog_path.empty()) append_catalog(catalog_path, t, records);
      Sink sink(out, out_path);
      json j{{"template", t.name}, {"records", json::array()}, {"summary", json::array()}};
      std::string text;
      for (const auto& r : records) j["records"].push_back(record_to_json(r));
      for (int p = p_min; p <= p_max; ++p) {
        const auto entries = distance_four_spectrum(records, p);
        std::size_t gluings = 0;
        for (const auto& r : records) gluings += r.objective == p;
        json s{{"P", p}, {"solutions", solution_counts[p]}, {"gluings", gluings}, {"distance_4", json::array()}};
        text += "P=" + std::to_string(p) + ": " + std::to_string(solution_counts[p]) + " weight solutions, " +
                std::to_string(gluings) + " single-curve gluings, " + std::to_string(entries.size()) +
                " weight vectors at distance 4+\n";
        for (const auto& e : entries) {
          s["distance_4"].push_back({{"weights", e.weights}, {"multiplicity", e.multiplicity}});
          text += "  " + format_spectrum_entry(e) + "\n";
        }
        j["summary"].push_back(s);
      }
      *sink.stream << (as_json ? j.dump(2) + "\n" : text);
      return 0;
    }

    if (*cat) {
      const Catalog c = read_catalog(cat_path);
      Sink sink(out, out_path);
      std::vector<CatalogRecord> chosen;
      for (const auto& r : c.records) {
        if (cat_objective && r.objective != *cat_objective) continue;
        if (!cat_distance.empty() && verdict_text(r.verdict) != cat_distance) continue;
        chosen.push_back(r);
      }
      if (spectrum) {
        for (const auto& e : distance_four_spectrum(chosen)) {
          if (as_json) {
            *sink.stream << json{{"weights", e.weights}, {"multiplicity", e.multiplicity}}.dump() << '\n';
          } else {
            *sink.stream << format_spectrum_entry(e) << '\n';
          }
        }
      } else {
        for (const auto& r : chosen) *sink.stream << (as_json ? record_to_json(r).dump() : format_record(r)) << '\n';
      }
      return 0;
    }

    if (*exp) {
      const ArcTemplate t = load_template(exp_template);
      const auto config = expand(t, parse_row(exp_weights));
      const Ladder ladder = config.ladder(exp_offset);
      if (as_json) {
        out << json{{"top", ladder.top()}, {"bottom", ladder.bottom()}, {"k", ladder.k()}}.dump(2) << '\n';
      } else {
        out << format_row(ladder.top()) << '\n' << format_row(ladder.bottom()) << '\n';
      }
      return 0;
    }

    const bool have_ladder = !top.empty() || !input.empty();
    if (*repl || (!have_ladder && command.empty())) return run_repl(in, out, err, options);

    if (!have_ladder) throw Error(ErrorCode::empty_input, "--command needs --top/--bottom or --input");
    if (command.empty()) throw Error(ErrorCode::parse_error, "a ladder was given without --command");
    if (!input.empty()) std::tie(top, bottom) = read_ladder_file(input);
    const Ladder ladder = parse_ladder(top, bottom);
    const json payload = command_payload(ladder, command, options);
    for (const auto& w : payload_warnings(payload)) err << w << '\n';
    Sink sink(out, out_path);
    *sink.stream << (as_json ? payload.dump(2) + "\n" : render_payload(payload));
    return 0;
  } catch (const Error& e) {
    report(err, e);
    return is_internal(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    report(err, e);
    return 2;
  }
}

}  // namespace micc

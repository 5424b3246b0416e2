#include "micc/catalog.hpp"

#include "micc/error.hpp"

#include <zlib.h>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <regex>

namespace micc {

namespace {

constexpr std::string_view kMagic = "# micc-catalog 1";

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::bad_catalog, message); }

int field_int(const std::smatch& m, int group) { return std::stoi(m[group].str()); }

}  // namespace

std::uint32_t template_checksum(const ArcTemplate& t) {
  const std::string text = format_template(t);
  return static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(text.data()), static_cast<uInt>(text.size())));
}

CatalogHeader catalog_header(const ArcTemplate& t) {
  return {t.name.empty() ? "unnamed" : t.name, t.genus, template_checksum(t)};
}

std::string format_header(const CatalogHeader& h) {
  char hex[9];
  std::snprintf(hex, sizeof hex, "%08x", h.checksum);
  return std::string(kMagic) + " template=" + h.template_name + " genus=" + std::to_string(h.genus) +
         " checksum=" + hex;
}

CatalogHeader parse_header(std::string_view line) {
  static const std::regex pattern(R"(# micc-catalog 1 template=(\S+) genus=(\d+) checksum=([0-9a-f]{8}))");
  std::smatch m;
  const std::string s(line);
  if (!std::regex_match(s, m, pattern)) bad("missing or malformed catalog header");
  CatalogHeader h;
  h.template_name = m[1].str();
  h.genus = field_int(m, 2);
  h.checksum = static_cast<std::uint32_t>(std::stoul(m[3].str(), nullptr, 16));
  return h;
}

std::string format_record(const CatalogRecord& r) {
  return "P=" + std::to_string(r.objective) + " w=" + format_weights(r.weights) +
         " offset=" + std::to_string(r.offset) + " k=" + std::to_string(r.k) +
         " distance=" + std::string(verdict_text(r.verdict));
}

CatalogRecord parse_record(std::string_view line) {
  static const std::regex pattern(R"(P=(\d+) w=\[([0-9, ]*)\] offset=(\d+) k=(\d+) distance=(2|3|4\+))");
  std::smatch m;
  const std::string s(line);
  if (!std::regex_match(s, m, pattern)) bad("malformed record \"" + s + "\"");
  CatalogRecord r;
  r.objective = field_int(m, 1);
  r.weights = parse_row(m[2].str());
  r.offset = field_int(m, 3);
  r.k = field_int(m, 4);
  r.verdict = *parse_verdict(m[5].str());
  return r;
}

nlohmann::json record_to_json(const CatalogRecord& r) {
  return {{"P", r.objective},
          {"weights", r.weights},
          {"offset", r.offset},
          {"k", r.k},
          {"distance", std::string(verdict_text(r.verdict))}};
}

CatalogRecord record_from_json(const nlohmann::json& j) {
  CatalogRecord r;
  r.objective = j.at("P").get<int>();
  r.weights = j.at("weights").get<WeightVector>();
  r.offset = j.at("offset").get<int>();
  r.k = j.at("k").get<int>();
  const auto v = parse_verdict(j.at("distance").get<std::string>());
  if (!v) bad("unknown distance in record");
  r.verdict = *v;
  return r;
}

void append_catalog(const std::filesystem::path& path, const ArcTemplate& t, std::span<const CatalogRecord> records) {
  const CatalogHeader header = catalog_header(t);
  const bool exists = std::filesystem::exists(path) && std::filesystem::file_size(path) > 0;
  if (exists) {
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    const CatalogHeader existing = parse_header(first);
    if (existing.checksum != header.checksum) {
      bad(path.string() + " was written for a different template");
    }
  }
  std::ofstream out(path, std::ios::app);
  if (!out) bad("cannot write " + path.string());
  if (!exists) out << format_header(header) << '\n';
  for (const auto& r : records) out << format_record(r) << '\n';
}

Catalog read_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path.string());
  Catalog c;
  std::string line;
  if (!std::getline(in, line)) bad(path.string() + " is empty");
  c.header = parse_header(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    c.records.push_back(parse_record(line));
  }
  return c;
}

std::vector<SpectrumEntry> distance_four_spectrum(std::span<const CatalogRecord> records,
                                                  std::optional<int> objective) {
  std::vector<SpectrumEntry> out;
  std::map<WeightVector, std::size_t> index;
  for (const auto& r : records) {
    if (objective && r.objective != *objective) continue;
    if (r.verdict != Verdict::distance_4_plus) continue;
    auto [it, inserted] = index.try_emplace(r.weights, out.size());
    if (inserted) out.push_back({r.weights, 0});
    ++out[it->second].multiplicity;
  }
  return out;
}

std::string format_spectrum_entry(const SpectrumEntry& e) {
  std::string s = format_weights(e.weights);
  if (e.multiplicity != 1) s += "^" + std::to_string(e.multiplicity);
  return s;
}

}  // namespace micc

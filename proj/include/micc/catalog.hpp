#pragma once

#include "micc/dwh_template.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace micc {

struct CatalogHeader {
  std::string template_name;
  int genus = 2;
  std::uint32_t checksum = 0;  // crc32 of the template's canonical text
};

struct Catalog {
  CatalogHeader header;
  std::vector<CatalogRecord> records;
};

std::uint32_t template_checksum(const ArcTemplate& t);
CatalogHeader catalog_header(const ArcTemplate& t);

std::string format_header(const CatalogHeader& h);
CatalogHeader parse_header(std::string_view line);

// "P=12 w=[2, 2, 2, 2, 2, 2] offset=3 k=12 distance=4+"
std::string format_record(const CatalogRecord& r);
CatalogRecord parse_record(std::string_view line);

nlohmann::json record_to_json(const CatalogRecord& r);
CatalogRecord record_from_json(const nlohmann::json& j);

// Creates the file with a header, or checks that the existing header matches
// the template before appending.
void append_catalog(const std::filesystem::path& path, const ArcTemplate& t, std::span<const CatalogRecord> records);
Catalog read_catalog(const std::filesystem::path& path);

struct SpectrumEntry {
  WeightVector weights;
  int multiplicity = 0;  // gluings at distance 4+
};

// Weight vectors carrying at least one distance 4+ gluing, in catalog order.
std::vector<SpectrumEntry> distance_four_spectrum(std::span<const CatalogRecord> records,
                                                  std::optional<int> objective = std::nullopt);

// "[2, 2, 2, 2, 2, 2]^4", or without the exponent for multiplicity 1.
std::string format_spectrum_entry(const SpectrumEntry& e);

}  // namespace micc

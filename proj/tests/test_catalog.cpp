#include "fixtures.hpp"

#include "micc/catalog.hpp"
#include "micc/error.hpp"

#include <doctest.h>

#include <fstream>

using namespace micc;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "micc_catalog_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::filesystem::remove(path);
  return path;
}

const std::vector<CatalogRecord> kRecords{
    {12, {2, 2, 2, 2, 2, 2}, 0, 12, Verdict::distance_4_plus},
    {12, {2, 2, 2, 2, 2, 2}, 3, 12, Verdict::distance_4_plus},
    {12, {2, 2, 2, 2, 2, 2}, 5, 12, Verdict::distance_3},
    {12, {4, 2, 2, 1, 2, 1}, 0, 12, Verdict::distance_4_plus},
    {13, {4, 2, 3, 1, 2, 1}, 2, 13, Verdict::distance_3},
};

}  // namespace

TEST_CASE("record text round trip") {
  const CatalogRecord r{12, {2, 2, 2, 2, 2, 2}, 3, 12, Verdict::distance_4_plus};
  CHECK(format_record(r) == "P=12 w=[2, 2, 2, 2, 2, 2] offset=3 k=12 distance=4+");
  CHECK(parse_record(format_record(r)) == r);
  for (const auto& x : kRecords) {
    CHECK(parse_record(format_record(x)) == x);
    CHECK(record_from_json(record_to_json(x)) == x);
  }
  CHECK_THROWS_AS(parse_record("P=12 w=[2] offset=x"), Error);
}

TEST_CASE("header") {
  const ArcTemplate t = fixtures::nonseparating();
  const CatalogHeader h = catalog_header(t);
  CHECK(h.template_name == "nonseparating_genus2");
  CHECK(h.genus == 2);
  CHECK(h.checksum == template_checksum(t));
  CHECK(template_checksum(t) != template_checksum(fixtures::separating()));
  const std::string line = format_header(h);
  CHECK(line.starts_with("# micc-catalog 1 template=nonseparating_genus2 genus=2 checksum="));
  const CatalogHeader back = parse_header(line);
  CHECK(back.checksum == h.checksum);
  CHECK(back.template_name == h.template_name);
  CHECK_THROWS_AS(parse_header("P=12 w=[] offset=0 k=0 distance=3"), Error);
}

TEST_CASE("append and read") {
  const ArcTemplate t = fixtures::nonseparating();
  const auto path = scratch("append.txt");
  append_catalog(path, t, std::span(kRecords).first(3));
  append_catalog(path, t, std::span(kRecords).subspan(3));
  const Catalog c = read_catalog(path);
  CHECK(c.header.checksum == template_checksum(t));
  CHECK(c.records == kRecords);
}

TEST_CASE("appending under a different template is refused") {
  const auto path = scratch("mismatch.txt");
  append_catalog(path, fixtures::nonseparating(), kRecords);
  try {
    append_catalog(path, fixtures::separating(), kRecords);
    FAIL("mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::bad_catalog);
  }
  CHECK(read_catalog(path).records.size() == kRecords.size());
}

TEST_CASE("corrupt catalogs") {
  const auto path = scratch("corrupt.txt");
  {
    std::ofstream out(path);
    out << format_header(catalog_header(fixtures::nonseparating())) << "\nP=12 w=[2, 2] offset=0\n";
  }
  CHECK_THROWS_AS(read_catalog(path), Error);
  {
    std::ofstream out(path);
    out << "P=12 w=[2, 2] offset=0 k=4 distance=3\n";
  }
  CHECK_THROWS_AS(read_catalog(path), Error);
}

TEST_CASE("spectrum") {
  const auto all = distance_four_spectrum(kRecords);
  REQUIRE(all.size() == 2);
  CHECK(all[0].weights == WeightVector{2, 2, 2, 2, 2, 2});
  CHECK(all[0].multiplicity == 2);
  CHECK(all[1].multiplicity == 1);
  CHECK(format_spectrum_entry(all[0]) == "[2, 2, 2, 2, 2, 2]^2");
  CHECK(format_spectrum_entry(all[1]) == "[4, 2, 2, 1, 2, 1]");
  CHECK(distance_four_spectrum(kRecords, 13).empty());
}

TEST_CASE("published spectrum fixtures parse") {
  CHECK(fixtures::read_spectrum(fixtures::fixture_dir() / "spectrum_p12.txt").size() == 9);
  CHECK(fixtures::read_spectrum(fixtures::fixture_dir() / "spectrum_p13.txt").size() == 44);
  CHECK(fixtures::read_spectrum(fixtures::fixture_dir() / "spectrum_p14.txt").size() == 86);
}

#pragma once

#include "micc/dwh_template.hpp"
#include "micc/ladder.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <regex>
#include <string>
#include <vector>

namespace fixtures {

// Genus 2, twelve intersections.
inline micc::Ladder f8() {
  return micc::Ladder({1, 6, 11, 4, 3, 2, 7, 0, 5, 9, 8, 7}, {0, 5, 10, 3, 2, 1, 6, 11, 4, 10, 9, 8});
}

// Genus 3, twenty-nine intersections.
inline micc::Ladder g3() {
  return micc::Ladder({1, 11, 3, 27, 8, 15, 7, 24, 0, 10, 2, 12, 4, 21, 19, 17, 24, 14, 6, 23, 28, 9, 16, 25, 13,
                       5, 20, 18, 16},
                      {0, 10, 2, 26, 7, 14, 6, 23, 28, 9, 1, 11, 3, 22, 20, 18, 25, 13, 5, 22, 27, 8, 15, 26, 12,
                       4, 21, 19, 17});
}

inline const std::vector<std::vector<int>> f8_faces{{0, 11, 7}, {0, 5, 6}, {1, 6}, {8, 1},  {2, 7},
                                                    {9, 10, 2}, {8, 3},    {9, 3, 4}, {4, 5}, {10, 11}};

inline const std::vector<std::vector<int>> f8_paths{{0, 7, 2, 9, 3, 8, 1, 6}, {2, 10, 11, 7},
                                                    {1, 6, 5, 4, 3, 8},       {0, 5, 4, 9, 2, 7},
                                                    {0, 5, 4, 9, 10, 11},     {0, 11, 10, 9, 3, 8, 1, 6}};

inline const std::vector<std::vector<int>> g3_paths{{0, 22, 5, 17, 24, 3, 20, 8}, {3, 24, 17, 7, 19, 26, 13}};

// Distance 4+ weight vectors at P = 12.
inline const std::vector<std::vector<int>> p12_distance_four{
    {2, 2, 2, 2, 2, 2}, {2, 4, 2, 0, 4, 0}, {4, 2, 4, 0, 2, 0}, {4, 0, 4, 2, 0, 2}, {4, 2, 2, 1, 2, 1},
    {2, 2, 4, 1, 2, 1}, {4, 0, 0, 2, 4, 2}, {0, 4, 0, 2, 4, 2}, {0, 4, 4, 2, 0, 2}};

inline std::filesystem::path data_dir() { return MICC_DATA_DIR; }
inline std::filesystem::path fixture_dir() { return MICC_FIXTURE_DIR; }

inline micc::ArcTemplate nonseparating() {
  return micc::load_template(data_dir() / "templates" / "nonseparating_genus2.dwh");
}
inline micc::ArcTemplate separating() {
  return micc::load_template(data_dir() / "templates" / "separating_genus2.dwh");
}

// Rotation to the smallest entry, for comparing cyclic tuples.
inline std::vector<int> rotate_to_min(std::vector<int> v) {
  std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
  return v;
}

// Smallest rotation over both directions.
inline std::vector<int> cyclic_canonical(const std::vector<int>& v) {
  std::vector<int> best = v;
  std::vector<int> r(v.rbegin(), v.rend());
  for (const std::vector<int>* seq : {&v, static_cast<const std::vector<int>*>(&r)}) {
    for (std::size_t i = 0; i < seq->size(); ++i) {
      std::vector<int> c(seq->begin() + static_cast<long>(i), seq->end());
      c.insert(c.end(), seq->begin(), seq->begin() + static_cast<long>(i));
      best = std::min(best, c);
    }
  }
  return best;
}

struct SpectrumLine {
  std::vector<int> weights;
  int multiplicity = 1;
};

// Reads "[a, b, ...]^m" lines.
inline std::vector<SpectrumLine> read_spectrum(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::vector<SpectrumLine> out;
  static const std::regex line_re(R"(\[([0-9, ]+)\](?:\^(\d+))?)");
  for (std::string line; std::getline(in, line);) {
    std::smatch m;
    if (line.starts_with("#") || !std::regex_search(line, m, line_re)) continue;
    out.push_back({micc::parse_row(m[1].str()), m[2].matched ? std::stoi(m[2].str()) : 1});
  }
  return out;
}

}  // namespace fixtures

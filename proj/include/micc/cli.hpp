#pragma once

#include "micc/ladder.hpp"

#include <json.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stop_token>
#include <string>
#include <string_view>
#include <vector>

namespace micc {

inline constexpr std::string_view kTopPrompt = "Input top identifications: ";
inline constexpr std::string_view kBottomPrompt = "Input bottom identifications: ";
inline constexpr std::string_view kCommandPrompt = "What would you like to calculate? ";
inline constexpr std::string_view kShearPrompt = "Would you like to shear this multi-curve? ";

inline constexpr std::string_view kVerbs[] = {"genus", "distance", "curves", "matrix", "faces", "perm"};

struct CommandOptions {
  std::optional<int> ambient_genus;
  std::size_t circuit_cap = 1'000'000;
  std::stop_token stop;
};

bool is_verb(std::string_view word);

// Structured result of one verb; text output is always rendered from it.
nlohmann::json command_payload(const Ladder& ladder, std::string_view verb, const CommandOptions& options);
std::string render_payload(const nlohmann::json& payload);

// Notices for stderr, e.g. bigons removed from the input.
std::vector<std::string> payload_warnings(const nlohmann::json& payload);

std::string help_text();

// Interactive loop; returns the process exit code.
int run_repl(std::istream& in, std::ostream& out, std::ostream& err, const CommandOptions& options);

// Full command line, including the REPL when no batch work is requested.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err,
            std::stop_token stop = {});

}  // namespace micc

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tsaudit/type_space.hpp"

namespace tsaudit::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "report.v1";

enum ExitCode : int { kOk = 0, kFinding = 1, kInput = 2, kInternal = 3 };

struct OutputOptions {
  bool json = false;
  bool decimal = false;
  bool timing = false;
  std::size_t max_states = kMaxStatesDefault;
};

/// One command's result on one file: the JSON report, its text rendering,
/// and the exit code. Either form is printed by the caller.
struct Report {
  Json json;
  std::string text;
  int exit_code = kOk;
};

struct BetRequest {
  std::string kind;                      // agreeable | weak | acceptable
  std::optional<std::string> verify_path;
};

struct PumpRequest {
  std::string level;                     // weak | universal | strong
  std::optional<std::string> prior;
};

struct SingleRequest {
  std::string prior;
  std::optional<std::string> player;
};

Report run_validate(const std::string& path, const OutputOptions& out);
Report run_classify(const std::string& path, const OutputOptions& out);
Report run_components(const std::string& path, const OutputOptions& out,
                      const std::optional<std::string>& players);
Report run_bet(const std::string& path, const OutputOptions& out, const BetRequest& req);
Report run_pump(const std::string& path, const OutputOptions& out, const PumpRequest& req);
Report run_single(const std::string& path, const OutputOptions& out, const SingleRequest& req);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

}  // namespace tsaudit::cli

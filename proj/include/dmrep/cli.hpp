#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace dmrep::cli {

struct VerdictLine {
  std::string name;
  bool pass = true;
  std::vector<std::string> witnesses;
};

enum class Status { kOk, kParseError, kInputError, kLimitExceeded };
std::string_view to_string(Status s);

struct Report {
  std::string command;
  Status status = Status::kOk;
  std::string message;
  std::vector<std::string> summary;
  std::vector<VerdictLine> verdicts;
  std::vector<std::string> notes;
  nlohmann::json data = nlohmann::json::object();
  std::vector<std::pair<std::string, double>> timings_ms;

  void verdict(std::string name, bool pass, std::vector<std::string> witnesses = {});
};

/// 0 all verdicts pass, 1 some verdict fails, 2 parse or input error,
/// 3 resource limit.
int exit_code(const Report& r);

/// Both renderings carry the same verdicts; witness lists are cut to
/// `witness_max` entries in each.
std::string render_human(const Report& r, std::size_t witness_max);
nlohmann::json render_json(const Report& r, std::size_t witness_max);

struct Options {
  std::string command;
  std::string file;
  bool json = false;
  std::optional<std::size_t> limit;
  std::uint64_t seed = 1;
  std::size_t witness_max = 10;
  std::string element;
  std::string spec;
  std::string property;
  std::size_t max_n = 4;
};

/// Runs one command on already loaded text (ignored by `search` without a
/// file). Never throws for input problems; they land in the report.
Report execute(const Options& opt, std::string_view text);

/// Full command line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dmrep::cli

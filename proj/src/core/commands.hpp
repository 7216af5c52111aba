#pragma once

// Command layer shared by the C API and the CLI: each command produces a
// report that renders as JSON, CSV or text.

#include "verify.hpp"

#include <json.hpp>

namespace superharm {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  nlohmann::ordered_json doc;
  Table table;
  std::string text;
  int exit_code = 0;
};

enum class Format { Json, Csv, Text };

struct CommandParams {
  int m = -1, n = -1, k = -1, kmax = -1;
  std::string poly;
  std::string grid;
  std::string suite;
  std::uint64_t seed = 20240601;
  bool timing = false;
};

const std::vector<std::string>& commandNames();
/// Throws UsageError, ParseError or DomainError.
Report runCommand(const std::string& command, const CommandParams& p);
std::string render(const Report& r, Format f);

nlohmann::ordered_json toJson(const ScaledScalar& s);
/// "num/den"
std::string csvRational(const Rational& q);

}  // namespace superharm

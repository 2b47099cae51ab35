#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "diracwm/rootdata.hpp"
#include "diracwm/wmod.hpp"

namespace diracwm::cli {

/// Config syntax or validation failure at a 1-based line and column (0 when
/// the problem is not tied to one position, e.g. a missing section).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

enum class Command { Describe, Cohomology, Dirac, Index, Pair, Verify };
std::string to_string(Command c);
std::optional<Command> parse_command(const std::string& s);

/// One [module NAME] section. Which optional fields are set depends on kind:
///   verma, simple_hw   lambda
///   cuspidal_sl2       mu0, mu1 (and root, center in rank 2)
///   dual-of            of
///   twist-of           of, gamma, x
///   induced            of, levi
struct ModuleSpec {
  std::string name;
  std::string kind;
  std::optional<Weight> lambda;
  std::optional<Rational> mu0, mu1, x;
  std::optional<int> root;                      // 1-based simple root
  std::optional<std::vector<Rational>> center;  // remaining fundamental coordinates
  std::optional<std::string> of;
  std::optional<std::vector<int>> gamma;  // simple-root coordinates
  std::optional<std::vector<int>> levi;   // 1-based simple roots
  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

struct CommandSpec {
  Command name = Command::Describe;
  std::string module;
  std::optional<std::string> other;      // pair, verify ep-index
  std::optional<std::string> direction;  // cohomology
  std::optional<std::string> suite;      // verify: ep-index | index | correspondence
  friend bool operator==(const CommandSpec&, const CommandSpec&) = default;
};

struct JobConfig {
  RootType algebra = RootType::A1;
  std::vector<int> levi;  // 1-based simple roots of the parabolic
  Weight window_base;
  int window_radius = 0;
  std::vector<ModuleSpec> modules;  // in declaration order
  CommandSpec command;
  friend bool operator==(const JobConfig& a, const JobConfig& b) {
    return a.algebra == b.algebra && a.levi == b.levi && a.window_base == b.window_base &&
           a.window_radius == b.window_radius && a.modules == b.modules && a.command == b.command;
  }
};

/// Sections [algebra], [parabolic], [window], [command] and one or more
/// [module NAME]; `key = value` lines; `#` starts a comment. Unknown sections
/// and keys, duplicates, missing keys and dangling module references are errors.
JobConfig parse_config(const std::string& text);
std::string render_config(const JobConfig& cfg);

using Value = std::variant<long long, bool, std::string>;

struct Record {
  std::optional<Weight> weight;
  std::vector<Value> values;  // one per Report::columns
};

struct Report {
  std::size_t rank = 0;
  bool weighted = false;            // records start with the weight coordinates w1..wr
  std::vector<std::string> columns;  // value columns
  std::vector<Record> records;
  bool verified = true;  // false when a verify command found a mismatch
};

/// Builds the modules, runs the command and returns records in output order
/// (weights sorted by root coordinates). `workers` bounds the thread count.
Report execute(const JobConfig& cfg, unsigned workers = 1);

enum class Format { Csv, Jsonl };
Format parse_format(const std::string& s);

std::string emit_report(const Report& r, Format f);

}  // namespace diracwm::cli

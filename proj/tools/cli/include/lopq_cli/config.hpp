#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "lopq/families.hpp"
#include "lopq/json_io.hpp"
#include "lopq/lattice.hpp"
#include "lopq/pearson.hpp"

namespace lopq::cli {

enum class Task { kAnalyze, kMoments, kTtrr, kRodrigues, kFamilyCheck };
enum class OutputFormat { kJson, kTable };

const char* to_string(Task task);
Task parse_task(const std::string& name);
OutputFormat parse_format(const std::string& name);

/// Invalid job description. Rendered as a single diagnostic line, exit 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FamilyPreset {
  std::string name;                       // "racah" or "askey-wilson"
  std::map<std::string, Scalar> params;   // sorted, so output order is stable
};

struct JobConfig {
  Task task = Task::kAnalyze;
  std::optional<Lattice> lattice;
  std::optional<PearsonPair> pair;
  std::optional<FamilyPreset> family;
  std::size_t max_n = 10;
  OutputFormat format = OutputFormat::kJson;
  bool oracle = false;
  std::size_t moment_degree = 12;
};

/// Checks max_n >= 1, exactly one of pair / family, a lattice for a pair,
/// no lattice next to a family. Throws ConfigError.
void validate(const JobConfig& config);

/// Lattice and pair the job runs on, resolved from the pair or the preset.
struct ResolvedJob {
  Lattice lattice;
  PearsonPair pair;
  std::optional<FamilyBundle> family;
};
ResolvedJob resolve(const JobConfig& config);

/// Builds a bundle from a preset. Throws ConfigError on unknown names,
/// unknown keys or missing parameters.
FamilyBundle make_family(const FamilyPreset& preset);

/// "a=1/2,b=1/3" -> {a: 1/2, b: 1/3}.
std::map<std::string, Scalar> parse_params(const std::string& text);
/// "a,b,c,d,e" -> PearsonPair.
PearsonPair parse_pair(const std::string& text);

/// Reads a JSON or TOML file (chosen by the .toml extension) into a Json value.
Json load_document(const std::string& path);

/// Merges a config document into `config`: keys task, max_n, format, oracle,
/// moment_degree and tables lattice, pair, family. Unknown keys are errors.
void apply_document(const Json& doc, JobConfig& config, bool& task_set);

}  // namespace lopq::cli

#include "lopq_cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "lopq/errors.hpp"
#include "lopq_cli/toml_lite.hpp"

namespace lopq::cli {

const char* to_string(Task task) {
  switch (task) {
    case Task::kAnalyze: return "analyze";
    case Task::kMoments: return "moments";
    case Task::kTtrr: return "ttrr";
    case Task::kRodrigues: return "rodrigues";
    case Task::kFamilyCheck: return "family-check";
  }
  return "?";
}

Task parse_task(const std::string& name) {
  for (Task t : {Task::kAnalyze, Task::kMoments, Task::kTtrr, Task::kRodrigues, Task::kFamilyCheck}) {
    if (name == to_string(t)) return t;
  }
  throw ConfigError("unknown task \"" + name + "\"");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "table") return OutputFormat::kTable;
  throw ConfigError("unknown format \"" + name + "\" (expected json or table)");
}

void validate(const JobConfig& config) {
  if (config.max_n < 1) throw ConfigError("max_n must be >= 1");
  if (config.pair.has_value() == config.family.has_value()) {
    throw ConfigError("exactly one of a Pearson pair or a family preset is required");
  }
  if (config.pair && !config.lattice) throw ConfigError("a Pearson pair needs a lattice");
  if (config.family && config.lattice) {
    throw ConfigError("a family preset fixes its own lattice; drop the lattice");
  }
  if (config.task == Task::kFamilyCheck && !config.family) {
    throw ConfigError("family-check needs a family preset");
  }
}

namespace {

Scalar take(std::map<std::string, Scalar>& params, const std::string& family, const char* key) {
  auto it = params.find(key);
  if (it == params.end()) throw ConfigError(family + ": missing parameter \"" + key + "\"");
  Scalar v = it->second;
  params.erase(it);
  return v;
}

Scalar take_or(std::map<std::string, Scalar>& params, const char* key, Scalar fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  Scalar v = it->second;
  params.erase(it);
  return v;
}

void reject_leftovers(const std::map<std::string, Scalar>& params, const std::string& family) {
  if (!params.empty()) {
    throw ConfigError(family + ": unknown parameter \"" + params.begin()->first + "\"");
  }
}

}  // namespace

FamilyBundle make_family(const FamilyPreset& preset) {
  auto params = preset.params;
  if (preset.name == "racah") {
    RacahParams p{take(params, preset.name, "a"), take(params, preset.name, "b"),
                  take(params, preset.name, "c"), take(params, preset.name, "d")};
    reject_leftovers(params, preset.name);
    return racah_bundle(p);
  }
  if (preset.name == "askey-wilson") {
    AWParams p;
    p.a = take(params, preset.name, "a");
    p.b = take(params, preset.name, "b");
    p.c = take(params, preset.name, "c");
    p.d = take(params, preset.name, "d");
    p.p = take(params, preset.name, "p");
    p.r = take_or(params, "r", 1);
    p.c3 = take_or(params, "c3", 0);
    reject_leftovers(params, preset.name);
    try {
      return aw_bundle(p);
    } catch (const LatticeError& e) {
      throw ConfigError(std::string("askey-wilson: ") + e.what());
    }
  }
  throw ConfigError("unknown family preset \"" + preset.name + "\" (expected racah or askey-wilson)");
}

ResolvedJob resolve(const JobConfig& config) {
  validate(config);
  if (config.family) {
    FamilyBundle bundle = make_family(*config.family);
    return ResolvedJob{bundle.lattice, bundle.pair, std::move(bundle)};
  }
  return ResolvedJob{*config.lattice, *config.pair, std::nullopt};
}

namespace {

Scalar parse_rational(const std::string& text, const std::string& what) {
  try {
    return parse_scalar(text);
  } catch (const std::exception&) {
    throw ConfigError("malformed rational \"" + text + "\" in " + what);
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

std::map<std::string, Scalar> parse_params(const std::string& text) {
  std::map<std::string, Scalar> out;
  if (text.empty()) return out;
  for (const std::string& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ConfigError("malformed parameter \"" + item + "\" (expected key=value)");
    }
    const std::string key = item.substr(0, eq);
    if (out.count(key)) throw ConfigError("duplicate parameter \"" + key + "\"");
    out.emplace(key, parse_rational(item.substr(eq + 1), "--params"));
  }
  return out;
}

PearsonPair parse_pair(const std::string& text) {
  const auto items = split(text, ',');
  if (items.size() != 5) throw ConfigError("--pair expects five rationals a,b,c,d,e");
  Scalar v[5];
  for (int i = 0; i < 5; ++i) v[i] = parse_rational(items[i], "--pair");
  try {
    return PearsonPair::make(v[0], v[1], v[2], v[3], v[4]);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

Json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const bool toml = path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0;
  try {
    return toml ? parse_toml(text) : Json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

namespace {

std::size_t as_index(const Json& j, const char* key) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ConfigError(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return static_cast<std::size_t>(j.get<long long>());
}

FamilyPreset family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("name") || !j.at("name").is_string()) {
    throw ConfigError("family: expected a table with a string \"name\"");
  }
  FamilyPreset preset{j.at("name").get<std::string>(), {}};
  for (const auto& [key, value] : j.items()) {
    if (key == "name") continue;
    try {
      preset.params.emplace(key, scalar_from_json(value));
    } catch (const std::exception&) {
      throw ConfigError("family: malformed rational for \"" + key + "\"");
    }
  }
  return preset;
}

}  // namespace

void apply_document(const Json& doc, JobConfig& config, bool& task_set) {
  if (!doc.is_object()) throw ConfigError("config: expected a top-level object");
  for (const auto& [key, value] : doc.items()) {
    try {
      if (key == "task") {
        config.task = parse_task(value.get<std::string>());
        task_set = true;
      } else if (key == "max_n") {
        config.max_n = as_index(value, "max_n");
      } else if (key == "moment_degree") {
        config.moment_degree = as_index(value, "moment_degree");
      } else if (key == "format") {
        config.format = parse_format(value.get<std::string>());
      } else if (key == "oracle") {
        config.oracle = value.get<bool>();
      } else if (key == "lattice") {
        config.lattice = lattice_from_json(value);
      } else if (key == "pair") {
        config.pair = pair_from_json(value);
      } else if (key == "family") {
        config.family = family_from_json(value);
      } else if (key == "schema") {
        if (value != kSchema) throw ConfigError("config: unsupported schema " + value.dump());
      } else {
        throw ConfigError("config: unknown key \"" + key + "\"");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError("config: \"" + key + "\": " + e.what());
    }
  }
}

}  // namespace lopq::cli

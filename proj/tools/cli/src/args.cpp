#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <string>

#include "lopq_cli/run.hpp"

namespace lopq::cli {

namespace {

Lattice lattice_from_file(const std::string& path) {
  const Json doc = load_document(path);
  try {
    return lattice_from_json(doc.contains("lattice") ? doc.at("lattice") : doc);
  } catch (const std::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

}  // namespace

bool parse_args(const std::vector<std::string>& args, JobConfig& config, std::ostream& out) {
  CLI::App app{"Classical orthogonal polynomials on lattices, in exact arithmetic.", "lattice-opq"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::string config_file;
  std::string lattice_file;
  std::string pair_text;
  std::string family_name;
  std::string params_text;
  std::size_t max_n = 0;
  std::size_t moment_degree = 0;
  std::string format;
  bool oracle = false;

  auto* o_config = app.add_option("--config", config_file, "Job file (JSON, or TOML by .toml extension)");
  auto* o_lattice = app.add_option("--lattice-file", lattice_file, "Lattice description (JSON or TOML)");
  auto* o_pair = app.add_option("--pair", pair_text, "Pearson pair a,b,c,d,e of phi = az^2+bz+c, psi = dz+e");
  auto* o_family = app.add_option("--family", family_name, "Family preset: racah | askey-wilson");
  auto* o_params = app.add_option("--params", params_text, "Preset parameters, e.g. a=1/2,b=1/3,c=1/4,d=1/5");
  auto* o_max_n = app.add_option("--max-n", max_n, "Largest index n (>= 1)");
  auto* o_format = app.add_option("--format", format, "Output format: json | table");
  auto* o_oracle = app.add_flag("--oracle", oracle, "ttrr: also run the moment/Gram oracle and diff");
  auto* o_degree = app.add_option("--moment-degree", moment_degree, "Highest moment index M (default 12)");

  std::vector<CLI::App*> subs;
  for (Task t : {Task::kAnalyze, Task::kMoments, Task::kTtrr, Task::kRodrigues, Task::kFamilyCheck}) {
    subs.push_back(app.add_subcommand(to_string(t)));
  }
  subs[0]->description("Admissibility and regularity report");
  subs[1]->description("Moments u_0..u_M of the Pearson functional");
  subs[2]->description("Recurrence coefficients B_n, C_n from the theorem formulas");
  subs[3]->description("Rodrigues formula check on moments for n <= max_n");
  subs[4]->description("Theorem coefficients against a family's closed forms");

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return false;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return false;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  bool task_set = false;
  if (o_config->count() > 0) apply_document(load_document(config_file), config, task_set);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) {
      const Task t = static_cast<Task>(i);
      if (task_set && t != config.task) {
        throw ConfigError(std::string("task \"") + to_string(t) + "\" contradicts the config file's \"" +
                          to_string(config.task) + "\"");
      }
      config.task = t;
      task_set = true;
    }
  }
  if (!task_set) throw ConfigError("no task given (analyze, moments, ttrr, rodrigues, family-check)");

  if (o_lattice->count() > 0) config.lattice = lattice_from_file(lattice_file);
  if (o_pair->count() > 0) {
    config.pair = parse_pair(pair_text);
    config.family.reset();
  }
  if (o_family->count() > 0) {
    config.family = FamilyPreset{family_name, parse_params(params_text)};
    config.pair.reset();
  } else if (o_params->count() > 0) {
    if (!config.family) throw ConfigError("--params needs --family");
    config.family->params = parse_params(params_text);
  }
  if (o_max_n->count() > 0) config.max_n = max_n;
  if (o_degree->count() > 0) config.moment_degree = moment_degree;
  if (o_format->count() > 0) config.format = parse_format(format);
  if (o_oracle->count() > 0) config.oracle = oracle;
  validate(config);
  return true;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobConfig config;
  try {
    if (!parse_args(args, config, out)) return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return run(config, out, err);
}

}  // namespace lopq::cli

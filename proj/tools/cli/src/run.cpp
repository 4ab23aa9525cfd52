#include "lopq_cli/run.hpp"

#include <exception>
#include <string>
#include <utility>

#include "lopq/classical.hpp"
#include "lopq/errors.hpp"
#include "lopq/moments.hpp"
#include "lopq_cli/table.hpp"

namespace lopq::cli {

namespace {

Json header(const JobConfig& config, const ResolvedJob& job) {
  Json out;
  out["schema"] = kSchema;
  out["task"] = to_string(config.task);
  out["lattice"] = to_json(job.lattice);
  out["pair"] = to_json(job.pair);
  if (config.family) {
    Json fam;
    fam["name"] = config.family->name;
    Json params;
    for (const auto& [key, value] : config.family->params) params[key] = to_json(value);
    fam["params"] = std::move(params);
    out["family"] = std::move(fam);
  } else {
    out["family"] = nullptr;
  }
  out["max_n"] = config.max_n;
  return out;
}

Json diff_entry(const char* coeff, std::size_t n, const char* lhs_name, const Scalar& lhs,
                const char* rhs_name, const Scalar& rhs) {
  Json d;
  d["coeff"] = coeff;
  d["n"] = n;
  d[lhs_name] = to_json(lhs);
  d[rhs_name] = to_json(rhs);
  return d;
}

Json d_zero_failure(long n) { return to_json(Failure{n, FailureKind::kDnZero}); }

JobResult run_analyze(const JobConfig& config, const ResolvedJob& job, Json report) {
  const RegularityReport reg = regularity(job.lattice, job.pair, config.max_n);
  report["regularity"] = to_json(reg);
  return {reg.regular() ? kExitOk : kExitIrregular, std::move(report)};
}

JobResult run_moments(const JobConfig& config, const ResolvedJob& job, Json report) {
  report["moment_degree"] = config.moment_degree;
  OperatorTable ops(job.lattice);
  try {
    report["moments"] = to_json(pearson_moments(ops, job.pair, config.moment_degree));
    report["first_failure"] = nullptr;
    return {kExitOk, std::move(report)};
  } catch (const AdmissibilityError& e) {
    // u_0..u_n are still determined when d_n is the first zero.
    report["moments"] = to_json(pearson_moments(ops, job.pair, static_cast<std::size_t>(e.n())));
    report["first_failure"] = d_zero_failure(e.n());
    return {kExitIrregular, std::move(report)};
  }
}

JobResult run_ttrr(const JobConfig& config, const ResolvedJob& job, Json report) {
  const std::size_t N = config.max_n + 1;  // B_0..B_max_n, C_1..C_max_n
  const RegularityReport reg = regularity(job.lattice, job.pair, N);
  report["regularity"] = to_json(reg);
  if (!reg.regular()) {
    report["ttrr"] = nullptr;
    return {kExitIrregular, std::move(report)};
  }
  const TTRRCoeffs theorem = ttrr_coeffs(job.lattice, job.pair, N);
  report["ttrr"] = to_json(theorem);
  if (!config.oracle) return {kExitOk, std::move(report)};

  const MomentSeq u = pearson_moments(job.lattice, job.pair, 2 * N - 1);
  Json diff = Json::array();
  try {
    const TTRRCoeffs oracle = ttrr_oracle(u);
    report["oracle"] = to_json(oracle);
    for (std::size_t n = 0; n < N; ++n) {
      if (theorem.B[n] != oracle.B[n]) diff.push_back(diff_entry("B", n, "theorem", theorem.B[n], "oracle", oracle.B[n]));
    }
    for (std::size_t n = 1; n < N; ++n) {
      if (theorem.c_at(n) != oracle.c_at(n)) {
        diff.push_back(diff_entry("C", n, "theorem", theorem.c_at(n), "oracle", oracle.c_at(n)));
      }
    }
  } catch (const RegularityBreakError& e) {
    Json brk;
    brk["regularity_break"] = e.n();
    report["oracle"] = std::move(brk);
    diff.push_back(Json{{"coeff", "oracle"}, {"n", e.n()}});
  }
  const bool clean = diff.empty();
  report["diff"] = std::move(diff);
  return {clean ? kExitOk : kExitError, std::move(report)};
}

JobResult run_rodrigues(const JobConfig& config, const ResolvedJob& job, Json report) {
  report["moment_degree"] = config.moment_degree;
  Json verdicts = Json::array();
  bool all_equal = true;
  try {
    for (std::size_t n = 0; n <= config.max_n; ++n) {
      const RodriguesVerdict v = rodrigues_check(job.lattice, job.pair, n, config.moment_degree);
      Json j = to_json(v);
      j.erase("lhs");
      j.erase("rhs");
      verdicts.push_back(std::move(j));
      all_equal = all_equal && v.equal;
    }
  } catch (const AdmissibilityError& e) {
    report["verdicts"] = std::move(verdicts);
    report["first_failure"] = d_zero_failure(e.n());
    return {kExitIrregular, std::move(report)};
  }
  report["verdicts"] = std::move(verdicts);
  report["first_failure"] = nullptr;
  return {all_equal ? kExitOk : kExitError, std::move(report)};
}

JobResult run_family_check(const JobConfig& config, const ResolvedJob& job, Json report) {
  const FamilyBundle& family = *job.family;
  const std::size_t N = config.max_n + 1;
  const RegularityReport reg = regularity(job.lattice, job.pair, N);
  report["regularity"] = to_json(reg);
  if (!reg.regular()) return {kExitIrregular, std::move(report)};

  const TTRRCoeffs theorem = ttrr_coeffs(job.lattice, job.pair, N);
  report["theorem"] = to_json(theorem);
  Json closed;
  Json diff = Json::array();
  try {
    Json b = Json::array();
    for (std::size_t n = 0; n < N; ++n) {
      const Scalar v = family.closed_b(n);
      b.push_back(to_json(v));
      if (v != theorem.B[n]) diff.push_back(diff_entry("B", n, "theorem", theorem.B[n], "closed", v));
    }
    closed["B"] = std::move(b);
  } catch (const std::domain_error& e) {
    closed["B"] = std::string("unavailable: ") + e.what();
  }
  Json c = Json::array();
  for (std::size_t n = 1; n < N; ++n) {
    const Scalar v = family.closed_c(n);
    c.push_back(to_json(v));
    if (v != theorem.c_at(n)) diff.push_back(diff_entry("C", n, "theorem", theorem.c_at(n), "closed", v));
  }
  closed["C"] = std::move(c);
  report["closed"] = std::move(closed);
  const bool clean = diff.empty();
  report["diff"] = std::move(diff);
  return {clean ? kExitOk : kExitError, std::move(report)};
}

}  // namespace

JobResult execute(const JobConfig& config) {
  const ResolvedJob job = resolve(config);
  Json report = header(config, job);
  switch (config.task) {
    case Task::kAnalyze: return run_analyze(config, job, std::move(report));
    case Task::kMoments: return run_moments(config, job, std::move(report));
    case Task::kTtrr: return run_ttrr(config, job, std::move(report));
    case Task::kRodrigues: return run_rodrigues(config, job, std::move(report));
    case Task::kFamilyCheck: return run_family_check(config, job, std::move(report));
  }
  throw ConfigError("unknown task");
}

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  JobResult result;
  try {
    result = execute(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  if (config.format == OutputFormat::kJson) {
    out << result.report.dump(2) << '\n';
  } else {
    render_table(result.report, out);
  }
  return result.exit_code;
}

namespace {

std::string cell(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

std::string at_or_dash(const Json& arr, std::size_t i) {
  return (arr.is_array() && i < arr.size()) ? cell(arr[i]) : "-";
}

void print_pair_line(const Json& report, std::ostream& out) {
  const Json& lat = report["lattice"];
  out << "lattice: " << cell(lat["kind"]);
  for (const auto& [key, value] : lat.items()) {
    if (key != "kind" && key != "type") out << "  " << key << "=" << cell(value);
  }
  out << "\npair:   ";
  for (const auto& [key, value] : report["pair"].items()) out << "  " << key << "=" << cell(value);
  out << '\n';
  if (!report["family"].is_null()) out << "family:   " << cell(report["family"]["name"]) << '\n';
}

void print_regularity(const Json& reg, std::ostream& out) {
  out << "admissible_up_to: " << cell(reg["admissible_up_to"])
      << "  regular_up_to: " << cell(reg["regular_up_to"]);
  if (!reg["first_failure"].is_null()) {
    out << "  first_failure: n=" << cell(reg["first_failure"]["n"]) << " "
        << cell(reg["first_failure"]["kind"]);
  }
  out << "\n\n";
  Table t({"n", "d_n", "e_n", "phi^[n](point)"});
  const Json& d = reg["d_seq"];
  for (std::size_t n = 0; n + 1 < d.size(); ++n) {
    t.add_row({std::to_string(n), cell(d[n + 1]), at_or_dash(reg["e_seq"], n),
               at_or_dash(reg["phi_values"], n)});
  }
  t.print(out);
}

void print_ttrr(const Json& ttrr, std::ostream& out, const char* label) {
  out << '\n' << label << ":\n";
  Table t({"n", "B_n", "C_n"});
  const Json& b = ttrr["B"];
  for (std::size_t n = 0; n < b.size(); ++n) {
    t.add_row({std::to_string(n), cell(b[n]), n == 0 ? "-" : at_or_dash(ttrr["C"], n - 1)});
  }
  t.print(out);
}

void print_diff(const Json& diff, std::ostream& out) {
  out << "\ndiff: " << (diff.empty() ? "none" : std::to_string(diff.size()) + " mismatches") << '\n';
  for (const auto& d : diff) out << "  " << d.dump() << '\n';
}

}  // namespace

void render_table(const Json& report, std::ostream& out) {
  const std::string task = report["task"].get<std::string>();
  out << "task: " << task << '\n';
  print_pair_line(report, out);
  out << '\n';
  if (report.contains("regularity")) print_regularity(report["regularity"], out);
  if (task == "moments") {
    Table t({"n", "u_n"});
    const Json& u = report["moments"];
    for (std::size_t n = 0; n < u.size(); ++n) t.add_row({std::to_string(n), cell(u[n])});
    t.print(out);
    if (!report["first_failure"].is_null()) {
      out << "first_failure: n=" << cell(report["first_failure"]["n"]) << " d_n_zero\n";
    }
  } else if (task == "ttrr") {
    if (report.contains("ttrr") && !report["ttrr"].is_null()) print_ttrr(report["ttrr"], out, "theorem");
    if (report.contains("oracle") && report["oracle"].contains("B")) print_ttrr(report["oracle"], out, "oracle");
    if (report.contains("diff")) print_diff(report["diff"], out);
  } else if (task == "rodrigues") {
    Table t({"n", "M", "equal", "first_mismatch"});
    for (const auto& v : report["verdicts"]) {
      t.add_row({cell(v["n"]), cell(v["M"]), cell(v["equal"]), cell(v["first_mismatch"])});
    }
    t.print(out);
    if (!report["first_failure"].is_null()) {
      out << "first_failure: n=" << cell(report["first_failure"]["n"]) << " d_n_zero\n";
    }
  } else if (task == "family-check" && report.contains("theorem")) {
    out << '\n';
    Table t({"n", "B_n theorem", "B_n closed", "C_n theorem", "C_n closed"});
    const Json& tb = report["theorem"]["B"];
    const Json& cb = report["closed"]["B"];
    for (std::size_t n = 0; n < tb.size(); ++n) {
      t.add_row({std::to_string(n), cell(tb[n]), cb.is_array() ? cell(cb[n]) : "-",
                 n == 0 ? "-" : at_or_dash(report["theorem"]["C"], n - 1),
                 n == 0 ? "-" : at_or_dash(report["closed"]["C"], n - 1)});
    }
    t.print(out);
    if (cb.is_string()) out << "closed B: " << cb.get<std::string>() << '\n';
    print_diff(report["diff"], out);
  }
}

}  // namespace lopq::cli

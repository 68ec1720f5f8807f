// cwwkit: evaluate student strategies from linguistic feedback.
//
//   cwwkit codebook validate [--codebook FILE] [--tolerance 0.05] [--grid N]
//   cwwkit evaluate --feedback FILE [--methods m1,m2] [--format table|delimited|structured]
//   cwwkit rank     --feedback FILE --method NAME
//   cwwkit compare  --feedback FILE            (evaluate + uniqueness summary)
//
// Exit status: 0 success, 1 usage/configuration, 2 data/validation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cwwkit/cwwkit.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string codebook_path;
  std::string feedback_path;
  std::vector<std::string> methods{"extension_principle", "symbolic", "two_tuple", "perceptual"};
  std::string method;
  std::size_t grid = cwwkit::it2::DiscretizationGrid::kDefaultSamples;
  std::string format = "table";
  std::string out_path;
  bool verbose_precision = false;
  std::string lwa = "exact";
  double tolerance = 0.05;
};

struct LoadedCodebook {
  cwwkit::Codebook codebook;
  std::string id;
};

LoadedCodebook load_codebook(const Config& cfg, const cwwkit::ParameterSchema& schema) {
  std::string path = cfg.codebook_path;
  if (path.empty()) {
    if (const char* env = std::getenv("CWWKIT_CODEBOOK")) path = env;
  }
  if (path.empty()) return {cwwkit::default_codebook(schema), "builtin"};
  return {cwwkit::load_codebook_file(path, schema), path};
}

cwwkit::FeedbackTable load_feedback(const Config& cfg, const cwwkit::ParameterSchema& schema) {
  if (cfg.feedback_path.empty()) throw UsageError("--feedback is required");
  std::ifstream in(cfg.feedback_path);
  if (!in) throw cwwkit::IoError("cannot open feedback file '" + cfg.feedback_path + "'");
  return cwwkit::read_feedback(in, schema);
}

std::vector<cwwkit::Method> parse_methods(const std::vector<std::string>& names) {
  if (names.empty()) throw UsageError("--methods needs at least one method");
  std::vector<cwwkit::Method> methods;
  for (const auto& name : names) {
    const auto m = cwwkit::parse_method(name);
    if (!m) throw UsageError("unknown method '" + name + "'");
    if (std::find(methods.begin(), methods.end(), *m) == methods.end()) methods.push_back(*m);
  }
  return methods;
}

cwwkit::EvaluationOptions make_options(const Config& cfg) {
  cwwkit::EvaluationOptions options;
  if (cfg.grid < 3) throw UsageError("--grid needs at least 3 samples");
  options.grid = cwwkit::it2::DiscretizationGrid(0.0, 10.0, cfg.grid);
  if (cfg.lwa == "exact") {
    options.lwa_mode = cwwkit::LwaMode::exact;
  } else if (cfg.lwa == "parameterwise") {
    options.lwa_mode = cwwkit::LwaMode::parameterwise;
  } else {
    throw UsageError("--lwa must be 'exact' or 'parameterwise'");
  }
  return options;
}

/// Writes to --out when given, otherwise stdout.
template <typename Fn>
void emit(const Config& cfg, Fn&& write) {
  if (cfg.out_path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw cwwkit::IoError("cannot write '" + cfg.out_path + "'");
  write(out);
}

bool any_failures(const cwwkit::EvaluationReport& report) {
  for (const auto& row : report.rows) {
    for (const auto& cell : row.cells) {
      if (!cell.ok()) return true;
    }
  }
  return false;
}

cwwkit::EvaluationReport run_evaluation(const Config& cfg, const std::vector<cwwkit::Method>& methods) {
  const auto schema = cwwkit::build_default_schema();
  const auto options = make_options(cfg);
  const auto table = load_feedback(cfg, schema);
  const auto cb = load_codebook(cfg, schema);
  if (cb.codebook.nonstandard_domain()) {
    std::cerr << "warning: codebook declares a non-standard domain\n";
  }
  return cwwkit::evaluate_batch(table, methods, &cb.codebook, schema, options, cb.id);
}

void write_report(std::ostream& out, const Config& cfg, const cwwkit::EvaluationReport& report,
                  const cwwkit::UniquenessSummary* uniqueness) {
  const auto format = cwwkit::parse_report_format(cfg.format);
  switch (*format) {
    case cwwkit::ReportFormat::table:
      cwwkit::write_table(out, report, cfg.verbose_precision);
      if (uniqueness) {
        out << '\n';
        cwwkit::write_uniqueness(out, *uniqueness);
      }
      break;
    case cwwkit::ReportFormat::delimited:
      cwwkit::write_delimited(out, report, cfg.verbose_precision);
      if (uniqueness) {
        out << '\n';
        cwwkit::write_uniqueness(out, *uniqueness);
      }
      break;
    case cwwkit::ReportFormat::structured: {
      auto j = cwwkit::to_json(report, cfg.verbose_precision);
      if (uniqueness) j["uniqueness"] = cwwkit::to_json(*uniqueness);
      out << j.dump(2) << '\n';
      break;
    }
  }
}

int cmd_codebook_validate(const Config& cfg) {
  const auto schema = cwwkit::build_default_schema();
  if (cfg.grid < 3) throw UsageError("--grid needs at least 3 samples");
  const auto cb = load_codebook(cfg, schema);
  const cwwkit::it2::DiscretizationGrid grid(cb.codebook.domain_min(), cb.codebook.domain_max(),
                                             cfg.grid);
  const auto report = cwwkit::verify_stored_centroids(cb.codebook, grid, cfg.tolerance);
  emit(cfg, [&](std::ostream& out) {
    out << "# codebook " << cb.id << ": " << cb.codebook.entries().size()
        << " entries, FOU invariants OK\n";
    if (cb.codebook.nonstandard_domain()) {
      out << "# warning: non-standard domain [" << cb.codebook.domain_min() << ", "
          << cb.codebook.domain_max() << "]\n";
    }
    cwwkit::write_verification(out, report);
  });
  return report.passed() ? kExitOk : kExitData;
}

int cmd_evaluate(const Config& cfg, bool with_uniqueness) {
  if (!cwwkit::parse_report_format(cfg.format)) throw UsageError("unknown --format '" + cfg.format + "'");
  const auto methods = parse_methods(cfg.methods);
  const auto report = run_evaluation(cfg, methods);
  std::optional<cwwkit::UniquenessSummary> uniqueness;
  if (with_uniqueness) uniqueness = cwwkit::uniqueness_report(report, cfg.verbose_precision);
  emit(cfg, [&](std::ostream& out) {
    write_report(out, cfg, report, uniqueness ? &*uniqueness : nullptr);
  });
  return any_failures(report) ? kExitData : kExitOk;
}

int cmd_rank(const Config& cfg) {
  const auto method = cwwkit::parse_method(cfg.method);
  if (!method) throw UsageError("unknown method '" + cfg.method + "'");
  const std::vector<cwwkit::Method> methods{*method};
  const auto report = run_evaluation(cfg, methods);
  const auto ranking = cwwkit::rank_students(report, *method);
  emit(cfg, [&](std::ostream& out) {
    for (std::size_t k = 0; k < ranking.size(); ++k) {
      out << fmt::format("{} {} {}\n", k + 1, ranking[k].student_id,
                         cfg.verbose_precision ? fmt::format("{:.6f}", ranking[k].score)
                                               : fmt::format("{:.6g}", ranking[k].score));
    }
  });
  return any_failures(report) ? kExitData : kExitOk;
}

void add_common(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--codebook", cfg.codebook_path,
                  "Codebook file (default: $CWWKIT_CODEBOOK, else the built-in codebook)");
  cmd->add_option("--grid", cfg.grid, "Samples on the [0,10] domain")->capture_default_str();
  cmd->add_option("--out", cfg.out_path, "Write output to FILE instead of stdout");
  cmd->add_flag("--verbose-precision", cfg.verbose_precision,
                "Show unrounded perceptual scores and centroids");
}

void add_evaluation(CLI::App* cmd, Config& cfg) {
  add_common(cmd, cfg);
  cmd->add_option("--feedback", cfg.feedback_path, "Feedback batch file")->required();
  cmd->add_option("--lwa", cfg.lwa, "Perceptual aggregation: exact | parameterwise")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computing-with-words evaluation of student strategies"};
  app.require_subcommand(1);
  Config cfg;

  auto* codebook = app.add_subcommand("codebook", "Codebook utilities");
  codebook->require_subcommand(1);
  auto* validate = codebook->add_subcommand("validate", "Check FOUs and recompute centroids");
  add_common(validate, cfg);
  validate->add_option("--tolerance", cfg.tolerance, "Allowed centroid deviation")
      ->capture_default_str();

  auto* evaluate = app.add_subcommand("evaluate", "Evaluate a feedback batch");
  add_evaluation(evaluate, cfg);
  evaluate->add_option("--methods", cfg.methods, "Comma-separated methods")->delimiter(',');
  evaluate->add_option("--format", cfg.format, "table | delimited | structured")
      ->capture_default_str();

  auto* compare = app.add_subcommand("compare", "Evaluate and summarise duplicate recommendations");
  add_evaluation(compare, cfg);
  compare->add_option("--methods", cfg.methods, "Comma-separated methods")->delimiter(',');
  compare->add_option("--format", cfg.format, "table | delimited | structured")
      ->capture_default_str();

  auto* rank = app.add_subcommand("rank", "Rank students by one method's score");
  add_evaluation(rank, cfg);
  rank->add_option("--method", cfg.method, "Method to rank by")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_codebook_validate(cfg);
    if (evaluate->parsed()) return cmd_evaluate(cfg, false);
    if (compare->parsed()) return cmd_evaluate(cfg, true);
    if (rank->parsed()) return cmd_rank(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cwwkit::IoError& e) {
    std::cerr << "file error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cwwkit::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cwwkit::Error& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

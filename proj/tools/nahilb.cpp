// Command-line front end: parses flags into a JobSpec and prints JSON.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>

#include "nahilb/error.hpp"
#include "nahilb/job.hpp"

namespace {

// Accepts "key=value" tokens as "--key=value".
std::vector<std::string> normalize_args(int argc, char** argv) {
  static const std::regex pair_token(R"(^(n|dims|space|method|class|q|seed|samples|criteria|chain|config)=.*)");
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (std::regex_match(a, pair_token)) a = "--" + a;
    args.push_back(a);
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtual integrals on nested Hilbert schemes of points"};
  app.require_subcommand(1);
  nahilb::JobSpec job;
  std::string dims_text, criteria_text, config_path;
  bool classify = false;  // enumerate always reports admissible/nilfil; kept for command-line compatibility

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"enumerate", "list torus-fixed nested partitions"},
      {"classify", "predicates and weight classes of one nested partition"},
      {"contribution", "per-fixed-point localization contributions"},
      {"integrate", "virtual integral by localization or iterated residue"},
      {"compare", "both methods on the nil-filtered locus"},
      {"verify", "run acceptance criteria"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "JSON file with job fields");
    sub->add_option("--n", job.n, "ambient dimension");
    sub->add_option("--dims", dims_text, "layer sizes d_0,...,d_r");
    sub->add_option("--space", job.space, "nhilb or nilfil");
    sub->add_option("--method", job.method, "localization or residue");
    sub->add_option("--class", job.class_text, "tautological class, e.g. c2^dual^3");
    sub->add_option("--q", job.q, "number of theta variables");
    sub->add_option("--chain", job.chain, "nested partition as JSON");
    sub->add_option("--seed", job.seed, "seed for sampled checks");
    sub->add_option("--samples", job.samples, "number of sampled points");
    sub->add_option("--criteria", criteria_text, "comma-separated criterion ids");
    sub->add_flag("--cy", job.cy, "restrict to s_n = -(s_1 + ... + s_{n-1})");
    sub->add_flag("--expand", job.expand, "include the expanded polynomial");
    if (name == "enumerate") sub->add_flag("--classify", classify, "include admissible/nilfil flags per chain");
    sub->callback([&job, name = name] { job.command = name; });
  }

  std::vector<std::string> args = normalize_args(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (!dims_text.empty()) job.dims = nahilb::parse_int_list(dims_text);
    if (!criteria_text.empty()) job.criteria = nahilb::parse_int_list(criteria_text);
    job.limits = nahilb::limits_from_environment(job.limits);
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw nahilb::Error(nahilb::ErrorKind::InvalidInput, "cannot read " + config_path);
      job = nahilb::job_from_json(nahilb::Json::parse(in), job);
    }
  } catch (const std::exception& e) {
    std::cerr << nahilb::Json{{"error", "InvalidInput"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return nahilb::run_job(job, std::cout, std::cerr);
}

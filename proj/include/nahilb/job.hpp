#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nahilb/json_io.hpp"

namespace nahilb {

constexpr int kHardMaxPoints = 14;

struct JobSpec {
  std::string command;  // enumerate | classify | contribution | integrate | compare | verify
  int n = 0;
  std::vector<int> dims;
  std::string space = "nhilb";
  std::string method = "localization";
  std::string class_text = "1";
  std::optional<int> q;
  bool cy = false;
  bool expand = false;
  std::uint64_t seed = 20240607;
  int samples = 20;
  std::vector<int> criteria;
  std::string chain;  // NestedPartition JSON
  Limits limits;
};

// Fields of a config object override the defaults; unknown keys are rejected.
JobSpec job_from_json(const Json& config, JobSpec base = {});
// Applies NAHILB_MAX_POINTS, capped at kHardMaxPoints.
Limits limits_from_environment(Limits base);
std::vector<int> parse_int_list(const std::string& text);

// Writes JSON to out. Exit codes: 0 success, 2 a verified inequality, 1 error.
int run_job(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace nahilb

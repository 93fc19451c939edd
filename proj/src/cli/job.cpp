#include "nahilb/job.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "nahilb/acceptance.hpp"
#include "nahilb/class_spec.hpp"
#include "nahilb/error.hpp"

namespace nahilb {

namespace {

int total(const std::vector<int>& dims) { return std::accumulate(dims.begin(), dims.end(), 0); }

void require_shape(const JobSpec& job) {
  if (job.n < 1) throw Error(ErrorKind::InvalidInput, "n must be given and positive");
  if (job.dims.empty()) throw Error(ErrorKind::InvalidInput, "dims must be given");
}

TautClass job_class(const JobSpec& job) {
  const int q = job.q.value_or(max_theta_index(job.class_text));
  return parse_class_spec(job.class_text, q, total(job.dims));
}

Json value_json(const FactoredRational& v, bool expand) {
  Json j = {{"text", v.to_string()}, {"factored", encode(v)}};
  if (expand && !v.has_denominator()) j["expanded"] = encode(v.expand());
  return j;
}

std::vector<NestedPartition> job_points(const JobSpec& job, Space space) {
  if (!job.chain.empty()) {
    NestedPartition lambda = decode_nested(Json::parse(job.chain));
    return {lambda};
  }
  require_shape(job);
  std::vector<NestedPartition> out;
  for (auto& lambda : enumerate_nested(job.n, job.dims, job.limits))
    if (space == Space::nhilb || is_nilfil(lambda)) out.push_back(std::move(lambda));
  return out;
}

Json classify_json(const NestedPartition& lambda) {
  const Enumeration e = canonical_enumeration(lambda);
  const FixedRanks ranks = fixed_ranks(e);
  const int d = lambda.total();
  Json j = {{"nested", encode(lambda)},
            {"enumeration", encode(e)},
            {"admissible", is_admissible(lambda)},
            {"nilfil", is_nilfil(lambda)},
            {"fixed_ranks", {{"tangent", ranks.tangent}, {"obstruction", ranks.obstruction}}},
            {"tangent", encode(tangent_class(e))},
            {"obstruction", encode(obstruction_class(e))},
            {"vdim", {{"nhilb", virtual_dimension_at(e, Space::nhilb)}}}};
  if (lambda.dims.front() == 1) {
    j["tangent_punctual"] = encode(tangent_class_punctual(e));
    j["epunct"] = encode(epunct_class(e));
    if (is_nilfil(lambda)) j["vdim"]["nilfil"] = virtual_dimension_at(e, Space::nilfil);
    if (lambda.n >= d - 1) {
      CosetRep id;
      for (int i = 1; i < d; ++i) id.images.push_back(i);
      j["porteous"] = (lambda == porteous(lambda.n, lambda.dims));
      j["in_flag_fiber_id"] = in_flag_fiber(lambda, id);
    }
  }
  return j;
}

Json result_json(const IntegralResult& r, bool cy, int n, bool expand) {
  IntegralResult shown = r;
  if (cy) shown.value = cy_restrict(r.value, n);
  Json j = encode(shown, expand);
  j["cy"] = cy;
  return j;
}

// Random nonzero rationals for every variable of both values.
bool sampled_agree(const FactoredRational& a, const FactoredRational& b, int samples, std::uint64_t seed) {
  std::set<VariableId> vars;
  for (const FactoredRational* v : {&a, &b}) {
    for (VariableId x : v->numerator().variables()) vars.insert(x);
    for (const auto& [form, e] : v->factors())
      for (const auto& [x, c] : form.terms()) vars.insert(x);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-60, 60), den(1, 7);
  int done = 0;
  for (int attempt = 0; done < samples && attempt < samples * 50; ++attempt) {
    Assignment point;
    for (VariableId x : vars) {
      int p = num(rng);
      if (p == 0) p = 1;
      point[x] = Rational(p, den(rng));
      point[x].canonicalize();
    }
    try {
      if (a.evaluate(point) != b.evaluate(point)) return false;
      ++done;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::DivisionByZero) throw;
    }
  }
  return done == samples;
}

int run(const JobSpec& job, std::ostream& out) {
  const Space space = parse_space(job.space);
  const Method method = parse_method(job.method);
  if (job.command == "enumerate") {
    Json points = Json::array();
    for (const auto& lambda : job_points(job, space)) {
      const Enumeration e = canonical_enumeration(lambda);
      const FixedRanks ranks = fixed_ranks(e);
      points.push_back({{"layers", encode(lambda)["layers"]},
                        {"order", e.order},
                        {"admissible", is_admissible(lambda)},
                        {"nilfil", is_nilfil(lambda)},
                        {"fixed_ranks", {{"tangent", ranks.tangent}, {"obstruction", ranks.obstruction}}}});
    }
    out << Json{{"n", job.n}, {"dims", job.dims}, {"space", job.space}, {"count", points.size()}, {"points", points}}.dump(2) << "\n";
    return 0;
  }
  if (job.command == "classify") {
    if (job.chain.empty()) throw Error(ErrorKind::InvalidInput, "classify needs --chain");
    out << classify_json(decode_nested(Json::parse(job.chain))).dump(2) << "\n";
    return 0;
  }
  if (job.command == "contribution") {
    Json entries = Json::array();
    for (const auto& lambda : job_points(job, space)) {
      const TautClass p = parse_class_spec(job.class_text, job.q.value_or(max_theta_index(job.class_text)), lambda.total());
      FactoredRational v = contribution(canonical_enumeration(lambda), space, p);
      Json entry = {{"layers", encode(lambda)["layers"]}};
      try {
        entry["value"] = value_json(job.cy ? cy_restrict(v, lambda.n) : v, job.expand);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::DegenerateRestriction) throw;
        entry["error"] = std::string(to_string(err.kind()));
      }
      entries.push_back(entry);
    }
    out << Json{{"space", job.space}, {"class", job.class_text}, {"cy", job.cy}, {"contributions", entries}}.dump(2) << "\n";
    return 0;
  }
  if (job.command == "integrate") {
    require_shape(job);
    const TautClass p = job_class(job);
    IntegralResult r;
    if (method == Method::residue) {
      if (space != Space::nilfil) throw Error(ErrorKind::InvalidInput, "the residue method integrates over nilfil only");
      r = integrate_residue_nilfil(job.n, job.dims, p);
    } else {
      r = integrate_localization(job.n, job.dims, space, p, job.limits);
    }
    out << result_json(r, job.cy, job.n, job.expand).dump(2) << "\n";
    return 0;
  }
  if (job.command == "compare") {
    require_shape(job);
    const TautClass p = job_class(job);
    const IntegralResult loc = integrate_localization(job.n, job.dims, Space::nilfil, p, job.limits);
    const IntegralResult res = integrate_residue_nilfil(job.n, job.dims, p);
    const bool exact = equivalent(loc.value, res.value);
    const bool sampled = sampled_agree(loc.value, res.value, job.samples, job.seed);
    Json j = {{"method_a", "localization"},
              {"method_b", "residue"},
              {"localization", result_json(loc, false, job.n, job.expand)},
              {"residue", result_json(res, false, job.n, job.expand)},
              {"equal", exact},
              {"verdict", "exact"},
              {"sampled", {{"points", job.samples}, {"seed", job.seed}, {"agree", sampled}}}};
    out << j.dump(2) << "\n";
    return exact ? 0 : 2;
  }
  if (job.command == "verify") {
    std::vector<int> ids = job.criteria;
    if (ids.empty()) {
      ids.resize(acceptance::kCriterionCount);
      std::iota(ids.begin(), ids.end(), 1);
    }
    Json list = Json::array();
    bool all = true;
    for (const auto& r : acceptance::run_all(ids, job.seed)) {
      all = all && r.passed;
      list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    out << Json{{"seed", job.seed}, {"criteria", list}, {"passed", all}}.dump(2) << "\n";
    return all ? 0 : 2;
  }
  throw Error(ErrorKind::InvalidInput, "unknown command '" + job.command + "'");
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    if (piece.empty()) throw Error(ErrorKind::InvalidInput, "empty entry in '" + text + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != piece.size()) throw Error(ErrorKind::InvalidInput, "bad integer '" + piece + "'");
    out.push_back(value);
  }
  return out;
}

Limits limits_from_environment(Limits base) {
  if (const char* raw = std::getenv("NAHILB_MAX_POINTS")) {
    const std::vector<int> v = parse_int_list(raw);
    if (v.size() != 1 || v[0] < 1) throw Error(ErrorKind::InvalidInput, "NAHILB_MAX_POINTS must be a positive integer");
    base.max_points = std::min(v[0], kHardMaxPoints);
  }
  return base;
}

JobSpec job_from_json(const Json& config, JobSpec base) {
  if (!config.is_object()) throw Error(ErrorKind::InvalidInput, "config must be a JSON object");
  for (const auto& [key, value] : config.items()) {
    if (key == "command") base.command = value.get<std::string>();
    else if (key == "n") base.n = value.get<int>();
    else if (key == "dims") base.dims = value.get<std::vector<int>>();
    else if (key == "space") base.space = value.get<std::string>();
    else if (key == "method") base.method = value.get<std::string>();
    else if (key == "class") base.class_text = value.get<std::string>();
    else if (key == "q") base.q = value.get<int>();
    else if (key == "cy") base.cy = value.get<bool>();
    else if (key == "expand") base.expand = value.get<bool>();
    else if (key == "seed") base.seed = value.get<std::uint64_t>();
    else if (key == "samples") base.samples = value.get<int>();
    else if (key == "criteria") base.criteria = value.get<std::vector<int>>();
    else if (key == "chain") base.chain = value.dump();
    else if (key == "max_points") base.limits.max_points = std::min(value.get<int>(), kHardMaxPoints);
    else throw Error(ErrorKind::InvalidInput, "unknown config key '" + key + "'");
  }
  return base;
}

int run_job(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    return run(job, out);
  } catch (const Error& e) {
    err << Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << Json{{"error", "InvalidInput"}, {"message", e.what()}}.dump() << "\n";
  }
  return 1;
}

}  // namespace nahilb

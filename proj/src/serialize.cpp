#include "tiered/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>

namespace tiered {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Vec2 vec2_from_json(const json& j) {
  if (!j.is_array() || j.size() < 1 || j.size() > 2)
    throw std::invalid_argument("point must be [x] or [x,y]");
  Vec2 v;
  v.x = j[0].get<double>();
  v.y = j.size() == 2 ? j[1].get<double>() : 0.0;
  return v;
}

std::vector<Vec2> points_from_json(const json& j) {
  std::vector<Vec2> pts;
  for (const auto& e : j) pts.push_back(vec2_from_json(e));
  return pts;
}

json points_to_json(const std::vector<Vec2>& pts) {
  json arr = json::array();
  for (Vec2 p : pts) arr.push_back(to_json(p));
  return arr;
}

void require_keys(const json& j, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional,
                  const char* what) {
  if (!j.is_object())
    throw std::invalid_argument(std::string(what) + ": expected an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    if (!j.contains(k))
      throw std::invalid_argument(std::string(what) + ": missing field '" +
                                  k + "'");
    allowed.insert(k);
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& [key, unused] : j.items()) {
    if (!allowed.count(key))
      throw std::invalid_argument(std::string(what) + ": unknown field '" +
                                  key + "'");
  }
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot open for writing: " + path.string());
  return out;
}

}  // namespace

json to_json(const Vec2& v) { return json::array({v.x, v.y}); }

json to_json(const Region& region) {
  json j;
  if (region.kind() == Region::Kind::Interval) {
    j["kind"] = "interval";
    j["bounds"] = {region.x0(), region.x1()};
  } else {
    j["kind"] = "rect";
    j["bounds"] = {region.x0(), region.x1(), region.y0(), region.y1()};
  }
  return j;
}

Region region_from_json(const json& j) {
  require_keys(j, {"kind", "bounds"}, {}, "region");
  const auto kind = j["kind"].get<std::string>();
  const auto& b = j["bounds"];
  if (kind == "interval") {
    if (!b.is_array() || b.size() != 2)
      throw std::invalid_argument("interval bounds must be [s,t]");
    return Region::interval(b[0].get<double>(), b[1].get<double>());
  }
  if (kind == "rect") {
    if (!b.is_array() || b.size() != 4)
      throw std::invalid_argument("rect bounds must be [x0,x1,y0,y1]");
    return Region::rect(b[0].get<double>(), b[1].get<double>(),
                        b[2].get<double>(), b[3].get<double>());
  }
  throw std::invalid_argument("unknown region kind: " + kind);
}

json to_json(const DensitySpec& density) {
  json j;
  switch (density.kind()) {
    case DensitySpec::Kind::Uniform:
      j["kind"] = "uniform";
      break;
    case DensitySpec::Kind::GaussianMixture: {
      j["kind"] = "gaussian_mixture";
      json comps = json::array();
      for (const auto& c : density.components()) {
        json jc;
        jc["amp"] = c.amp;
        jc["center"] = to_json(c.center);
        jc["inv_scale"] = c.inv_scale;
        comps.push_back(jc);
      }
      j["components"] = comps;
      break;
    }
    case DensitySpec::Kind::GridTable:
      j["kind"] = "grid_table";
      j["values"] = density.table();
      break;
  }
  return j;
}

DensitySpec density_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("density: missing 'kind'");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "uniform") {
    require_keys(j, {"kind"}, {}, "density");
    return DensitySpec::uniform();
  }
  if (kind == "gaussian_mixture") {
    require_keys(j, {"kind", "components"}, {}, "density");
    std::vector<GaussianComponent> comps;
    for (const auto& jc : j["components"]) {
      require_keys(jc, {"amp", "center", "inv_scale"}, {}, "component");
      comps.push_back({jc["amp"].get<double>(), vec2_from_json(jc["center"]),
                       jc["inv_scale"].get<double>()});
    }
    return DensitySpec::gaussian_mixture(std::move(comps));
  }
  if (kind == "grid_table") {
    require_keys(j, {"kind", "values"}, {}, "density");
    return DensitySpec::grid_table(j["values"].get<std::vector<double>>());
  }
  throw std::invalid_argument("unknown density kind: " + kind);
}

json to_json(const Deployment& d) {
  json j;
  j["aps"] = points_to_json(d.aps);
  j["bss"] = points_to_json(d.bss);
  j["index_map"] = d.index_map;
  return j;
}

Deployment deployment_from_json(const json& j) {
  require_keys(j, {"aps", "bss", "index_map"}, {}, "deployment");
  Deployment d;
  d.aps = points_from_json(j["aps"]);
  d.bss = points_from_json(j["bss"]);
  d.index_map = j["index_map"].get<std::vector<int>>();
  return d;
}

json to_json(const PartitionState& p) {
  json j;
  j["assign"] = p.assign;
  j["volumes"] = p.volumes;
  j["centroids"] = points_to_json(p.centroids);
  return j;
}

PartitionState partition_from_json(const json& j) {
  require_keys(j, {"assign", "volumes", "centroids"}, {}, "partition");
  PartitionState p;
  p.assign = j["assign"].get<std::vector<int>>();
  p.volumes = j["volumes"].get<std::vector<double>>();
  p.centroids = points_from_json(j["centroids"]);
  return p;
}

json to_json(const DistortionReport& r) {
  json j;
  j["total"] = r.total;
  j["sensor_term"] = r.sensor_term;
  j["ap_term"] = r.ap_term;
  j["per_ap"] = r.per_ap;
  j["per_bs"] = r.per_bs;
  return j;
}

namespace {

json trace_to_json(const std::vector<TraceEntry>& trace) {
  json arr = json::array();
  for (const auto& e : trace) {
    json je;
    je["total"] = e.total;
    je["sensor_term"] = e.sensor_term;
    je["ap_term"] = e.ap_term;
    arr.push_back(je);
  }
  return arr;
}

std::vector<TraceEntry> trace_from_json(const json& j) {
  std::vector<TraceEntry> trace;
  for (const auto& je : j) {
    trace.push_back({je["total"].get<double>(),
                     je["sensor_term"].get<double>(),
                     je["ap_term"].get<double>()});
  }
  return trace;
}

DistortionReport report_from_json(const json& j) {
  require_keys(j, {"total", "sensor_term", "ap_term", "per_ap", "per_bs"}, {},
               "report");
  DistortionReport r;
  r.total = j["total"].get<double>();
  r.sensor_term = j["sensor_term"].get<double>();
  r.ap_term = j["ap_term"].get<double>();
  r.per_ap = j["per_ap"].get<std::vector<double>>();
  r.per_bs = j["per_bs"].get<std::vector<double>>();
  return r;
}

}  // namespace

json to_json(const Solution& s) {
  json j;
  j["deployment"] = to_json(s.deployment);
  j["partition"] = to_json(s.partition);
  j["report"] = to_json(s.report);
  j["trace"] = trace_to_json(s.trace);
  j["bs_trace"] = trace_to_json(s.bs_trace);
  j["iterations"] = s.iterations;
  return j;
}

Solution solution_from_json(const json& j) {
  require_keys(j, {"deployment", "partition", "report", "trace", "bs_trace",
                   "iterations"},
               {}, "solution");
  Solution s;
  s.deployment = deployment_from_json(j["deployment"]);
  s.partition = partition_from_json(j["partition"]);
  s.report = report_from_json(j["report"]);
  s.trace = trace_from_json(j["trace"]);
  s.bs_trace = trace_from_json(j["bs_trace"]);
  s.iterations = j["iterations"].get<int>();
  return s;
}

json to_json(const Allocation& a) {
  json j;
  j["sizes"] = a.sizes;
  j["big_count"] = a.big_count;
  j["small_count"] = a.small_count;
  j["big_len_factor"] = a.big_len_factor;
  j["small_len_factor"] = a.small_len_factor;
  j["value"] = a.value;
  return j;
}

json to_json(const Closed1DSolution& s) {
  json j;
  j["bss"] = s.bss;
  j["aps"] = s.aps;
  j["cell_bounds"] = s.cell_bounds;
  j["cluster_bounds"] = s.cluster_bounds;
  j["index_map"] = s.index_map;
  j["distortion"] = s.distortion;
  j["deployment"] = to_json(s.to_deployment());
  return j;
}

json to_json(const SavingsReport& r) {
  json j;
  json trials = json::array();
  for (const auto& t : r.per_trial) {
    json jt;
    jt["initial_distortion"] = t.initial_distortion;
    jt["final_distortion"] = t.final_distortion;
    jt["savings_pct"] = t.savings_pct;
    trials.push_back(jt);
  }
  j["per_trial"] = trials;
  j["mean_savings_pct"] = r.mean_savings_pct;
  return j;
}

namespace {

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Otl:
      return "otl";
    case Algorithm::Ttl:
      return "ttl";
    case Algorithm::Both:
      return "both";
  }
  return "both";
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "otl") return Algorithm::Otl;
  if (name == "ttl") return Algorithm::Ttl;
  if (name == "both") return Algorithm::Both;
  throw std::invalid_argument("unknown algorithm: " + name);
}

}  // namespace

json to_json(const ExperimentConfig& c) {
  json j;
  j["region"] = to_json(c.region);
  j["density"] = to_json(c.density);
  j["N"] = c.n_aps;
  j["M"] = c.n_bss;
  j["beta"] = c.beta;
  j["trials"] = c.trials;
  j["maxIterations"] = c.max_iterations;
  j["resolution"] = c.resolution;
  j["seed"] = c.seed;
  j["algorithm"] = algorithm_name(c.algorithm);
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  require_keys(j, {"region", "density", "N", "M", "beta"},
               {"trials", "maxIterations", "resolution", "seed", "algorithm"},
               "config");
  ExperimentConfig c;
  c.region = region_from_json(j["region"]);
  c.density = density_from_json(j["density"]);
  c.n_aps = j["N"].get<int>();
  c.n_bss = j["M"].get<int>();
  c.beta = j["beta"].get<double>();
  if (j.contains("trials")) c.trials = j["trials"].get<int>();
  if (j.contains("maxIterations"))
    c.max_iterations = j["maxIterations"].get<int>();
  if (j.contains("resolution")) c.resolution = j["resolution"].get<int>();
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("algorithm"))
    c.algorithm = algorithm_from_name(j["algorithm"].get<std::string>());
  c.validate();
  return c;
}

json to_json(const SolutionDocument& doc) {
  json j;
  j["config"] = to_json(doc.config);
  j["solution"] = to_json(doc.solution);
  return j;
}

SolutionDocument solution_document_from_json(const json& j) {
  require_keys(j, {"config", "solution"}, {}, "solution document");
  SolutionDocument doc;
  doc.config = config_from_json(j["config"]);
  doc.solution = solution_from_json(j["solution"]);
  return doc;
}

void write_trace_csv(const Solution& s, const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "iteration,distortion,sensor_term,ap_term\n";
  for (std::size_t i = 0; i < s.trace.size(); ++i) {
    out << i << ',' << fmt(s.trace[i].total) << ','
        << fmt(s.trace[i].sensor_term) << ',' << fmt(s.trace[i].ap_term)
        << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_assignment_csv(const Grid& grid, const PartitionState& partition,
                          const std::vector<int>& index_map,
                          const std::filesystem::path& path) {
  if (partition.assign.size() != grid.size())
    throw InconsistentPartitionError("assignment length != grid size");
  auto out = open_out(path);
  out << "x,y,ap_index,bs_index\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const int n = partition.assign[k];
    out << fmt(grid.point(k).x) << ',' << fmt(grid.point(k).y) << ',' << n
        << ',' << index_map[n] << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_points_csv(const Deployment& d,
                      const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "x,y,kind,index,cluster\n";
  for (std::size_t n = 0; n < d.aps.size(); ++n) {
    out << fmt(d.aps[n].x) << ',' << fmt(d.aps[n].y) << ",ap," << n << ','
        << d.index_map[n] << '\n';
  }
  for (std::size_t m = 0; m < d.bss.size(); ++m) {
    out << fmt(d.bss[m].x) << ',' << fmt(d.bss[m].y) << ",bs," << m << ','
        << m << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_plotdata(const SolutionDocument& doc,
                    const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const Grid grid = build_grid(doc.config.region, doc.config.density,
                               doc.config.effective_resolution());
  write_points_csv(doc.solution.deployment, dir / "points.csv");
  write_assignment_csv(grid, doc.solution.partition,
                       doc.solution.deployment.index_map,
                       dir / "assignment.csv");
  write_trace_csv(doc.solution, dir / "trace.csv");
}

}  // namespace tiered

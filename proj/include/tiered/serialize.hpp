#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "tiered/analytic.hpp"
#include "tiered/experiment.hpp"

namespace tiered {

using json = nlohmann::ordered_json;

json to_json(const Vec2& v);
json to_json(const Region& region);
json to_json(const DensitySpec& density);
json to_json(const Deployment& d);
json to_json(const PartitionState& p);
json to_json(const DistortionReport& r);
json to_json(const Solution& s);
json to_json(const Allocation& a);
json to_json(const Closed1DSolution& s);
json to_json(const SavingsReport& r);
json to_json(const ExperimentConfig& c);

Region region_from_json(const json& j);
DensitySpec density_from_json(const json& j);
Deployment deployment_from_json(const json& j);
PartitionState partition_from_json(const json& j);
Solution solution_from_json(const json& j);

/// Strict parse: unknown fields are rejected (std::invalid_argument).
ExperimentConfig config_from_json(const json& j);

/// A solution bundled with the grid context needed to re-rasterize it.
struct SolutionDocument {
  ExperimentConfig config;  // region/density/resolution/beta of the run
  Solution solution;
};

json to_json(const SolutionDocument& doc);
SolutionDocument solution_document_from_json(const json& j);

// CSV emitters. Paths are created/truncated; IO failures surface as
// std::runtime_error carrying the path.
void write_trace_csv(const Solution& s, const std::filesystem::path& path);
void write_assignment_csv(const Grid& grid, const PartitionState& partition,
                          const std::vector<int>& index_map,
                          const std::filesystem::path& path);
void write_points_csv(const Deployment& d, const std::filesystem::path& path);

/// plotdata export: points, raster, and trace CSVs under `dir`.
void write_plotdata(const SolutionDocument& doc,
                    const std::filesystem::path& dir);

}  // namespace tiered

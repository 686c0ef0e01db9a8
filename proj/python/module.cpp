#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tiered/analytic.hpp"
#include "tiered/experiment.hpp"
#include "tiered/serialize.hpp"

namespace py = pybind11;
using namespace tiered;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Energy-optimal two-tier AP/BS deployment: energy Voronoi "
            "partitions, one-/two-tiered Lloyd optimizers, and closed-form "
            "1D optima.";

  py::register_exception<ZeroMassError>(m, "ZeroMassError",
                                        PyExc_ValueError);
  py::register_exception<InconsistentPartitionError>(
      m, "InconsistentPartitionError", PyExc_ValueError);
  py::register_exception<TooLargeError>(m, "TooLargeError", PyExc_ValueError);

  py::class_<Vec2>(m, "Vec2")
      .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
      .def_readwrite("x", &Vec2::x)
      .def_readwrite("y", &Vec2::y)
      .def("__repr__", [](const Vec2& v) {
        std::ostringstream os;
        os << "Vec2(" << v.x << ", " << v.y << ")";
        return os.str();
      });

  py::class_<Region>(m, "Region")
      .def_static("interval", &Region::interval, py::arg("s"), py::arg("t"))
      .def_static("rect", &Region::rect, py::arg("x0"), py::arg("x1"),
                  py::arg("y0"), py::arg("y1"))
      .def_property_readonly("dimension", &Region::dimension)
      .def("measure", &Region::measure)
      .def("contains", &Region::contains);

  py::class_<GaussianComponent>(m, "GaussianComponent")
      .def(py::init([](double amp, std::pair<double, double> center,
                       double inv_scale) {
             return GaussianComponent{amp, {center.first, center.second},
                                      inv_scale};
           }),
           py::arg("amp"), py::arg("center"), py::arg("inv_scale"))
      .def_readwrite("amp", &GaussianComponent::amp)
      .def_readwrite("center", &GaussianComponent::center)
      .def_readwrite("inv_scale", &GaussianComponent::inv_scale);

  py::class_<DensitySpec>(m, "DensitySpec")
      .def_static("uniform", &DensitySpec::uniform)
      .def_static("gaussian_mixture", &DensitySpec::gaussian_mixture,
                  py::arg("components"))
      .def_static("grid_table", &DensitySpec::grid_table, py::arg("values"));

  py::class_<Grid>(m, "Grid")
      .def_property_readonly("size", &Grid::size)
      .def_property_readonly("nx", &Grid::nx)
      .def_property_readonly("ny", &Grid::ny)
      .def("point", &Grid::point, py::arg("k"))
      .def("weight", &Grid::weight, py::arg("k"))
      .def("total_mass", &Grid::total_mass)
      .def("cell_width", &Grid::cell_width)
      .def_property_readonly("region", &Grid::region);

  py::class_<Deployment>(m, "Deployment")
      .def(py::init<>())
      .def_readwrite("aps", &Deployment::aps)
      .def_readwrite("bss", &Deployment::bss)
      .def_readwrite("index_map", &Deployment::index_map);

  py::class_<PartitionState>(m, "PartitionState")
      .def_readonly("assign", &PartitionState::assign)
      .def_readonly("volumes", &PartitionState::volumes)
      .def_readonly("centroids", &PartitionState::centroids);

  py::class_<DistortionReport>(m, "DistortionReport")
      .def_readonly("total", &DistortionReport::total)
      .def_readonly("sensor_term", &DistortionReport::sensor_term)
      .def_readonly("ap_term", &DistortionReport::ap_term)
      .def_readonly("per_ap", &DistortionReport::per_ap)
      .def_readonly("per_bs", &DistortionReport::per_bs);

  py::class_<Residuals>(m, "Residuals")
      .def_readonly("ap", &Residuals::ap)
      .def_readonly("bs", &Residuals::bs);

  py::class_<LloydConfig>(m, "LloydConfig")
      .def(py::init<>())
      .def_readwrite("max_iterations", &LloydConfig::max_iterations)
      .def_readwrite("rel_tolerance", &LloydConfig::rel_tolerance)
      .def_readwrite("seed", &LloydConfig::seed);

  py::class_<TraceEntry>(m, "TraceEntry")
      .def_readonly("total", &TraceEntry::total)
      .def_readonly("sensor_term", &TraceEntry::sensor_term)
      .def_readonly("ap_term", &TraceEntry::ap_term);

  py::class_<Solution>(m, "Solution")
      .def_readonly("deployment", &Solution::deployment)
      .def_readonly("partition", &Solution::partition)
      .def_readonly("report", &Solution::report)
      .def_readonly("trace", &Solution::trace)
      .def_readonly("bs_trace", &Solution::bs_trace)
      .def_readonly("iterations", &Solution::iterations);

  py::class_<RegularLloydResult>(m, "RegularLloydResult")
      .def_readonly("points", &RegularLloydResult::points)
      .def_readonly("partition", &RegularLloydResult::partition)
      .def_readonly("trace", &RegularLloydResult::trace)
      .def_readonly("iterations", &RegularLloydResult::iterations);

  py::class_<Allocation>(m, "Allocation")
      .def_readonly("sizes", &Allocation::sizes)
      .def_readonly("big_count", &Allocation::big_count)
      .def_readonly("small_count", &Allocation::small_count)
      .def_readonly("big_len_factor", &Allocation::big_len_factor)
      .def_readonly("small_len_factor", &Allocation::small_len_factor)
      .def_readonly("value", &Allocation::value);

  py::class_<Closed1DSolution>(m, "Closed1DSolution")
      .def_readonly("bss", &Closed1DSolution::bss)
      .def_readonly("aps", &Closed1DSolution::aps)
      .def_readonly("cell_bounds", &Closed1DSolution::cell_bounds)
      .def_readonly("cluster_bounds", &Closed1DSolution::cluster_bounds)
      .def_readonly("index_map", &Closed1DSolution::index_map)
      .def_readonly("distortion", &Closed1DSolution::distortion)
      .def("to_deployment", &Closed1DSolution::to_deployment)
      .def("distortion_from_geometry",
           &Closed1DSolution::distortion_from_geometry, py::arg("beta"));

  py::class_<ShrunkSolution>(m, "ShrunkSolution")
      .def_readonly("deployment", &ShrunkSolution::deployment)
      .def_readonly("predicted_distortion",
                    &ShrunkSolution::predicted_distortion);

  py::enum_<Algorithm>(m, "Algorithm")
      .value("OTL", Algorithm::Otl)
      .value("TTL", Algorithm::Ttl)
      .value("BOTH", Algorithm::Both);

  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("region", &ExperimentConfig::region)
      .def_readwrite("density", &ExperimentConfig::density)
      .def_readwrite("n_aps", &ExperimentConfig::n_aps)
      .def_readwrite("n_bss", &ExperimentConfig::n_bss)
      .def_readwrite("beta", &ExperimentConfig::beta)
      .def_readwrite("trials", &ExperimentConfig::trials)
      .def_readwrite("max_iterations", &ExperimentConfig::max_iterations)
      .def_readwrite("resolution", &ExperimentConfig::resolution)
      .def_readwrite("seed", &ExperimentConfig::seed)
      .def_readwrite("algorithm", &ExperimentConfig::algorithm)
      .def("effective_resolution", &ExperimentConfig::effective_resolution);

  py::class_<TrialOutcome>(m, "TrialOutcome")
      .def_readonly("initial_distortion", &TrialOutcome::initial_distortion)
      .def_readonly("final_distortion", &TrialOutcome::final_distortion)
      .def_readonly("savings_pct", &TrialOutcome::savings_pct);

  py::class_<SavingsReport>(m, "SavingsReport")
      .def_readonly("per_trial", &SavingsReport::per_trial)
      .def_readonly("mean_savings_pct", &SavingsReport::mean_savings_pct);

  py::class_<ExperimentResult>(m, "ExperimentResult")
      .def_readonly("otl_savings", &ExperimentResult::otl_savings)
      .def_readonly("ttl_savings", &ExperimentResult::ttl_savings)
      .def_readonly("otl_solutions", &ExperimentResult::otl_solutions)
      .def_readonly("ttl_solutions", &ExperimentResult::ttl_solutions);

  m.def("build_grid", &build_grid, py::arg("region"), py::arg("density"),
        py::arg("resolution"));
  m.def("region_centroid", &region_centroid, py::arg("grid"));
  m.def("best_index_map", &best_index_map, py::arg("aps"), py::arg("bss"));
  m.def("energy_voronoi", &energy_voronoi, py::arg("grid"), py::arg("aps"),
        py::arg("bss"), py::arg("index_map"), py::arg("beta"));
  m.def("distortion", &distortion, py::arg("grid"), py::arg("deployment"),
        py::arg("partition"), py::arg("beta"));
  m.def("fixed_point_residual", &fixed_point_residual, py::arg("grid"),
        py::arg("deployment"), py::arg("partition"), py::arg("beta"));
  m.def("regular_lloyd", &regular_lloyd, py::arg("grid"), py::arg("k"),
        py::arg("init"), py::arg("config") = LloydConfig{});
  m.def("otl", &otl, py::arg("grid"), py::arg("n_aps"), py::arg("n_bss"),
        py::arg("beta"), py::arg("init_aps") = std::vector<Vec2>{},
        py::arg("init_bss") = std::vector<Vec2>{},
        py::arg("config") = LloydConfig{});
  m.def("ttl", &ttl, py::arg("grid"), py::arg("n_aps"), py::arg("n_bss"),
        py::arg("beta"), py::arg("init_aps") = std::vector<Vec2>{},
        py::arg("init_bss") = std::vector<Vec2>{},
        py::arg("config") = LloydConfig{});
  m.def("random_deployment", &random_deployment, py::arg("region"),
        py::arg("n_aps"), py::arg("n_bss"), py::arg("seed"));
  m.def("mix_seed", &mix_seed, py::arg("seed"), py::arg("stream"));
  m.def("optimal_allocation", &optimal_allocation, py::arg("n_aps"),
        py::arg("n_bss"), py::arg("beta"));
  m.def("allocation_bruteforce", &allocation_bruteforce, py::arg("n_aps"),
        py::arg("n_bss"), py::arg("beta"));
  m.def("optimal_uniform_1d", &optimal_uniform_1d, py::arg("s"), py::arg("t"),
        py::arg("n_aps"), py::arg("n_bss"), py::arg("beta"));
  m.def("quantizer_lower_bound", &quantizer_lower_bound, py::arg("n_points"),
        py::arg("measure"));
  m.def("single_bs_optimum", &single_bs_optimum, py::arg("grid"),
        py::arg("quantizer_points"), py::arg("quantizer_partition"),
        py::arg("beta"));
  m.def("run_experiment", &run_experiment, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("wsn1_config", &wsn1_config);
  m.def("wsn2_config", &wsn2_config);
  m.def("thread_cap", &thread_cap);

  m.def("config_from_json", [](const std::string& text) {
    return config_from_json(json::parse(text));
  });
  m.def("config_to_json",
        [](const ExperimentConfig& c) { return to_json(c).dump(2); });
  m.def("solution_to_json",
        [](const Solution& s) { return to_json(s).dump(2); });
}

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "resinfo/figures.hpp"
#include "resinfo/gaussian.hpp"
#include "resinfo/json_io.hpp"
#include "resinfo/large_deviations.hpp"
#include "resinfo/resolution.hpp"
#include "resinfo/special_functions.hpp"

namespace py = pybind11;
using namespace resinfo;

namespace {

// Python callers pass plain floats; wrap them at the boundary so the
// validation lives in one place.
Probability as_probability(double p) { return Probability(p); }
AmbiguityTarget as_target(double eps) { return AmbiguityTarget(eps); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Resolution information: KL-minimal belief updates for semantic ambiguity "
            "targets, Gaussian ambiguity floors, and large-deviation rate checks";

  // ---- special functions ----
  m.def("std_normal_cdf", [](double x) { return std_normal_cdf(x).value(); }, py::arg("x"));
  m.def("std_normal_tail", [](double x) { return std_normal_cdf(x).complement(); }, py::arg("x"),
        "Upper tail 1 - Phi(x), kept to full relative accuracy");
  m.def("std_normal_quantile", [](double p) { return std_normal_quantile(as_probability(p)); },
        py::arg("p"));
  m.def("std_normal_pdf", &std_normal_pdf, py::arg("x"));
  m.def("log1p_safe", &log1p_safe, py::arg("x"));
  m.def("xlogx", &xlogx, py::arg("u"));

  // ---- beliefs ----
  py::class_<DiscreteBelief>(m, "DiscreteBelief")
      .def(py::init<std::vector<double>>(), py::arg("probs"))
      .def_property_readonly("probs", &DiscreteBelief::probs)
      .def("__len__", &DiscreteBelief::size)
      .def("__getitem__",
           [](const DiscreteBelief& b, std::size_t i) {
             if (i >= b.size()) throw py::index_error();
             return b[i];
           })
      .def("__eq__", [](const DiscreteBelief& a, const DiscreteBelief& b) { return a == b; });

  py::class_<Region>(m, "Region")
      .def(py::init<std::vector<std::size_t>>(), py::arg("members"))
      .def_property_readonly("members", &Region::members)
      .def("__len__", &Region::size);

  py::class_<SemanticPartition>(m, "SemanticPartition")
      .def(py::init<std::vector<Region>, std::size_t>(), py::arg("regions"),
           py::arg("alphabet_size"))
      .def(py::init([](const std::vector<std::vector<std::size_t>>& regions) {
             std::vector<Region> built;
             std::size_t alphabet = 0;
             for (const auto& r : regions) {
               for (std::size_t s : r) alphabet = std::max(alphabet, s + 1);
               built.emplace_back(r);
             }
             return SemanticPartition(std::move(built), alphabet);
           }),
           py::arg("regions"), "Build from index lists; the alphabet is the largest index + 1")
      .def_property_readonly("alphabet_size", &SemanticPartition::alphabet_size)
      .def_property_readonly("region_count", &SemanticPartition::region_count);

  m.def("region_mass",
        [](const DiscreteBelief& p, const Region& a) { return region_mass(p, a).value(); },
        py::arg("p"), py::arg("region"));
  m.def("ambiguity",
        [](const DiscreteBelief& p, const SemanticPartition& partition) {
          return ambiguity(p, partition).value();
        },
        py::arg("p"), py::arg("partition"));
  m.def("most_likely_region", &most_likely_region, py::arg("p"), py::arg("partition"));
  m.def("region_ambiguity",
        [](const DiscreteBelief& p, const Region& a) { return region_ambiguity(p, a).value(); },
        py::arg("p"), py::arg("region"));
  m.def("kl_divergence", &kl_divergence, py::arg("p"), py::arg("q"));
  m.def("binary_divergence",
        [](double u, double r) { return binary_divergence(as_probability(u), as_probability(r)); },
        py::arg("u"), py::arg("r"));
  m.def("total_variation",
        [](const DiscreteBelief& p, const DiscreteBelief& q) {
          return total_variation(p, q).value();
        },
        py::arg("p"), py::arg("q"));

  // ---- resolution ----
  py::class_<ResolutionResult>(m, "ResolutionResult")
      .def_readonly("info_nats", &ResolutionResult::info_nats)
      .def_readonly("achieving_posterior", &ResolutionResult::achieving_posterior)
      .def_readonly("binding_region_index", &ResolutionResult::binding_region_index)
      .def_readonly("feasible_at_prior", &ResolutionResult::feasible_at_prior);

  py::class_<ProjectionEstimate>(m, "ProjectionEstimate")
      .def_readonly("info_nats", &ProjectionEstimate::info_nats)
      .def_readonly("converged", &ProjectionEstimate::converged);

  m.def("resolution_info_region",
        [](double prior_mass, double epsilon) {
          return resolution_info_region(as_probability(prior_mass), as_target(epsilon));
        },
        py::arg("prior_mass"), py::arg("epsilon"));
  m.def("optimal_posterior",
        [](const DiscreteBelief& p0, const Region& a, double epsilon) {
          return optimal_posterior(p0, a, as_target(epsilon));
        },
        py::arg("p0"), py::arg("region"), py::arg("epsilon"));
  m.def("resolution_info_partition",
        [](const DiscreteBelief& p0, const SemanticPartition& partition, double epsilon) {
          return resolution_info_partition(p0, partition, as_target(epsilon));
        },
        py::arg("p0"), py::arg("partition"), py::arg("epsilon"));
  m.def("brute_force_projection",
        [](const DiscreteBelief& p0, const Region& a, double epsilon, int restarts,
           std::uint64_t seed) {
          BruteForceConfig config;
          config.restarts = restarts;
          config.seed = seed;
          return brute_force_projection(p0, a, as_target(epsilon), config);
        },
        py::arg("p0"), py::arg("region"), py::arg("epsilon"), py::arg("restarts") = 10,
        py::arg("seed") = 0x5eed);

  // ---- gaussian geometry ----
  py::class_<GaussianBelief>(m, "GaussianBelief")
      .def(py::init<Eigen::VectorXd, Eigen::MatrixXd>(), py::arg("mean"), py::arg("covariance"))
      .def_property_readonly("mean", &GaussianBelief::mean)
      .def_property_readonly("covariance", &GaussianBelief::covariance)
      .def_property_readonly("dimension", &GaussianBelief::dimension);

  py::class_<HalfSpace>(m, "HalfSpace")
      .def(py::init<Eigen::VectorXd, double>(), py::arg("normal"), py::arg("threshold"))
      .def_property_readonly("normal", &HalfSpace::normal)
      .def_property_readonly("threshold", &HalfSpace::threshold);

  py::class_<OrthantPolytope>(m, "OrthantPolytope")
      .def(py::init<int, double>(), py::arg("m"), py::arg("a"))
      .def_property_readonly("dimension", &OrthantPolytope::dimension)
      .def_property_readonly("threshold", &OrthantPolytope::threshold);

  py::class_<PrecisionLimit>(m, "PrecisionLimit")
      .def(py::init<double>(), py::arg("sigma_min"))
      .def_property_readonly("sigma_min", &PrecisionLimit::sigma_min);

  py::class_<FloorResult>(m, "FloorResult")
      .def_property_readonly("epsilon_min",
                             [](const FloorResult& f) { return f.epsilon_min.value(); })
      .def_property_readonly("p_max", [](const FloorResult& f) { return f.p_max.value(); })
      .def_readonly("mu_max", &FloorResult::mu_max);

  py::class_<PolytopeResolution>(m, "PolytopeResolution")
      .def_readonly("feasible", &PolytopeResolution::feasible)
      .def_readonly("info_nats", &PolytopeResolution::info_nats);

  py::class_<CurvePoint>(m, "CurvePoint")
      .def_readonly("info_nats", &CurvePoint::info_nats)
      .def_readonly("ambiguity", &CurvePoint::ambiguity);

  py::class_<ResolvabilityBound>(m, "ResolvabilityBound")
      .def_readonly("bounded", &ResolvabilityBound::bounded)
      .def_readonly("degenerate", &ResolvabilityBound::degenerate)
      .def_readonly("value", &ResolvabilityBound::value);

  m.def("gaussian_kl", &gaussian_kl, py::arg("p"), py::arg("p0"));
  m.def("halfspace_mass",
        [](const GaussianBelief& p, const HalfSpace& h) { return halfspace_mass(p, h).value(); },
        py::arg("p"), py::arg("halfspace"));
  m.def("halfspace_delta0", &halfspace_delta0, py::arg("p0"), py::arg("halfspace"));
  m.def("halfspace_optimal_shift",
        [](const GaussianBelief& p0, const HalfSpace& h, double epsilon) {
          return halfspace_optimal_shift(p0, h, as_target(epsilon));
        },
        py::arg("p0"), py::arg("halfspace"), py::arg("epsilon"));
  m.def("halfspace_resolution_info",
        [](double delta0, double epsilon) {
          return halfspace_resolution_info(delta0, as_target(epsilon));
        },
        py::arg("delta0"), py::arg("epsilon"));
  m.def("polytope_mass",
        [](double sigma, const OrthantPolytope& p) { return polytope_mass(sigma, p).value(); },
        py::arg("sigma"), py::arg("polytope"));
  m.def("polytope_sigma_star",
        [](const OrthantPolytope& p, double epsilon) {
          return polytope_sigma_star(p, as_target(epsilon));
        },
        py::arg("polytope"), py::arg("epsilon"));
  m.def("ambiguity_floor", &ambiguity_floor, py::arg("polytope"), py::arg("limit"));
  m.def("polytope_resolution_info",
        [](double sigma0, const OrthantPolytope& p, const PrecisionLimit& lim, double epsilon) {
          return polytope_resolution_info(sigma0, p, lim, as_target(epsilon));
        },
        py::arg("sigma0"), py::arg("polytope"), py::arg("limit"), py::arg("epsilon"));
  m.def("halfspace_ambiguity_curve", &halfspace_ambiguity_curve, py::arg("delta0"),
        py::arg("info_grid"));
  m.def("polytope_ambiguity_curve", &polytope_ambiguity_curve, py::arg("sigma0"),
        py::arg("polytope"), py::arg("limit"), py::arg("info_grid"));
  m.def("gaussian_resolvability_bound",
        [](double gamma0, const OrthantPolytope& p, const PrecisionLimit& lim, double c) {
          return gaussian_resolvability_bound(as_probability(gamma0), p, lim, c);
        },
        py::arg("gamma0"), py::arg("polytope"), py::arg("limit"), py::arg("c"));
  m.def("isotropic_shrink_cost", &isotropic_shrink_cost, py::arg("dimension"), py::arg("sigma0"),
        py::arg("sigma"));

  // ---- large deviations ----
  py::class_<RateEstimate>(m, "RateEstimate")
      .def_readonly("k_values", &RateEstimate::k_values)
      .def_readonly("log_probs", &RateEstimate::log_probs)
      .def_readonly("fitted_rate", &RateEstimate::fitted_rate)
      .def_readonly("theoretical_rate", &RateEstimate::theoretical_rate)
      .def("relative_gap", &RateEstimate::relative_gap);

  py::class_<MonteCarloEstimate>(m, "MonteCarloEstimate")
      .def_readonly("frequency", &MonteCarloEstimate::frequency)
      .def_readonly("std_error", &MonteCarloEstimate::std_error)
      .def_readonly("successes", &MonteCarloEstimate::successes)
      .def_readonly("trials", &MonteCarloEstimate::trials);

  py::class_<DecayModel>(m, "DecayModel")
      .def(py::init([](double gamma0, double c, double info_per_sample, double floor) {
             return DecayModel(as_probability(gamma0), c, info_per_sample,
                               as_probability(floor));
           }),
           py::arg("gamma0"), py::arg("c"), py::arg("info_per_sample"), py::arg("floor"))
      .def_property_readonly("gamma0", [](const DecayModel& d) { return d.gamma0().value(); })
      .def_property_readonly("c", &DecayModel::c)
      .def_property_readonly("info_per_sample", &DecayModel::info_per_sample)
      .def_property_readonly("floor", [](const DecayModel& d) { return d.floor().value(); })
      .def_property_readonly("degenerate", &DecayModel::degenerate);

  m.def("binomial_tail_exact",
        [](std::int64_t k, double r, double q) {
          return binomial_tail_exact(k, as_probability(r), as_probability(q));
        },
        py::arg("k"), py::arg("r"), py::arg("q"));
  m.def("sanov_rate_check",
        [](double r, double q, const std::vector<std::int64_t>& k_grid) {
          return sanov_rate_check(as_probability(r), as_probability(q), k_grid);
        },
        py::arg("r"), py::arg("q"), py::arg("k_grid"));
  m.def("monte_carlo_ambiguity",
        [](const DiscreteBelief& p0, const SemanticPartition& partition, double epsilon,
           std::int64_t k, std::int64_t trials, std::uint64_t seed) {
          return monte_carlo_ambiguity(p0, partition, as_target(epsilon), k, trials, seed);
        },
        py::arg("p0"), py::arg("partition"), py::arg("epsilon"), py::arg("k"), py::arg("trials"),
        py::arg("seed"));
  m.def("sample_complexity_lower_bound",
        [](double info_nats, double epsilon) {
          return sample_complexity_lower_bound(info_nats, as_target(epsilon));
        },
        py::arg("info_nats"), py::arg("epsilon"));
  m.def("decay_model_ambiguity",
        [](const DecayModel& model, std::int64_t k) {
          return decay_model_ambiguity(model, k).value();
        },
        py::arg("model"), py::arg("k"));
  m.def("resolvability_bound", &resolvability_bound, py::arg("model"));

#ifdef VERSION_INFO
#define RESINFO_STR_INNER(x) #x
#define RESINFO_STR(x) RESINFO_STR_INNER(x)
  m.attr("__version__") = RESINFO_STR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "resinfo/figures.hpp"
#include "resinfo/json_io.hpp"
#include "resinfo/large_deviations.hpp"
#include "resinfo/resolution.hpp"

namespace {

using nlohmann::json;
using namespace resinfo;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;
constexpr int kExitVerification = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open input file \"" + path + "\"");
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in \"" + path + "\": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open output file \"" + path + "\"");
  }
  out << contents;
  out.flush();
  if (!out) {
    throw IoError("failed writing output file \"" + path + "\"");
  }
}

json belief_to_json(const DiscreteBelief& p) {
  return json{{"probs", p.probs()}};
}

std::string join_doubles(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_double(v[i]);
  }
  return out;
}

std::vector<std::int64_t> parse_k_grid(const std::string& text) {
  std::vector<std::int64_t> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      grid.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("k grid entry \"" + item + "\" is not an integer");
    }
  }
  if (grid.empty()) {
    throw std::invalid_argument("k grid is empty");
  }
  return grid;
}

// ---------------------------------------------------------------------------
// resolve

struct ResolveOptions {
  std::string belief_path;
  std::string partition_path;
  double epsilon = 0.1;
  bool as_json = false;
};

int run_resolve(const ResolveOptions& opt) {
  const DiscreteBelief p0 = belief_from_json(load_json_file(opt.belief_path));
  const SemanticPartition partition = partition_from_json(load_json_file(opt.partition_path));
  const ResolutionResult result =
      resolution_info_partition(p0, partition, AmbiguityTarget(opt.epsilon));

  if (opt.as_json) {
    json doc{{"info_nats", result.info_nats},
             {"feasible_at_prior", result.feasible_at_prior},
             {"epsilon", opt.epsilon}};
    if (result.binding_region_index) doc["binding_region"] = *result.binding_region_index;
    if (result.achieving_posterior) {
      doc["achieving_posterior"] = result.achieving_posterior->probs();
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "info_nats: " << format_double(result.info_nats) << "\n";
    if (result.binding_region_index) {
      std::cout << "binding_region: " << *result.binding_region_index << "\n";
    }
    std::cout << "feasible_at_prior: " << (result.feasible_at_prior ? "true" : "false") << "\n";
    if (result.achieving_posterior) {
      std::cout << "achieving_posterior: [" << join_doubles(result.achieving_posterior->probs())
                << "]\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// figure data commands

struct HeatmapOptions {
  std::string x_grid;
  std::string y_grid;
  std::string out_path;
  bool as_json = false;
};

int run_tradeoff(const HeatmapOptions& opt) {
  const GridSpec prior = GridSpec::parse(opt.x_grid);
  const GridSpec eps = GridSpec::parse(opt.y_grid);
  const auto cells = tradeoff_heatmap(prior, eps);
  std::ostringstream csv;
  write_tradeoff_csv(csv, cells);
  write_text_file(opt.out_path, csv.str());
  if (opt.as_json) {
    json rows = json::array();
    for (const auto& c : cells) {
      rows.push_back({{"prior_mass", c.prior_mass}, {"epsilon", c.epsilon},
                      {"info_nats", c.info_nats}});
    }
    std::cout << json{{"out", opt.out_path}, {"cells", rows}}.dump(2) << "\n";
  } else {
    std::cout << "wrote " << cells.size() << " cells to " << opt.out_path << "\n";
  }
  return kExitOk;
}

int run_floor_heatmap(const HeatmapOptions& opt) {
  const GridSpec m_grid = GridSpec::parse(opt.x_grid);
  const GridSpec mu_grid = GridSpec::parse(opt.y_grid);
  const auto cells = floor_heatmap(m_grid, mu_grid);
  std::ostringstream csv;
  write_floor_csv(csv, cells);
  write_text_file(opt.out_path, csv.str());
  if (opt.as_json) {
    json rows = json::array();
    for (const auto& c : cells) {
      rows.push_back({{"m", c.m}, {"mu_max", c.mu_max}, {"epsilon_min", c.epsilon_min}});
    }
    std::cout << json{{"out", opt.out_path}, {"cells", rows}}.dump(2) << "\n";
  } else {
    std::cout << "wrote " << cells.size() << " cells to " << opt.out_path << "\n";
  }
  return kExitOk;
}

struct DecayOptions {
  double delta0 = 0.0;
  int m = 5;
  double a = 1.0;
  double sigma0 = 3.0;
  double sigma_min = -1.0;  // default a / 2.13
  std::string info_grid = "0:50:200:linear";
  std::string out_path;
  bool as_json = false;
};

int run_decay_curves(const DecayOptions& opt) {
  const double sigma_min = opt.sigma_min > 0.0 ? opt.sigma_min : opt.a / 2.13;
  const OrthantPolytope polytope(opt.m, opt.a);
  const PrecisionLimit lim(sigma_min);
  const GridSpec grid = GridSpec::parse(opt.info_grid);
  const auto rows = decay_curves(opt.delta0, opt.sigma0, polytope, lim, grid);
  std::ostringstream csv;
  write_decay_csv(csv, rows);
  write_text_file(opt.out_path, csv.str());
  if (opt.as_json) {
    json out_rows = json::array();
    for (const auto& r : rows) {
      out_rows.push_back({{"info_nats", r.info_nats},
                          {"halfspace_ambiguity", r.halfspace_ambiguity},
                          {"polytope_ambiguity", r.polytope_ambiguity},
                          {"floor", r.floor}});
    }
    std::cout << json{{"out", opt.out_path}, {"rows", out_rows}}.dump(2) << "\n";
  } else {
    std::cout << "wrote " << rows.size() << " rows to " << opt.out_path << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// ldp-verify

struct LdpOptions {
  double r = 0.3;
  double q = 0.7;
  std::string k_grid = "500,1000,2000";
  std::int64_t trials = 10000;
  std::int64_t mc_k = 0;  // 0: choose from the theoretical rate
  std::uint64_t seed = 1;
  double tolerance = 0.05;
  std::string out_path;
};

int run_ldp_verify(const LdpOptions& opt) {
  const Probability r(opt.r);
  const Probability q(opt.q);
  const RateEstimate estimate = sanov_rate_check(r, q, parse_k_grid(opt.k_grid));

  json records = json::array();
  for (std::size_t i = 0; i < estimate.k_values.size(); ++i) {
    records.push_back({{"k", estimate.k_values[i]}, {"log_prob", estimate.log_probs[i]}});
  }

  // Monte Carlo cross-check at a k where the event is observable.
  std::int64_t k_mc = opt.mc_k;
  if (k_mc <= 0) {
    const double suggested = 3.0 / std::max(estimate.theoretical_rate, 3e-4);
    k_mc = std::clamp<std::int64_t>(static_cast<std::int64_t>(std::llround(suggested)), 4, 10000);
  }
  const DiscreteBelief binary({opt.r, 1.0 - opt.r});
  const SemanticPartition partition({Region({0}), Region({1})}, 2);
  const AmbiguityTarget target(1.0 - opt.q);
  const MonteCarloEstimate mc =
      monte_carlo_ambiguity(binary, partition, target, k_mc, opt.trials, opt.seed);

  // The ambiguity event is the union of the two region tails; they are
  // disjoint when the count threshold exceeds k/2, and cover everything
  // otherwise. The region-A tail alone is the rare event behind the rate.
  const double region_tail_log = binomial_tail_exact(k_mc, r, q);
  const double tail_a = std::exp(region_tail_log);
  const double tail_b = std::exp(binomial_tail_exact(k_mc, Probability(1.0 - opt.r), q));
  const double exact = opt.q > 0.5 ? std::min(tail_a + tail_b, 1.0) : 1.0;
  const double se_exact = std::sqrt(exact * (1.0 - exact) / static_cast<double>(opt.trials));
  const bool mc_ok = std::fabs(mc.frequency - exact) <= 3.0 * std::max(se_exact, mc.std_error);

  const bool within = estimate.relative_gap() <= opt.tolerance;
  json doc{{"r", opt.r},
           {"q", opt.q},
           {"records", records},
           {"fitted_rate", estimate.fitted_rate},
           {"theoretical_rate", estimate.theoretical_rate},
           {"relative_gap", estimate.relative_gap()},
           {"tolerance", opt.tolerance},
           {"within_tolerance", within},
           {"asymptotic_note", "rates drop the o(k) Sanov correction"},
           {"monte_carlo",
            json{{"k", k_mc},
                 {"trials", opt.trials},
                 {"seed", opt.seed},
                 {"records", json::array({json{{"k", k_mc},
                                               {"frequency", mc.frequency},
                                               {"stderr", mc.std_error}}})},
                 {"ambiguity_event_exact", exact},
                 {"region_tail_exact", tail_a},
                 {"region_tail_log_prob", region_tail_log},
                 {"within_3_std_errors", mc_ok}}}};

  const std::string text = doc.dump(2) + "\n";
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(opt.out_path, text);
  }
  if (!within) {
    std::cerr << "verification failure: fitted rate " << format_double(estimate.fitted_rate)
              << " deviates from " << format_double(estimate.theoretical_rate) << " by "
              << format_double(estimate.relative_gap()) << " (> " << opt.tolerance << ")\n";
    return kExitVerification;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// gaussian

struct GaussianKlOptions {
  std::string p_path;
  std::string p0_path;
  bool as_json = false;
};

int run_gaussian_kl(const GaussianKlOptions& opt) {
  const GaussianBelief p = gaussian_from_json(load_json_file(opt.p_path));
  const GaussianBelief p0 = gaussian_from_json(load_json_file(opt.p0_path));
  const double kl = gaussian_kl(p, p0);
  if (opt.as_json) {
    std::cout << json{{"kl_nats", kl}}.dump(2) << "\n";
  } else {
    std::cout << "kl_nats: " << format_double(kl) << "\n";
  }
  return kExitOk;
}

struct GaussianHalfspaceOptions {
  std::string belief_path;
  std::string halfspace_path;
  double epsilon = 0.1;
  bool as_json = false;
};

int run_gaussian_halfspace(const GaussianHalfspaceOptions& opt) {
  const GaussianBelief p0 = gaussian_from_json(load_json_file(opt.belief_path));
  const HalfSpace h = halfspace_from_json(load_json_file(opt.halfspace_path));
  const AmbiguityTarget target(opt.epsilon);

  const double mass = halfspace_mass(p0, h).value();
  const double delta0 = halfspace_delta0(p0, h);
  const double info = halfspace_resolution_info(delta0, target);
  const Eigen::VectorXd shift = halfspace_optimal_shift(p0, h, target);
  const GaussianBelief shifted(p0.mean() + shift, p0.covariance());
  const double post_mass = halfspace_mass(shifted, h).value();
  const std::vector<double> shift_vec(shift.data(), shift.data() + shift.size());

  if (opt.as_json) {
    std::cout << json{{"prior_mass", mass},
                      {"delta0", delta0},
                      {"info_nats", info},
                      {"optimal_shift", shift_vec},
                      {"post_shift_mass", post_mass}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "prior_mass: " << format_double(mass) << "\n"
              << "delta0: " << format_double(delta0) << "\n"
              << "info_nats: " << format_double(info) << "\n"
              << "optimal_shift: [" << join_doubles(shift_vec) << "]\n"
              << "post_shift_mass: " << format_double(post_mass) << "\n";
  }
  return kExitOk;
}

struct GaussianPolytopeOptions {
  std::string polytope_path;
  int m = 0;
  double a = 0.0;
  double sigma0 = 1.0;
  double sigma_min = 1e-9;
  double epsilon = 0.1;
  bool as_json = false;
};

OrthantPolytope polytope_from_options(const std::string& path, int m, double a) {
  if (!path.empty()) {
    return polytope_from_json(load_json_file(path));
  }
  if (m <= 0 || a <= 0.0) {
    throw std::invalid_argument("provide --polytope FILE or both --m and --a");
  }
  return OrthantPolytope(m, a);
}

int run_gaussian_polytope(const GaussianPolytopeOptions& opt) {
  const OrthantPolytope polytope = polytope_from_options(opt.polytope_path, opt.m, opt.a);
  const PrecisionLimit lim(opt.sigma_min);
  const AmbiguityTarget target(opt.epsilon);

  const FloorResult floor = ambiguity_floor(polytope, lim);
  const PolytopeResolution res = polytope_resolution_info(opt.sigma0, polytope, lim, target);

  json doc{{"m", polytope.dimension()},
           {"a", polytope.threshold()},
           {"sigma0", opt.sigma0},
           {"sigma_min", lim.sigma_min()},
           {"epsilon", opt.epsilon},
           {"epsilon_min", floor.epsilon_min.value()},
           {"feasible", res.feasible}};
  if (res.feasible) {
    doc["info_nats"] = res.info_nats;
    // The sigma the posterior actually uses: no shrink when already feasible.
    doc["sigma_target"] = polytope_mass(opt.sigma0, polytope).complement() <= opt.epsilon
                              ? opt.sigma0
                              : std::max(polytope_sigma_star(polytope, target), lim.sigma_min());
  } else {
    doc["info_nats"] = "infinite";
  }

  if (opt.as_json) {
    std::cout << doc.dump(2) << "\n";
  } else if (res.feasible) {
    std::cout << "feasible: true\n"
              << "info_nats: " << format_double(res.info_nats) << "\n"
              << "epsilon_min: " << format_double(floor.epsilon_min.value()) << "\n";
  } else {
    std::cout << "feasible: false (epsilon below the ambiguity floor; resolution information "
                 "is infinite)\n"
              << "epsilon_min: " << format_double(floor.epsilon_min.value()) << "\n";
  }
  return kExitOk;
}

struct GaussianFloorOptions {
  std::string polytope_path;
  int m = 0;
  double a = 0.0;
  double sigma_min = 1.0;
  double mu_max = 0.0;  // shortcut: a = mu_max, sigma_min = 1
  double epsilon = -1.0;
  bool as_json = false;
};

int run_gaussian_floor(const GaussianFloorOptions& opt) {
  GaussianFloorOptions cfg = opt;
  if (cfg.mu_max > 0.0) {
    cfg.a = cfg.mu_max;
    cfg.sigma_min = 1.0;
    if (cfg.m <= 0) {
      throw std::invalid_argument("--mu-max requires --m");
    }
  }
  const OrthantPolytope polytope = polytope_from_options(cfg.polytope_path, cfg.m, cfg.a);
  const PrecisionLimit lim(cfg.sigma_min);
  const FloorResult floor = ambiguity_floor(polytope, lim);
  if (cfg.epsilon >= 0.0) {
    AmbiguityTarget{cfg.epsilon};  // validate the range before reporting feasibility
  }

  json doc{{"m", polytope.dimension()},
           {"a", polytope.threshold()},
           {"sigma_min", lim.sigma_min()},
           {"mu_max", floor.mu_max},
           {"p_max", floor.p_max.value()},
           {"epsilon_min", floor.epsilon_min.value()}};
  if (cfg.epsilon >= 0.0) {
    doc["epsilon"] = cfg.epsilon;
    doc["feasible"] = cfg.epsilon >= floor.epsilon_min.value();
  }

  if (cfg.as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "mu_max: " << format_double(floor.mu_max) << "\n"
              << "p_max: " << format_double(floor.p_max.value()) << "\n"
              << "epsilon_min: " << format_double(floor.epsilon_min.value()) << "\n";
    if (cfg.epsilon >= 0.0) {
      if (cfg.epsilon >= floor.epsilon_min.value()) {
        std::cout << "epsilon " << format_double(cfg.epsilon) << " is attainable\n";
      } else {
        std::cout << "epsilon " << format_double(cfg.epsilon)
                  << " lies below the floor: infeasible (resolution information is infinite)\n";
      }
    }
  }
  return kExitOk;
}

struct GaussianResolvabilityOptions {
  std::string polytope_path;
  int m = 0;
  double a = 0.0;
  double sigma_min = 1.0;
  double mu_max = 0.0;
  double gamma0 = 0.9;
  double c = 1.0;
  bool as_json = false;
};

int run_gaussian_resolvability(const GaussianResolvabilityOptions& opt) {
  GaussianResolvabilityOptions cfg = opt;
  if (cfg.mu_max > 0.0) {
    cfg.a = cfg.mu_max;
    cfg.sigma_min = 1.0;
    if (cfg.m <= 0) {
      throw std::invalid_argument("--mu-max requires --m");
    }
  }
  const OrthantPolytope polytope = polytope_from_options(cfg.polytope_path, cfg.m, cfg.a);
  const ResolvabilityBound bound = gaussian_resolvability_bound(
      Probability(cfg.gamma0), polytope, PrecisionLimit(cfg.sigma_min), cfg.c);

  if (cfg.as_json) {
    json doc{{"gamma0", cfg.gamma0}, {"c", cfg.c}, {"bounded", bound.bounded},
             {"degenerate", bound.degenerate}};
    doc["value"] = bound.bounded ? json(bound.value) : json("unbounded");
    std::cout << doc.dump(2) << "\n";
  } else if (!bound.bounded) {
    std::cout << "resolvability: unbounded (the ambiguity floor vanishes)\n";
  } else {
    std::cout << "resolvability_bound_nats: " << format_double(bound.value) << "\n";
    if (bound.degenerate) {
      std::cout << "note: gamma0 does not exceed the floor; no resolvable gap\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resolution information toolkit: minimum KL belief updates for ambiguity "
               "targets, ambiguity floors, and large-deviation rate verification"};
  app.require_subcommand(1);

  ResolveOptions resolve_opt;
  CLI::App* resolve = app.add_subcommand(
      "resolve", "Project a discrete belief onto a low-ambiguity set over a partition");
  resolve->add_option("--belief", resolve_opt.belief_path, "JSON file {\"probs\": [...]}")
      ->required();
  resolve
      ->add_option("--partition", resolve_opt.partition_path,
                   "JSON file {\"regions\": [[...], ...]}")
      ->required();
  resolve->add_option("--epsilon", resolve_opt.epsilon, "target ambiguity in [0, 1)")->required();
  resolve->add_flag("--json", resolve_opt.as_json, "emit a JSON document");

  HeatmapOptions tradeoff_opt;
  tradeoff_opt.x_grid = "1e-3:0.15:200:log";
  tradeoff_opt.y_grid = "1e-3:0.25:200:log";
  CLI::App* tradeoff = app.add_subcommand(
      "tradeoff-heatmap", "CSV grid of resolution information over (prior mass, epsilon)");
  tradeoff->add_option("--prior-mass-grid", tradeoff_opt.x_grid, "lo:hi:n[:log|:linear]")->capture_default_str();
  tradeoff->add_option("--epsilon-grid", tradeoff_opt.y_grid, "lo:hi:n[:log|:linear]")->capture_default_str();
  tradeoff->add_option("--out", tradeoff_opt.out_path, "output CSV path")->required();
  tradeoff->add_flag("--json", tradeoff_opt.as_json, "also print the cells as JSON");

  HeatmapOptions floor_opt;
  floor_opt.x_grid = "1:40:40:linear";
  floor_opt.y_grid = "0.25:4:200:linear";
  CLI::App* floor_cmd = app.add_subcommand(
      "floor-heatmap", "CSV grid of the ambiguity floor over (m, mu_max)");
  floor_cmd->add_option("--m-grid", floor_opt.x_grid, "integer axis lo:hi:n[:linear]")->capture_default_str();
  floor_cmd->add_option("--mu-max-grid", floor_opt.y_grid, "lo:hi:n[:log|:linear]")->capture_default_str();
  floor_cmd->add_option("--out", floor_opt.out_path, "output CSV path")->required();
  floor_cmd->add_flag("--json", floor_opt.as_json, "also print the cells as JSON");

  DecayOptions decay_opt;
  CLI::App* decay = app.add_subcommand(
      "decay-curves", "CSV of half-space vs polytope ambiguity against the information budget");
  decay->add_option("--delta0", decay_opt.delta0, "initial signed distance to the half-space")->capture_default_str();
  decay->add_option("--m", decay_opt.m, "polytope dimension")->capture_default_str();
  decay->add_option("--a", decay_opt.a, "polytope threshold")->capture_default_str();
  decay->add_option("--sigma0", decay_opt.sigma0, "prior isotropic sigma")->capture_default_str();
  decay->add_option("--sigma-min", decay_opt.sigma_min,
                    "precision limit (default a / 2.13)");
  decay->add_option("--info-grid", decay_opt.info_grid, "lo:hi:n[:log|:linear]")->capture_default_str();
  decay->add_option("--out", decay_opt.out_path, "output CSV path")->required();
  decay->add_flag("--json", decay_opt.as_json, "also print the rows as JSON");

  LdpOptions ldp_opt;
  CLI::App* ldp = app.add_subcommand(
      "ldp-verify", "Check the fitted ambiguity exponent against the binary divergence");
  ldp->add_option("--r", ldp_opt.r, "prior region mass")->required();
  ldp->add_option("--q", ldp_opt.q, "posterior mass target (q > r)")->required();
  ldp->add_option("--k-grid", ldp_opt.k_grid, "comma-separated sample counts")->capture_default_str();
  ldp->add_option("--trials", ldp_opt.trials, "Monte Carlo trials")->capture_default_str();
  ldp->add_option("--mc-k", ldp_opt.mc_k, "Monte Carlo k (0 = choose from the rate)")->capture_default_str();
  ldp->add_option("--seed", ldp_opt.seed, "Monte Carlo seed")->capture_default_str();
  ldp->add_option("--tolerance", ldp_opt.tolerance, "relative gap tolerance")->capture_default_str();
  ldp->add_option("--out", ldp_opt.out_path, "write the JSON report here instead of stdout");

  CLI::App* gaussian = app.add_subcommand("gaussian", "Gaussian-family computations");
  gaussian->require_subcommand(1);

  GaussianKlOptions gkl_opt;
  CLI::App* gkl = gaussian->add_subcommand("kl", "KL divergence between two Gaussian beliefs");
  gkl->add_option("--p", gkl_opt.p_path, "posterior JSON {\"mean\": [...], \"cov\": [[...]]}")
      ->required();
  gkl->add_option("--p0", gkl_opt.p0_path, "prior JSON")->required();
  gkl->add_flag("--json", gkl_opt.as_json, "emit a JSON document");

  GaussianHalfspaceOptions ghs_opt;
  CLI::App* ghs = gaussian->add_subcommand(
      "halfspace", "Half-space mass, distance, optimal shift, and resolution cost");
  ghs->add_option("--belief", ghs_opt.belief_path, "prior JSON")->required();
  ghs->add_option("--halfspace", ghs_opt.halfspace_path, "JSON {\"w\": [...], \"T\": t}")
      ->required();
  ghs->add_option("--epsilon", ghs_opt.epsilon, "target ambiguity")->required();
  ghs->add_flag("--json", ghs_opt.as_json, "emit a JSON document");

  GaussianPolytopeOptions gpt_opt;
  CLI::App* gpt = gaussian->add_subcommand(
      "polytope", "Isotropic-shrink resolution cost for an orthant polytope");
  gpt->add_option("--polytope", gpt_opt.polytope_path, "JSON {\"m\": 5, \"a\": 1.0}");
  gpt->add_option("--m", gpt_opt.m, "polytope dimension");
  gpt->add_option("--a", gpt_opt.a, "polytope threshold");
  gpt->add_option("--sigma0", gpt_opt.sigma0, "prior isotropic sigma")->capture_default_str();
  gpt->add_option("--sigma-min", gpt_opt.sigma_min, "precision limit")->capture_default_str();
  gpt->add_option("--epsilon", gpt_opt.epsilon, "target ambiguity")->required();
  gpt->add_flag("--json", gpt_opt.as_json, "emit a JSON document");

  GaussianFloorOptions gfl_opt;
  CLI::App* gfl = gaussian->add_subcommand("floor", "Irreducible ambiguity floor");
  gfl->add_option("--polytope", gfl_opt.polytope_path, "JSON {\"m\": 5, \"a\": 1.0}");
  gfl->add_option("--m", gfl_opt.m, "polytope dimension");
  gfl->add_option("--a", gfl_opt.a, "polytope threshold");
  gfl->add_option("--sigma-min", gfl_opt.sigma_min, "precision limit")->capture_default_str();
  gfl->add_option("--mu-max", gfl_opt.mu_max, "shortcut: margin a/sigma_min directly");
  gfl->add_option("--epsilon", gfl_opt.epsilon, "optional target to test against the floor");
  gfl->add_flag("--json", gfl_opt.as_json, "emit a JSON document");

  GaussianResolvabilityOptions grs_opt;
  CLI::App* grs =
      gaussian->add_subcommand("resolvability", "Floor-induced resolvability bound");
  grs->add_option("--polytope", grs_opt.polytope_path, "JSON {\"m\": 5, \"a\": 1.0}");
  grs->add_option("--m", grs_opt.m, "polytope dimension");
  grs->add_option("--a", grs_opt.a, "polytope threshold");
  grs->add_option("--sigma-min", grs_opt.sigma_min, "precision limit")->capture_default_str();
  grs->add_option("--mu-max", grs_opt.mu_max, "shortcut: margin a/sigma_min directly");
  grs->add_option("--gamma0", grs_opt.gamma0, "initial ambiguity")->capture_default_str();
  grs->add_option("--c", grs_opt.c, "concentration constant")->capture_default_str();
  grs->add_flag("--json", grs_opt.as_json, "emit a JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (resolve->parsed()) return run_resolve(resolve_opt);
    if (tradeoff->parsed()) return run_tradeoff(tradeoff_opt);
    if (floor_cmd->parsed()) return run_floor_heatmap(floor_opt);
    if (decay->parsed()) return run_decay_curves(decay_opt);
    if (ldp->parsed()) return run_ldp_verify(ldp_opt);
    if (gaussian->parsed()) {
      if (gkl->parsed()) return run_gaussian_kl(gkl_opt);
      if (ghs->parsed()) return run_gaussian_halfspace(ghs_opt);
      if (gpt->parsed()) return run_gaussian_polytope(gpt_opt);
      if (gfl->parsed()) return run_gaussian_floor(gfl_opt);
      if (grs->parsed()) return run_gaussian_resolvability(grs_opt);
    }
    std::cerr << "no subcommand selected\n";
    return kExitInput;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}

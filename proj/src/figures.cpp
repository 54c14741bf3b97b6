#include "resinfo/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "resinfo/resolution.hpp"

namespace resinfo {
namespace {

// Deterministic parallel sweep: every index writes its own slot, so the
// result is identical to a serial run regardless of the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const int threads = std::min<int>(sweep_thread_count(), static_cast<int>(n));
  if (threads <= 1 || n < 256) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(threads));
  const std::size_t chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::size_t begin = chunk * static_cast<std::size_t>(t);
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) body(i);
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace

GridSpec::GridSpec(double lo, double hi, int n, bool log_axis)
    : axis_min(lo), axis_max(hi), points(n), log_scale(log_axis) {
  if (!(axis_min < axis_max)) {
    throw std::invalid_argument("GridSpec: axis_min must be below axis_max");
  }
  if (points < 2) {
    throw std::invalid_argument("GridSpec: need at least 2 points");
  }
  if (log_scale && !(axis_min > 0.0)) {
    throw std::invalid_argument("GridSpec: log scale requires positive endpoints");
  }
}

GridSpec GridSpec::parse(const std::string& text) {
  double lo = 0.0;
  double hi = 0.0;
  int n = 0;
  char scale[16] = "linear";
  const int matched =
      std::sscanf(text.c_str(), "%lf:%lf:%d:%15s", &lo, &hi, &n, scale);
  if (matched < 3) {
    throw std::invalid_argument("GridSpec: expected \"lo:hi:n[:log|:linear]\", got \"" + text +
                                "\"");
  }
  const std::string scale_name(scale);
  if (scale_name != "log" && scale_name != "linear") {
    throw std::invalid_argument("GridSpec: scale must be \"log\" or \"linear\", got \"" +
                                scale_name + "\"");
  }
  return GridSpec(lo, hi, n, scale_name == "log");
}

std::vector<double> GridSpec::values() const {
  std::vector<double> out(static_cast<std::size_t>(points));
  const double lo = log_scale ? std::log(axis_min) : axis_min;
  const double hi = log_scale ? std::log(axis_max) : axis_max;
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (int i = 0; i < points; ++i) {
    const double v = lo + step * static_cast<double>(i);
    out[static_cast<std::size_t>(i)] = log_scale ? std::exp(v) : v;
  }
  // Pin the endpoints so log grids round-trip exactly.
  out.front() = axis_min;
  out.back() = axis_max;
  return out;
}

std::vector<TradeoffCell> tradeoff_heatmap(const GridSpec& prior_grid,
                                           const GridSpec& epsilon_grid) {
  const std::vector<double> priors = prior_grid.values();
  const std::vector<double> epsilons = epsilon_grid.values();
  for (double pm : priors) {
    if (!(pm > 0.0 && pm < 1.0)) {
      throw std::invalid_argument("tradeoff_heatmap: prior-mass axis must lie inside (0, 1)");
    }
  }
  for (double eps : epsilons) {
    if (!(eps >= 0.0 && eps < 1.0)) {
      throw std::invalid_argument("tradeoff_heatmap: epsilon axis must lie inside [0, 1)");
    }
  }
  std::vector<TradeoffCell> cells(priors.size() * epsilons.size());
  parallel_for(cells.size(), [&](std::size_t idx) {
    const double pm = priors[idx / epsilons.size()];
    const double eps = epsilons[idx % epsilons.size()];
    cells[idx] = {pm, eps, resolution_info_region(Probability(pm), AmbiguityTarget(eps))};
  });
  return cells;
}

std::vector<FloorCell> floor_heatmap(const GridSpec& m_grid, const GridSpec& mu_grid) {
  const std::vector<double> m_axis = m_grid.values();
  const std::vector<double> mu_axis = mu_grid.values();
  std::vector<int> ms(m_axis.size());
  for (std::size_t i = 0; i < m_axis.size(); ++i) {
    ms[i] = static_cast<int>(std::llround(m_axis[i]));
    if (ms[i] < 1) {
      throw std::invalid_argument("floor_heatmap: m axis must round to integers >= 1");
    }
  }
  for (double mu : mu_axis) {
    if (!(mu > 0.0)) {
      throw std::invalid_argument("floor_heatmap: mu_max axis must be positive");
    }
  }
  std::vector<FloorCell> cells(ms.size() * mu_axis.size());
  parallel_for(cells.size(), [&](std::size_t idx) {
    const int m = ms[idx / mu_axis.size()];
    const double mu = mu_axis[idx % mu_axis.size()];
    const FloorResult floor = ambiguity_floor(OrthantPolytope(m, mu), PrecisionLimit(1.0));
    cells[idx] = {m, mu, floor.epsilon_min.value()};
  });
  return cells;
}

std::vector<DecayRow> decay_curves(double delta0, double sigma0, const OrthantPolytope& polytope,
                                   const PrecisionLimit& lim, const GridSpec& info_grid) {
  const std::vector<double> info = info_grid.values();
  const std::vector<CurvePoint> half = halfspace_ambiguity_curve(delta0, info);
  const std::vector<CurvePoint> poly = polytope_ambiguity_curve(sigma0, polytope, lim, info);
  const double floor = ambiguity_floor(polytope, lim).epsilon_min.value();
  std::vector<DecayRow> rows(info.size());
  for (std::size_t i = 0; i < info.size(); ++i) {
    rows[i] = {info[i], half[i].ambiguity, poly[i].ambiguity, floor};
  }
  return rows;
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_tradeoff_csv(std::ostream& out, const std::vector<TradeoffCell>& cells) {
  out << "prior_mass,epsilon,info_nats\n";
  for (const auto& c : cells) {
    out << format_double(c.prior_mass) << ',' << format_double(c.epsilon) << ','
        << format_double(c.info_nats) << '\n';
  }
}

void write_floor_csv(std::ostream& out, const std::vector<FloorCell>& cells) {
  out << "m,mu_max,epsilon_min\n";
  for (const auto& c : cells) {
    out << c.m << ',' << format_double(c.mu_max) << ',' << format_double(c.epsilon_min) << '\n';
  }
}

void write_decay_csv(std::ostream& out, const std::vector<DecayRow>& rows) {
  out << "info_nats,halfspace_ambiguity,polytope_ambiguity,floor\n";
  for (const auto& r : rows) {
    out << format_double(r.info_nats) << ',' << format_double(r.halfspace_ambiguity) << ','
        << format_double(r.polytope_ambiguity) << ',' << format_double(r.floor) << '\n';
  }
}

int sweep_thread_count() {
  const char* env = std::getenv("RESINFO_THREADS");
  if (env != nullptr && env[0] != '\0') {
    const int requested = std::atoi(env);
    if (requested > 0) return requested;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace resinfo

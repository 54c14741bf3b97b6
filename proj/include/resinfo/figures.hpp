#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "resinfo/gaussian.hpp"
#include "resinfo/types.hpp"

namespace resinfo {

/// Evaluation grid for one figure axis.
struct GridSpec {
  double axis_min = 0.0;
  double axis_max = 1.0;
  int points = 2;
  bool log_scale = false;

  GridSpec() = default;
  GridSpec(double lo, double hi, int n, bool log_axis);

  /// Parse "lo:hi:n[:log|:linear]".
  static GridSpec parse(const std::string& text);

  std::vector<double> values() const;
};

struct TradeoffCell {
  double prior_mass = 0.0;
  double epsilon = 0.0;
  double info_nats = 0.0;
};

struct FloorCell {
  int m = 1;
  double mu_max = 0.0;
  double epsilon_min = 0.0;
};

struct DecayRow {
  double info_nats = 0.0;
  double halfspace_ambiguity = 0.0;
  double polytope_ambiguity = 0.0;
  double floor = 0.0;
};

/// Resolution information over a (prior mass, epsilon) grid, row-major with
/// the prior-mass axis outer. Cells with 1 - eps <= prior mass clamp to 0.
std::vector<TradeoffCell> tradeoff_heatmap(const GridSpec& prior_grid,
                                           const GridSpec& epsilon_grid);

/// Ambiguity floor 1 - Phi(mu_max)^m over an (m, mu_max) grid, row-major
/// with the integer m axis outer.
std::vector<FloorCell> floor_heatmap(const GridSpec& m_grid, const GridSpec& mu_grid);

/// Half-space and polytope ambiguity against the information budget, plus
/// the constant floor column.
std::vector<DecayRow> decay_curves(double delta0, double sigma0, const OrthantPolytope& polytope,
                                   const PrecisionLimit& lim, const GridSpec& info_grid);

/// 17-significant-digit decimal form; parses back to exactly the same double.
std::string format_double(double value);

void write_tradeoff_csv(std::ostream& out, const std::vector<TradeoffCell>& cells);
void write_floor_csv(std::ostream& out, const std::vector<FloorCell>& cells);
void write_decay_csv(std::ostream& out, const std::vector<DecayRow>& rows);

/// Worker count for grid sweeps: the RESINFO_THREADS environment variable,
/// with 0 or unset meaning automatic.
int sweep_thread_count();

}  // namespace resinfo

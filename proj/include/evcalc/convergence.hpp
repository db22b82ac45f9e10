#ifndef EVCALC_CONVERGENCE_HPP
#define EVCALC_CONVERGENCE_HPP

// Runs Dempster's rule and the lower/upper frequency calculus side by side
// over a stream of binary outcomes and records where each one goes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "evcalc/evidence_scale.hpp"

namespace evcalc::lab {

enum class Outcome : std::uint8_t { negative, positive };

enum class StreamMode {
  /// i.i.d. draws with chance q from a seeded std::mt19937_64.
  bernoulli,
  /// Positive at step t+1 iff floor(q (t+1)) > floor(q t), so |t+ - q t| < 1.
  frequency_faithful,
  /// delta negatives, then +,-,+,-,... so that t- - t+ == delta whenever
  /// t - delta is even.
  delta_profile,
  /// Caller-supplied outcomes.
  explicit_outcomes,
};

struct StreamSpec {
  StreamMode mode = StreamMode::frequency_faithful;
  double q = 0.5;
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::int64_t steps = 0;
  std::vector<Outcome> outcomes;
  /// Row stride for run_dual_track; t = 0 and the final step are always kept.
  std::int64_t record_every = 1;

  /// Throws ValidationError / UnsupportedError.
  void validate() const;
  /// Number of outcomes the stream will produce.
  std::int64_t length() const;
};

std::vector<Outcome> generate_stream(const StreamSpec& spec);

struct TrajectoryRow {
  std::int64_t t = 0;
  std::int64_t t_plus = 0;
  /// Sequential Dempster folding of one simple support per outcome.
  double ds_bel = 0.0;
  double ds_pl = 1.0;
  /// Closed-form belief from the accumulated weights.
  double weight_bel = 0.0;
  double weight_pl = 1.0;
  double lu_l = 0.0;
  double lu_u = 1.0;
  /// w+ / w; empty while no evidence has arrived.
  std::optional<double> freq;
};

struct Trajectory {
  std::vector<TrajectoryRow> rows;
  /// Largest |ds - weight| over bel and pl at every step, recorded or not.
  double max_track_gap = 0.0;

  const TrajectoryRow& final_row() const { return rows.back(); }
};

Trajectory run_dual_track(const StreamSpec& spec,
                          const UnitWeightsd& unit = UnitWeightsd::unit());

struct LimitReport {
  /// classify_limit(q); set for bernoulli and frequency_faithful.
  std::optional<double> predicted;
  double final_bel = 0.0;
  double final_pl = 1.0;
  /// max(|bel - predicted|, |pl - predicted|).
  std::optional<double> prediction_error;
  /// |f - q| and |l - q| at the final step.
  std::optional<double> freq_error;
  std::optional<double> lu_error;
  /// delta_limit(delta) and the Dempster belief at the last step on profile.
  std::optional<double> delta_expected;
  std::optional<double> delta_bel;
  std::optional<double> delta_error;
  std::optional<std::int64_t> delta_step;
};

LimitReport check_limits(const Trajectory& traj, const StreamSpec& spec,
                         const UnitWeightsd& unit = UnitWeightsd::unit());

/// CSV with header `t,t_plus,bel,pl,l,u,f`, 12 significant digits; f is empty
/// at t = 0.
void write_csv(std::ostream& os, const Trajectory& traj);

}  // namespace evcalc::lab

#endif  // EVCALC_CONVERGENCE_HPP

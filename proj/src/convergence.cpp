#include "evcalc/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <string>

#include "evcalc/dempster.hpp"
#include "evcalc/frequency.hpp"

namespace evcalc::lab {

namespace {

bool is_integer(double x) { return std::isfinite(x) && std::floor(x) == x; }

// Top 53 bits of the engine output, scaled into [0, 1).
double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace

void StreamSpec::validate() const {
  if (record_every < 1) throw ValidationError("record_every must be >= 1");
  switch (mode) {
    case StreamMode::bernoulli:
    case StreamMode::frequency_faithful:
      if (!(q >= 0.0 && q <= 1.0)) throw ValidationError("q must lie in [0,1]");
      if (steps < 0) throw ValidationError("steps must be >= 0");
      break;
    case StreamMode::delta_profile:
      if (!is_integer(delta) || delta < 0.0) {
        throw UnsupportedError("delta_profile supports only integer delta >= 0");
      }
      if (steps < 0) throw ValidationError("steps must be >= 0");
      break;
    case StreamMode::explicit_outcomes:
      break;
  }
}

std::int64_t StreamSpec::length() const {
  return mode == StreamMode::explicit_outcomes
             ? static_cast<std::int64_t>(outcomes.size())
             : steps;
}

std::vector<Outcome> generate_stream(const StreamSpec& spec) {
  spec.validate();
  const std::int64_t n = spec.length();
  std::vector<Outcome> out;
  out.reserve(static_cast<std::size_t>(n));
  switch (spec.mode) {
    case StreamMode::bernoulli: {
      std::mt19937_64 engine(spec.seed);
      for (std::int64_t t = 0; t < n; ++t) {
        out.push_back(uniform01(engine) < spec.q ? Outcome::positive : Outcome::negative);
      }
      break;
    }
    case StreamMode::frequency_faithful:
      for (std::int64_t t = 0; t < n; ++t) {
        const bool up = std::floor(spec.q * double(t + 1)) > std::floor(spec.q * double(t));
        out.push_back(up ? Outcome::positive : Outcome::negative);
      }
      break;
    case StreamMode::delta_profile: {
      const auto lead = static_cast<std::int64_t>(spec.delta);
      for (std::int64_t t = 0; t < n; ++t) {
        const bool up = t >= lead && (t - lead) % 2 == 0;
        out.push_back(up ? Outcome::positive : Outcome::negative);
      }
      break;
    }
    case StreamMode::explicit_outcomes:
      out = spec.outcomes;
      break;
  }
  return out;
}

Trajectory run_dual_track(const StreamSpec& spec, const UnitWeightsd& unit) {
  if (spec.mode == StreamMode::delta_profile && !unit.is_unit()) {
    throw UnsupportedError("delta_profile is defined for unit weights only");
  }
  const auto stream = generate_stream(spec);
  const auto n = static_cast<std::int64_t>(stream.size());

  const auto pos_support =
      BeliefIntervald::make(support_from_weight(unit.w0_plus()), 1.0);
  const auto neg_support =
      BeliefIntervald::make(0.0, 1.0 - support_from_weight(unit.w0_minus()));

  Trajectory traj;
  traj.rows.reserve(static_cast<std::size_t>(n / spec.record_every + 2));

  auto ds = BeliefIntervald::vacuous();
  std::int64_t t_plus = 0;
  TrajectoryRow row;  // t = 0, vacuous everywhere
  traj.rows.push_back(row);

  for (std::int64_t t = 1; t <= n; ++t) {
    const bool positive = stream[static_cast<std::size_t>(t - 1)] == Outcome::positive;
    if (positive) ++t_plus;
    ds = combine_interval(ds, positive ? pos_support : neg_support);

    const double w_plus = unit.w0_plus() * double(t_plus);
    const double w_minus = unit.w0_minus() * double(t - t_plus);
    const auto closed = belief_from_weights(EvidenceWeightsd::finite(w_plus, w_minus));
    traj.max_track_gap = std::max({traj.max_track_gap, std::abs(ds.bel() - closed.bel()),
                                   std::abs(ds.pl() - closed.pl())});

    if (t % spec.record_every != 0 && t != n) continue;
    const double w_total = w_plus + w_minus;
    const auto lu = interval_from_counts(EvidenceCountsd::make(w_plus, w_total));
    row.t = t;
    row.t_plus = t_plus;
    row.ds_bel = ds.bel();
    row.ds_pl = ds.pl();
    row.weight_bel = closed.bel();
    row.weight_pl = closed.pl();
    row.lu_l = lu.l();
    row.lu_u = lu.u();
    row.freq = w_plus / w_total;
    traj.rows.push_back(row);
  }
  return traj;
}

LimitReport check_limits(const Trajectory& traj, const StreamSpec& spec,
                         const UnitWeightsd& unit) {
  LimitReport report;
  const auto& last = traj.final_row();
  report.final_bel = last.ds_bel;
  report.final_pl = last.ds_pl;

  if (spec.mode == StreamMode::bernoulli || spec.mode == StreamMode::frequency_faithful) {
    const double predicted = classify_limit(spec.q, unit);
    report.predicted = predicted;
    report.prediction_error =
        std::max(std::abs(last.ds_bel - predicted), std::abs(last.ds_pl - predicted));
    if (last.freq) report.freq_error = std::abs(*last.freq - spec.q);
    report.lu_error = std::abs(last.lu_l - spec.q);
  }

  if (spec.mode == StreamMode::delta_profile) {
    report.delta_expected = delta_limit(spec.delta);
    const auto target = static_cast<std::int64_t>(spec.delta);
    // The profile sits exactly on delta only when t - delta is even.
    const auto on_profile =
        std::find_if(traj.rows.rbegin(), traj.rows.rend(), [&](const TrajectoryRow& r) {
          return (r.t - r.t_plus) - r.t_plus == target;
        });
    if (on_profile != traj.rows.rend()) {
      report.delta_step = on_profile->t;
      report.delta_bel = on_profile->ds_bel;
      report.delta_error = std::abs(on_profile->ds_bel - *report.delta_expected);
    }
  }
  return report;
}

void write_csv(std::ostream& os, const Trajectory& traj) {
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << std::defaultfloat << std::setprecision(12);
  os << "t,t_plus,bel,pl,l,u,f\n";
  for (const auto& r : traj.rows) {
    os << r.t << ',' << r.t_plus << ',' << r.ds_bel << ',' << r.ds_pl << ',' << r.lu_l
       << ',' << r.lu_u << ',';
    if (r.freq) os << *r.freq;
    os << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

}  // namespace evcalc::lab

#include "evcalc/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "evcalc/convergence.hpp"
#include "evcalc/dempster.hpp"
#include "evcalc/evidence_scale.hpp"
#include "evcalc/frequency.hpp"
#include "evcalc/json_io.hpp"

namespace evcalc::cli {

namespace {

using io::Json;

/// Exit with a usage error from inside a command.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<Json> collect_values(const std::vector<std::string>& args, std::istream& in) {
  std::vector<Json> values;
  if (!args.empty()) {
    for (const auto& a : args) values.push_back(io::parse(a));
    return values;
  }
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  auto doc = io::parse(text);
  if (doc.is_array()) {
    for (auto& v : doc) values.push_back(std::move(v));
  } else {
    values.push_back(std::move(doc));
  }
  return values;
}

// ---------------------------------------------------------------- combine

int combine_dempster(const std::vector<Json>& values, std::ostream& out) {
  const bool as_mass = io::looks_like_mass(values.front());
  for (const auto& v : values) {
    if (io::looks_like_mass(v) != as_mass) {
      throw UsageError("dempster inputs must all be masses or all be belief intervals");
    }
  }
  if (as_mass) {
    auto acc = io::mass_from_json(values.front());
    for (std::size_t k = 1; k < values.size(); ++k) {
      acc = combine_mass(acc, io::mass_from_json(values[k]));
    }
    out << io::to_json(acc).dump() << '\n';
  } else {
    auto acc = io::belief_from_json(values.front());
    for (std::size_t k = 1; k < values.size(); ++k) {
      acc = combine_interval(acc, io::belief_from_json(values[k]));
    }
    out << io::to_json(acc).dump() << '\n';
  }
  return kSuccess;
}

int combine_lu_values(const std::vector<Json>& values, std::ostream& out) {
  auto acc = io::frequency_from_json(values.front());
  for (std::size_t k = 1; k < values.size(); ++k) {
    const auto next = combine(acc, io::frequency_from_json(values[k]));
    if (const auto* report = std::get_if<ConflictReportd>(&next)) {
      out << io::to_json(*report).dump() << '\n';
      return kConventionConflict;
    }
    acc = std::get<FrequencyIntervald>(next);
  }
  out << io::to_json(acc).dump() << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------- convert

enum class Scale { belpl, weights, lu, counts };

const std::map<std::string, Scale> kScales = {
    {"belpl", Scale::belpl}, {"weights", Scale::weights}, {"lu", Scale::lu}, {"counts", Scale::counts}};

// Every conversion goes through the weight scale except a frequency point,
// which has no weights and only converts to itself.
Json convert_value(Scale from, Scale to, const Json& value, double horizon) {
  std::optional<EvidenceWeightsd> hub;
  switch (from) {
    case Scale::belpl:
      hub = weights_from_belief(io::belief_from_json(value));
      break;
    case Scale::weights:
      hub = io::weights_from_json(value);
      break;
    case Scale::counts: {
      const auto c = io::counts_from_json(value);
      hub = EvidenceWeightsd::finite(c.w_plus(), c.w_minus());
      break;
    }
    case Scale::lu: {
      const auto fi = io::frequency_from_json(value);
      if (fi.is_point()) {
        if (to == Scale::lu) return io::to_json(fi);
        throw InfiniteEvidenceError(
            "a frequency point is backed by infinite evidence and has no finite "
            "weights, counts or belief interval");
      }
      const auto c = counts_from_interval(fi, horizon);
      hub = EvidenceWeightsd::finite(c.w_plus(), c.w_minus());
      break;
    }
  }

  switch (to) {
    case Scale::belpl:
      return io::to_json(belief_from_weights(*hub));
    case Scale::weights:
      return io::to_json(*hub);
    case Scale::counts:
      if (!hub->is_finite()) {
        throw InfiniteEvidenceError("infinite weights have no finite counts");
      }
      return io::to_json(EvidenceCountsd::make(hub->w_plus(), hub->total()));
    case Scale::lu:
      if (!hub->is_finite()) {
        return io::to_json(FrequencyIntervald::point(delta_limit(hub->delta())));
      }
      return io::to_json(
          interval_from_counts(EvidenceCountsd::make(hub->w_plus(), hub->total()), horizon));
  }
  return {};
}

// ---------------------------------------------------------------- simulate

std::string fmt12(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

void print_summary(const lab::Trajectory& traj, const lab::StreamSpec& spec,
                   const UnitWeightsd& unit, std::ostream& err) {
  const auto& r = traj.final_row();
  err << "final t=" << r.t << " t_plus=" << r.t_plus << " bel=" << fmt12(r.ds_bel)
      << " pl=" << fmt12(r.ds_pl) << " l=" << fmt12(r.lu_l) << " u=" << fmt12(r.lu_u)
      << " f=" << (r.freq ? fmt12(*r.freq) : std::string("undefined")) << '\n';
  err << "classify_limit prediction for Bel: " << fmt12(classify_limit(spec.q, unit))
      << " (chance q=" << fmt12(spec.q) << ")\n";
}

struct SimulateArgs {
  double q = 0.5;
  std::int64_t steps = 1000;
  std::uint64_t seed = 0;
  double w0_pos = 1.0;
  double w0_neg = 1.0;
  std::string mode = "faithful";
  std::int64_t record_every = 1;
  std::string out_path;
  std::string format = "csv";
};

int simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  lab::StreamSpec spec;
  spec.mode = a.mode == "bernoulli" ? lab::StreamMode::bernoulli
                                    : lab::StreamMode::frequency_faithful;
  spec.q = a.q;
  spec.seed = a.seed;
  spec.steps = a.steps;
  spec.record_every = a.record_every;
  const auto unit = UnitWeightsd::make(a.w0_pos, a.w0_neg);
  const auto traj = lab::run_dual_track(spec, unit);

  std::ofstream file;
  if (!a.out_path.empty()) {
    file.open(a.out_path);
    if (!file) throw UsageError("cannot open output file " + a.out_path);
  }
  std::ostream& sink = a.out_path.empty() ? out : file;
  if (a.format == "json") {
    sink << io::to_json(traj).dump() << '\n';
  } else {
    lab::write_csv(sink, traj);
  }
  print_summary(traj, spec, unit, err);
  return kSuccess;
}

int defect_demo(double q, std::int64_t steps, double w0_pos, double w0_neg,
                std::ostream& out) {
  lab::StreamSpec spec;
  spec.mode = lab::StreamMode::frequency_faithful;
  spec.q = q;
  spec.steps = steps;
  spec.record_every = std::max<std::int64_t>(steps, 1);
  const auto unit = UnitWeightsd::make(w0_pos, w0_neg);
  const auto traj = lab::run_dual_track(spec, unit);
  const auto report = lab::check_limits(traj, spec, unit);
  const auto& r = traj.final_row();
  Json j = {{"q", q},
            {"steps", steps},
            {"predicted_limit", *report.predicted},
            {"dempster", {{"bel", r.ds_bel}, {"pl", r.ds_pl}}},
            {"lu", {{"l", r.lu_l}, {"u", r.lu_u}}},
            {"frequency", r.freq ? Json(*r.freq) : Json(nullptr)},
            {"dempster_error_vs_q", std::max(std::abs(r.ds_bel - q), std::abs(r.ds_pl - q))},
            {"lu_error_vs_q", std::max(std::abs(r.lu_l - q), std::abs(r.lu_u - q))}};
  out << j.dump() << '\n';
  return kSuccess;
}

int delta_demo(const std::string& delta_text, std::int64_t steps, std::ostream& out) {
  double delta = 0.0;
  std::size_t used = 0;
  try {
    delta = std::stod(delta_text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != delta_text.size() || !std::isfinite(delta) || std::floor(delta) != delta ||
      delta < 0) {
    throw UsageError("--delta must be a nonnegative integer, got \"" + delta_text + "\"");
  }
  if (steps < delta) throw UsageError("--steps must be at least --delta");

  lab::StreamSpec spec;
  spec.mode = lab::StreamMode::delta_profile;
  spec.delta = delta;
  spec.steps = steps;
  const auto traj = lab::run_dual_track(spec);
  const auto report = lab::check_limits(traj, spec);
  if (!report.delta_step) throw Error("no step of the run sits on the requested delta");
  Json j = {{"delta", delta},
            {"steps", steps},
            {"step", *report.delta_step},
            {"final_bel", *report.delta_bel},
            {"analytic", *report.delta_expected},
            {"difference", *report.delta_bel - *report.delta_expected}};
  out << j.dump() << '\n';
  return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Evidence combination: Dempster's rule and lower/upper frequencies", "evcalc"};
  app.require_subcommand(1);

  std::string rule;
  std::vector<std::string> combine_inputs;
  auto* combine_cmd = app.add_subcommand("combine", "Left-fold a list of JSON values");
  combine_cmd->add_option("--rule", rule, "dempster | lu")
      ->required()
      ->check(CLI::IsMember({"dempster", "lu"}));
  combine_cmd->add_option("values", combine_inputs, "JSON values (default: JSON array on stdin)");

  std::string from, to;
  std::string convert_input;
  double horizon = 1.0;
  auto* convert_cmd = app.add_subcommand("convert", "Convert a value between scales");
  convert_cmd->add_option("--from", from, "belpl | weights | lu | counts")
      ->required()
      ->check(CLI::IsMember({"belpl", "weights", "lu", "counts"}));
  convert_cmd->add_option("--to", to, "belpl | weights | lu | counts")
      ->required()
      ->check(CLI::IsMember({"belpl", "weights", "lu", "counts"}));
  convert_cmd->add_option("--horizon", horizon, "horizon constant of the l-u scale")
      ->check(CLI::PositiveNumber);
  convert_cmd->add_option("value", convert_input, "JSON value (default: stdin)");

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run both calculi over an outcome stream");
  simulate_cmd->add_option("--q", sim.q, "chance of a positive outcome")
      ->check(CLI::Range(0.0, 1.0));
  simulate_cmd->add_option("--steps", sim.steps)->check(CLI::NonNegativeNumber);
  simulate_cmd->add_option("--seed", sim.seed, "seed for bernoulli mode");
  simulate_cmd->add_option("--w0-pos", sim.w0_pos)->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--w0-neg", sim.w0_neg)->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--mode", sim.mode)->check(CLI::IsMember({"bernoulli", "faithful"}));
  simulate_cmd->add_option("--record-every", sim.record_every)->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--out", sim.out_path, "CSV file (default: stdout)");
  simulate_cmd->add_option("--format", sim.format)->check(CLI::IsMember({"csv", "json"}));

  double defect_q = 0.7;
  std::int64_t defect_steps = 2000;
  double defect_w0_pos = 1.0, defect_w0_neg = 1.0;
  auto* defect_cmd = app.add_subcommand(
      "defect-demo", "Show Dempster folding converging to 0, 0.5 or 1 instead of q");
  defect_cmd->add_option("--q", defect_q)->check(CLI::Range(0.0, 1.0));
  defect_cmd->add_option("--steps", defect_steps)->check(CLI::NonNegativeNumber);
  defect_cmd->add_option("--w0-pos", defect_w0_pos)->check(CLI::PositiveNumber);
  defect_cmd->add_option("--w0-neg", defect_w0_neg)->check(CLI::PositiveNumber);

  std::string delta_text;
  std::int64_t delta_steps = 10000;
  auto* delta_cmd =
      app.add_subcommand("delta-demo", "Compare the Dempster limit with 1/(1+e^delta)");
  delta_cmd->add_option("--delta", delta_text, "integer delta >= 0")->required();
  delta_cmd->add_option("--steps", delta_steps)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? kSuccess : kUsageError;
  }

  try {
    if (*combine_cmd) {
      const auto values = collect_values(combine_inputs, in);
      if (values.size() < 2) throw UsageError("combine needs at least two values");
      return rule == "dempster" ? combine_dempster(values, out) : combine_lu_values(values, out);
    }
    if (*convert_cmd) {
      const auto values =
          collect_values(convert_input.empty() ? std::vector<std::string>{}
                                               : std::vector<std::string>{convert_input},
                         in);
      if (values.size() != 1) throw UsageError("convert takes exactly one value");
      out << convert_value(kScales.at(from), kScales.at(to), values.front(), horizon).dump()
          << '\n';
      return kSuccess;
    }
    if (*simulate_cmd) return simulate(sim, out, err);
    if (*defect_cmd) return defect_demo(defect_q, defect_steps, defect_w0_pos, defect_w0_neg, out);
    if (*delta_cmd) return delta_demo(delta_text, delta_steps, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMathError;
  }
  return kUsageError;
}

}  // namespace evcalc::cli

#ifndef EVCALC_FREQUENCY_HPP
#define EVCALC_FREQUENCY_HPP

// Lower/upper frequency calculus.
//
// With w+ positive and w total evidence, and a horizon constant k > 0
// (default 1):
//
//   l = w+ / (w + k),   u = (w+ + k) / (w + k),   i = u - l = k / (w + k).
//
// [l, u] is the range the frequency w+/w can reach once evidence of weight k
// arrives. Infinite evidence collapses the interval to a point; points are
// never moved by finite evidence and two distinct points are reported, not
// combined.

#include <cmath>
#include <variant>

#include "evcalc/binary_frame.hpp"
#include "evcalc/errors.hpp"
#include "evcalc/evidence_scale.hpp"

namespace evcalc {

/// Two points closer than this are the same judgment.
inline constexpr double kPointTolerance = 1e-12;

enum class FrequencyKind { interval, point };

template <typename Scalar>
class FrequencyInterval {
 public:
  /// Finite evidence: requires 0 <= l < u <= 1.
  static FrequencyInterval interval(Scalar l, Scalar u) {
    if (!(l >= Scalar(0) && l < u && u <= Scalar(1))) {
      throw ValidationError("frequency interval must satisfy 0 <= l < u <= 1: " +
                            detail::describe({l, u}));
    }
    return FrequencyInterval(FrequencyKind::interval, l, u);
  }

  /// Infinite evidence: a probability.
  static FrequencyInterval point(Scalar value) {
    if (!(value >= Scalar(0) && value <= Scalar(1))) {
      throw ValidationError("frequency point must lie in [0,1]");
    }
    return FrequencyInterval(FrequencyKind::point, value, value);
  }

  /// Kind chosen by the width: zero width is a point.
  static FrequencyInterval from_bounds(Scalar l, Scalar u) {
    return l == u ? point(l) : interval(l, u);
  }

  static FrequencyInterval ignorant() { return FrequencyInterval(FrequencyKind::interval, 0, 1); }

  FrequencyKind kind() const noexcept { return kind_; }
  bool is_point() const noexcept { return kind_ == FrequencyKind::point; }
  Scalar l() const noexcept { return l_; }
  Scalar u() const noexcept { return u_; }
  /// The probability carried by a point (l for intervals).
  Scalar value() const noexcept { return l_; }

  friend bool operator==(const FrequencyInterval&, const FrequencyInterval&) = default;

 private:
  FrequencyInterval(FrequencyKind kind, Scalar l, Scalar u) : kind_(kind), l_(l), u_(u) {}

  FrequencyKind kind_;
  Scalar l_;
  Scalar u_;
};

/// Accumulated evidence: positive weight and total weight.
template <typename Scalar>
class EvidenceCounts {
 public:
  static EvidenceCounts make(Scalar w_plus, Scalar w_total) {
    if (!(w_plus >= Scalar(0) && w_plus <= w_total) || !std::isfinite(w_total)) {
      throw ValidationError("evidence counts must satisfy 0 <= w_plus <= w_total < inf");
    }
    return EvidenceCounts(w_plus, w_total);
  }

  Scalar w_plus() const noexcept { return w_plus_; }
  Scalar w_total() const noexcept { return w_total_; }
  Scalar w_minus() const noexcept { return w_total_ - w_plus_; }

  friend EvidenceCounts operator+(const EvidenceCounts& a, const EvidenceCounts& b) {
    return EvidenceCounts(a.w_plus_ + b.w_plus_, a.w_total_ + b.w_total_);
  }
  friend bool operator==(const EvidenceCounts&, const EvidenceCounts&) = default;

 private:
  EvidenceCounts(Scalar p, Scalar t) : w_plus_(p), w_total_(t) {}
  Scalar w_plus_;
  Scalar w_total_;
};

/// Two infinite-evidence judgments that disagree. Handed back to whoever
/// owns the conventions; this is a normal result, not an error.
template <typename Scalar>
struct ConflictReport {
  Scalar first;
  Scalar second;
  friend bool operator==(const ConflictReport&, const ConflictReport&) = default;
};

template <typename Scalar>
using LuOutcome = std::variant<FrequencyInterval<Scalar>, ConflictReport<Scalar>>;

using FrequencyIntervald = FrequencyInterval<double>;
using FrequencyIntervalld = FrequencyInterval<long double>;
using EvidenceCountsd = EvidenceCounts<double>;
using EvidenceCountsld = EvidenceCounts<long double>;
using ConflictReportd = ConflictReport<double>;
using LuOutcomed = LuOutcome<double>;

namespace detail {

template <typename Scalar>
void check_horizon(Scalar k) {
  if (!(k > Scalar(0)) || !std::isfinite(k)) {
    throw DomainError("horizon constant must be finite and > 0");
  }
}

}  // namespace detail

template <typename Scalar>
FrequencyInterval<Scalar> interval_from_counts(const EvidenceCounts<Scalar>& c,
                                               Scalar horizon = Scalar(1)) {
  detail::check_horizon(horizon);
  const Scalar denom = c.w_total() + horizon;
  return FrequencyInterval<Scalar>::interval(c.w_plus() / denom,
                                             (c.w_plus() + horizon) / denom);
}

/// Inverse of interval_from_counts: with i = u - l, w = k (1 - i) / i and
/// w+ = k l / i.
template <typename Scalar>
EvidenceCounts<Scalar> counts_from_interval(const FrequencyInterval<Scalar>& fi,
                                            Scalar horizon = Scalar(1)) {
  detail::check_horizon(horizon);
  if (fi.is_point()) {
    throw InfiniteEvidenceError("a frequency point carries infinite evidence");
  }
  const Scalar i = fi.u() - fi.l();
  const Scalar total = horizon * (Scalar(1) - i) / i;
  const Scalar plus = std::min(horizon * fi.l() / i, total);
  return EvidenceCounts<Scalar>::make(plus, total);
}

template <typename Scalar>
Scalar ignorance(const FrequencyInterval<Scalar>& fi) {
  return fi.u() - fi.l();
}

/// f = l / (l + 1 - u) for intervals; the value itself for points.
template <typename Scalar>
Scalar frequency(const FrequencyInterval<Scalar>& fi) {
  if (fi.is_point()) return fi.value();
  const Scalar denom = fi.l() + (Scalar(1) - fi.u());
  if (denom == Scalar(0)) {
    throw UndefinedError("frequency of an interval backed by no evidence is 0/0");
  }
  return fi.l() / denom;
}

/// Pools two finite-evidence intervals, i1, i2 > 0:
///
///   l = (l1 i2 + l2 i1) / (i1 + i2 - i1 i2)
///   u = (l1 i2 + l2 i1 + i1 i2) / (i1 + i2 - i1 i2)
///
/// The horizon constant cancels, so the rule is the same for every k.
template <typename Scalar>
FrequencyInterval<Scalar> combine_lu(const FrequencyInterval<Scalar>& f1,
                                     const FrequencyInterval<Scalar>& f2) {
  if (f1.is_point() || f2.is_point()) {
    throw InfiniteEvidenceError(
        "combine_lu: point inputs go through combine_with_point / combine_points");
  }
  const Scalar i1 = ignorance(f1);
  const Scalar i2 = ignorance(f2);
  const Scalar denom = i1 + i2 - i1 * i2;
  const Scalar cross = f1.l() * i2 + f2.l() * i1;
  const Scalar l = cross / denom;
  const Scalar u = std::min((cross + i1 * i2) / denom, Scalar(1));
  return FrequencyInterval<Scalar>::interval(l, u);
}

/// A probability is not moved by finite evidence.
template <typename Scalar>
FrequencyInterval<Scalar> combine_with_point(const FrequencyInterval<Scalar>& p,
                                             const FrequencyInterval<Scalar>& f) {
  if (!p.is_point()) throw ValidationError("combine_with_point: first argument is not a point");
  if (f.is_point()) throw ValidationError("combine_with_point: second argument is a point");
  return p;
}

/// Equal points are redundant and collapse to one; unequal points are
/// reported.
template <typename Scalar>
LuOutcome<Scalar> combine_points(const FrequencyInterval<Scalar>& p1,
                                 const FrequencyInterval<Scalar>& p2) {
  if (!p1.is_point() || !p2.is_point()) {
    throw ValidationError("combine_points: both arguments must be points");
  }
  if (std::abs(p1.value() - p2.value()) <= Scalar(kPointTolerance)) return p1;
  return ConflictReport<Scalar>{p1.value(), p2.value()};
}

/// Dispatches on the kinds of its arguments.
template <typename Scalar>
LuOutcome<Scalar> combine(const FrequencyInterval<Scalar>& a,
                          const FrequencyInterval<Scalar>& b) {
  if (a.is_point() && b.is_point()) return combine_points(a, b);
  if (a.is_point()) return combine_with_point(a, b);
  if (b.is_point()) return combine_with_point(b, a);
  return combine_lu(a, b);
}

/// <bel, pl> -> weights -> counts (w+, w+ + w-) -> [l, u]. Bayesian
/// intervals map to the point 1 / (1 + e^delta), i.e. bel itself.
template <typename Scalar>
FrequencyInterval<Scalar> lu_from_belpl(const BeliefInterval<Scalar>& iv,
                                        Scalar horizon = Scalar(1)) {
  const auto w = weights_from_belief(iv);
  if (!w.is_finite()) return FrequencyInterval<Scalar>::point(delta_limit(w.delta()));
  return interval_from_counts(EvidenceCounts<Scalar>::make(w.w_plus(), w.total()), horizon);
}

template <typename Scalar>
BeliefInterval<Scalar> belpl_from_lu(const FrequencyInterval<Scalar>& fi,
                                     Scalar horizon = Scalar(1)) {
  if (fi.is_point()) {
    throw InfiniteEvidenceError(
        "a frequency point does not determine a finite-weight belief interval");
  }
  const auto c = counts_from_interval(fi, horizon);
  return belief_from_weights(EvidenceWeights<Scalar>::finite(c.w_plus(), c.w_minus()));
}

}  // namespace evcalc

#endif  // EVCALC_FREQUENCY_HPP

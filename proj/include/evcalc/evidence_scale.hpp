#ifndef EVCALC_EVIDENCE_SCALE_HPP
#define EVCALC_EVIDENCE_SCALE_HPP

// Weight-of-evidence scale: the maps between (w+, w-) and <bel, pl>,
// additive pooling, and the limit behaviour of long outcome streams.
// All logarithms are natural.

#include <algorithm>
#include <cmath>
#include <limits>

#include "evcalc/binary_frame.hpp"
#include "evcalc/errors.hpp"

namespace evcalc {

/// Tolerance for the tie case of classify_limit.
inline constexpr double kLimitTieTolerance = 1e-12;

enum class WeightKind { finite, infinite };

/// Weights of positive and negative evidence for H. Infinite evidence is
/// tagged explicitly and carries delta = lim (w- - w+); delta = +inf / -inf
/// encode the Bayesian limits 0 and 1.
template <typename Scalar>
class EvidenceWeights {
 public:
  static EvidenceWeights finite(Scalar w_plus, Scalar w_minus) {
    if (!(w_plus >= Scalar(0) && w_minus >= Scalar(0)) || !std::isfinite(w_plus) ||
        !std::isfinite(w_minus)) {
      throw ValidationError("finite weights must be finite and nonnegative");
    }
    return EvidenceWeights(WeightKind::finite, w_plus, w_minus, Scalar(0));
  }

  static EvidenceWeights infinite(Scalar delta) {
    if (std::isnan(delta)) throw ValidationError("delta is NaN");
    return EvidenceWeights(WeightKind::infinite, Scalar(0), Scalar(0), delta);
  }

  WeightKind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == WeightKind::finite; }

  Scalar w_plus() const {
    require_finite();
    return w_plus_;
  }
  Scalar w_minus() const {
    require_finite();
    return w_minus_;
  }
  Scalar total() const {
    require_finite();
    return w_plus_ + w_minus_;
  }
  Scalar delta() const {
    if (is_finite()) throw DomainError("delta is only defined for infinite weights");
    return delta_;
  }

  friend bool operator==(const EvidenceWeights&, const EvidenceWeights&) = default;

 private:
  EvidenceWeights(WeightKind kind, Scalar wp, Scalar wm, Scalar delta)
      : kind_(kind), w_plus_(wp), w_minus_(wm), delta_(delta) {}

  void require_finite() const {
    if (!is_finite()) throw InfiniteEvidenceError("weights are infinite");
  }

  WeightKind kind_;
  Scalar w_plus_;
  Scalar w_minus_;
  Scalar delta_;
};

/// Weight carried by a single positive / negative outcome.
template <typename Scalar>
class UnitWeights {
 public:
  static UnitWeights make(Scalar w0_plus, Scalar w0_minus) {
    if (!(w0_plus > Scalar(0) && w0_minus > Scalar(0)) || !std::isfinite(w0_plus) ||
        !std::isfinite(w0_minus)) {
      throw ValidationError("unit weights must be finite and strictly positive");
    }
    return UnitWeights(w0_plus, w0_minus);
  }
  static UnitWeights unit() { return UnitWeights(Scalar(1), Scalar(1)); }

  Scalar w0_plus() const noexcept { return w0_plus_; }
  Scalar w0_minus() const noexcept { return w0_minus_; }
  bool is_unit() const noexcept { return w0_plus_ == Scalar(1) && w0_minus_ == Scalar(1); }

 private:
  UnitWeights(Scalar p, Scalar m) : w0_plus_(p), w0_minus_(m) {}
  Scalar w0_plus_;
  Scalar w0_minus_;
};

using EvidenceWeightsd = EvidenceWeights<double>;
using EvidenceWeightsld = EvidenceWeights<long double>;
using UnitWeightsd = UnitWeights<double>;
using UnitWeightsld = UnitWeights<long double>;

/// g(w) = 1 - e^{-w}, degree of support of a simple support function.
template <typename Scalar>
Scalar support_from_weight(Scalar w) {
  if (!(w >= Scalar(0)) || !std::isfinite(w)) {
    throw DomainError("support_from_weight: weight must be finite and >= 0");
  }
  return -std::expm1(-w);
}

/// 1 / (1 + e^delta). Evaluated so that f(-d) == 1 - f(d) bit for bit.
template <typename Scalar>
Scalar delta_limit(Scalar delta) {
  if (std::isnan(delta)) throw DomainError("delta_limit: delta is NaN");
  if (delta < Scalar(0)) return Scalar(1) - delta_limit(-delta);
  return Scalar(1) / (Scalar(1) + std::exp(delta));
}

/// bel = (e^{w+} - 1) / (e^{w+} + e^{w-} - 1), pl = e^{w+} / (same).
///
/// Numerator and denominator are scaled by e^{-max(w+, w-)}, so any finite
/// weight evaluates without overflow. Infinite weights give the Bayesian
/// point 1 / (1 + e^delta).
template <typename Scalar>
BeliefInterval<Scalar> belief_from_weights(const EvidenceWeights<Scalar>& w) {
  if (!w.is_finite()) {
    const Scalar b = delta_limit(w.delta());
    return BeliefInterval<Scalar>::make(b, b);
  }
  const Scalar wp = w.w_plus();
  const Scalar wm = w.w_minus();
  const Scalar top = std::max(wp, wm);
  const Scalar scale = std::exp(-top);
  const Scalar plus = std::exp(wp - top);
  // e^{-top} (e^{w+} - 1); expm1 keeps small weights accurate.
  const Scalar plus_less_one =
      wp < Scalar(1) ? std::expm1(wp) * scale : plus - scale;
  const Scalar denom = plus_less_one + std::exp(wm - top);
  return BeliefInterval<Scalar>::clamped(plus_less_one / denom, plus / denom);
}

/// Inverse of belief_from_weights:
///   w+ = log(pl / (pl - bel)),  w- = log((1 - bel) / (pl - bel)).
/// A Bayesian interval (bel == pl == b) maps to infinite weight with
/// delta = log((1 - b) / b).
template <typename Scalar>
EvidenceWeights<Scalar> weights_from_belief(const BeliefInterval<Scalar>& iv) {
  const Scalar bel = iv.bel();
  const Scalar pl = iv.pl();
  if (bel == pl) {
    if (bel == Scalar(0)) {
      return EvidenceWeights<Scalar>::infinite(std::numeric_limits<Scalar>::infinity());
    }
    if (bel == Scalar(1)) {
      return EvidenceWeights<Scalar>::infinite(-std::numeric_limits<Scalar>::infinity());
    }
    return EvidenceWeights<Scalar>::infinite(std::log((Scalar(1) - bel) / bel));
  }
  const Scalar width = pl - bel;
  return EvidenceWeights<Scalar>::finite(std::log1p(bel / width),
                                         std::log1p((Scalar(1) - pl) / width));
}

/// Pooling of distinct evidence: weights add componentwise.
template <typename Scalar>
EvidenceWeights<Scalar> add_weights(const EvidenceWeights<Scalar>& w1,
                                    const EvidenceWeights<Scalar>& w2) {
  if (!w1.is_finite() || !w2.is_finite()) {
    throw InfiniteEvidenceError(
        "add_weights: infinite evidence is combined by the point protocol of the "
        "frequency calculus, not by addition");
  }
  return EvidenceWeights<Scalar>::finite(w1.w_plus() + w2.w_plus(),
                                         w1.w_minus() + w2.w_minus());
}

template <typename Scalar>
EvidenceWeights<Scalar> operator+(const EvidenceWeights<Scalar>& a,
                                  const EvidenceWeights<Scalar>& b) {
  return add_weights(a, b);
}

/// Pooling Bayesian beliefs when weights multiply instead of adding:
/// b1 b2 / (b1 b2 + (1 - b1)(1 - b2)).
template <typename Scalar>
Scalar multiply_combine(Scalar b1, Scalar b2) {
  if (!(b1 > Scalar(0) && b1 < Scalar(1) && b2 > Scalar(0) && b2 < Scalar(1))) {
    throw DomainError("multiply_combine: beliefs must lie strictly inside (0,1)");
  }
  const Scalar agree = b1 * b2;
  return agree / (agree + (Scalar(1) - b1) * (Scalar(1) - b2));
}

/// w+ / w recovered from <b, p>:
///   (log p - log(p - b)) / (log p + log(1 - b) - 2 log(p - b)).
template <typename Scalar>
Scalar positive_proportion(const BeliefInterval<Scalar>& iv) {
  const Scalar b = iv.bel();
  const Scalar p = iv.pl();
  if (b == p) {
    throw InfiniteEvidenceError("positive_proportion: Bayesian interval has infinite weight");
  }
  const Scalar log_width = std::log(p - b);
  const Scalar numer = std::log(p) - log_width;
  const Scalar denom = std::log(p) + std::log1p(-b) - Scalar(2) * log_width;
  if (denom == Scalar(0)) {
    throw UndefinedError("positive_proportion: no evidence, proportion is 0/0");
  }
  return std::clamp(numer / denom, Scalar(0), Scalar(1));
}

/// Limit of Bel({H}) under a stream with chance q: 0, 0.5 or 1 depending on
/// the sign of w0+ q - w0- (1 - q).
template <typename Scalar>
Scalar classify_limit(Scalar q, const UnitWeights<Scalar>& u) {
  if (!(q >= Scalar(0) && q <= Scalar(1))) {
    throw DomainError("classify_limit: q must lie in [0,1]");
  }
  const Scalar lean = u.w0_plus() * q - u.w0_minus() * (Scalar(1) - q);
  if (std::abs(lean) <= Scalar(kLimitTieTolerance)) return Scalar(0.5);
  return lean > Scalar(0) ? Scalar(1) : Scalar(0);
}

}  // namespace evcalc

#endif  // EVCALC_EVIDENCE_SCALE_HPP

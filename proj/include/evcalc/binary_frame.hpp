#ifndef EVCALC_BINARY_FRAME_HPP
#define EVCALC_BINARY_FRAME_HPP

// Value types for the frame of discernment {H, not-H}. Every type here is an
// immutable value templated on its scalar; `d` / `ld` aliases follow the
// usual Eigen suffix convention.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "evcalc/errors.hpp"

namespace evcalc {

/// Tolerance on the sum-to-one constraint of a mass assignment.
inline constexpr double kMassSumTolerance = 1e-12;

namespace detail {

template <typename Scalar>
std::string describe(std::initializer_list<Scalar> values) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  bool first = true;
  for (Scalar v : values) {
    if (!first) os << ", ";
    os << static_cast<double>(v);
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace detail

/// Basic probability assignment on {H, not-H}. Mass on the empty set is
/// implicitly zero, so three numbers carry everything.
template <typename Scalar>
class MassAssignment {
 public:
  /// Validates and returns the assignment. A sum within kMassSumTolerance of
  /// one is renormalized by the actual sum.
  static MassAssignment make(Scalar m_h, Scalar m_not_h, Scalar m_theta) {
    const Scalar tol(kMassSumTolerance);
    for (Scalar v : {m_h, m_not_h, m_theta}) {
      if (!(v >= -tol && v <= Scalar(1) + tol)) {
        throw ValidationError("mass assignment field outside [0,1]: " +
                              detail::describe({m_h, m_not_h, m_theta}));
      }
    }
    m_h = std::clamp(m_h, Scalar(0), Scalar(1));
    m_not_h = std::clamp(m_not_h, Scalar(0), Scalar(1));
    m_theta = std::clamp(m_theta, Scalar(0), Scalar(1));
    const Scalar sum = m_h + m_not_h + m_theta;
    if (std::abs(sum - Scalar(1)) > tol) {
      throw ValidationError("mass assignment does not sum to 1: " +
                            detail::describe({m_h, m_not_h, m_theta}));
    }
    if (sum != Scalar(1)) {
      m_h /= sum;
      m_not_h /= sum;
      m_theta /= sum;
    }
    return MassAssignment(m_h, m_not_h, m_theta);
  }

  static MassAssignment vacuous() { return {Scalar(0), Scalar(0), Scalar(1)}; }

  Scalar m_h() const noexcept { return m_h_; }
  Scalar m_not_h() const noexcept { return m_not_h_; }
  Scalar m_theta() const noexcept { return m_theta_; }

  friend bool operator==(const MassAssignment&, const MassAssignment&) = default;

 private:
  MassAssignment(Scalar h, Scalar not_h, Scalar theta)
      : m_h_(h), m_not_h_(not_h), m_theta_(theta) {}

  Scalar m_h_;
  Scalar m_not_h_;
  Scalar m_theta_;
};

/// The pair <Bel({H}), Pl({H})>; at |frame| = 2 it carries all the
/// information of the belief function.
template <typename Scalar>
class BeliefInterval {
 public:
  /// Requires 0 <= bel <= pl <= 1.
  static BeliefInterval make(Scalar bel, Scalar pl) {
    if (!(bel >= Scalar(0) && bel <= pl && pl <= Scalar(1))) {
      throw ValidationError("belief interval must satisfy 0 <= bel <= pl <= 1: " +
                            detail::describe({bel, pl}));
    }
    return BeliefInterval(bel, pl);
  }

  /// Builds an interval from computed bounds, absorbing rounding noise that
  /// pushes a bound out of [0,1] or bel past pl. NaN is still rejected.
  static BeliefInterval clamped(Scalar bel, Scalar pl) {
    if (std::isnan(bel) || std::isnan(pl)) {
      throw ValidationError("belief interval bound is NaN");
    }
    pl = std::clamp(pl, Scalar(0), Scalar(1));
    bel = std::clamp(bel, Scalar(0), pl);
    return BeliefInterval(bel, pl);
  }

  static BeliefInterval vacuous() { return BeliefInterval(Scalar(0), Scalar(1)); }

  Scalar bel() const noexcept { return bel_; }
  Scalar pl() const noexcept { return pl_; }
  Scalar width() const noexcept { return pl_ - bel_; }
  bool is_bayesian() const noexcept { return bel_ == pl_; }
  bool is_vacuous() const noexcept { return bel_ == Scalar(0) && pl_ == Scalar(1); }

  friend bool operator==(const BeliefInterval&, const BeliefInterval&) = default;

 private:
  BeliefInterval(Scalar bel, Scalar pl) : bel_(bel), pl_(pl) {}

  Scalar bel_;
  Scalar pl_;
};

using MassAssignmentd = MassAssignment<double>;
using MassAssignmentld = MassAssignment<long double>;
using BeliefIntervald = BeliefInterval<double>;
using BeliefIntervalld = BeliefInterval<long double>;

/// Bel({H}) = m({H}), Pl({H}) = 1 - m({not-H}).
template <typename Scalar>
BeliefInterval<Scalar> mass_to_interval(const MassAssignment<Scalar>& m) {
  return BeliefInterval<Scalar>::clamped(m.m_h(), Scalar(1) - m.m_not_h());
}

template <typename Scalar>
MassAssignment<Scalar> interval_to_mass(const BeliefInterval<Scalar>& iv) {
  return MassAssignment<Scalar>::make(iv.bel(), Scalar(1) - iv.pl(),
                                      iv.pl() - iv.bel());
}

}  // namespace evcalc

#endif  // EVCALC_BINARY_FRAME_HPP

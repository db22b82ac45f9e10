#ifndef EVCALC_DEMPSTER_HPP
#define EVCALC_DEMPSTER_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "evcalc/binary_frame.hpp"
#include "evcalc/errors.hpp"

namespace evcalc {

/// Below this, 1 - (conflicting mass) is treated as zero and the
/// combination is refused.
inline constexpr double kTotalConflictThreshold = 1e-12;

/// Dempster's rule on the binary frame, mass form.
///
/// m({H})     = k [m1(H) m2(H) + m1(H) m2(T) + m1(T) m2(H)]
/// m({not-H}) = k [m1(N) m2(N) + m1(N) m2(T) + m1(T) m2(N)]
/// m(Theta)   = k  m1(T) m2(T)
///
/// with k = 1 / (1 - m1(H) m2(N) - m1(N) m2(H)).
template <typename Scalar>
MassAssignment<Scalar> combine_mass(const MassAssignment<Scalar>& m1,
                                    const MassAssignment<Scalar>& m2) {
  const Scalar agreement =
      Scalar(1) - m1.m_h() * m2.m_not_h() - m1.m_not_h() * m2.m_h();
  if (!(agreement >= Scalar(kTotalConflictThreshold))) {
    throw TotalConflict(
        "total conflict between " +
            detail::describe({m1.m_h(), m1.m_not_h(), m1.m_theta()}) + " and " +
            detail::describe({m2.m_h(), m2.m_not_h(), m2.m_theta()}),
        {double(m1.m_h()), double(m1.m_not_h()), double(m1.m_theta())},
        {double(m2.m_h()), double(m2.m_not_h()), double(m2.m_theta())});
  }
  const Scalar h = m1.m_h() * m2.m_h() + m1.m_h() * m2.m_theta() +
                   m1.m_theta() * m2.m_h();
  const Scalar not_h = m1.m_not_h() * m2.m_not_h() +
                       m1.m_not_h() * m2.m_theta() +
                       m1.m_theta() * m2.m_not_h();
  const Scalar theta = m1.m_theta() * m2.m_theta();
  return MassAssignment<Scalar>::make(h / agreement, not_h / agreement,
                                      theta / agreement);
}

/// Dempster's rule written directly on <bel, pl> pairs:
///
///   b = (b1 p2 + b2 p1 - b1 b2) / D,   p = p1 p2 / D,
///   D = 1 - b1 (1 - p2) - b2 (1 - p1).
template <typename Scalar>
BeliefInterval<Scalar> combine_interval(const BeliefInterval<Scalar>& x1,
                                        const BeliefInterval<Scalar>& x2) {
  const Scalar b1 = x1.bel(), p1 = x1.pl();
  const Scalar b2 = x2.bel(), p2 = x2.pl();
  const Scalar denom = Scalar(1) - b1 * (Scalar(1) - p2) - b2 * (Scalar(1) - p1);
  if (!(denom >= Scalar(kTotalConflictThreshold))) {
    throw TotalConflict("total conflict between " + detail::describe({b1, p1}) +
                            " and " + detail::describe({b2, p2}),
                        {double(b1), double(p1)}, {double(b2), double(p2)});
  }
  return BeliefInterval<Scalar>::clamped((b1 * p2 + b2 * p1 - b1 * b2) / denom,
                                         (p1 * p2) / denom);
}

/// 1 - (1 - s1)(1 - s2): two simple supports pointing the same way.
template <typename Scalar>
Scalar bernoulli_combine(Scalar s1, Scalar s2) {
  if (!(s1 >= Scalar(0) && s1 <= Scalar(1) && s2 >= Scalar(0) && s2 <= Scalar(1))) {
    throw DomainError("bernoulli_combine: supports must lie in [0,1]");
  }
  return Scalar(1) - (Scalar(1) - s1) * (Scalar(1) - s2);
}

// ---------------------------------------------------------------------------
// General frames, brute force. Only meant as a reference for the binary
// engine; cost is O(4^n).

/// Subsets of the frame as bitsets over atom indices.
using Subset = std::uint32_t;

inline constexpr int kMaxFrameSize = 16;
inline constexpr int kMaxOracleFrameSize = 10;

template <typename Scalar>
class GeneralMass {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  static GeneralMass vacuous(int frame_size) {
    GeneralMass g(frame_size);
    g.masses_(g.full()) = Scalar(1);
    return g;
  }

  /// Focal elements as (subset, mass) pairs. Repeated subsets accumulate.
  static GeneralMass from_focal(int frame_size,
                                const std::vector<std::pair<Subset, Scalar>>& focal) {
    GeneralMass g(frame_size);
    for (const auto& [subset, mass] : focal) {
      if (subset > g.full()) {
        throw ValidationError("subset outside the frame");
      }
      g.masses_(subset) += mass;
    }
    g.validate();
    return g;
  }

  /// Dense vector indexed by subset bitset, of length 2^frame_size.
  static GeneralMass from_dense(int frame_size, Vector masses) {
    GeneralMass g(frame_size);
    if (masses.size() != g.masses_.size()) {
      throw ValidationError("dense mass vector has wrong length");
    }
    g.masses_ = std::move(masses);
    g.validate();
    return g;
  }

  int frame_size() const noexcept { return frame_size_; }
  Subset full() const noexcept { return (Subset(1) << frame_size_) - 1; }
  Scalar mass(Subset s) const { return masses_(s); }
  const Vector& masses() const noexcept { return masses_; }

  friend bool operator==(const GeneralMass& a, const GeneralMass& b) {
    return a.frame_size_ == b.frame_size_ && a.masses_ == b.masses_;
  }

 private:
  explicit GeneralMass(int frame_size) : frame_size_(frame_size) {
    if (frame_size < 1 || frame_size > kMaxFrameSize) {
      throw ValidationError("frame size must be in [1, " +
                            std::to_string(kMaxFrameSize) + "]");
    }
    masses_ = Vector::Zero(Eigen::Index(1) << frame_size);
  }

  void validate() {
    if (masses_(0) != Scalar(0)) {
      throw ValidationError("mass on the empty set must be 0");
    }
    if ((masses_.array() < Scalar(0)).any() || masses_.hasNaN()) {
      throw ValidationError("masses must be nonnegative");
    }
    const Scalar sum = masses_.sum();
    if (std::abs(sum - Scalar(1)) > Scalar(kMassSumTolerance)) {
      throw ValidationError("masses do not sum to 1");
    }
    if (sum != Scalar(1)) masses_ /= sum;
  }

  int frame_size_;
  Vector masses_;
};

using GeneralMassd = GeneralMass<double>;
using GeneralMassld = GeneralMass<long double>;

/// m(A) = sum_{B & C = A} m1(B) m2(C), renormalized over nonempty A.
/// Subsets are visited in ascending bitset order.
template <typename Scalar>
GeneralMass<Scalar> combine_general(const GeneralMass<Scalar>& g1,
                                    const GeneralMass<Scalar>& g2) {
  if (g1.frame_size() != g2.frame_size()) {
    throw ValidationError("combine_general: frame size mismatch");
  }
  if (g1.frame_size() > kMaxOracleFrameSize) {
    throw UnsupportedError("combine_general: frame size above " +
                           std::to_string(kMaxOracleFrameSize));
  }
  using Vector = typename GeneralMass<Scalar>::Vector;
  const auto& a = g1.masses();
  const auto& b = g2.masses();
  Vector joint = Vector::Zero(a.size());
  for (Eigen::Index i = 1; i < a.size(); ++i) {
    if (a(i) == Scalar(0)) continue;
    for (Eigen::Index j = 1; j < b.size(); ++j) {
      joint(i & j) += a(i) * b(j);
    }
  }
  const Scalar nonempty = joint.tail(joint.size() - 1).sum();
  if (!(nonempty >= Scalar(kTotalConflictThreshold))) {
    throw TotalConflict("combine_general: total conflict", {}, {});
  }
  joint(0) = Scalar(0);
  joint /= nonempty;
  return GeneralMass<Scalar>::from_dense(g1.frame_size(), std::move(joint));
}

/// Atom 0 is H, atom 1 is not-H.
inline constexpr Subset kSubsetH = 0b01;
inline constexpr Subset kSubsetNotH = 0b10;
inline constexpr Subset kSubsetTheta = 0b11;

template <typename Scalar>
GeneralMass<Scalar> to_general(const MassAssignment<Scalar>& m) {
  return GeneralMass<Scalar>::from_focal(
      2, {{kSubsetH, m.m_h()}, {kSubsetNotH, m.m_not_h()}, {kSubsetTheta, m.m_theta()}});
}

template <typename Scalar>
MassAssignment<Scalar> to_binary_mass(const GeneralMass<Scalar>& g) {
  if (g.frame_size() != 2) {
    throw ValidationError("to_binary_mass: frame size must be 2");
  }
  return MassAssignment<Scalar>::make(g.mass(kSubsetH), g.mass(kSubsetNotH),
                                      g.mass(kSubsetTheta));
}

}  // namespace evcalc

#endif  // EVCALC_DEMPSTER_HPP

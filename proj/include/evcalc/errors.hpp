#ifndef EVCALC_ERRORS_HPP
#define EVCALC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace evcalc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates the invariants of its type (bad mass sum, bel > pl, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The result is 0/0, e.g. the frequency of an interval backed by no evidence.
class UndefinedError : public Error {
 public:
  using Error::Error;
};

/// A finite-evidence operation received an infinite-evidence value.
class InfiniteEvidenceError : public Error {
 public:
  using Error::Error;
};

/// Requested configuration is well-formed but not supported.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Dempster's normalization constant is undefined: the two inputs put all
/// of their joint mass on the empty set.
class TotalConflict : public Error {
 public:
  TotalConflict(const std::string& what, std::vector<double> lhs,
                std::vector<double> rhs)
      : Error(what), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

  const std::vector<double>& lhs() const noexcept { return lhs_; }
  const std::vector<double>& rhs() const noexcept { return rhs_; }

 private:
  std::vector<double> lhs_;
  std::vector<double> rhs_;
};

}  // namespace evcalc

#endif  // EVCALC_ERRORS_HPP

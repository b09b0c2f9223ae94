#ifndef AREALM_ERRORS_HPP
#define AREALM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arealm {

// Argument outside a function's real/complex domain (wrong interval, wrong
// half-plane, pole of a Gamma factor, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Evaluation requested at (or numerically indistinguishable from) a pole.
class PoleError : public DomainError {
 public:
  explicit PoleError(const std::string& what) : DomainError(what) {}
};

// Evaluation requested on a branch cut where no limit convention applies.
class CutViolation : public DomainError {
 public:
  explicit CutViolation(const std::string& what) : DomainError(what) {}
};

// A series/iteration failed to reach its tolerance within its budget.
class NonConvergence : public std::runtime_error {
 public:
  explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

// Zero count from the argument-principle audit disagrees with the zeros found.
class WindingMismatch : public std::runtime_error {
 public:
  explicit WindingMismatch(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace arealm

#endif

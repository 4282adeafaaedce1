#ifndef SYMMOM_ERRORS_HPP
#define SYMMOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symmom {

// Input outside an operation's stated domain.  CLI exit code 1.
struct domain_error : std::domain_error {
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// An enumeration or series exceeded its policy budget.  CLI exit code 1.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Two independent evaluation routes disagree beyond tolerance.  This signals
// a bug, not bad input.  CLI exit code 2.
struct route_disagreement_error : std::logic_error {
  explicit route_disagreement_error(const std::string& what) : std::logic_error(what) {}
};

// Requested eigenvalue data beyond the coverage of the ingested form.
struct coverage_error : std::runtime_error {
  explicit coverage_error(const std::string& what) : std::runtime_error(what) {}
};

// Remote database failure.  CLI exit code 3.
struct network_error : std::runtime_error {
  explicit network_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace symmom

#endif  // SYMMOM_ERRORS_HPP

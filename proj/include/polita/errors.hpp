#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace polita {

// Precondition violated by the caller (zero divisor, out-of-scope variable, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual input: polynomials, formulas, model files, timed words.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed. Always a bug, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A structurally well-formed object that violates semantic rules.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> issues)
      : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

  const std::vector<std::string>& issues() const noexcept { return issues_; }

 private:
  static std::string join(const std::vector<std::string>& issues) {
    std::string out;
    for (const auto& i : issues) {
      if (!out.empty()) out += "; ";
      out += i;
    }
    return out;
  }

  std::vector<std::string> issues_;
};

#define POLITA_ASSERT(cond, msg)                                            \
  do {                                                                      \
    if (!(cond)) throw ::polita::InternalError(std::string(__func__) + ": " + (msg)); \
  } while (0)

}  // namespace polita

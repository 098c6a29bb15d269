#ifndef LKZETA_ERRORS_HPP
#define LKZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lkz {

// Bad input data: schema violations, inconsistent face/cone descriptions,
// out-of-domain arguments. CLI maps these to exit code 1.
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical diagnostics: persistent genericity failures, non-stabilizing
// refinements, too many degenerate Monte Carlo hits. CLI exit code 2.
class numeric_error : public std::runtime_error {
public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// File/stream problems. CLI exit code 3.
class io_error : public std::runtime_error {
public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lkz

#endif

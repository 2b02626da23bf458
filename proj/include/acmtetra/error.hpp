#pragma once

#include <stdexcept>
#include <string>

namespace acmtetra {

enum class ErrorKind {
  invalid_prime,
  not_an_edge_ideal,
  resource_limit,
  normalization_required,
  balanced_case_only,
  void_complex,
  invalid_argument,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_prime: return "invalid-prime";
    case ErrorKind::not_an_edge_ideal: return "not-an-edge-ideal";
    case ErrorKind::resource_limit: return "resource-limit";
    case ErrorKind::normalization_required: return "normalization-required";
    case ErrorKind::balanced_case_only: return "balanced-case-only";
    case ErrorKind::void_complex: return "void-complex";
    case ErrorKind::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace acmtetra

#pragma once

#include <stdexcept>
#include <string>

namespace qpe {

/// Thrown when a request would exceed a fixed evaluation budget (term count
/// or register size). Distinct from std::domain_error so callers can map it
/// to a dedicated exit status.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qpe

#pragma once

#include <stdexcept>
#include <string>

namespace spho {

// Domain-rule violation (precondition failed, invalid model, ...).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// Text that does not match the ordering/model grammar.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

}  // namespace spho

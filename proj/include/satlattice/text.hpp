#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "satlattice/core.hpp"

namespace satlattice {

/// Raised by the shorthand parser; position is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Shorthand: a set is one character per element, digits 1..9 for elements
// 1..9 and letters a..k for 10..20; "0" (or "∅") denotes the empty set.
// A family is a comma-separated list of sets, e.g. "2,3,1235,1245".

std::string render_set(SetWord s);
std::string render_family(const Family& f);

SetWord parse_set(std::string_view token, int n);
Family parse_family(std::string_view text, int n);

}  // namespace satlattice

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsv {

enum class Errc {
  exponent_out_of_range,
  context_mismatch,
  not_a_unit,
  unknown_symbol,
  nontermination,
  cap_exceeded,
  overlined_input,
  wrong_class,
  unknown_weight,
  unknown_identity,
  constraint_violation,
  parse_error,
  coverage_gap,
  io_error,
  invalid_argument,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qsv

#include <qsv/error.hpp>

namespace qsv {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::exponent_out_of_range: return "exponent-out-of-range";
    case Errc::context_mismatch: return "context-mismatch";
    case Errc::not_a_unit: return "not-a-unit";
    case Errc::unknown_symbol: return "unknown-symbol";
    case Errc::nontermination: return "nontermination";
    case Errc::cap_exceeded: return "cap-exceeded";
    case Errc::overlined_input: return "overlined-input";
    case Errc::wrong_class: return "wrong-class";
    case Errc::unknown_weight: return "unknown-weight";
    case Errc::unknown_identity: return "unknown-identity";
    case Errc::constraint_violation: return "constraint-violation";
    case Errc::parse_error: return "parse-error";
    case Errc::coverage_gap: return "coverage-gap";
    case Errc::io_error: return "io-error";
    case Errc::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace qsv

#pragma once

#include <stdexcept>
#include <string>

namespace varlat {

enum class errc {
  invalid_argument,
  parse,
  not_a_lattice,
  cycle_detected,
  degree_too_large,
  unsupported,
  undecided,
  too_large,
  precondition_failed,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::parse: return "ParseError";
    case errc::not_a_lattice: return "NotALattice";
    case errc::cycle_detected: return "CycleDetected";
    case errc::degree_too_large: return "DegreeTooLarge";
    case errc::unsupported: return "UnsupportedOperation";
    case errc::undecided: return "Undecided";
    case errc::too_large: return "TooLarge";
    case errc::precondition_failed: return "PreconditionFailed";
  }
  return "UnknownError";
}

}  // namespace varlat

#pragma once

#include <stdexcept>
#include <string>

namespace ffrace {

// Failure categories surfaced by the library. Each maps to a stable name so
// callers (and the CLI) can react without parsing message text.
enum class errc {
  non_prime,
  even_characteristic,
  too_large,
  not_irreducible,
  not_squarefree,
  not_symplectic,
  bad_degree,
  bad_input,
  bad_family,
  precision_exhausted,
  io_error,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_prime: return "NonPrime";
    case errc::even_characteristic: return "EvenCharacteristic";
    case errc::too_large: return "TooLarge";
    case errc::not_irreducible: return "NotIrreducible";
    case errc::not_squarefree: return "NotSquarefree";
    case errc::not_symplectic: return "NotSymplectic";
    case errc::bad_degree: return "BadDegree";
    case errc::bad_input: return "BadInput";
    case errc::bad_family: return "BadFamily";
    case errc::precision_exhausted: return "PrecisionExhausted";
    case errc::io_error: return "IoError";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw error(code, msg);
}

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace ffrace

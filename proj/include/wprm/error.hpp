#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wprm {

enum class Errc {
  NotAPrimePower,
  DivisionByZero,
  LogOfZero,
  ZeroVector,
  PointCountMismatch,
  DegreeMismatch,
  NotHomogeneous,
  EmptyDegree,
  RegularityNotFound,
  UnstableFootprint,
  HypothesisViolated,
  PolynomialInIdeal,
  BadAlphas,
  WitnessMismatch,
  BudgetExceeded,
  DegreeNotDivisible,
  ParseError,
  InvalidArgument,
};

constexpr std::string_view to_string(Errc e) noexcept {
  switch (e) {
    case Errc::NotAPrimePower: return "NotAPrimePower";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::LogOfZero: return "LogOfZero";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::PointCountMismatch: return "PointCountMismatch";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::EmptyDegree: return "EmptyDegree";
    case Errc::RegularityNotFound: return "RegularityNotFound";
    case Errc::UnstableFootprint: return "UnstableFootprint";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::PolynomialInIdeal: return "PolynomialInIdeal";
    case Errc::BadAlphas: return "BadAlphas";
    case Errc::WitnessMismatch: return "WitnessMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::DegreeNotDivisible: return "DegreeNotDivisible";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the Errc codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace wprm

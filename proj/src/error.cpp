#include "bctkit/error.hpp"

namespace bctkit {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroLinearCoefficient: return "ZeroLinearCoefficient";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::InvalidInstance: return "InvalidInstance";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::ThetaYieldsTrivialPair: return "ThetaYieldsTrivialPair";
    case Errc::ZeroDirection: return "ZeroDirection";
    case Errc::ZeroB: return "ZeroB";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::InvalidFamilyParams: return "InvalidFamilyParams";
    case Errc::ScaleRefusal: return "ScaleRefusal";
    case Errc::BadFormat: return "BadFormat";
  }
  return "Unknown";
}

}  // namespace bctkit

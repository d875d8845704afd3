#include "itcalc/error.hpp"

namespace itcalc {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::NonAdmissible: return "NonAdmissible";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotNakayama: return "NotNakayama";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::ZeroComplex: return "ZeroComplex";
    case ErrorKind::TermNotFProjective: return "TermNotFProjective";
    case ErrorKind::NotSelfOrthogonal: return "NotSelfOrthogonal";
  }
  return "Unknown";
}

}  // namespace itcalc

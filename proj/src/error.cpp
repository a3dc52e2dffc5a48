#include "numsg/error.hpp"

namespace numsg {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
  case Errc::EmptyInput: return "EmptyInput";
  case Errc::NonCoprime: return "NonCoprime";
  case Errc::Overflow: return "Overflow";
  case Errc::ParentMismatch: return "ParentMismatch";
  case Errc::WrongArity: return "WrongArity";
  case Errc::NotUnitary: return "NotUnitary";
  case Errc::NotTwoByTwo: return "NotTwoByTwo";
  case Errc::ZeroNotGenerator: return "ZeroNotGenerator";
  case Errc::InvalidArgument: return "InvalidArgument";
  case Errc::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

} // namespace numsg

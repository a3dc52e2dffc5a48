#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace numsg {

using Int = std::int64_t;

enum class Errc {
  EmptyInput,
  NonCoprime,
  Overflow,
  ParentMismatch,
  WrongArity,
  NotUnitary,
  NotTwoByTwo,
  ZeroNotGenerator,
  InvalidArgument,
  IoFailure,
};

std::string_view errc_name(Errc code) noexcept;

// All domain failures in the library surface as this exception; the C API
// translates the code into a status value.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(Errc::Overflow, "integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(Errc::Overflow, "integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(Errc::Overflow, "integer overflow in multiplication");
  return r;
}

// Floor modulus, always in [0, m) for m > 0.
inline Int floor_mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

} // namespace numsg

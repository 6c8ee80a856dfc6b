#pragma once

#include <stdexcept>
#include <string>

namespace coinrm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PositionOutOfRange : Error {
  using Error::Error;
};

struct CoinNotHeads : Error {
  using Error::Error;
};

struct InvalidCharacter : Error {
  using Error::Error;
};

struct EmptyInputWhereForbidden : Error {
  using Error::Error;
};

// The parity sum is undefined for sequences without a heads-up coin.
struct NoHeads : Error {
  using Error::Error;
};

struct InvalidSymbol : Error {
  using Error::Error;
};

struct MethodRangeExceeded : Error {
  using Error::Error;
};

struct SizeGuardExceeded : Error {
  using Error::Error;
};

struct UnsupportedShape : Error {
  using Error::Error;
};

}  // namespace coinrm

#pragma once

#include <stdexcept>
#include <string>

namespace cliffordkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MismatchedSpace : Error {
  using Error::Error;
};
struct MismatchedAlgebra : Error {
  using Error::Error;
};
struct NotAVector : Error {
  using Error::Error;
};
struct NotABivector : Error {
  using Error::Error;
};
struct NotEven : Error {
  using Error::Error;
};
struct NonInvertible : Error {
  using Error::Error;
};
struct SeriesDiverged : Error {
  using Error::Error;
};
struct DegenerateForm : Error {
  using Error::Error;
};
struct OddDimension : Error {
  using Error::Error;
};
struct WrongSignature : Error {
  using Error::Error;
};
struct RepeatedIndex : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct NotClosed : Error {
  using Error::Error;
};
struct BadIndexSet : Error {
  using Error::Error;
};
struct NotCalibrated : Error {
  using Error::Error;
};
struct BadGrading : Error {
  using Error::Error;
};
struct DimensionTooLarge : Error {
  using Error::Error;
};
struct BadMatrixFile : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};

}  // namespace cliffordkit

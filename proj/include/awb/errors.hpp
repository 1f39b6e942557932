#pragma once

#include <stdexcept>
#include <string>

namespace awb {

struct FieldMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAnIdealError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotASubalgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotCentralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAbelianError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAlgebraMapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotIsoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotStemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidCertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownNameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedFieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace awb

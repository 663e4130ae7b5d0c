#pragma once

#include <stdexcept>
#include <string>

namespace superquant {

struct DivisionByZero : std::runtime_error {
  explicit DivisionByZero(const std::string& what = "division by zero")
      : std::runtime_error(what) {}
};

struct PoleAtOne : std::runtime_error {
  explicit PoleAtOne(const std::string& what = "denominator vanishes at q = 1")
      : std::runtime_error(what) {}
};

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what = "degree cap exceeded")
      : std::runtime_error(what) {}
};

struct NonHomogeneous : std::runtime_error {
  explicit NonHomogeneous(const std::string& what = "element is not weight-homogeneous")
      : std::runtime_error(what) {}
};

struct WeightMismatch : std::runtime_error {
  explicit WeightMismatch(const std::string& what = "weights do not match")
      : std::runtime_error(what) {}
};

struct UnsupportedFamily : std::runtime_error {
  explicit UnsupportedFamily(const std::string& what = "no built-in datum for this family")
      : std::runtime_error(what) {}
};

struct UnsupportedShape : std::runtime_error {
  explicit UnsupportedShape(const std::string& what = "unsupported matrix shape")
      : std::runtime_error(what) {}
};

struct AxiomFailure : std::runtime_error {
  explicit AxiomFailure(const std::string& what) : std::runtime_error(what) {}
};

struct NotQuasitriangular : std::runtime_error {
  explicit NotQuasitriangular(const std::string& what) : std::runtime_error(what) {}
};

struct SingularPhi : std::runtime_error {
  explicit SingularPhi(const std::string& what = "truncated phi matrix is singular")
      : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace superquant

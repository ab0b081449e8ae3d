#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace dendrix {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define DENDRIX_ERROR(Name)                                                  \
  class Name : public Error {                                                \
   public:                                                                   \
    explicit Name(const std::string& what) : Error(#Name, what) {}           \
  }

DENDRIX_ERROR(UnitProductUndefined);
DENDRIX_ERROR(CarrierMismatch);
DENDRIX_ERROR(NonzeroConstant);
DENDRIX_ERROR(OrderMismatch);
DENDRIX_ERROR(AlgebraMismatch);
DENDRIX_ERROR(BadConstantTerm);
DENDRIX_ERROR(ShapeError);
DENDRIX_ERROR(ShapeMismatch);
DENDRIX_ERROR(NonCommutativeModel);
DENDRIX_ERROR(ZeroLeadingCoefficient);
DENDRIX_ERROR(ParseError);
DENDRIX_ERROR(UsageError);

#undef DENDRIX_ERROR

class VerificationFailure : public Error {
 public:
  VerificationFailure(const std::string& check, std::optional<int> order);
  const std::string& check() const { return check_; }
  std::optional<int> first_failing_order() const { return order_; }

 private:
  std::string check_;
  std::optional<int> order_;
};

}  // namespace dendrix

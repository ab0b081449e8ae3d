#include "dendrix/errors.hpp"

namespace dendrix {

VerificationFailure::VerificationFailure(const std::string& check, std::optional<int> order)
    : Error("VerificationFailure",
            check + (order ? " fails at order " + std::to_string(*order) : " fails")),
      check_(check),
      order_(order) {}

}  // namespace dendrix

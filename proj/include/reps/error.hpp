// Raised when machine-checked material is contradicted by data. These mark
// verification failures (the claim named by claim() does not hold), never
// ordinary usage errors.
#pragma once

#include <stdexcept>
#include <string>

namespace reps {

class VerificationError : public std::runtime_error {
  public:
    VerificationError(std::string claim, const std::string& detail)
        : std::runtime_error(claim + ": " + detail), claim_(std::move(claim)) {}

    const std::string& claim() const { return claim_; }

  private:
    std::string claim_;
};

}  // namespace reps

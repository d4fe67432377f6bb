#pragma once

#include <stdexcept>

namespace conerotor {

// Thrown when the pitch angle enters the guard band around +-pi/2 where the
// Euler-rate map loses rank. Callers must not extrapolate past it.
class SingularityError : public std::domain_error {
public:
    explicit SingularityError(double pitch_rad);
    double pitch() const noexcept { return pitch_; }

private:
    double pitch_;
};

}  // namespace conerotor

#pragma once

#include <span>
#include <string>

#include "liecoh/scalar.hpp"

namespace liecoh {

class LieAlgebra;

/// Human-readable linear combination of basis names, e.g. `h`, `2*e-f`, `(1+i)*h`.
std::string format_vector(const LieAlgebra& g, std::span<const Scalar> x);

}  // namespace liecoh

#include "liecoh/format.hpp"

#include "liecoh/lie_algebra.hpp"

namespace liecoh {

std::string format_vector(const LieAlgebra& g, std::span<const Scalar> x) {
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const Scalar& c = x[k];
    if (c.is_zero()) continue;
    const std::string& name = g.basis_names().at(k);
    std::string term;
    if (c.is_real()) {
      bool negative = sgn(c.re()) < 0;
      Rational mag = abs(c.re());
      term = (negative ? "-" : (out.empty() ? "" : "+"));
      if (mag != 1) term += mag.get_str() + "*";
    } else {
      term = (out.empty() ? "(" : "+(") + c.str() + ")*";
    }
    out += term + name;
  }
  return out.empty() ? "0" : out;
}

}  // namespace liecoh

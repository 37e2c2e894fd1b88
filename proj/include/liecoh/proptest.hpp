#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "liecoh/spectral.hpp"

namespace liecoh {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool pass() const { return cases > 0 && failures == 0; }
};

/// Deterministic across platforms: only raw mt19937_64 output is used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1)); }
  bool coin() { return uniform(0, 1) == 1; }
  /// Small Gaussian integer, sometimes a half.
  Scalar scalar(bool allow_imaginary = true);
  Scalar nonzero_scalar(bool allow_imaginary = true);

 private:
  std::mt19937_64 engine_;
};

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, bool allow_imaginary = true);
/// Product of elementary matrices: invertible with small entries.
Matrix random_invertible(Rng& rng, std::size_t n);

struct RandomCase {
  std::string family;
  AlgebraPtr algebra;
  std::vector<Representation> modules;  // all valid
};

/// A random Lie algebra of dimension <= max_dim (a known family in a random
/// basis) with a few valid modules; `nonabelian` excludes abelian families.
RandomCase random_case(Rng& rng, std::size_t max_dim, bool nonabelian = false);

/// Jacobi via ad([X_i,X_j]) = [ad X_i, ad X_j]; independent of check_jacobi.
bool jacobi_oracle(const LieAlgebra& g);

/// d o d = 0, rank-nullity, modular law, echelon canonicity, injected flips,
/// dual involution and N^{p,q} dimensions; `cases` runs each.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed, std::size_t cases);

/// Orthogonal complements of random k-invariant submodules of the Borel of
/// each preset are k-invariant.
PropertyResult reducibility_property(std::uint64_t seed, std::size_t cases, const std::vector<std::string>& presets);

}  // namespace liecoh

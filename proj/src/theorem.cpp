#include "liecoh/theorem.hpp"

#include <cstdlib>

#include "liecoh/error.hpp"

namespace liecoh {

Limits Limits::from_env() {
  Limits l;
  if (const char* env = std::getenv("LIE_COH_MAX_DIM"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (*end != '\0' || value == 0) throw ParseError("LIE_COH_MAX_DIM must be a positive integer, got '" + std::string(env) + "'");
    l.max_dim = value;
  }
  return l;
}

void Limits::enforce(const LieAlgebra& g) const {
  if (g.dim() > max_dim)
    throw CapExceeded("algebra dimension " + std::to_string(g.dim()) + " exceeds max_dim = " + std::to_string(max_dim) +
                      " (raise with --max-dim or LIE_COH_MAX_DIM)");
  // subset masks are 32-bit
  if (g.dim() > 31) throw CapExceeded("algebra dimension " + std::to_string(g.dim()) + " exceeds the hard limit 31");
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                                  std::size_t length) {
  std::vector<std::size_t> out(length, 0);
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t s = 0; s < b.size() && r + s < length; ++s) out[r + s] += a[r] * b[s];
  return out;
}

bool is_semisimple(const LieAlgebra& g) { return rank(killing_form(g)) == g.dim(); }

namespace {

std::vector<std::size_t> relative_dims(const Subalgebra& k, const Representation& coeffs) {
  return cohomology_dims(relative_complex(k, coeffs));
}

}  // namespace

TheoremReport theorem1_crosscheck(const Subalgebra& v, int p_max, std::optional<int> q_max) {
  const LieAlgebra& g = v.parent();
  if (!g.has_real_structure()) throw PreconditionFailed("theorem1: algebra has no real structure");
  if (!is_semisimple(g)) throw PreconditionFailed("theorem1: algebra is not semisimple (Killing form degenerate)");
  TheoremReport rep;
  rep.algebra = g.label();
  rep.subalgebra = v.label();
  rep.structure = classify_structure(g, v);
  if (!rep.structure.elliptic)
    throw PreconditionFailed("theorem1: subalgebra " + v.label() + " is not elliptic (dim v + conj v = " +
                             std::to_string(rep.structure.dim_sum) + " of " + std::to_string(g.dim()) + ")");
  const int qm = q_max.value_or(static_cast<int>(v.dim()));
  Subalgebra k = v.inner(real_part(v));
  rep.dim_k = k.dim();
  rep.h_k = cohomology_dims(ce_complex(trivial_module(k.algebra_ptr())));
  Representation trivial_g = trivial_module(v.parent_ptr());
  Representation quotient = quotient_module(v);
  rep.pass = true;
  for (int p = 0; p <= p_max; ++p) {
    std::vector<std::size_t> lhs = cohomology_dims(induced_complex(v, trivial_g, p));
    std::vector<std::size_t> rel(v.dim() + 1, 0), rel_forms(v.dim() + 1, 0);
    if (static_cast<std::size_t>(p) <= v.codim()) {
      // Lambda^p(g/v)^*: forms on g/v with the action induced from g/v
      Representation dual_wedge = dual_module(exterior_power_module(quotient, static_cast<std::size_t>(p)));
      rel = relative_dims(k, dual_wedge);
      Representation forms_dual = dual_module(forms_module(quotient, p, trivial_module(v.algebra_ptr())));
      rel_forms = relative_dims(k, forms_dual);
    }
    const std::size_t len = static_cast<std::size_t>(qm) + 1;
    std::vector<std::size_t> rhs = convolve(rel, rep.h_k, len);
    std::vector<std::size_t> rhs_forms = convolve(rel_forms, rep.h_k, len);
    rep.h_rel.push_back(rel);
    for (int q = 0; q <= qm; ++q) {
      TheoremSlot slot;
      slot.p = p;
      slot.q = q;
      slot.lhs = static_cast<std::size_t>(q) < lhs.size() ? lhs[q] : 0;
      slot.rhs = rhs[q];
      slot.rhs_forms_dual = rhs_forms[q];
      slot.pass = slot.lhs == slot.rhs;
      rep.pass = rep.pass && slot.pass;
      rep.slots.push_back(slot);
    }
  }
  return rep;
}

}  // namespace liecoh

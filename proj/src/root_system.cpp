#include "liecoh/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "liecoh/error.hpp"

namespace liecoh {

namespace {

int height(const Root& r) {
  int h = 0;
  for (int c : r) h += c;
  return h;
}

bool root_less(const Root& a, const Root& b) {
  int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

Root negate(Root r) {
  for (int& c : r) c = -c;
  return r;
}

Root add(const Root& a, const Root& b) {
  Root out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool is_positive(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; }) && height(r) > 0;
}

std::string root_label(const Root& r) {
  std::string s;
  for (int c : r) s += std::to_string(c);
  return s;
}

// Memoised structure constants by Carter's algorithm.
class ConstantTable {
 public:
  explicit ConstantTable(const CartanDatum& d) : d_(d) {
    for (const auto& r : d.positive_roots) positive_.insert(r);
  }

  bool is_root(const Root& r) const { return positive_.count(r) || positive_.count(negate(r)); }

  Rational get(const Root& a, const Root& b) {
    Root s = add(a, b);
    if (!is_root(s)) return 0;
    auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Rational value;
    bool pa = is_positive(a), pb = is_positive(b);
    if (pa && pb) {
      value = root_less(a, b) ? positive_pair(a, b) : Rational(-get(b, a));
    } else if (!pa && !pb) {
      value = -get(negate(a), negate(b));
    } else {
      // a + b + c = 0; rotate to a same-sign pair
      Root c = negate(s);
      if (is_positive(c) == pa)
        value = d_.inner(c, c) / d_.inner(b, b) * get(c, a);
      else
        value = d_.inner(c, c) / d_.inner(a, a) * get(b, c);
    }
    memo_.emplace(key, value);
    return value;
  }

 private:
  Rational positive_pair(const Root& g, const Root& dl) {
    Root xi = add(g, dl);
    // extraspecial pair for xi: smallest alpha with (alpha, xi - alpha) special
    Root alpha, beta;
    for (const auto& r : d_.positive_roots) {
      Root rest = add(xi, negate(r));
      if (positive_.count(rest) && root_less(r, rest)) {
        alpha = r;
        beta = rest;
        break;
      }
    }
    if (alpha == g) {
      int p = 0;
      Root cur = add(dl, negate(g));
      while (is_root(cur)) {
        ++p;
        cur = add(cur, negate(g));
      }
      return p + 1;
    }
    Rational sum = 0;
    Root bg = add(beta, negate(g));
    if (is_root(bg)) sum += get(beta, negate(g)) * get(alpha, negate(dl)) / d_.inner(bg, bg);
    Root ag = add(alpha, negate(g));
    if (is_root(ag)) sum += get(negate(g), alpha) * get(beta, negate(dl)) / d_.inner(ag, ag);
    return d_.inner(xi, xi) / get(alpha, beta) * sum;
  }

  const CartanDatum& d_;
  std::set<Root> positive_;
  std::map<std::pair<Root, Root>, Rational> memo_;
};

}  // namespace

Rational CartanDatum::inner(const Root& a, const Root& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (a[i] && b[j] && cartan[i][j]) s += symmetrizer[i] * cartan[i][j] * a[i] * b[j];
  return s;
}

std::vector<int> CartanDatum::evaluate(const Root& b) const {
  std::vector<int> out(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) out[i] += b[j] * cartan[i][j];
  return out;
}

CartanDatum make_cartan_datum(std::vector<std::vector<int>> cartan, std::string name) {
  const std::size_t r = cartan.size();
  if (r == 0) throw PreconditionFailed("Cartan matrix must have rank at least 1");
  for (std::size_t i = 0; i < r; ++i) {
    if (cartan[i].size() != r) throw DimensionMismatch("Cartan matrix is not square");
    if (cartan[i][i] != 2) throw PreconditionFailed("Cartan matrix diagonal entries must be 2");
    for (std::size_t j = 0; j < r; ++j)
      if (i != j && (cartan[i][j] > 0 || ((cartan[i][j] == 0) != (cartan[j][i] == 0))))
        throw PreconditionFailed("Cartan matrix off-diagonal entries invalid at (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
  }
  // symmetrizer by propagation along the Dynkin graph
  std::vector<Rational> d(r, 0);
  for (std::size_t start = 0; start < r; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j || cartan[i][j] == 0) continue;
        Rational dj = d[i] * cartan[i][j] / cartan[j][i];
        if (d[j] == 0) {
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          throw PreconditionFailed("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  // normalise so that the shortest root in each component has d = 1 (components scaled together)
  Rational smallest = *std::min_element(d.begin(), d.end());
  for (auto& x : d) x /= smallest;
  CartanDatum datum{std::move(name), std::move(cartan), std::move(d), {}};
  Matrix sym(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) sym(i, j) = Scalar(datum.symmetrizer[i] * datum.cartan[i][j]);
  if (!is_positive_definite(sym)) throw PreconditionFailed("Cartan matrix is not of finite type");

  std::set<Root> found;
  std::vector<Root> layer;
  for (std::size_t i = 0; i < r; ++i) {
    Root a(r, 0);
    a[i] = 1;
    layer.push_back(a);
    found.insert(a);
  }
  std::vector<Root> all = layer;
  while (!layer.empty()) {
    std::vector<Root> next;
    for (const auto& b : layer) {
      auto pairing = datum.evaluate(b);
      for (std::size_t i = 0; i < r; ++i) {
        int p = 0;
        Root down = b;
        while (true) {
          down[i] -= 1;
          if (!found.count(down)) break;
          ++p;
        }
        if (p - pairing[i] <= 0) continue;
        Root up = b;
        up[i] += 1;
        if (found.insert(up).second) next.push_back(up);
      }
    }
    for (const auto& x : next) all.push_back(x);
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end(), root_less);
  datum.positive_roots = std::move(all);
  return datum;
}

std::vector<std::vector<int>> cartan_matrix_of_type(std::string_view type) {
  if (type.size() < 2) throw ParseError("unknown Cartan type '" + std::string(type) + "'");
  char letter = type[0];
  int n = 0;
  for (char c : type.substr(1)) {
    if (c < '0' || c > '9') throw ParseError("unknown Cartan type '" + std::string(type) + "'");
    n = n * 10 + (c - '0');
  }
  auto chain = [](int k) {
    std::vector<std::vector<int>> a(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; ++i) {
      a[i][i] = 2;
      if (i + 1 < k) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
  };
  switch (letter) {
    case 'A':
      if (n >= 1) return chain(n);
      break;
    case 'B':
      if (n >= 2) {
        auto a = chain(n);
        a[n - 1][n - 2] = -2;
        return a;
      }
      break;
    case 'C':
      if (n >= 2) {
        auto a = chain(n);
        a[n - 2][n - 1] = -2;
        return a;
      }
      break;
    case 'D':
      if (n >= 4) {
        auto a = chain(n);
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
        return a;
      }
      break;
    case 'G':
      if (n == 2) return {{2, -3}, {-1, 2}};
      break;
    case 'F':
      if (n == 4) {
        auto a = chain(4);
        a[2][1] = -2;
        return a;
      }
      break;
    case 'E':
      if (n >= 6 && n <= 8) {
        // Bourbaki labelling: 1-3-4-5-6-..., 2 attached to 4
        std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) a[i][i] = 2;
        auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
        link(1, 3);
        link(2, 4);
        link(3, 4);
        for (int i = 4; i < n; ++i) link(i, i + 1);
        return a;
      }
      break;
    default:
      break;
  }
  throw ParseError("unknown Cartan type '" + std::string(type) + "'");
}

CartanDatum preset_datum(std::string_view name) {
  return make_cartan_datum(cartan_matrix_of_type(name), std::string(name));
}

std::vector<std::string> preset_names() { return {"A1", "A2", "B2", "G2"}; }

Rational structure_constant(const CartanDatum& datum, const Root& a, const Root& b) {
  ConstantTable table(datum);
  return table.get(a, b);
}

SemisimpleAlgebra build_semisimple(const CartanDatum& datum) {
  const std::size_t r = datum.rank();
  const std::size_t np = datum.positive_roots.size();
  const std::size_t n = r + 2 * np;
  ConstantTable table(datum);

  std::vector<Root> roots(n, Root(r, 0));
  std::map<Root, std::size_t> index;
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < r; ++i) names[i] = r == 1 ? "h" : "h" + std::to_string(i + 1);
  for (std::size_t k = 0; k < np; ++k) {
    const Root& a = datum.positive_roots[k];
    roots[r + k] = a;
    roots[r + np + k] = negate(a);
    index[a] = r + k;
    index[negate(a)] = r + np + k;
    names[r + k] = r == 1 ? "e" : "e" + root_label(a);
    names[r + np + k] = r == 1 ? "f" : "f" + root_label(a);
  }

  // h_alpha = sum_i c_i d_i / d_alpha h_i
  auto coroot = [&](const Root& a) {
    Vector h(n);
    Rational da = datum.inner(a, a) / 2;
    for (std::size_t i = 0; i < r; ++i) h[i] = Scalar(Rational(a[i]) * datum.symmetrizer[i] / da);
    return h;
  };

  std::vector<Vector> tab(n * n, Vector(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vector& out = tab[x * n + y];
      bool hx = x < r, hy = y < r;
      if (hx && hy) continue;
      if (hx) {
        out[y] = Scalar(datum.evaluate(roots[y])[x]);
      } else if (hy) {
        out[x] = Scalar(-datum.evaluate(roots[x])[y]);
      } else {
        Root s = add(roots[x], roots[y]);
        if (height(s) == 0 && std::all_of(s.begin(), s.end(), [](int c) { return c == 0; })) {
          out = is_positive(roots[x]) ? coroot(roots[x]) : coroot(roots[y]);
          if (!is_positive(roots[x]))
            for (auto& c : out) c = -c;
        } else if (auto it = index.find(s); it != index.end()) {
          out[it->second] = Scalar(table.get(roots[x], roots[y]));
        }
      }
    }

  Matrix sigma(n, n);
  for (std::size_t i = 0; i < r; ++i) sigma(i, i) = Scalar(-1);
  for (std::size_t k = 0; k < np; ++k) {
    sigma(r + np + k, r + k) = Scalar(-1);
    sigma(r + k, r + np + k) = Scalar(-1);
  }

  auto g = std::make_shared<LieAlgebra>(names, std::move(tab), std::move(sigma));
  g->set_label(datum.name.empty() ? "semisimple" : datum.name);
  if (auto a = check_antisymmetry(*g); !a.pass) throw InternalInvariant("build_semisimple: antisymmetry fails");
  if (auto j = check_jacobi(*g); !j.pass) {
    const auto& w = *j.witness;
    throw InternalInvariant("build_semisimple: Jacobi fails on (" + names[w[0]] + "," + names[w[1]] + "," +
                            names[w[2]] + ")");
  }
  if (!check_real_structure(*g).pass()) throw InternalInvariant("build_semisimple: compact real structure invalid");
  return SemisimpleAlgebra{datum, std::move(g), std::move(roots)};
}

SemisimpleAlgebra build_preset(std::string_view name) { return build_semisimple(preset_datum(name)); }

Subalgebra borel(const SemisimpleAlgebra& s) { return parabolic(s, {}); }

Subalgebra parabolic(const SemisimpleAlgebra& s, const std::vector<std::size_t>& simple) {
  const std::size_t r = s.rank();
  std::vector<bool> chosen(r, false);
  for (auto i : simple) {
    if (i < 1 || i > r)
      throw PreconditionFailed("parabolic: simple root index " + std::to_string(i) + " outside 1.." +
                               std::to_string(r));
    chosen[i - 1] = true;
  }
  const auto& g = *s.algebra;
  std::vector<Vector> span;
  for (std::size_t i = 0; i < r; ++i) span.push_back(g.basis_vector(i));
  for (std::size_t k = 0; k < s.num_positive(); ++k) span.push_back(g.basis_vector(s.e_index(k)));
  for (std::size_t k = 0; k < s.num_positive(); ++k) {
    const Root& a = s.datum.positive_roots[k];
    bool inside = true;
    for (std::size_t i = 0; i < r; ++i)
      if (a[i] != 0 && !chosen[i]) inside = false;
    if (inside) span.push_back(g.basis_vector(s.f_index(k)));
  }
  std::string label = "borel";
  if (!simple.empty()) {
    label = "parabolic{";
    for (std::size_t k = 0; k < simple.size(); ++k) label += (k ? "," : "") + std::to_string(simple[k]);
    label += "}";
  }
  return Subalgebra::make(s.algebra, Subspace::span(g.dim(), span), label);
}

Scalar HermitianProduct::operator()(std::span<const Scalar> x, std::span<const Scalar> y) const {
  Scalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero() && !gram(i, j).is_zero()) s += x[i] * y[j].conj() * gram(i, j);
  }
  return s;
}

Matrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> ad;
  for (std::size_t i = 0; i < n; ++i) ad.push_back(g.ad_basis(i));
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar t;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c)
          if (!ad[i](a, c).is_zero() && !ad[j](c, a).is_zero()) t += ad[i](a, c) * ad[j](c, a);
      b(i, j) = t;
      b(j, i) = t;
    }
  return b;
}

HermitianProduct hermitian_extension(const LieAlgebra& g) {
  if (!g.has_real_structure()) throw PreconditionFailed("hermitian_extension: algebra has no real structure");
  Matrix b = killing_form(g);
  if (rank(b) != g.dim()) throw PreconditionFailed("hermitian_extension: Killing form is degenerate");
  const Matrix& s = g.real_structure();
  // G_ij = -B(X_i, sigma X_j)
  return HermitianProduct{-(b * s)};
}

bool is_conjugate_symmetric(const Matrix& m) { return m.rows() == m.cols() && m == m.transpose().conjugate(); }

bool is_positive_definite(const Matrix& m) {
  if (!is_conjugate_symmetric(m)) return false;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    Matrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = m(i, j);
    Scalar d = determinant(std::move(lead));
    if (!d.is_real() || sgn(d.re()) <= 0) return false;
  }
  return true;
}

AxiomCheck<3> check_hermitian_identity(const LieAlgebra& g, const HermitianProduct& h) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vector x = g.basis_vector(i);
    Vector xbar = g.conjugate(x);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar lhs = h(g.structure(i, j), g.basis_vector(k));
        Scalar rhs = -h(g.basis_vector(j), g.bracket(xbar, g.basis_vector(k)));
        if (lhs != rhs) return {false, std::array<std::size_t, 3>{i, j, k}};
      }
  }
  return {};
}

std::optional<std::array<std::size_t, 3>> ad_invariance_failure(const LieAlgebra& g, const HermitianProduct& h) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar lhs = h(g.structure(i, j), g.basis_vector(k));
        Scalar rhs = -h(g.basis_vector(j), g.structure(i, k));
        if (lhs != rhs) return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

}  // namespace liecoh

#include "liecoh/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "liecoh/error.hpp"

namespace liecoh {

namespace {

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const Json& require(const Json& j, const char* key, std::string_view where) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string(where) + ": missing key \"" + key + "\"");
  return j.at(key);
}

std::string require_string(const Json& j, std::string_view where) {
  if (!j.is_string()) throw ParseError(std::string(where) + ": expected a string");
  return j.get<std::string>();
}

std::size_t lookup(const LieAlgebra& g, const std::string& name, std::string_view where) {
  auto idx = g.index_of(name);
  if (!idx) throw ParseError(std::string(where) + ": unknown basis element '" + name + "'");
  return *idx;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(std::string(source) + ": invalid JSON at " + location(text, byte));
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

Json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j, std::string_view where) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(std::string(where) + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError(std::string(where) + ": scalars must be strings such as \"1/2+3*i\" (floats are not accepted)");
}

Json vector_to_json(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, std::string_view where) {
  if (!j.is_array() || j.size() != rows)
    throw ParseError(std::string(where) + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(std::string(where) + ": row " + std::to_string(r) + " must have " + std::to_string(cols) +
                       " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = scalar_from_json(row[c], std::string(where) + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

LieAlgebra algebra_from_json(const Json& j) {
  const Json& basis = require(j, "basis", "algebra");
  if (!basis.is_array()) throw ParseError("algebra.basis: expected an array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < basis.size(); ++i)
    names.push_back(require_string(basis[i], "algebra.basis[" + std::to_string(i) + "]"));
  if (j.contains("dim")) {
    const Json& d = j.at("dim");
    if (!d.is_number_unsigned() || d.get<std::size_t>() != names.size())
      throw ParseError("algebra.dim: does not match the number of basis names");
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t k = 0; k < i; ++k)
      if (names[i] == names[k]) throw ParseError("algebra.basis: duplicate name '" + names[i] + "'");
  LieAlgebra probe(names, std::vector<Vector>(names.size() * names.size(), Vector(names.size())));
  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    const Json& br = j.at("brackets");
    if (!br.is_array()) throw ParseError("algebra.brackets: expected an array");
    for (std::size_t b = 0; b < br.size(); ++b) {
      std::string where = "algebra.brackets[" + std::to_string(b) + "]";
      BracketEntry e;
      e.x = lookup(probe, require_string(require(br[b], "x", where), where + ".x"), where + ".x");
      e.y = lookup(probe, require_string(require(br[b], "y", where), where + ".y"), where + ".y");
      e.value.assign(names.size(), Scalar());
      const Json& value = require(br[b], "value", where);
      if (!value.is_object()) throw ParseError(where + ".value: expected an object {name: scalar}");
      for (const auto& [name, coeff] : value.items())
        e.value[lookup(probe, name, where + ".value")] = scalar_from_json(coeff, where + ".value." + name);
      entries.push_back(std::move(e));
    }
  }
  std::optional<Matrix> sigma;
  if (j.contains("real_structure") && !j.at("real_structure").is_null())
    sigma = matrix_from_json(j.at("real_structure"), names.size(), names.size(), "algebra.real_structure");
  LieAlgebra g = LieAlgebra::from_brackets(names, entries, std::move(sigma));
  if (j.contains("name") && j.at("name").is_string()) g.set_label(j.at("name").get<std::string>());
  return g;
}

Json algebra_to_json(const LieAlgebra& g) {
  Json j;
  j["dim"] = g.dim();
  j["basis"] = g.basis_names();
  Json br = Json::array();
  for (std::size_t x = 0; x < g.dim(); ++x)
    for (std::size_t y = x + 1; y < g.dim(); ++y) {
      auto s = g.structure(x, y);
      if (is_zero_vector(s)) continue;
      Json value = Json::object();
      for (std::size_t l = 0; l < g.dim(); ++l)
        if (!s[l].is_zero()) value[g.basis_names()[l]] = s[l].str();
      br.push_back({{"x", g.basis_names()[x]}, {"y", g.basis_names()[y]}, {"value", value}});
    }
  j["brackets"] = br;
  if (g.has_real_structure()) j["real_structure"] = matrix_to_json(g.real_structure());
  if (!g.label().empty()) j["name"] = g.label();
  return j;
}

Subspace subspace_from_json(const Json& j, std::size_t ambient) {
  const Json& span = require(j, "span", "subalgebra");
  if (!span.is_array()) throw ParseError("subalgebra.span: expected an array of vectors");
  std::vector<Vector> vecs;
  for (std::size_t k = 0; k < span.size(); ++k) {
    std::string where = "subalgebra.span[" + std::to_string(k) + "]";
    if (!span[k].is_array() || span[k].size() != ambient)
      throw ParseError(where + ": expected " + std::to_string(ambient) + " coordinates");
    Vector v;
    for (std::size_t c = 0; c < ambient; ++c) v.push_back(scalar_from_json(span[k][c], where));
    vecs.push_back(std::move(v));
  }
  return Subspace::span(ambient, vecs);
}

Vector parse_element(std::string_view text, const LieAlgebra& g) {
  Vector out(g.dim());
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty element expression");
  std::size_t pos = 0;
  while (pos < s.size()) {
    // one term: [sign] [coefficient '*'] name
    bool negative = false;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-' || std::isspace(static_cast<unsigned char>(s[pos])))) {
      if (s[pos] == '-') negative = !negative;
      ++pos;
    }
    std::size_t start = pos;
    int depth = 0;
    while (pos < s.size() && (depth > 0 || (s[pos] != '+' && s[pos] != '-'))) {
      if (s[pos] == '(') ++depth;
      if (s[pos] == ')') --depth;
      ++pos;
    }
    std::string_view term = trim(s.substr(start, pos - start));
    if (term.empty()) throw ParseError("invalid element '" + std::string(text) + "': dangling sign");
    Scalar coeff(1);
    std::string_view name = term;
    if (auto star = term.rfind('*'); star != std::string_view::npos) {
      std::string_view c = trim(term.substr(0, star));
      name = trim(term.substr(star + 1));
      if (c.size() >= 2 && c.front() == '(' && c.back() == ')') c = c.substr(1, c.size() - 2);
      coeff = Scalar::parse(c);
    }
    auto idx = g.index_of(std::string(name));
    if (!idx) throw ParseError("invalid element '" + std::string(text) + "': unknown basis element '" + std::string(name) + "'");
    if (negative) coeff = -coeff;
    out[*idx] += coeff;
  }
  return out;
}

Subspace parse_span_expression(std::string_view text, const LieAlgebra& g) {
  std::string_view s = trim(text);
  if (s.substr(0, 5) != "span{" || s.back() != '}')
    throw ParseError("invalid span expression '" + std::string(text) + "': expected span{...}");
  std::string_view inner = trim(s.substr(5, s.size() - 6));
  std::vector<Vector> vecs;
  while (!inner.empty()) {
    std::size_t comma = inner.find(',');
    vecs.push_back(parse_element(inner.substr(0, comma), g));
    if (comma == std::string_view::npos) break;
    inner = inner.substr(comma + 1);
  }
  return Subspace::span(g.dim(), vecs);
}

Representation representation_from_json(const Json& j, AlgebraPtr g) {
  const Json& dm = require(j, "dim_M", "representation");
  if (!dm.is_number_unsigned()) throw ParseError("representation.dim_M: expected a nonnegative integer");
  const std::size_t m = dm.get<std::size_t>();
  std::vector<Matrix> action(g->dim(), Matrix(m, m));
  const Json& act = require(j, "action", "representation");
  if (!act.is_object()) throw ParseError("representation.action: expected an object {name: matrix}");
  for (const auto& [name, mat] : act.items())
    action[lookup(*g, name, "representation.action")] = matrix_from_json(mat, m, m, "representation.action." + name);
  std::string label = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "M";
  return Representation(std::move(g), m, std::move(action), label);
}

Json representation_to_json(const Representation& r) {
  Json j;
  j["dim_M"] = r.dim();
  Json act = Json::object();
  for (std::size_t i = 0; i < r.algebra().dim(); ++i) act[r.algebra().basis_names()[i]] = matrix_to_json(r.action(i));
  j["action"] = act;
  j["name"] = r.label();
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace liecoh

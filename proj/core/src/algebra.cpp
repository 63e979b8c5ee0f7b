#include "alginv/algebra/algebra.hpp"

#include <algorithm>
#include <set>

#include "alginv/error.hpp"

namespace alginv {

Element Element::basis(int dim, int i) {
  if (i < 1 || i > dim) throw DomainError("basis index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
  Element e = zero(dim);
  e.coords[static_cast<std::size_t>(i - 1)] = Poly(1L);
  return e;
}

Element Element::generic(int dim, int slot) {
  Element e = zero(dim);
  for (int i = 1; i <= dim; ++i) e.coords[static_cast<std::size_t>(i - 1)] = Poly::coordinate(slot, i);
  return e;
}

bool Element::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Poly& p) { return p.is_zero(); });
}

Element& Element::operator+=(const Element& o) {
  if (o.dim() != dim()) throw DomainError("element dimension mismatch");
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += o.coords[k];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (o.dim() != dim()) throw DomainError("element dimension mismatch");
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] -= o.coords[k];
  return *this;
}

Element operator*(const Poly& s, Element a) {
  for (auto& c : a.coords) c = s * c;
  return a;
}

std::string Element::to_string(bool dim2_names) const {
  std::string out;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].is_zero()) continue;
    std::string c = coords[k].to_string(dim2_names);
    std::string basis = "e" + std::to_string(k + 1);
    std::string piece;
    if (c == "1")
      piece = basis;
    else if (c == "-1")
      piece = "-" + basis;
    else if (coords[k].size() == 1)
      piece = c + "*" + basis;
    else
      piece = "(" + c + ")*" + basis;
    if (!out.empty() && piece.front() != '-') out += '+';
    out += piece;
  }
  return out.empty() ? "0" : out;
}

Algebra::Algebra(int dim, std::vector<std::string> params, Table table, std::string name)
    : dim_(dim), params_(std::move(params)), table_(std::move(table)), name_(std::move(name)) {
  if (dim_ < 1 || dim_ > kMaxAlgebraDim)
    throw DomainError("algebra dimension " + std::to_string(dim_) + " outside 1.." + std::to_string(kMaxAlgebraDim));
  std::set<std::string> declared;
  for (const auto& p : params_) {
    if (!is_valid_parameter_name(p)) throw InputError("invalid parameter name '" + p + "'");
    if (!declared.insert(p).second) throw InputError("duplicate parameter '" + p + "'");
  }
  auto n = static_cast<std::size_t>(dim_);
  if (table_.size() != n) throw InputError("multiplication table must have " + std::to_string(n) + " rows");
  for (const auto& row : table_) {
    if (row.size() != n) throw InputError("multiplication table row must have " + std::to_string(n) + " entries");
    for (const auto& vec : row) {
      if (vec.size() != n) throw InputError("structure constant vector must have length " + std::to_string(n));
      for (const auto& c : vec)
        for (Var v : c.variables()) {
          if (v.is_coordinate()) throw InputError("structure constants may not contain coordinate variables");
          if (!declared.count(v.name())) throw InputError("undeclared parameter '" + v.name() + "' in table");
        }
    }
  }
}

void Algebra::check_index(int i) const {
  if (i < 1 || i > dim_) throw DomainError("basis index " + std::to_string(i) + " out of range 1.." + std::to_string(dim_));
}

const Poly& Algebra::constant(int i, int j, int l) const {
  check_index(i);
  check_index(j);
  check_index(l);
  return table_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l - 1)];
}

Element Algebra::product_of_basis(int i, int j) const {
  check_index(i);
  check_index(j);
  return Element(table_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
}

Element Algebra::multiply(const Element& u, const Element& v) const {
  if (u.dim() != dim_ || v.dim() != dim_) throw DomainError("element dimension does not match the algebra");
  Element out = Element::zero(dim_);
  auto n = static_cast<std::size_t>(dim_);
  for (std::size_t i = 0; i < n; ++i) {
    if (u.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v.coords[j].is_zero()) continue;
      const auto& m = table_[i][j];
      Poly uv;
      bool any = false;
      for (std::size_t l = 0; l < n; ++l) {
        if (m[l].is_zero()) continue;
        if (!any) {
          uv = u.coords[i] * v.coords[j];
          any = true;
        }
        out.coords[l] += uv * m[l];
      }
    }
  }
  return out;
}

PolyMatrix Algebra::op_matrix(Side side, int i) const {
  check_index(i);
  auto n = static_cast<std::size_t>(dim_);
  auto ii = static_cast<std::size_t>(i - 1);
  PolyMatrix out(n, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t j = 0; j < n; ++j) out(l, j) = side == Side::Left ? table_[ii][j][l] : table_[j][ii][l];
  return out;
}

PolyMatrix Algebra::op_matrix_double(Side side, int i, int i2) const {
  check_index(i);
  check_index(i2);
  auto n = static_cast<std::size_t>(dim_);
  PolyMatrix out(n, n);
  const auto& mvec = table_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i2 - 1)];
  for (std::size_t t = 0; t < n; ++t) {
    if (mvec[t].is_zero()) continue;
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t j = 0; j < n; ++j) {
        const Poly& c = side == Side::Left ? table_[t][j][l] : table_[j][t][l];
        if (!c.is_zero()) out(l, j) += mvec[t] * c;
      }
  }
  return out;
}

PolyMatrix Algebra::multiplication_matrix(Side side, const Element& u) const {
  if (u.dim() != dim_) throw DomainError("element dimension does not match the algebra");
  auto n = static_cast<std::size_t>(dim_);
  PolyMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u.coords[i].is_zero()) continue;
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t j = 0; j < n; ++j) {
        const Poly& c = side == Side::Left ? table_[i][j][l] : table_[j][i][l];
        if (!c.is_zero()) out(l, j) += u.coords[i] * c;
      }
  }
  return out;
}

Algebra Algebra::substitute_params(const std::map<std::string, Rational>& values) const {
  std::map<std::string, Poly> polys;
  for (const auto& p : params_) {
    auto it = values.find(p);
    if (it == values.end()) throw InputError("no value for parameter '" + p + "'");
    polys.emplace(p, Poly(it->second));
  }
  return substitute_params(polys, {});
}

Algebra Algebra::substitute_params(const std::map<std::string, Poly>& values, std::vector<std::string> new_params) const {
  std::map<Var, Poly> assign;
  for (const auto& [k, v] : values) assign.emplace(Var::parameter(k), v);
  Table t = table_;
  for (auto& row : t)
    for (auto& vec : row)
      for (auto& c : vec) c = substitute(c, assign);
  Algebra out(dim_, std::move(new_params), std::move(t), name_);
  out.advisories_ = advisories_;
  return out;
}

Algebra Algebra::opposite() const {
  auto n = static_cast<std::size_t>(dim_);
  Table t(n, std::vector<std::vector<Poly>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = table_[j][i];
  return Algebra(dim_, params_, std::move(t), name_.empty() ? "" : name_ + "^op");
}

bool Algebra::is_zero_product() const {
  for (const auto& row : table_)
    for (const auto& vec : row)
      for (const auto& c : vec)
        if (!c.is_zero()) return false;
  return true;
}

void require_numeric(const Algebra& a, const char* operation) {
  if (!a.is_numeric())
    throw DomainError(std::string(operation) + " requires numeric structure constants; substitute parameters first");
}

}  // namespace alginv

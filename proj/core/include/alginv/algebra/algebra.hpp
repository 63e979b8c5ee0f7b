#pragma once

#include <map>
#include <string>
#include <vector>

#include "alginv/exactpoly/matrix.hpp"
#include "alginv/exactpoly/poly.hpp"

namespace alginv {

constexpr int kMaxAlgebraDim = 16;

/// Coordinates of an algebra element (or of a generic element) in the standard basis.
struct Element {
  std::vector<Poly> coords;

  Element() = default;
  explicit Element(std::vector<Poly> c) : coords(std::move(c)) {}

  static Element zero(int dim) { return Element(std::vector<Poly>(static_cast<std::size_t>(dim))); }
  /// The basis vector e_i, 1-based.
  static Element basis(int dim, int i);
  /// The generic element X_r with coordinates x_{r1},...,x_{rn}.
  static Element generic(int dim, int slot);

  int dim() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Poly& s, Element a);
  friend bool operator==(const Element&, const Element&) = default;

  std::string to_string(bool dim2_names = true) const;
};

enum class Side { Left, Right };

/// A finite-dimensional algebra given by structure constants e_i e_j = sum_l M_{ijl} e_l.
/// Constants are polynomials in the declared parameter symbols only.
class Algebra {
 public:
  using Table = std::vector<std::vector<std::vector<Poly>>>;

  Algebra() = default;
  /// table[i][j][l] = M_{i+1,j+1,l+1}. Throws InputError on shape or content violations.
  Algebra(int dim, std::vector<std::string> params, Table table, std::string name = {});

  int dim() const noexcept { return dim_; }
  const std::vector<std::string>& params() const noexcept { return params_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<std::string>& advisories() const noexcept { return advisories_; }
  void add_advisory(std::string note) { advisories_.push_back(std::move(note)); }

  bool is_numeric() const noexcept { return params_.empty(); }
  /// 1-based structure constant M_{ijl}.
  const Poly& constant(int i, int j, int l) const;
  /// 1-based: the coordinate vector of e_i e_j.
  Element product_of_basis(int i, int j) const;
  const Table& table() const noexcept { return table_; }

  Element multiply(const Element& u, const Element& v) const;
  /// Entry (l,j) is M_{ijl} for Left, M_{jil} for Right; i is 1-based.
  PolyMatrix op_matrix(Side side, int i) const;
  /// Entry (l,j) is sum_t M_{ii't} M_{tjl} (Left) or sum_t M_{ii't} M_{jtl} (Right).
  PolyMatrix op_matrix_double(Side side, int i, int i2) const;
  /// Matrix of b -> u b (Left) or b -> b u (Right).
  PolyMatrix multiplication_matrix(Side side, const Element& u) const;

  /// Every declared parameter must be assigned. Advisories and name are kept.
  Algebra substitute_params(const std::map<std::string, Rational>& values) const;
  /// Substitutes parameters by polynomials in (possibly new) parameters.
  Algebra substitute_params(const std::map<std::string, Poly>& values,
                            std::vector<std::string> new_params) const;
  /// The algebra with product a*b := b a.
  Algebra opposite() const;
  bool is_zero_product() const;

  /// Mathematical equality: dimension, parameter list and table.
  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.params_ == b.params_ && a.table_ == b.table_;
  }

 private:
  void check_index(int i) const;

  int dim_ = 0;
  std::vector<std::string> params_;
  Table table_;
  std::string name_;
  std::vector<std::string> advisories_;
};

/// Requires a numeric algebra; throws DomainError naming the operation otherwise.
void require_numeric(const Algebra& a, const char* operation);

}  // namespace alginv

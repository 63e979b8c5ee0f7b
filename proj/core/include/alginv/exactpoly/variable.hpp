#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace alginv {

/// A polynomial indeterminate: either a coordinate function x_{r,i} (slot r >= 1, basis
/// index i >= 1) or a named parameter symbol.
///
/// Variables are totally ordered: parameters (by name) precede coordinates, and
/// coordinates are ordered by (slot, index). Earlier variables are more significant
/// in the lexicographic tie-break of the monomial order.
class Var {
 public:
  static Var parameter(std::string_view name);
  static Var coordinate(int slot, int index);

  bool is_parameter() const noexcept { return (code_ & kCoordinateBit) == 0; }
  bool is_coordinate() const noexcept { return !is_parameter(); }

  int slot() const noexcept { return static_cast<int>((code_ >> 16) & 0x7fffu); }
  int index() const noexcept { return static_cast<int>(code_ & 0xffffu); }
  const std::string& name() const;

  /// Coordinates print as x{r}/y{r} when dim2 naming applies, else x{r}_{i}.
  std::string to_string(bool dim2_names = true) const;

  friend bool operator==(Var a, Var b) noexcept { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(Var a, Var b);

  std::uint32_t raw() const noexcept { return code_; }

 private:
  explicit Var(std::uint32_t code) : code_(code) {}
  static constexpr std::uint32_t kCoordinateBit = 0x80000000u;
  std::uint32_t code_;
};

/// Names in scope for parsing: declared parameter names plus, optionally, the
/// coordinate functions of m slots over an n-dimensional algebra.
struct VariableTable {
  std::vector<std::string> parameters;
  int slots = 0;
  int dim = 0;

  static VariableTable params_only(std::vector<std::string> names) {
    return VariableTable{std::move(names), 0, 0};
  }
  static VariableTable with_coordinates(std::vector<std::string> names, int slots, int dim) {
    return VariableTable{std::move(names), slots, dim};
  }

  bool declares_parameter(std::string_view name) const;
};

/// True if name is a legal parameter identifier that cannot be confused with a
/// coordinate name (x1, y2, x1_3, ...).
bool is_valid_parameter_name(std::string_view name);

}  // namespace alginv

template <>
struct std::hash<alginv::Var> {
  std::size_t operator()(alginv::Var v) const noexcept { return std::hash<std::uint32_t>{}(v.raw()); }
};

#include "alginv/exactpoly/monomial.hpp"

#include <algorithm>

namespace alginv {

Monomial::Monomial(Var v, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& f : factors) {
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first)
      factors_.back().second += f.second;
    else
      factors_.push_back(f);
  }
}

std::uint32_t Monomial::total_degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::degree_in(Var v) const noexcept {
  for (const auto& f : factors_)
    if (f.first == v) return f.second;
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first == j->first) {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i, ++j;
    } else if (i->first < j->first) {
      out.factors_.push_back(*i++);
    } else {
      out.factors_.push_back(*j++);
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  auto j = other.factors_.begin();
  for (const auto& f : factors_) {
    while (j != other.factors_.end() && j->first < f.first) ++j;
    if (j == other.factors_.end() || !(j->first == f.first) || j->second < f.second) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  std::vector<Factor> out;
  auto i = factors_.begin();
  for (const auto& f : other.factors_) {
    while (i != factors_.end() && i->first < f.first) ++i;
    std::uint32_t e = f.second;
    if (i != factors_.end() && i->first == f.first) e -= i->second;
    if (e > 0) out.emplace_back(f.first, e);
  }
  Monomial m;
  m.factors_ = std::move(out);
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  auto i = factors_.begin(), j = other.factors_.begin();
  while (i != factors_.end() && j != other.factors_.end()) {
    if (i->first == j->first) {
      out.factors_.emplace_back(i->first, std::max(i->second, j->second));
      ++i, ++j;
    } else if (i->first < j->first) {
      out.factors_.push_back(*i++);
    } else {
      out.factors_.push_back(*j++);
    }
  }
  out.factors_.insert(out.factors_.end(), i, factors_.end());
  out.factors_.insert(out.factors_.end(), j, other.factors_.end());
  return out;
}

std::pair<Monomial, Monomial> Monomial::split_parameters() const {
  Monomial params, coords;
  for (const auto& f : factors_) (f.first.is_parameter() ? params : coords).factors_.push_back(f);
  return {params, coords};
}

std::string Monomial::to_string(bool dim2_names) const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.to_string(dim2_names);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t k = 0;
  for (; k < fa.size() && k < fb.size(); ++k) {
    if (!(fa[k].first == fb[k].first)) return fa[k].first < fb[k].first ? 1 : -1;
    if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second ? 1 : -1;
  }
  // Equal degree and equal prefix forces equal length.
  return 0;
}

}  // namespace alginv

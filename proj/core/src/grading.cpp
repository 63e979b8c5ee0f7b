#include "alginv/exactpoly/grading.hpp"

#include <algorithm>
#include <functional>

#include "alginv/error.hpp"

namespace alginv {

int total(const Multidegree& delta) {
  int t = 0;
  for (int d : delta) t += d;
  return t;
}

std::string to_string(const Multidegree& delta) {
  std::string out = "(";
  for (std::size_t k = 0; k < delta.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(delta[k]);
  }
  return out + ")";
}

Multidegree operator+(const Multidegree& a, const Multidegree& b) {
  Multidegree out(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}

Multidegree operator-(const Multidegree& a, const Multidegree& b) {
  Multidegree out = a;
  for (std::size_t k = 0; k < b.size() && k < out.size(); ++k) out[k] -= b[k];
  return out;
}

bool componentwise_leq(const Multidegree& a, const Multidegree& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > (k < b.size() ? b[k] : 0)) return false;
  return true;
}

Multidegree multidegree_of(const Monomial& monomial, int slots) {
  Multidegree out(static_cast<std::size_t>(slots), 0);
  for (const auto& [v, e] : monomial.factors()) {
    if (!v.is_coordinate()) continue;
    if (v.slot() > slots)
      throw DomainError("variable " + v.to_string() + " beyond declared slot count " + std::to_string(slots));
    out[static_cast<std::size_t>(v.slot() - 1)] += static_cast<int>(e);
  }
  return out;
}

std::map<Multidegree, Poly> grade(const Poly& f, int slots) {
  std::map<Multidegree, Poly> out;
  for (const auto& [mono, coeff] : f.terms()) out[multidegree_of(mono, slots)].add_term(mono, coeff);
  return out;
}

bool is_homogeneous(const Poly& f, const Multidegree& delta) {
  for (const auto& [mono, coeff] : f.terms())
    if (multidegree_of(mono, static_cast<int>(delta.size())) != delta) return false;
  return true;
}

std::vector<Multidegree> multidegrees_of_total(int slots, int total_degree) {
  std::vector<Multidegree> out;
  Multidegree cur(static_cast<std::size_t>(slots), 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == slots - 1) {
      cur[static_cast<std::size_t>(k)] = left;
      out.push_back(cur);
      return;
    }
    for (int d = left; d >= 0; --d) {
      cur[static_cast<std::size_t>(k)] = d;
      rec(k + 1, left - d);
    }
  };
  if (slots > 0) rec(0, total_degree);
  return out;
}

std::vector<Monomial> monomials_of_multidegree(const Multidegree& delta, int dim, std::size_t cap) {
  // Per slot: all exponent vectors over dim indices summing to delta[r]; then product.
  std::vector<std::vector<Monomial>> per_slot;
  std::size_t count = 1;
  for (std::size_t r = 0; r < delta.size(); ++r) {
    std::vector<Monomial> options;
    std::vector<Monomial::Factor> cur;
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == dim) {
        if (left == 0) options.emplace_back(cur);
        return;
      }
      for (int e = left; e >= 0; --e) {
        if (e > 0) cur.emplace_back(Var::coordinate(static_cast<int>(r) + 1, i + 1), static_cast<std::uint32_t>(e));
        rec(i + 1, left - e);
        if (e > 0) cur.pop_back();
      }
    };
    rec(0, delta[r]);
    count *= options.size();
    if (count > cap) throw CapExceeded("multidegree " + to_string(delta) + " has more than " + std::to_string(cap) + " monomials");
    per_slot.push_back(std::move(options));
  }
  std::vector<Monomial> out{Monomial()};
  for (const auto& options : per_slot) {
    std::vector<Monomial> next;
    next.reserve(out.size() * options.size());
    for (const auto& m : out)
      for (const auto& o : options) next.push_back(m * o);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), GrlexDescending{});
  return out;
}

}  // namespace alginv

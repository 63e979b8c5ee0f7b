#pragma once

#include <map>
#include <string>
#include <vector>

#include "alginv/exactpoly/monomial.hpp"
#include "alginv/exactpoly/poly.hpp"

namespace alginv {

/// Degrees in slots 1..m. Parameters contribute nothing.
using Multidegree = std::vector<int>;

int total(const Multidegree& delta);
std::string to_string(const Multidegree& delta);
Multidegree operator+(const Multidegree& a, const Multidegree& b);
Multidegree operator-(const Multidegree& a, const Multidegree& b);
/// Componentwise a <= b.
bool componentwise_leq(const Multidegree& a, const Multidegree& b);

Multidegree multidegree_of(const Monomial& monomial, int slots);

/// Splits f into its N^m-homogeneous components. Throws DomainError if f uses a slot > m.
std::map<Multidegree, Poly> grade(const Poly& f, int slots);

bool is_homogeneous(const Poly& f, const Multidegree& delta);

/// All multidegrees of length m and the given total degree, in lexicographically
/// decreasing order ((t,0,..) first).
std::vector<Multidegree> multidegrees_of_total(int slots, int total_degree);

/// Every x-monomial of multidegree delta over an n-dimensional algebra, leading first.
/// Throws CapExceeded above `cap` monomials.
std::vector<Monomial> monomials_of_multidegree(const Multidegree& delta, int dim,
                                               std::size_t cap = 20000);

}  // namespace alginv

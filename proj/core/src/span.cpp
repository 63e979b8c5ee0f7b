#include "alginv/exactpoly/span.hpp"

#include <algorithm>

namespace alginv {

PolySpan::PolySpan(const std::vector<Poly>& generators) {
  for (const auto& g : generators) insert(g);
}

Poly PolySpan::reduce(const Poly& f) const {
  Poly r = f;
  for (const auto& b : basis_) {
    Rational c = f.coefficient(b.leading_monomial());
    if (c != 0) r -= b * c;
  }
  return r;
}

bool PolySpan::insert(const Poly& f) {
  Poly r = reduce(f);
  if (r.is_zero()) return false;
  r = r.monic();
  const Monomial& pivot = r.leading_monomial();
  for (auto& b : basis_) {
    Rational c = b.coefficient(pivot);
    if (c != 0) b -= r * c;
  }
  auto pos = std::lower_bound(basis_.begin(), basis_.end(), r, [](const Poly& a, const Poly& x) {
    return grlex_compare(a.leading_monomial(), x.leading_monomial()) > 0;
  });
  basis_.insert(pos, std::move(r));
  return true;
}

bool PolySpan::contains_span(const PolySpan& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

std::vector<Poly> complement_basis(const PolySpan& whole, const PolySpan& sub) {
  // Residues modulo sub avoid every pivot of sub, and so do their combinations; the echelon
  // basis of the residues is therefore a canonical complement.
  PolySpan residues;
  for (const auto& b : whole.basis()) residues.insert(sub.reduce(b));
  return residues.basis();
}

}  // namespace alginv

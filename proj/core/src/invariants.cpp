#include "alginv/invariants/invariants.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "alginv/error.hpp"

namespace alginv {

void check_invariant_caps(int m, const Multidegree& delta) {
  if (m < 1 || m > kMaxSlots) throw CapExceeded("slot count m=" + std::to_string(m) + " outside 1.." + std::to_string(kMaxSlots));
  if (static_cast<int>(delta.size()) != m) throw DomainError("multidegree " + to_string(delta) + " does not have m=" + std::to_string(m) + " entries");
  for (int d : delta)
    if (d < 0) throw DomainError("negative multidegree entry in " + to_string(delta));
  if (total(delta) > kMaxComponentDegree)
    throw CapExceeded("component degree " + std::to_string(total(delta)) + " exceeds the cap " + std::to_string(kMaxComponentDegree));
}

GradedSpan fixed_subspace(const GroupSpec& spec, int m, const Multidegree& delta) {
  check_invariant_caps(m, delta);
  LinearSystem sys = invariance_conditions(spec, delta);
  GradedSpan out{delta, {}};
  for (const auto& v : nullspace(sys.matrix)) {
    Poly f;
    for (std::size_t k = 0; k < v.size(); ++k) f.add_term(sys.unknowns[k], v[k]);
    out.span.insert(f);
  }
  return out;
}

const GradedSpan& InvariantCache::fixed(const Multidegree& delta) {
  auto it = cache_.find(delta);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(delta, fixed_subspace(spec_, m_, delta)).first->second;
}

Poly reynolds(const GroupSpec& spec, const Poly& f) {
  Poly out;
  for (const auto& g : spec.finite_elements()) out += act(g, f);
  return out;
}

namespace {

std::string pol_name(int r, int s) { return "_pol_" + std::to_string(r) + "_" + std::to_string(s); }

bool is_pol_var(Var v) { return v.is_parameter() && v.name().rfind("_pol_", 0) == 0; }

}  // namespace

std::vector<Poly> polarize(const Poly& f, int l, int m) {
  if (f.max_slot() > l) throw DomainError("polarize: polynomial uses more than l=" + std::to_string(l) + " slots");
  if (m < 1) throw DomainError("polarize: target slot count must be positive");
  int n = f.max_coordinate_index();
  std::map<Var, Poly> assign;
  for (int r = 1; r <= l; ++r)
    for (int i = 1; i <= n; ++i) {
      Poly img;
      for (int s = 1; s <= m; ++s) img += Poly::parameter(pol_name(r, s)) * Poly::coordinate(s, i);
      assign.emplace(Var::coordinate(r, i), std::move(img));
    }
  Poly expanded = substitute(f, assign);
  std::vector<Poly> out;
  for (const auto& [mono, coeff] : collect(expanded, is_pol_var))
    if (std::find(out.begin(), out.end(), coeff) == out.end()) out.push_back(coeff);
  return out;
}

Poly restitute(const Poly& f, const std::vector<int>& parts) {
  int t = 0;
  for (int p : parts) {
    if (p < 0) throw DomainError("restitute: negative part");
    t += p;
  }
  if (f.max_slot() > t) throw DomainError("restitute: partition covers " + std::to_string(t) + " slots but the polynomial uses " + std::to_string(f.max_slot()));
  std::vector<int> target(static_cast<std::size_t>(t) + 1, 0);
  int slot = 1;
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (int q = 0; q < parts[k]; ++q) target[static_cast<std::size_t>(slot++)] = static_cast<int>(k) + 1;
  std::map<Var, Poly> assign;
  for (Var v : f.variables())
    if (v.is_coordinate()) assign.emplace(v, Poly::coordinate(target[static_cast<std::size_t>(v.slot())], v.index()));
  return substitute(f, assign);
}

std::size_t GeneratorReport::count(const Multidegree& delta) const {
  for (const auto& [d, gens] : generators)
    if (d == delta) return gens.size();
  return 0;
}

std::size_t GeneratorReport::total_count() const {
  std::size_t n = 0;
  for (const auto& [d, gens] : generators) n += gens.size();
  return n;
}

std::vector<Poly> GeneratorReport::all() const {
  std::vector<Poly> out;
  for (const auto& [d, gens] : generators) out.insert(out.end(), gens.begin(), gens.end());
  return out;
}

std::vector<Multidegree> multidegrees_up_to(int m, int max_degree) {
  std::vector<Multidegree> out;
  for (int d = 1; d <= max_degree; ++d)
    for (auto& delta : multidegrees_of_total(m, d)) out.push_back(std::move(delta));
  return out;
}

namespace {

// Every d1 with 0 < d1 < delta componentwise and d1 <= delta - d1 lexicographically.
std::vector<Multidegree> half_splits(const Multidegree& delta) {
  std::vector<Multidegree> out;
  Multidegree cur(delta.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == delta.size()) {
      int t = total(cur);
      if (t == 0 || t == total(delta)) return;
      if (cur <= delta - cur) out.push_back(cur);
      return;
    }
    for (int e = 0; e <= delta[k]; ++e) {
      cur[k] = e;
      rec(k + 1);
    }
    cur[k] = 0;
  };
  rec(0);
  return out;
}

void add_products(PolySpan& target, const PolySpan& a, const PolySpan& b) {
  for (const auto& p : a.basis())
    for (const auto& q : b.basis()) target.insert(p * q);
}

}  // namespace

std::vector<std::string> multidegree_irreducibility_violations(const std::vector<Multidegree>& degrees) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const Multidegree& goal = degrees[i];
    if (total(goal) == 0) {
      out.push_back("generator " + std::to_string(i + 1) + " is constant");
      continue;
    }
    std::vector<Multidegree> parts;
    for (std::size_t j = 0; j < degrees.size(); ++j)
      if (j != i && total(degrees[j]) > 0 && componentwise_leq(degrees[j], goal)) parts.push_back(degrees[j]);
    // Reachability over the box below goal, remembering one decomposition.
    std::map<Multidegree, std::vector<Multidegree>> reached;
    std::vector<Multidegree> frontier{Multidegree(goal.size(), 0)};
    reached[frontier[0]] = {};
    bool found = false;
    while (!frontier.empty() && !found) {
      std::vector<Multidegree> next;
      for (const auto& cur : frontier)
        for (const auto& p : parts) {
          Multidegree s = cur + p;
          if (!componentwise_leq(s, goal) || reached.count(s)) continue;
          auto path = reached[cur];
          path.push_back(p);
          reached[s] = path;
          if (s == goal) found = true;
          next.push_back(s);
        }
      frontier = std::move(next);
    }
    if (found) {
      std::string expl = to_string(goal) + " =";
      const auto& path = reached[goal];
      for (std::size_t k = 0; k < path.size(); ++k) expl += (k ? " + " : " ") + to_string(path[k]);
      out.push_back(expl);
    }
  }
  return out;
}

GeneratorReport minimal_generators(const GroupSpec& spec, int m, int max_degree) {
  if (max_degree < 0 || max_degree > kMaxComponentDegree)
    throw CapExceeded("degree bound " + std::to_string(max_degree) + " outside 0.." + std::to_string(kMaxComponentDegree));
  GeneratorReport rep;
  rep.slots = m;
  rep.max_degree = max_degree;
  InvariantCache cache(spec, m);
  std::vector<Multidegree> gen_degrees;
  for (const auto& delta : multidegrees_up_to(m, max_degree)) {
    const GradedSpan& whole = cache.fixed(delta);
    rep.invariant_dims[delta] = whole.dim();
    if (whole.span.empty()) continue;
    PolySpan products;
    for (const auto& d1 : half_splits(delta)) {
      const auto& a = cache.fixed(d1);
      if (a.span.empty()) continue;
      const auto& b = cache.fixed(delta - d1);
      if (b.span.empty()) continue;
      add_products(products, a.span, b.span);
    }
    auto fresh = complement_basis(whole.span, products);
    if (fresh.empty()) continue;
    for (std::size_t k = 0; k < fresh.size(); ++k) gen_degrees.push_back(delta);
    rep.generators.emplace_back(delta, std::move(fresh));
  }
  rep.irreducibility_violations = multidegree_irreducibility_violations(gen_degrees);
  rep.multidegree_irreducible = rep.irreducibility_violations.empty();
  return rep;
}

GeneratedAlgebra::GeneratedAlgebra(std::vector<Poly> generators, int m) : m_(m) {
  for (const auto& g : generators)
    for (const auto& [delta, part] : grade(g, m))
      if (total(delta) > 0) base_[delta].insert(part);
}

const PolySpan& GeneratedAlgebra::component(const Multidegree& delta) {
  auto it = cache_.find(delta);
  if (it != cache_.end()) return it->second;
  PolySpan out;
  auto b = base_.find(delta);
  if (b != base_.end()) out = b->second;
  for (const auto& d1 : half_splits(delta)) {
    PolySpan left = component(d1);
    const PolySpan& right = component(delta - d1);
    add_products(out, left, right);
  }
  return cache_.emplace(delta, std::move(out)).first->second;
}

int default_degree_bound(const GroupSpec& spec) {
  if (spec.is_finite()) return std::max(static_cast<int>(spec.finite_elements().size()), 4);
  return 4;
}

}  // namespace alginv

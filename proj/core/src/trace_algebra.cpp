#include "alginv/invariants/trace_algebra.hpp"

#include <functional>

#include "alginv/error.hpp"
#include "alginv/traces/traces.hpp"
#include "alginv/traces/word.hpp"

namespace alginv {

namespace {

// Every d1 with 0 <= d1 <= delta componentwise, optionally excluding 0 and delta.
std::vector<Multidegree> sub_multidegrees(const Multidegree& delta, bool proper) {
  std::vector<Multidegree> out;
  Multidegree cur(delta.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == delta.size()) {
      int t = total(cur);
      if (t == 0) return;
      if (proper && t == total(delta)) return;
      out.push_back(cur);
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

}  // namespace

TraceEngine::TraceEngine(const Algebra& a, int m) : a_(a), m_(m) {
  require_numeric(a, "trace span computation");
  if (m < 1 || m > kMaxSlots) throw CapExceeded("slot count m=" + std::to_string(m) + " outside 1.." + std::to_string(kMaxSlots));
  int n = a.dim();
  for (int l = 1; l <= n; ++l) elem_markers_.push_back(Var::parameter("_e" + std::to_string(l)));
  for (int l = 1; l <= n; ++l)
    for (int j = 1; j <= n; ++j) mat_markers_.push_back(Var::parameter("_m" + std::to_string(l) + "_" + std::to_string(j)));
}

Poly TraceEngine::flatten(const Element& e) const {
  Poly out;
  for (std::size_t l = 0; l < e.coords.size(); ++l) out += e.coords[l] * Poly::variable(elem_markers_[l]);
  return out;
}

Poly TraceEngine::flatten(const PolyMatrix& mat) const {
  Poly out;
  for (std::size_t l = 0; l < mat.rows(); ++l)
    for (std::size_t j = 0; j < mat.cols(); ++j)
      if (!mat(l, j).is_zero()) out += mat(l, j) * Poly::variable(mat_markers_[l * mat.cols() + j]);
  return out;
}

Element TraceEngine::unflatten_element(const Poly& p) const {
  Element e = Element::zero(a_.dim());
  for (const auto& [mono, coeff] : p.terms()) {
    auto [marker, rest] = mono.split_parameters();
    for (std::size_t l = 0; l < elem_markers_.size(); ++l)
      if (marker == Monomial(elem_markers_[l])) e.coords[l].add_term(rest, coeff);
  }
  return e;
}

PolyMatrix TraceEngine::unflatten_matrix(const Poly& p) const {
  auto n = static_cast<std::size_t>(a_.dim());
  PolyMatrix out(n, n);
  for (const auto& [mono, coeff] : p.terms()) {
    auto [marker, rest] = mono.split_parameters();
    for (std::size_t k = 0; k < mat_markers_.size(); ++k)
      if (marker == Monomial(mat_markers_[k])) out(k / n, k % n).add_term(rest, coeff);
  }
  return out;
}

const PolySpan& TraceEngine::values(const Multidegree& delta) {
  auto it = values_.find(delta);
  if (it != values_.end()) return it->second;
  PolySpan out;
  if (total(delta) == 1) {
    for (std::size_t r = 0; r < delta.size(); ++r)
      if (delta[r] == 1) out.insert(flatten(Element::generic(a_.dim(), static_cast<int>(r) + 1)));
  } else {
    for (const auto& d1 : sub_multidegrees(delta, true)) {
      std::vector<Element> left, right;
      for (const auto& p : values(d1).basis()) left.push_back(unflatten_element(p));
      for (const auto& p : values(delta - d1).basis()) right.push_back(unflatten_element(p));
      for (const auto& u : left)
        for (const auto& v : right) out.insert(flatten(a_.multiply(u, v)));
    }
  }
  return values_.emplace(delta, std::move(out)).first->second;
}

const PolySpan& TraceEngine::operators(const Multidegree& delta) {
  auto it = operators_.find(delta);
  if (it != operators_.end()) return it->second;
  PolySpan out;
  if (total(delta) == 0) {
    out.insert(flatten(PolyMatrix::identity(static_cast<std::size_t>(a_.dim()))));
  } else {
    for (const auto& d1 : sub_multidegrees(delta, false)) {
      std::vector<Element> mults;
      for (const auto& p : values(d1).basis()) mults.push_back(unflatten_element(p));
      std::vector<PolyMatrix> inner;
      for (const auto& p : operators(delta - d1).basis()) inner.push_back(unflatten_matrix(p));
      for (const auto& u : mults) {
        PolyMatrix l = a_.multiplication_matrix(Side::Left, u);
        PolyMatrix r = a_.multiplication_matrix(Side::Right, u);
        for (const auto& o : inner) {
          out.insert(flatten(l * o));
          out.insert(flatten(r * o));
        }
      }
    }
  }
  return operators_.emplace(delta, std::move(out)).first->second;
}

const PolySpan& TraceEngine::traces(const Multidegree& delta) {
  auto it = traces_.find(delta);
  if (it != traces_.end()) return it->second;
  PolySpan out;
  for (const auto& p : operators(delta).basis()) out.insert(unflatten_matrix(p).trace());
  return traces_.emplace(delta, std::move(out)).first->second;
}

const PolySpan& TraceEngine::algebra(const Multidegree& delta) {
  auto it = algebra_.find(delta);
  if (it != algebra_.end()) return it->second;
  PolySpan out;
  if (total(delta) == 0) {
    out.insert(Poly(1L));
  } else {
    out = traces(delta);
    for (const auto& d1 : sub_multidegrees(delta, true)) {
      Multidegree d2 = delta - d1;
      if (d2 < d1) continue;
      PolySpan left = algebra(d1);
      const PolySpan& right = algebra(d2);
      for (const auto& p : left.basis())
        for (const auto& q : right.basis()) out.insert(p * q);
    }
  }
  return algebra_.emplace(delta, std::move(out)).first->second;
}

GradedSpan trace_span(const Algebra& a, int m, const Multidegree& delta, int max_degree) {
  check_invariant_caps(m, delta);
  if (total(delta) > max_degree)
    throw DomainError("multidegree " + to_string(delta) + " exceeds the degree bound " + std::to_string(max_degree));
  TraceEngine engine(a, m);
  return {delta, engine.algebra(delta)};
}

GradedSpan trace_span_bruteforce(const Algebra& a, int m, const Multidegree& delta) {
  check_invariant_caps(m, delta);
  require_numeric(a, "trace span computation");
  std::vector<Poly> traces;
  for (const auto& d : sub_multidegrees(delta, false)) {
    Multidegree full{1};
    full.insert(full.end(), d.begin(), d.end());
    for (const auto& w : enumerate_words(m, full)) traces.push_back(trace_of_word(a, w, m));
  }
  GeneratedAlgebra alg(traces, m);
  return {delta, total(delta) == 0 ? PolySpan({Poly(1L)}) : alg.component(delta)};
}

bool ApiReport::equal_everywhere() const {
  for (const auto& e : entries)
    if (!e.equal) return false;
  return true;
}

bool ApiReport::included_everywhere() const {
  for (const auto& e : entries)
    if (!e.included) return false;
  return true;
}

const ApiEntry* ApiReport::first_strict() const {
  for (const auto& e : entries)
    if (!e.equal) return &e;
  return nullptr;
}

ApiReport api_check(const Algebra& a, const GroupSpec& spec, int m, int max_degree) {
  if (spec.dim() != a.dim()) throw DomainError("group and algebra dimensions differ");
  if (max_degree > kMaxComponentDegree) throw CapExceeded("degree bound exceeds the cap " + std::to_string(kMaxComponentDegree));
  ApiReport rep;
  rep.slots = m;
  rep.max_degree = max_degree;
  TraceEngine engine(a, m);
  InvariantCache cache(spec, m);
  for (const auto& delta : multidegrees_up_to(m, max_degree)) {
    const auto& fixed = cache.fixed(delta);
    const auto& tr = engine.algebra(delta);
    ApiEntry e;
    e.multidegree = delta;
    e.invariant_dim = fixed.dim();
    e.trace_dim = tr.dim();
    e.included = fixed.span.contains_span(tr);
    e.equal = e.included && e.invariant_dim == e.trace_dim;
    if (e.included && !e.equal) e.witness = complement_basis(fixed.span, tr).front();
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

WeylReport weyl_check(const GroupSpec& spec, int m, int max_degree) {
  if (spec.dim() != 2) throw DomainError("the polarization check polarizes from n=2 slots and needs dim 2");
  if (m <= 2) throw DomainError("the polarization check needs m > 2");
  WeylReport rep;
  std::vector<Poly> polarized;
  for (const auto& g : minimal_generators(spec, 2, max_degree).all())
    for (auto& p : polarize(g, 2, m)) polarized.push_back(std::move(p));
  rep.polarized_generators = polarized.size();
  GeneratedAlgebra alg(polarized, m);
  InvariantCache cache(spec, m);
  for (const auto& delta : multidegrees_up_to(m, max_degree)) {
    const auto& fixed = cache.fixed(delta);
    const auto& comp = alg.component(delta);
    if (!(comp.dim() == fixed.dim() && fixed.span.contains_span(comp))) {
      rep.holds = false;
      rep.failures.push_back(delta);
    }
  }
  return rep;
}

}  // namespace alginv

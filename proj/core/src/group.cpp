#include "alginv/group/group.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "alginv/error.hpp"
#include "alginv/exactpoly/grading.hpp"

namespace alginv {

namespace {

bool is_identity(const QMatrix& g) { return g == QMatrix::identity(g.rows()); }

// Substitution x_{ri} -> sum_j g_ij x_{rj} with images and their powers cached across calls.
class Actor {
 public:
  explicit Actor(const PolyMatrix& g) : g_(g) {}

  Poly apply(const Poly& f) {
    if (static_cast<std::size_t>(f.max_coordinate_index()) > g_.rows())
      throw DomainError("polynomial uses a basis index beyond the group dimension");
    Poly out;
    for (const auto& [mono, coeff] : f.terms()) {
      Poly t(coeff);
      for (const auto& [v, e] : mono.factors()) {
        t *= power(v, e);
        if (t.is_zero()) break;
      }
      out += t;
    }
    return out;
  }

 private:
  const Poly& power(Var v, std::uint32_t e) {
    auto key = std::make_pair(v, e);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Poly value;
    if (!v.is_coordinate()) {
      value = Poly::term(Monomial(v, e), 1);
    } else if (e == 1) {
      auto i = static_cast<std::size_t>(v.index() - 1);
      for (std::size_t j = 0; j < g_.cols(); ++j)
        if (!g_(i, j).is_zero()) value += g_(i, j) * Poly::coordinate(v.slot(), static_cast<int>(j) + 1);
    } else {
      value = power(v, e - 1) * power(v, 1);
    }
    return cache_.emplace(key, std::move(value)).first->second;
  }

  const PolyMatrix& g_;
  std::map<std::pair<Var, std::uint32_t>, Poly> cache_;
};

void check_square(const PolyMatrix& m, int dim, const char* what) {
  if (static_cast<int>(m.rows()) != dim || static_cast<int>(m.cols()) != dim)
    throw InputError(std::string(what) + " must be " + std::to_string(dim) + "x" + std::to_string(dim));
}

}  // namespace

GroupSpec::GroupSpec(int dim, std::vector<Part> parts, std::string name)
    : dim_(dim), parts_(std::move(parts)), name_(std::move(name)) {
  if (dim_ < 1 || dim_ > kMaxAlgebraDim) throw DomainError("group dimension out of range");
  for (auto& part : parts_) {
    if (auto* fin = std::get_if<FiniteGroup>(&part)) {
      std::vector<QMatrix> unique;
      for (auto& g : fin->elements) {
        check_square(to_poly(g), dim_, "group element");
        if (determinant(g) == 0) throw InputError("group element " + to_string(g) + " is singular");
        if (std::find(unique.begin(), unique.end(), g) == unique.end())
          unique.push_back(g);
        else
          warnings_.push_back("duplicate element " + to_string(g) + " dropped");
      }
      auto id = QMatrix::identity(static_cast<std::size_t>(dim_));
      if (std::find(unique.begin(), unique.end(), id) == unique.end()) {
        unique.insert(unique.begin(), id);
        warnings_.push_back("identity added to finite group list");
      }
      fin->elements = std::move(unique);
    } else {
      auto& fam = std::get<GroupFamily>(part);
      check_square(fam.matrix, dim_, "family matrix");
      std::set<std::string> declared(fam.params.begin(), fam.params.end());
      auto check = [&](const Poly& p) {
        for (Var v : p.variables())
          if (v.is_coordinate() || !declared.count(v.name()))
            throw InputError("family entry uses undeclared symbol " + v.to_string());
      };
      for (std::size_t i = 0; i < fam.matrix.rows(); ++i)
        for (std::size_t j = 0; j < fam.matrix.cols(); ++j) check(fam.matrix(i, j));
      for (const auto& p : fam.nonzero) check(p);
      for (const auto& [p, q] : fam.unequal) check(p), check(q);
      if (determinant(fam.matrix).is_zero()) throw InputError("family matrix is identically singular");
    }
  }
  if (parts_.empty()) parts_.push_back(FiniteGroup{{QMatrix::identity(static_cast<std::size_t>(dim_))}});
}

GroupSpec GroupSpec::trivial(int dim) { return finite(dim, {QMatrix::identity(static_cast<std::size_t>(dim))}, "trivial"); }

GroupSpec GroupSpec::finite(int dim, std::vector<QMatrix> elements, std::string name) {
  return GroupSpec(dim, {FiniteGroup{std::move(elements)}}, std::move(name));
}

GroupSpec GroupSpec::family(int dim, GroupFamily fam, std::string name) {
  return GroupSpec(dim, {std::move(fam)}, std::move(name));
}

bool GroupSpec::is_finite() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const Part& p) { return std::holds_alternative<FiniteGroup>(p); });
}

std::vector<QMatrix> GroupSpec::finite_elements() const {
  if (!is_finite()) throw DomainError("group has a parametric family part");
  std::vector<QMatrix> out;
  for (const auto& part : parts_)
    for (const auto& g : std::get<FiniteGroup>(part).elements)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

bool GroupSpec::is_trivial() const {
  if (!is_finite()) return false;
  for (const auto& g : finite_elements())
    if (!is_identity(g)) return false;
  return true;
}

bool is_automorphism(const Algebra& a, const PolyMatrix& g) {
  check_square(g, a.dim(), "candidate automorphism");
  const int n = a.dim();
  std::vector<Element> image;
  for (int j = 0; j < n; ++j) {
    Element col = Element::zero(n);
    for (int i = 0; i < n; ++i) col.coords[static_cast<std::size_t>(i)] = g(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    image.push_back(std::move(col));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Element lhs = Element::zero(n);
      for (int l = 1; l <= n; ++l) {
        const Poly& c = a.constant(i, j, l);
        if (!c.is_zero()) lhs += c * image[static_cast<std::size_t>(l - 1)];
      }
      Element rhs = a.multiply(image[static_cast<std::size_t>(i - 1)], image[static_cast<std::size_t>(j - 1)]);
      if (!(lhs - rhs).is_zero()) return false;
    }
  return true;
}

bool is_automorphism(const Algebra& a, const GroupSpec& spec) {
  if (spec.dim() != a.dim()) throw DomainError("group and algebra dimensions differ");
  for (const auto& part : spec.parts()) {
    if (const auto* fin = std::get_if<FiniteGroup>(&part)) {
      for (const auto& g : fin->elements)
        if (!is_automorphism(a, to_poly(g))) return false;
    } else if (!is_automorphism(a, std::get<GroupFamily>(part).matrix)) {
      return false;
    }
  }
  return true;
}

Poly act(const PolyMatrix& g, const Poly& f) { return Actor(g).apply(f); }

Poly act(const QMatrix& g, const Poly& f) { return act(to_poly(g), f); }

LinearSystem invariance_conditions(const GroupSpec& spec, const Multidegree& delta) {
  LinearSystem sys;
  sys.unknowns = monomials_of_multidegree(delta, spec.dim());
  std::vector<std::map<Monomial, std::vector<std::pair<std::size_t, Rational>>, GrlexDescending>> blocks;
  auto add_block = [&](const PolyMatrix& g) {
    Actor actor(g);
    std::map<Monomial, std::vector<std::pair<std::size_t, Rational>>, GrlexDescending> block;
    for (std::size_t k = 0; k < sys.unknowns.size(); ++k) {
      Poly diff = actor.apply(Poly::term(sys.unknowns[k], 1)) - Poly::term(sys.unknowns[k], 1);
      for (const auto& [mono, coeff] : diff.terms()) block[mono].emplace_back(k, coeff);
    }
    blocks.push_back(std::move(block));
  };
  for (const auto& part : spec.parts()) {
    if (const auto* fin = std::get_if<FiniteGroup>(&part)) {
      for (const auto& g : fin->elements)
        if (!is_identity(g)) add_block(to_poly(g));
    } else {
      add_block(std::get<GroupFamily>(part).matrix);
    }
  }
  std::size_t total_rows = 0;
  for (const auto& b : blocks) total_rows += b.size();
  sys.matrix = QMatrix(total_rows, sys.unknowns.size());
  std::size_t r = 0;
  for (const auto& b : blocks)
    for (const auto& [mono, entries] : b) {
      for (const auto& [k, c] : entries) sys.matrix(r, k) = c;
      ++r;
    }
  return sys;
}

ClosureReport group_closure_check(const GroupSpec& spec) {
  ClosureReport rep;
  rep.elements = spec.finite_elements();
  for (const auto& g : rep.elements)
    if (determinant(g) == 0) throw DomainError("singular group element " + to_string(g));
  const auto& el = rep.elements;
  rep.order = el.size();
  auto index_of = [&](const QMatrix& m) {
    for (std::size_t k = 0; k < el.size(); ++k)
      if (el[k] == m) return static_cast<int>(k);
    return -1;
  };
  rep.closed = true;
  rep.abelian = true;
  rep.cayley.assign(el.size(), std::vector<int>(el.size(), -1));
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (index_of(inverse(el[i])) < 0) rep.closed = false;
    for (std::size_t j = 0; j < el.size(); ++j) {
      rep.cayley[i][j] = index_of(el[i] * el[j]);
      if (rep.cayley[i][j] < 0) rep.closed = false;
      if (!(el[i] * el[j] == el[j] * el[i])) rep.abelian = false;
    }
  }
  return rep;
}

QMatrix sample_family(const GroupFamily& fam, const std::map<std::string, Rational>& assignment) {
  std::map<Var, Rational> values;
  for (const auto& p : fam.params) {
    auto it = assignment.find(p);
    if (it == assignment.end()) throw InputError("no value for family parameter '" + p + "'");
    values.emplace(Var::parameter(p), it->second);
  }
  for (const auto& c : fam.nonzero)
    if (evaluate(c, values) == 0) throw InputError("family constraint " + c.to_string() + " != 0 violated");
  for (const auto& [p, q] : fam.unequal)
    if (evaluate(p, values) == evaluate(q, values))
      throw InputError("family constraint " + p.to_string() + " != " + q.to_string() + " violated");
  QMatrix g = fam.matrix.map<Rational>([&](const Poly& e) { return evaluate(e, values); });
  if (determinant(g) == 0) throw InputError("family sample " + to_string(g) + " is singular");
  return g;
}

std::vector<QMatrix> random_family_samples(const GroupFamily& fam, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  std::vector<QMatrix> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 100 * count + 100; ++attempt) {
    std::map<std::string, Rational> assignment;
    for (const auto& p : fam.params) assignment[p] = make_rational(num(rng), den(rng));
    try {
      out.push_back(sample_family(fam, assignment));
    } catch (const InputError&) {
      continue;
    }
  }
  return out;
}

std::vector<QMatrix> sample_elements(const GroupSpec& spec, std::size_t per_family, std::uint64_t seed) {
  std::vector<QMatrix> out;
  for (const auto& part : spec.parts()) {
    if (const auto* fin = std::get_if<FiniteGroup>(&part)) {
      out.insert(out.end(), fin->elements.begin(), fin->elements.end());
    } else {
      auto s = random_family_samples(std::get<GroupFamily>(part), per_family, seed++);
      out.insert(out.end(), s.begin(), s.end());
    }
  }
  return out;
}

}  // namespace alginv

#include "alginv/traces/traces.hpp"

#include <functional>
#include <map>

#include "alginv/error.hpp"

namespace alginv {

namespace {

void check_word(const Word& h, int m) {
  if (h.max_letter() > m) throw DomainError("word " + h.to_string() + " uses a letter beyond m=" + std::to_string(m));
  if (h.degree_in(0) != 1) throw DomainError("word " + h.to_string() + " must have degree exactly 1 in x0");
}

}  // namespace

PolyMatrix word_operator(const Algebra& a, const Word& h, int m) {
  check_word(h, m);
  const int n = a.dim();
  // Values of x0-free subwords at the generic elements do not depend on the column.
  std::map<const Word*, Element> fixed;
  std::function<const Element&(const Word&)> value = [&](const Word& w) -> const Element& {
    auto it = fixed.find(&w);
    if (it != fixed.end()) return it->second;
    Element e = w.is_letter() ? Element::generic(n, w.letter_index()) : a.multiply(value(w.left()), value(w.right()));
    return fixed.emplace(&w, std::move(e)).first->second;
  };
  std::function<Element(const Word&, int)> eval = [&](const Word& w, int j) -> Element {
    if (w.is_letter()) return w.letter_index() == 0 ? Element::basis(n, j) : value(w);
    bool left_has_x0 = w.left().degree_in(0) > 0;
    if (left_has_x0) return a.multiply(eval(w.left(), j), value(w.right()));
    return a.multiply(value(w.left()), eval(w.right(), j));
  };
  PolyMatrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    Element col = eval(h, j);
    for (int l = 0; l < n; ++l) out(static_cast<std::size_t>(l), static_cast<std::size_t>(j - 1)) = std::move(col.coords[static_cast<std::size_t>(l)]);
  }
  return out;
}

Poly trace_of_word(const Algebra& a, const Word& h, int m) { return word_operator(a, h, m).trace(); }

std::optional<WordShape> WordShape::from_word(const Word& h) {
  if (h.degree_in(0) != 1) throw DomainError("word " + h.to_string() + " must have degree exactly 1 in x0");
  WordShape s;
  const Word* w = &h;
  while (!w->is_letter()) {
    if (w->right().degree_in(0) > 0) {
      s.factors.emplace_back(Side::Left, w->left());
      w = &w->right();
    } else {
      s.factors.emplace_back(Side::Right, w->right());
      w = &w->left();
    }
  }
  if (s.factors.empty()) return std::nullopt;
  return s;
}

Word WordShape::to_word() const {
  Word w = Word::letter(0);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    w = it->first == Side::Left ? Word::product(it->second, w) : Word::product(w, it->second);
  return w;
}

int WordShape::max_multiplier_degree() const {
  int d = 0;
  for (const auto& f : factors) d = std::max(d, f.second.leaves());
  return d;
}

Poly trace_closed_form(const Algebra& a, const WordShape& shape) {
  if (shape.factors.empty()) throw DomainError("a word shape needs at least one multiplier");
  const int n = a.dim();
  struct Option {
    PolyMatrix matrix;
    Poly weight;
  };
  std::vector<std::vector<Option>> options;
  for (const auto& [side, h] : shape.factors) {
    if (h.degree_in(0) != 0) throw DomainError("multipliers may not contain x0");
    std::vector<Option> opts;
    if (h.is_letter()) {
      for (int i = 1; i <= n; ++i) opts.push_back({a.op_matrix(side, i), Poly::coordinate(h.letter_index(), i)});
    } else if (h.leaves() == 2) {
      int r = h.left().letter_index(), s = h.right().letter_index();
      for (int i = 1; i <= n; ++i)
        for (int i2 = 1; i2 <= n; ++i2)
          opts.push_back({a.op_matrix_double(side, i, i2), Poly::coordinate(r, i) * Poly::coordinate(s, i2)});
    } else {
      throw DomainError("closed-form traces cover multipliers of degree 1 or 2 only; got " + h.to_string());
    }
    options.push_back(std::move(opts));
  }
  Poly out;
  std::function<void(std::size_t, const PolyMatrix&, const Poly&)> rec = [&](std::size_t q, const PolyMatrix& prod, const Poly& w) {
    if (q == options.size()) {
      Poly t = prod.trace();
      if (!t.is_zero()) out += t * w;
      return;
    }
    for (const auto& o : options[q]) {
      if (o.matrix.is_zero()) continue;
      rec(q + 1, prod * o.matrix, w * o.weight);
    }
  };
  rec(0, PolyMatrix::identity(static_cast<std::size_t>(n)), Poly(1L));
  return out;
}

std::vector<TraceTableEntry> trace_table_report(const Algebra& a) {
  if (a.dim() != 2) throw DomainError("the trace table is defined for two-dimensional algebras");
  static const std::vector<std::pair<std::string, std::string>> shapes = {
      {"tr(x_r*x_0)", "(x1*x0)"},
      {"tr(x_0*x_r)", "(x0*x1)"},
      {"tr(x_r*(x_s*x_0))", "(x1*(x2*x0))"},
      {"tr((x_s*x_0)*x_r)", "((x2*x0)*x1)"},
      {"tr(x_r*(x_0*x_s))", "(x1*(x0*x2))"},
      {"tr((x_0*x_s)*x_r)", "((x0*x2)*x1)"},
      {"tr((x_r*x_s)*x_0)", "((x1*x2)*x0)"},
      {"tr(x_0*(x_r*x_s))", "(x0*(x1*x2))"},
      {"tr(x_r*((x_s*x_t)*x_0))", "(x1*((x2*x3)*x0))"},
  };
  std::vector<TraceTableEntry> out;
  for (const auto& [label, text] : shapes) {
    Word w = parse_word(text);
    out.push_back({label, w, trace_of_word(a, w, 3)});
  }
  return out;
}

}  // namespace alginv

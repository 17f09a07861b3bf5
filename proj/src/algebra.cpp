#include "tfl/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tfl {

QuiverPresentation QuiverPresentation::reversed() const {
  QuiverPresentation r = *this;
  for (auto& a : r.arrows) std::swap(a.source, a.target);
  for (auto& rel : r.relations)
    for (auto& term : rel) std::reverse(term.arrows.begin(), term.arrows.end());
  return r;
}

template <class F>
void Algebra<F>::finalize() {
  if (table.size() != dim * dim * dim) throw AlgebraError("structure table has wrong size");
  if (unit.size() != dim) throw AlgebraError("unit vector has wrong length");
  left_mult.assign(dim, Matrix<F>(field, dim, dim));
  right_mult.assign(dim, Matrix<F>(field, dim, dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        left_mult[i](k, j) = c(i, j, k);
        right_mult[i](k, j) = c(j, i, k);
      }
  if (labels.size() != dim) {
    labels.clear();
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
  }
}

template <class F>
Vec<F> Algebra<F>::multiply(const Vec<F>& a, const Vec<F>& b) const {
  Vec<F> out = zero_vec(field, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (field.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (field.is_zero(b[j])) continue;
      auto ab = field.mul(a[i], b[j]);
      for (std::size_t k = 0; k < dim; ++k) {
        const auto& ck = c(i, j, k);
        if (!field.is_zero(ck)) out[k] = field.add(out[k], field.mul(ab, ck));
      }
    }
  }
  return out;
}

template <class F>
Matrix<F> Algebra<F>::left_matrix(const Vec<F>& a) const {
  Matrix<F> m(field, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m.add_scaled(left_mult[i], a[i]);
  return m;
}

template <class F>
Matrix<F> Algebra<F>::right_matrix(const Vec<F>& a) const {
  Matrix<F> m(field, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m.add_scaled(right_mult[i], a[i]);
  return m;
}

template <class F>
std::optional<std::size_t> nilpotency_index(const Algebra<F>& a, const Subspace<F>& ideal) {
  // power_k = span of products of k elements of the ideal
  Subspace<F> power = ideal;
  for (std::size_t k = 1; k <= a.dim + 1; ++k) {
    if (power.dim() == 0) return k;
    std::vector<Vec<F>> prods;
    for (std::size_t i = 0; i < power.dim(); ++i)
      for (std::size_t j = 0; j < ideal.dim(); ++j) prods.push_back(a.multiply(power.vector(i), ideal.vector(j)));
    power = Subspace<F>::span(a.field, a.dim, prods);
  }
  return std::nullopt;
}

template <class F>
ValidationReport validate_algebra(const Algebra<F>& a) {
  ValidationReport rep;
  const F& f = a.field;
  const std::size_t d = a.dim;
  if (a.table.size() != d * d * d) {
    rep.fail("structure table has " + std::to_string(a.table.size()) + " entries, expected " +
             std::to_string(d * d * d));
    return rep;
  }
  if (a.unit.size() != d) {
    rep.fail("unit vector has wrong length");
    return rep;
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          auto lhs = f.zero(), rhs = f.zero();
          for (std::size_t m = 0; m < d; ++m) {
            lhs = f.add(lhs, f.mul(a.c(i, j, m), a.c(m, k, l)));
            rhs = f.add(rhs, f.mul(a.c(j, k, m), a.c(i, m, l)));
          }
          if (!(lhs == rhs)) {
            std::ostringstream os;
            os << "associativity fails at (i,j,k,l)=(" << i << "," << j << "," << k << "," << l << ")";
            rep.fail(os.str());
            return rep;
          }
        }
  for (std::size_t j = 0; j < d; ++j) {
    auto e = a.basis_vector(j);
    if (a.multiply(a.unit, e) != e) {
      rep.fail("unit axiom fails: 1*e_" + std::to_string(j) + " != e_" + std::to_string(j));
      return rep;
    }
    if (a.multiply(e, a.unit) != e) {
      rep.fail("unit axiom fails: e_" + std::to_string(j) + "*1 != e_" + std::to_string(j));
      return rep;
    }
  }
  if (a.radical) {
    const auto& rad = *a.radical;
    if (rad.ambient() != d) {
      rep.fail("radical lives in the wrong ambient space");
      return rep;
    }
    for (std::size_t r = 0; r < rad.dim(); ++r)
      for (std::size_t i = 0; i < d; ++i) {
        auto e = a.basis_vector(i);
        if (!rad.contains(a.multiply(e, rad.vector(r))) || !rad.contains(a.multiply(rad.vector(r), e))) {
          rep.fail("radical is not a two-sided ideal (basis element " + std::to_string(i) + ", radical vector " +
                   std::to_string(r) + ")");
          return rep;
        }
      }
    if (!nilpotency_index(a, rad)) rep.fail("radical is not nilpotent");
  }
  if (!a.idempotents.empty()) {
    Vec<F> sum = zero_vec(f, d);
    for (std::size_t s = 0; s < a.idempotents.size(); ++s) {
      const auto& e = a.idempotents[s];
      if (e.size() != d) {
        rep.fail("idempotent " + std::to_string(s) + " has wrong length");
        return rep;
      }
      for (std::size_t t = 0; t < a.idempotents.size(); ++t) {
        auto prod = a.multiply(e, a.idempotents[t]);
        auto expect = s == t ? e : zero_vec(f, d);
        if (prod != expect) {
          rep.fail("idempotents not orthogonal idempotents at pair (" + std::to_string(s) + "," + std::to_string(t) +
                   ")");
          return rep;
        }
      }
      for (std::size_t k = 0; k < d; ++k) sum[k] = f.add(sum[k], e[k]);
      if (a.radical) {
        // e A e / e rad e must be one-dimensional (primitive, split)
        std::vector<Vec<F>> eae, erade;
        for (std::size_t i = 0; i < d; ++i) eae.push_back(a.multiply(a.multiply(e, a.basis_vector(i)), e));
        for (std::size_t r = 0; r < a.radical->dim(); ++r)
          erade.push_back(a.multiply(a.multiply(e, a.radical->vector(r)), e));
        auto big = Subspace<F>::span(f, d, eae).dim();
        auto small = Subspace<F>::span(f, d, erade).dim();
        if (big != small + 1) rep.fail("idempotent " + std::to_string(s) + " is not primitive");
      }
    }
    if (sum != a.unit) rep.fail("idempotents do not sum to the unit");
  }
  return rep;
}

namespace {

struct Path {
  std::size_t vertex = 0;              // used when arrows is empty
  std::vector<std::size_t> arrows;     // product order
};

}  // namespace

template <class F>
Algebra<F> build_bound_quiver_algebra(const F& field, const QuiverPresentation& q, std::string name) {
  if (q.vertices == 0) throw AlgebraError("quiver needs at least one vertex");
  if (q.nilpotency < 1) throw AlgebraError("nilpotency bound must be at least 1");
  std::map<std::string, std::size_t> arrow_index;
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    const auto& ar = q.arrows[i];
    if (ar.source >= q.vertices || ar.target >= q.vertices)
      throw AlgebraError("arrow '" + ar.label + "' refers to a vertex outside the quiver");
    if (ar.label.empty()) throw AlgebraError("arrow labels must be non-empty");
    if (!arrow_index.emplace(ar.label, i).second) throw AlgebraError("duplicate arrow label '" + ar.label + "'");
  }
  auto src = [&](const Path& p) { return p.arrows.empty() ? p.vertex : q.arrows[p.arrows.back()].source; };
  auto tgt = [&](const Path& p) { return p.arrows.empty() ? p.vertex : q.arrows[p.arrows.front()].target; };

  // paths of length < N: vertices, then by length, then lexicographic in arrow indices
  std::vector<Path> paths;
  for (std::size_t v = 0; v < q.vertices; ++v) paths.push_back({v, {}});
  std::vector<std::vector<std::size_t>> layer;
  if (q.nilpotency > 1)
    for (std::size_t i = 0; i < q.arrows.size(); ++i) layer.push_back({i});
  for (std::size_t len = 1; len < q.nilpotency && !layer.empty(); ++len) {
    for (const auto& seq : layer) paths.push_back({0, seq});
    if (len + 1 >= q.nilpotency) break;
    std::vector<std::vector<std::size_t>> next;
    for (const auto& seq : layer)
      for (std::size_t i = 0; i < q.arrows.size(); ++i)
        if (q.arrows[seq.back()].source == q.arrows[i].target) {
          auto s = seq;
          s.push_back(i);
          next.push_back(std::move(s));
        }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index_of;
  for (std::size_t i = 0; i < paths.size(); ++i)
    index_of[{paths[i].arrows.empty() ? paths[i].vertex : 0, paths[i].arrows}] = i;
  const std::size_t np = paths.size();
  auto lookup = [&](const Path& p) -> std::optional<std::size_t> {
    auto it = index_of.find({p.arrows.empty() ? p.vertex : 0, p.arrows});
    if (it == index_of.end()) return std::nullopt;
    return it->second;
  };
  // concatenation p*w; nullopt when not composable or too long
  auto concat = [&](const Path& p, const Path& w) -> std::optional<Path> {
    if (src(p) != tgt(w)) return std::nullopt;
    if (p.arrows.empty()) return w;
    if (w.arrows.empty()) return p;
    if (p.arrows.size() + w.arrows.size() >= q.nilpotency) return std::nullopt;
    Path r{0, p.arrows};
    r.arrows.insert(r.arrows.end(), w.arrows.begin(), w.arrows.end());
    return r;
  };

  // relation vectors over the path space (column = np-1-index so pivots land on the largest path)
  auto column = [&](std::size_t path_idx) { return np - 1 - path_idx; };
  std::vector<std::vector<std::pair<Path, typename F::Elem>>> rels;
  for (const auto& rel : q.relations) {
    std::vector<std::pair<Path, typename F::Elem>> terms;
    for (const auto& term : rel) {
      if (term.arrows.size() < 2)
        throw AlgebraError("relation paths must have length >= 2 (admissible ideal)");
      Path p{0, {}};
      for (const auto& lab : term.arrows) {
        auto it = arrow_index.find(lab);
        if (it == arrow_index.end()) throw AlgebraError("relation uses unknown arrow '" + lab + "'");
        p.arrows.push_back(it->second);
      }
      for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
        if (q.arrows[p.arrows[i]].source != q.arrows[p.arrows[i + 1]].target)
          throw AlgebraError("relation path is not composable");
      if (p.arrows.size() >= q.nilpotency) continue;  // already zero
      terms.emplace_back(std::move(p), field.parse(term.coeff));
    }
    if (!terms.empty()) rels.push_back(std::move(terms));
  }
  std::vector<Vec<F>> ideal_vectors;
  for (const auto& rel : rels)
    for (const auto& left : paths)
      for (const auto& right : paths) {
        Vec<F> v = zero_vec(field, np);
        bool any = false;
        for (const auto& [w, coef] : rel) {
          auto lw = concat(left, w);
          if (!lw) continue;
          auto lwr = concat(*lw, right);
          if (!lwr) continue;
          auto idx = lookup(*lwr);
          if (!idx) continue;
          v[column(*idx)] = field.add(v[column(*idx)], coef);
          any = true;
        }
        if (any && !is_zero_vec(field, v)) ideal_vectors.push_back(std::move(v));
      }
  auto ideal = Subspace<F>::span(field, np, ideal_vectors);
  std::vector<bool> reducible(np, false);
  for (auto c : ideal.pivots()) reducible[np - 1 - c] = true;
  std::vector<std::size_t> basis_paths;
  std::vector<std::size_t> basis_pos(np, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < np; ++i)
    if (!reducible[i]) {
      basis_pos[i] = basis_paths.size();
      basis_paths.push_back(i);
    }
  const std::size_t d = basis_paths.size();
  auto normal_form = [&](std::size_t path_idx) {
    Vec<F> v = zero_vec(field, np);
    v[column(path_idx)] = field.one();
    v = ideal.reduce(std::move(v));
    Vec<F> out = zero_vec(field, d);
    for (std::size_t i = 0; i < np; ++i) {
      const auto& e = v[column(i)];
      if (!field.is_zero(e)) out[basis_pos[i]] = e;
    }
    return out;
  };

  Algebra<F> a;
  a.field = field;
  a.dim = d;
  a.table.assign(d * d * d, field.zero());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto prod = concat(paths[basis_paths[i]], paths[basis_paths[j]]);
      if (!prod) continue;
      auto idx = lookup(*prod);
      if (!idx) continue;
      auto nf = normal_form(*idx);
      for (std::size_t k = 0; k < d; ++k) a.c(i, j, k) = nf[k];
    }
  a.unit = zero_vec(field, d);
  for (std::size_t v = 0; v < q.vertices; ++v) {
    a.unit[basis_pos[v]] = field.one();
    a.idempotents.push_back(a.basis_vector(basis_pos[v]));
  }
  std::vector<Vec<F>> rad;
  for (std::size_t i = q.vertices; i < d; ++i) rad.push_back(a.basis_vector(i));
  a.radical = Subspace<F>::span(field, d, rad);
  for (auto pi : basis_paths) {
    const auto& p = paths[pi];
    if (p.arrows.empty()) {
      a.labels.push_back("e" + std::to_string(p.vertex + 1));
    } else {
      std::string lab;
      for (std::size_t t = 0; t < p.arrows.size(); ++t) lab += (t ? "*" : "") + q.arrows[p.arrows[t]].label;
      a.labels.push_back(lab);
    }
  }
  a.quiver = q;
  a.name = std::move(name);
  a.finalize();
  auto rep = validate_algebra(a);
  if (!rep.ok) throw AlgebraError("bound quiver algebra failed validation: " + rep.errors.front());
  return a;
}

template <class F>
Algebra<F> opposite_algebra(const Algebra<F>& a) {
  Algebra<F> o = a;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) o.c(i, j, k) = a.c(j, i, k);
  if (a.quiver) o.quiver = a.quiver->reversed();
  if (a.name.size() >= 3 && a.name.compare(a.name.size() - 3, 3, "^op") == 0)
    o.name = a.name.substr(0, a.name.size() - 3);
  else if (!a.name.empty())
    o.name = a.name + "^op";
  o.finalize();
  return o;
}

namespace {

template <class F>
Matrix<F> trace_form(const Algebra<F>& a) {
  const F& f = a.field;
  std::vector<typename F::Elem> tr(a.dim, f.zero());
  for (std::size_t k = 0; k < a.dim; ++k)
    for (std::size_t j = 0; j < a.dim; ++j) tr[k] = f.add(tr[k], a.c(k, j, j));
  Matrix<F> g(f, a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      auto s = f.zero();
      for (std::size_t k = 0; k < a.dim; ++k) s = f.add(s, f.mul(a.c(i, j, k), tr[k]));
      g(i, j) = s;
    }
  return g;
}

template <class F>
Algebra<F> quotient_algebra(const Algebra<F>& a, const Subspace<F>& ideal) {
  auto keep = ideal.non_pivots();
  Algebra<F> qa;
  qa.field = a.field;
  qa.dim = keep.size();
  qa.table.assign(qa.dim * qa.dim * qa.dim, a.field.zero());
  auto project = [&](const Vec<F>& v) {
    auto r = ideal.reduce(v);
    Vec<F> out(keep.size());
    for (std::size_t t = 0; t < keep.size(); ++t) out[t] = r[keep[t]];
    return out;
  };
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) {
      auto prod = project(a.multiply(a.basis_vector(keep[i]), a.basis_vector(keep[j])));
      for (std::size_t k = 0; k < keep.size(); ++k) qa.c(i, j, k) = prod[k];
    }
  qa.unit = project(a.unit);
  qa.finalize();
  return qa;
}

}  // namespace

template <class F>
Subspace<F> compute_radical(const Algebra<F>& a) {
  Subspace<F> rad;
  if (a.quiver) {
    // arrow ideal: everything but the vertex classes
    std::vector<Vec<F>> vecs;
    std::vector<bool> is_vertex(a.dim, false);
    for (const auto& e : a.idempotents)
      for (std::size_t i = 0; i < a.dim; ++i)
        if (!a.field.is_zero(e[i])) is_vertex[i] = true;
    for (std::size_t i = 0; i < a.dim; ++i)
      if (!is_vertex[i]) vecs.push_back(a.basis_vector(i));
    rad = Subspace<F>::span(a.field, a.dim, vecs);
  } else if constexpr (std::is_same_v<F, RationalField>) {
    rad = kernel_basis(trace_form(a));
  } else {
    throw UnsupportedError(
        "radical of a structure-constant algebra over GF(p) is unsupported without quiver provenance "
        "(supply it explicitly); minimal resolutions are unavailable");
  }
  if (!nilpotency_index(a, rad)) throw AlgebraError("computed radical is not nilpotent");
  if constexpr (std::is_same_v<F, RationalField>) {
    auto qa = quotient_algebra(a, rad);
    if (rank(trace_form(qa)) != qa.dim) throw AlgebraError("quotient by the computed radical is not semisimple");
  }
  return rad;
}

namespace {

QuiverPresentation loop_quiver(std::vector<std::string> loops, std::size_t nilpotency) {
  QuiverPresentation q;
  q.vertices = 1;
  for (auto& l : loops) q.arrows.push_back({0, 0, l});
  q.nilpotency = nilpotency;
  return q;
}

std::vector<std::size_t> parse_args(const std::string& name, const std::string& head) {
  std::vector<std::size_t> args;
  auto open = name.find('(');
  auto close = name.rfind(')');
  if (name.compare(0, head.size(), head) != 0 || open != head.size() || close != name.size() - 1)
    throw AlgebraError("malformed builtin algebra name '" + name + "'");
  std::stringstream ss(name.substr(open + 1, close - open - 1));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      auto v = std::stol(tok);
      if (v < 1) throw AlgebraError("builtin parameters must be positive in '" + name + "'");
      args.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw AlgebraError("malformed builtin algebra name '" + name + "'");
    }
  }
  return args;
}

}  // namespace

std::vector<std::string> builtin_algebra_names() {
  return {"K1", "DUAL2", "TRUNCPOLY(3)", "A2", "NG3", "NAKAYAMA(2,2)"};
}

template <class F>
Algebra<F> builtin_algebra(const std::string& name, const F& field) {
  if (name == "K1") {
    QuiverPresentation q;
    q.vertices = 1;
    q.nilpotency = 1;
    return build_bound_quiver_algebra(field, q, name);
  }
  if (name == "DUAL2") {
    auto q = loop_quiver({"a"}, 2);
    q.relations.push_back({PathTerm{"1", {"a", "a"}}});
    return build_bound_quiver_algebra(field, q, name);
  }
  if (name.rfind("TRUNCPOLY", 0) == 0) {
    auto args = parse_args(name, "TRUNCPOLY");
    if (args.size() != 1) throw AlgebraError("TRUNCPOLY takes one parameter");
    return build_bound_quiver_algebra(field, loop_quiver({"x"}, args[0]), name);
  }
  if (name == "A2") {
    QuiverPresentation q;
    q.vertices = 2;
    q.arrows.push_back({0, 1, "alpha"});
    q.nilpotency = 2;
    return build_bound_quiver_algebra(field, q, name);
  }
  if (name == "NG3") {
    auto q = loop_quiver({"x", "y"}, 2);
    for (auto rel : {std::vector<std::string>{"x", "x"}, {"y", "y"}, {"x", "y"}, {"y", "x"}})
      q.relations.push_back({PathTerm{"1", rel}});
    return build_bound_quiver_algebra(field, q, name);
  }
  if (name.rfind("NAKAYAMA", 0) == 0) {
    auto args = parse_args(name, "NAKAYAMA");
    if (args.size() != 2) throw AlgebraError("NAKAYAMA takes (cycle length, nilpotency)");
    QuiverPresentation q;
    q.vertices = args[0];
    for (std::size_t v = 0; v < args[0]; ++v)
      q.arrows.push_back({v, (v + 1) % args[0], "a" + std::to_string(v + 1)});
    q.nilpotency = args[1];
    return build_bound_quiver_algebra(field, q, name);
  }
  throw AlgebraError("unknown builtin algebra '" + name + "'");
}

namespace {

template <class F>
std::vector<Summand<F>> make_summands(const Algebra<F>& a) {
  std::vector<Vec<F>> idems = a.idempotents;
  idems.push_back(a.unit);
  std::vector<Summand<F>> out;
  for (auto& e : idems) {
    Summand<F> s;
    s.basis = Subspace<F>::column_space(a.right_matrix(e));
    for (std::size_t i = 0; i < a.dim; ++i) {
      Matrix<F> m(a.field, s.basis.dim(), s.basis.dim());
      for (std::size_t t = 0; t < s.basis.dim(); ++t)
        m.set_column(t, s.basis.coordinates(a.left_mult[i].apply(s.basis.vector(t))));
      s.action.push_back(std::move(m));
    }
    s.idempotent = std::move(e);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

template <class F>
Ring<F>::Ring(Algebra<F> base)
    : base_(std::move(base)),
      opposite_(tfl::opposite_algebra(base_)),
      left_summands_(make_summands(base_)),
      right_summands_(make_summands(opposite_)) {}

#define TFL_INSTANTIATE(F)                                                                           \
  template struct Algebra<F>;                                                                        \
  template ValidationReport validate_algebra(const Algebra<F>&);                                     \
  template Algebra<F> build_bound_quiver_algebra(const F&, const QuiverPresentation&, std::string);  \
  template Algebra<F> opposite_algebra(const Algebra<F>&);                                           \
  template Subspace<F> compute_radical(const Algebra<F>&);                                           \
  template std::optional<std::size_t> nilpotency_index(const Algebra<F>&, const Subspace<F>&);       \
  template Algebra<F> builtin_algebra(const std::string&, const F&);                                 \
  template class Ring<F>;

TFL_INSTANTIATE(PrimeField)
TFL_INSTANTIATE(RationalField)

}  // namespace tfl

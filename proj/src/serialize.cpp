#include "tfl/serialize.hpp"

#include <fstream>
#include <sstream>

namespace tfl {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t as_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InputError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Side side_from_json(const Json& j) {
  if (j == "left") return Side::left;
  if (j == "right") return Side::right;
  throw InputError("side must be \"left\" or \"right\"");
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
  return out;
}

std::vector<std::string> split_path(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '*'))
    if (!item.empty()) out.push_back(item);
  return out;
}

PathTerm term_from_json(const Json& t) {
  PathTerm term;
  if (t.is_string()) {
    term.arrows = split_path(t.get<std::string>());
  } else if (t.is_array() && t.size() == 2) {
    term.coeff = t[0].is_string() ? t[0].get<std::string>() : t[0].dump();
    term.arrows = t[1].is_string() ? split_path(t[1].get<std::string>()) : t[1].get<std::vector<std::string>>();
  } else if (t.is_object()) {
    if (t.contains("coeff")) term.coeff = t["coeff"].is_string() ? t["coeff"].get<std::string>() : t["coeff"].dump();
    term.arrows = member(t, "path").get<std::vector<std::string>>();
  } else {
    throw InputError("relation term must be a path string, [coeff, path] or {\"coeff\",\"path\"}");
  }
  if (term.arrows.empty()) throw InputError("relation term with an empty path");
  return term;
}

template <class F>
Algebra<F> quiver_from_json(const Json& j, const F& field) {
  QuiverPresentation q;
  q.vertices = as_size(member(j, "vertices"), "vertices");
  for (const auto& a : member(j, "arrows")) {
    if (!a.is_array() || a.size() != 3 || !a[2].is_string()) throw InputError("arrow must be [source, target, \"label\"]");
    q.arrows.push_back({as_size(a[0], "arrow source"), as_size(a[1], "arrow target"), a[2].get<std::string>()});
  }
  if (j.contains("relations"))
    for (const auto& r : j["relations"]) {
      std::vector<PathTerm> rel;
      if (r.is_string() || r.is_object()) {
        rel.push_back(term_from_json(r));
      } else if (r.is_array()) {
        for (const auto& t : r) rel.push_back(term_from_json(t));
      } else {
        throw InputError("relation must be a term or a list of terms");
      }
      q.relations.push_back(std::move(rel));
    }
  q.nilpotency = as_size(member(j, "nilpotency"), "nilpotency");
  std::string name = j.contains("name") ? j["name"].get<std::string>() : std::string("quiver algebra");
  try {
    return build_bound_quiver_algebra(field, q, name);
  } catch (const AlgebraError& e) {
    throw InputError(std::string("invalid quiver algebra: ") + e.what());
  }
}

template <class F>
Algebra<F> table_from_json(const Json& j, const F& field) {
  Algebra<F> a;
  a.field = field;
  a.dim = as_size(member(j, "dim"), "dim");
  const std::size_t d = a.dim;
  a.table.assign(d * d * d, field.zero());
  for (const auto& e : member(j, "table")) {
    if (!e.is_array() || e.size() != 4) throw InputError("table entries must be [i, j, k, value]");
    std::size_t i = as_size(e[0], "table index"), jj = as_size(e[1], "table index"), k = as_size(e[2], "table index");
    if (i >= d || jj >= d || k >= d) throw InputError("table index out of range");
    a.c(i, jj, k) = field.add(a.c(i, jj, k), element_from_json(field, e[3]));
  }
  a.unit = vector_from_json(field, member(j, "unit"), d);
  if (j.contains("labels")) a.labels = j["labels"].get<std::vector<std::string>>();
  if (j.contains("idempotents"))
    for (const auto& e : j["idempotents"]) a.idempotents.push_back(vector_from_json(field, e, d));
  if (j.contains("radical")) {
    std::vector<Vec<F>> vecs;
    for (const auto& v : j["radical"]) vecs.push_back(vector_from_json(field, v, d));
    a.radical = Subspace<F>::span(field, d, vecs);
  }
  a.name = j.contains("name") ? j["name"].get<std::string>() : std::string("algebra");
  a.finalize();
  auto rep = validate_algebra(a);
  if (!rep.ok) throw InputError("invalid algebra: " + join(rep.errors));
  if (!a.radical) {
    try {
      a.radical = compute_radical(a);
    } catch (const UnsupportedError&) {
      // accepted without minimal resolutions
    } catch (const AlgebraError& e) {
      throw InputError(std::string("invalid algebra: ") + e.what());
    }
  }
  return a;
}

}  // namespace

Json field_to_json(const FieldSpec& spec) { return spec.to_string(); }

FieldSpec field_from_json(const Json& j) {
  try {
    if (j.is_string()) return FieldSpec::parse(j.get<std::string>());
    if (j.is_object()) {
      auto kind = member(j, "kind").get<std::string>();
      if (kind == "qq" || kind == "rational" || kind == "rationals") return FieldSpec::parse("qq");
      if (kind == "gf" || kind == "prime") return FieldSpec::parse("gf:" + std::to_string(member(j, "p").get<long long>()));
    }
  } catch (const FieldError& e) {
    throw InputError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed field spec: ") + e.what());
  }
  throw InputError("malformed field spec");
}

FieldSpec algebra_field(const Json& doc, const FieldSpec& fallback) {
  if (doc.is_object() && doc.contains("field")) return field_from_json(doc["field"]);
  return fallback;
}

template <class F>
Json element_to_json(const F& field, const typename F::Elem& e) {
  return field.to_string(e);
}

template <class F>
typename F::Elem element_from_json(const F& field, const Json& j) {
  try {
    if (j.is_string()) return field.parse(j.get<std::string>());
    if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
  } catch (const FieldError& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("field element must be an integer or a \"num/den\" string, got " + j.dump());
}

template <class F>
Json matrix_to_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_to_json(m.field(), m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
Matrix<F> matrix_from_json(const F& field, const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw InputError("matrix must have " + std::to_string(rows) + " rows");
  Matrix<F> m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw InputError("matrix row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = element_from_json(field, j[r][c]);
  }
  return m;
}

template <class F>
Json vector_to_json(const F& field, const Vec<F>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(element_to_json(field, e));
  return out;
}

template <class F>
Vec<F> vector_from_json(const F& field, const Json& j, std::size_t len) {
  if (!j.is_array() || j.size() != len) throw InputError("vector must have " + std::to_string(len) + " entries");
  Vec<F> v;
  for (const auto& e : j) v.push_back(element_from_json(field, e));
  return v;
}

template <class F>
Json structure_constants_json(const Algebra<F>& a) {
  Json j;
  j["kind"] = "structure_constants";
  j["name"] = a.name;
  j["field"] = field_to_json(a.field.spec());
  j["dim"] = a.dim;
  j["labels"] = a.labels;
  j["unit"] = vector_to_json(a.field, a.unit);
  Json table = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k)
      for (std::size_t l = 0; l < a.dim; ++l)
        if (!a.field.is_zero(a.c(i, k, l))) table.push_back(Json::array({i, k, l, element_to_json(a.field, a.c(i, k, l))}));
  j["table"] = std::move(table);
  if (a.radical) {
    Json rad = Json::array();
    for (std::size_t t = 0; t < a.radical->dim(); ++t) rad.push_back(vector_to_json(a.field, a.radical->vector(t)));
    j["radical"] = std::move(rad);
  }
  if (!a.idempotents.empty()) {
    Json ids = Json::array();
    for (const auto& e : a.idempotents) ids.push_back(vector_to_json(a.field, e));
    j["idempotents"] = std::move(ids);
  }
  return j;
}

template <class F>
Json algebra_to_json(const Algebra<F>& a) {
  if (!a.quiver) return structure_constants_json(a);
  const auto& q = *a.quiver;
  Json j;
  j["kind"] = "quiver";
  j["name"] = a.name;
  j["field"] = field_to_json(a.field.spec());
  j["vertices"] = q.vertices;
  Json arrows = Json::array();
  for (const auto& ar : q.arrows) arrows.push_back(Json::array({ar.source, ar.target, ar.label}));
  j["arrows"] = std::move(arrows);
  Json rels = Json::array();
  for (const auto& r : q.relations) {
    Json rel = Json::array();
    for (const auto& t : r) {
      Json term;
      term["coeff"] = t.coeff;
      term["path"] = t.arrows;
      rel.push_back(std::move(term));
    }
    rels.push_back(std::move(rel));
  }
  j["relations"] = std::move(rels);
  j["nilpotency"] = q.nilpotency;
  return j;
}

template <class F>
Algebra<F> algebra_from_json(const Json& j, const F& field) {
  try {
    if (j.is_object() && j.contains("builtin")) {
      try {
        return builtin_algebra(j["builtin"].get<std::string>(), field);
      } catch (const AlgebraError& e) {
        throw InputError(e.what());
      }
    }
    if (j.contains("field") && !(field_from_json(j["field"]) == field.spec()))
      throw InputError("algebra field " + field_from_json(j["field"]).to_string() + " does not match " +
                       field.spec().to_string());
    auto kind = member(j, "kind").get<std::string>();
    if (kind == "quiver") return quiver_from_json(j, field);
    if (kind == "structure_constants") return table_from_json(j, field);
    throw InputError("unknown algebra kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed algebra document: ") + e.what());
  }
}

template <class F>
Json module_to_json(const Mod<F>& m) {
  Json j;
  j["side"] = to_string(m.side());
  j["dim"] = m.dim();
  Json action = Json::array();
  for (const auto& a : m.actions()) action.push_back(matrix_to_json(a));
  j["action"] = std::move(action);
  return j;
}

template <class F>
Mod<F> module_from_json(const Json& j, const RingPtr<F>& ring) {
  try {
    Side side = side_from_json(member(j, "side"));
    std::size_t n = as_size(member(j, "dim"), "dim");
    const auto& act = member(j, "action");
    if (!act.is_array() || act.size() != ring->dim())
      throw InputError("action list has " + std::to_string(act.is_array() ? act.size() : 0) +
                       " matrices, algebra has dimension " + std::to_string(ring->dim()));
    std::vector<Matrix<F>> mats;
    for (std::size_t i = 0; i < act.size(); ++i) {
      try {
        mats.push_back(matrix_from_json(ring->field(), act[i], n, n));
      } catch (const InputError& e) {
        throw InputError("action matrix " + std::to_string(i) + ": " + e.what());
      }
    }
    Mod<F> m(ring, side, n, std::move(mats));
    auto rep = validate_module(m);
    if (!rep.ok) throw InputError("invalid module: " + join(rep.errors));
    return m;
  } catch (const ModuleError& e) {
    throw InputError(std::string("invalid module: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed module document: ") + e.what());
  }
}

template <class F>
Json sequence_to_json(const ExactSeq<F>& s) {
  Json j;
  Json objs = Json::array();
  for (const auto& m : s.objects) objs.push_back(module_to_json(m));
  j["objects"] = std::move(objs);
  Json maps = Json::array();
  for (const auto& h : s.maps) maps.push_back(matrix_to_json(h.matrix));
  j["maps"] = std::move(maps);
  return j;
}

template <class F>
ExactSeq<F> sequence_from_json(const Json& j, const RingPtr<F>& ring) {
  try {
    ExactSeq<F> s;
    for (const auto& o : member(j, "objects")) s.objects.push_back(module_from_json(o, ring));
    const auto& maps = member(j, "maps");
    if (s.objects.empty() || maps.size() + 1 != s.objects.size())
      throw InputError("a sequence of k objects needs k-1 maps");
    for (std::size_t i = 0; i < maps.size(); ++i) {
      const auto& a = s.objects[i];
      const auto& b = s.objects[i + 1];
      if (!a.same_category(b)) throw InputError("sequence mixes sides");
      ModHom<F> h{a, b, matrix_from_json(ring->field(), maps[i], b.dim(), a.dim())};
      auto rep = validate_hom(h);
      if (!rep.ok) throw InputError("map " + std::to_string(i) + ": " + join(rep.errors));
      s.maps.push_back(std::move(h));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed sequence document: ") + e.what());
  }
}

Json dim_result_to_json(const DimResult& d) {
  Json j;
  if (d.kind == DimResult::Kind::finite)
    j["value"] = d.value;
  else
    j["value"] = d.to_string();
  j["certified"] = d.certified;
  if (!d.note.empty()) j["note"] = d.note;
  return j;
}

Json torsionfree_dimension_to_json(const TorsionfreeDimension& t) {
  Json j;
  if (t.exact)
    j["value"] = *t.exact;
  else
    j["value"] = t.to_string();
  if (t.upper)
    j["upper"] = *t.upper;
  else
    j["upper"] = nullptr;
  j["upper_certified"] = t.upper_certified;
  j["lower"] = t.lower;
  j["bound"] = t.bound;
  if (!t.note.empty()) j["note"] = t.note;
  return j;
}

Json certified_flag_to_json(const CertifiedFlag& f) {
  Json j;
  j["value"] = f.value;
  j["certified"] = f.certified;
  j["bound"] = f.bound;
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

Json load_document(const std::string& path) {
  if (path.rfind("builtin:", 0) == 0) return Json{{"builtin", path.substr(8)}};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

#define TFL_INSTANTIATE(F)                                                                   \
  template Json element_to_json(const F&, const typename F::Elem&);                          \
  template typename F::Elem element_from_json(const F&, const Json&);                        \
  template Json matrix_to_json(const Matrix<F>&);                                            \
  template Matrix<F> matrix_from_json(const F&, const Json&, std::size_t, std::size_t);      \
  template Json vector_to_json(const F&, const Vec<F>&);                                     \
  template Vec<F> vector_from_json(const F&, const Json&, std::size_t);                      \
  template Json algebra_to_json(const Algebra<F>&);                                          \
  template Json structure_constants_json(const Algebra<F>&);                                 \
  template Algebra<F> algebra_from_json(const Json&, const F&);                              \
  template Json module_to_json(const Mod<F>&);                                               \
  template Mod<F> module_from_json(const Json&, const RingPtr<F>&);                          \
  template Json sequence_to_json(const ExactSeq<F>&);                                        \
  template ExactSeq<F> sequence_from_json(const Json&, const RingPtr<F>&);

TFL_INSTANTIATE(PrimeField)
TFL_INSTANTIATE(RationalField)

}  // namespace tfl

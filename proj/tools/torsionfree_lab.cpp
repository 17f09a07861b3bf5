// torsionfree-lab: command-line front end of the tfl library.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tfl/harness.hpp"

using namespace tfl;

namespace {

struct Options {
  std::string algebra;
  std::string module;
  std::string field = "gf:101";
  bool field_given = false;
  std::string side = "left";
  std::string out;
  std::string format = "json";
  int bound = 8;
  int n = 1;
  int k = 1;
  int length = -1;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  std::string claim;
  std::string construction;
};

struct Result {
  Json doc;
  int code = 0;
};

Side parse_side(const std::string& s) { return s == "right" ? Side::right : Side::left; }

template <class F>
Mod<F> load_module(const std::string& spec, const RingPtr<F>& ring, Side side) {
  auto indexed = [&](const std::string& head) -> std::optional<std::size_t> {
    if (spec.rfind(head + ":", 0) != 0) return std::nullopt;
    try {
      return static_cast<std::size_t>(std::stoul(spec.substr(head.size() + 1)));
    } catch (const std::logic_error&) {
      throw InputError("bad module index in '" + spec + "'");
    }
  };
  auto pick = [&](std::vector<Mod<F>> ms, std::size_t j) {
    if (j >= ms.size()) throw InputError("module index out of range in '" + spec + "'");
    return ms[j];
  };
  if (spec == "regular") return regular_module(ring, side);
  if (auto j = indexed("simple")) return pick(simple_modules(ring, side), *j);
  if (auto j = indexed("projective")) return pick(indecomposable_projectives(ring, side), *j);
  if (auto j = indexed("injective")) return vector_space_dual(pick(indecomposable_projectives(ring, opposite(side)), *j));
  return module_from_json(load_document(spec), ring);
}

Json header(const std::string& command, const std::string& algebra, const FieldSpec& field) {
  Json j;
  j["command"] = command;
  j["algebra"] = algebra;
  j["field"] = field.to_string();
  return j;
}

template <class F>
Result cmd_validate(const RingPtr<F>& ring, const Options& o) {
  const auto& a = ring->base();
  Json j = header("validate", ring->name(), a.field.spec());
  Json alg;
  alg["dim"] = a.dim;
  alg["valid"] = validate_algebra(a).ok;
  if (a.radical)
    alg["radical_dim"] = a.radical->dim();
  else
    alg["radical_dim"] = nullptr;
  alg["idempotents"] = a.idempotents.size();
  alg["minimal_resolutions"] = a.supports_minimal();
  j["algebra_info"] = std::move(alg);
  if (!o.module.empty()) {
    auto m = load_module(o.module, ring, parse_side(o.side));
    Json mj;
    mj["side"] = to_string(m.side());
    mj["dim"] = m.dim();
    mj["valid"] = validate_module(m).ok;
    j["module"] = std::move(mj);
  }
  return {std::move(j), 0};
}

template <class F>
Result cmd_invariants(const RingPtr<F>& ring, const Options& o) {
  if (o.module.empty()) throw InputError("invariants needs --module");
  auto m = load_module(o.module, ring, parse_side(o.side));
  Analysis<F> a(m, AnalysisOptions{o.bound});
  Json j = header("invariants", ring->name(), ring->field().spec());
  j["module"] = Json{{"side", to_string(m.side())}, {"dim", m.dim()}};
  j["bound"] = o.bound;
  j["minimal"] = a.minimal();
  j["pd"] = dim_result_to_json(projective_dimension(a));
  j["orthdim"] = dim_result_to_json(orthogonal_dimension(a));
  j["gdim"] = dim_result_to_json(gorenstein_dimension(a));
  j["tdim"] = torsionfree_dimension_to_json(torsionfree_dimension_upper(a));
  auto ts = torsion_status(a);
  j["torsion"] = Json{{"torsionless", ts.torsionless},
                      {"reflexive", ts.reflexive},
                      {"inf_torsionfree", certified_flag_to_json(ts.inf_torsionfree)}};
  Json ext = Json::array();
  for (int i = 1; i <= o.bound; ++i) ext.push_back(a.ext(static_cast<std::size_t>(i)));
  j["ext_to_regular"] = std::move(ext);
  return {std::move(j), 0};
}

template <class F>
Result cmd_selfinjdim(const RingPtr<F>& ring, const Options& o) {
  Json j = header("selfinjdim", ring->name(), ring->field().spec());
  j["bound"] = o.bound;
  j["left"] = dim_result_to_json(self_injective_dimension(ring, Side::left, o.bound));
  j["right"] = dim_result_to_json(self_injective_dimension(ring, Side::right, o.bound));
  return {std::move(j), 0};
}

template <class F>
Result cmd_profile(const RingPtr<F>& ring, const Options& o) {
  const Side side = parse_side(o.side);
  const auto len = static_cast<std::size_t>(o.length >= 0 ? o.length : o.bound);
  auto terms = injective_coresolution(ring, side, len);
  auto pds = injective_coresolution_pd_profile(ring, side, len, o.bound);
  Json j = header("coresolution-profile", ring->name(), ring->field().spec());
  j["side"] = to_string(side);
  j["bound"] = o.bound;
  Json rows = Json::array();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Json r;
    r["degree"] = i;
    r["dim"] = terms[i].dim();
    if (i < pds.size()) r["pd"] = dim_result_to_json(pds[i]);
    rows.push_back(std::move(r));
  }
  j["terms"] = std::move(rows);
  j["complete"] = terms.size() <= len;
  return {std::move(j), 0};
}

Json certificate_json(const Certificate& c) {
  return Json{{"ok", c.ok}, {"checks", c.checks}, {"failures", c.failures}};
}

template <class F>
Result cmd_construct(const RingPtr<F>& ring, const Options& o) {
  if (o.module.empty()) throw InputError("construct needs --module");
  if (o.n < 1) throw InputError("construct needs --n >= 1");
  auto m = load_module(o.module, ring, parse_side(o.side));
  AnalysisOptions opts{o.bound};
  Json j = header("construct", ring->name(), ring->field().spec());
  j["construction"] = o.construction;
  j["n"] = o.n;
  Construction<F> c;
  if (o.construction == "prop2.1") {
    c = cosyzygy_embedding(m, static_cast<std::size_t>(o.n), opts);
  } else {
    Analysis<F> a(m, opts);
    auto t = torsionfree_dimension_upper(a);
    j["tdim"] = torsionfree_dimension_to_json(t);
    if (t.proves_greater_than(o.n)) throw PreconditionError("T-dim of the module exceeds n");
    if (!t.proves_at_most(o.n)) {
      j["note"] = "T-dim " + t.to_string() + " is not certified <= " + std::to_string(o.n);
      return {std::move(j), 3};
    }
    const auto d = static_cast<std::size_t>(*t.upper);
    if (o.construction == "prop3.4")
      c = torsionfree_compress(m, truncated_resolution(m, d), d, opts);
    else
      c = embed_into_finite_pd(m, d, truncated_resolution(m, d), opts);
  }
  j["certificate"] = certificate_json(c.cert);
  j["sequence"] = sequence_to_json(c.seq);
  if (!c.cert.ok) throw std::logic_error("construction certificate failed: " + c.cert.failures.front());
  return {std::move(j), 0};
}

template <class F>
Result cmd_check(const RingPtr<F>& ring, const Options& o) {
  ClaimParams p;
  p.n = o.n;
  p.k = o.k;
  p.bound = o.bound;
  p.samples = o.samples;
  p.seed = o.seed;
  ClaimReport r;
  if (o.claim == "CONSTRUCTIONS") {
    r = construction_roundtrips(ring, p);
  } else {
    auto id = parse_claim(o.claim);
    if (!id) throw InputError("unknown claim '" + o.claim + "'");
    r = falsify_claim(*id, ring, p);
  }
  return {report_to_json(r), exit_code(r)};
}

template <class F>
Result run(const std::string& command, const Json& doc, const F& field, const Options& o) {
  auto ring = make_ring(algebra_from_json(doc, field));
  if (command == "validate") return cmd_validate(ring, o);
  if (command == "invariants") return cmd_invariants(ring, o);
  if (command == "selfinjdim") return cmd_selfinjdim(ring, o);
  if (command == "coresolution-profile") return cmd_profile(ring, o);
  if (command == "construct") return cmd_construct(ring, o);
  return cmd_check(ring, o);
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// Flattened "path: value" lines; module actions, map matrices and witness data are omitted.
void render_text(const Json& j, const std::string& path, std::ostream& os) {
  if (is_scalar(j)) {
    os << path << ": " << scalar_text(j) << "\n";
    return;
  }
  if (j.is_array()) {
    if (std::all_of(j.begin(), j.end(), [](const Json& e) { return is_scalar(e) && !e.is_string(); })) {
      os << path << ":";
      for (const auto& e : j) os << " " << scalar_text(e);
      os << "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], path + "[" + std::to_string(i) + "]", os);
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "action" || key == "maps" || key == "data") continue;
    render_text(value, path.empty() ? key : path + "." + key, os);
  }
}

void add_shared(CLI::App* sub, Options& o, bool needs_module) {
  sub->add_option("--algebra", o.algebra, "algebra JSON file or builtin:NAME")->required();
  auto* mod = sub->add_option("--module", o.module,
                              "module JSON file, or regular, simple:j, projective:j, injective:j");
  if (needs_module) mod->required();
  sub->add_option("--field", o.field, "gf:p or qq (default: the algebra file's field, else gf:101)");
  sub->add_option("--side", o.side, "side for named modules and profiles")->check(CLI::IsMember({"left", "right"}));
  sub->add_option("--bound", o.bound, "degree bound B")->check(CLI::PositiveNumber);
  sub->add_option("--out", o.out, "write the report here instead of stdout");
  sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological dimensions, torsionfree classes and claim checks for finite-dimensional algebras",
               "torsionfree-lab"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "validate an algebra and optionally a module");
  add_shared(validate, o, false);
  auto* invariants = app.add_subcommand("invariants", "pd, orthogonal, Gorenstein and torsionfree dimensions");
  add_shared(invariants, o, true);
  auto* selfinj = app.add_subcommand("selfinjdim", "self-injective dimension on both sides");
  add_shared(selfinj, o, false);
  auto* profile = app.add_subcommand("coresolution-profile", "terms and pd of the injective coresolution");
  add_shared(profile, o, false);
  profile->add_option("--length", o.length, "number of terms (default: bound)")->check(CLI::NonNegativeNumber);
  auto* construct = app.add_subcommand("construct", "build and certify an exact sequence");
  add_shared(construct, o, true);
  construct->add_option("construction", o.construction, "prop2.1, prop3.4 or cor3.5")
      ->required()
      ->check(CLI::IsMember({"prop2.1", "prop3.4", "cor3.5"}));
  construct->add_option("--n", o.n, "degree n");
  auto* check = app.add_subcommand("check", "sample-based falsification of a claim");
  add_shared(check, o, false);
  check->add_option("--claim", o.claim, "claim id, or CONSTRUCTIONS")->required();
  check->add_option("--n", o.n, "parameter n");
  check->add_option("--k", o.k, "parameter k");
  check->add_option("--samples", o.samples, "sample count")->check(CLI::PositiveNumber);
  check->add_option("--seed", o.seed, "64-bit seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  o.field_given = sub->count("--field") > 0;

  Result result;
  try {
    Json doc = load_document(o.algebra);
    FieldSpec fs = o.field_given ? FieldSpec::parse(o.field) : algebra_field(doc, FieldSpec::parse(o.field));
    if (fs.kind == FieldSpec::Kind::rationals)
      result = run(command, doc, RationalField{}, o);
    else
      result = run(command, doc, PrimeField(fs.p), o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const FieldError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const AlgebraError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ModuleError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  }

  std::string text;
  if (o.format == "json") {
    text = dump(result.doc);
  } else {
    std::ostringstream os;
    render_text(result.doc, "", os);
    text = os.str();
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out);
    if (!out) {
      std::cerr << "cannot write '" << o.out << "'\n";
      return 2;
    }
    out << text;
  }
  return result.code;
}

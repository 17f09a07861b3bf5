// Acceptance suite: one PASS/FAIL line per criterion. The CLI binary is passed as argv[1].

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "tfl/harness.hpp"

using namespace tfl;

namespace {

using GF = PrimeField;
using QQ = RationalField;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
};

std::string cli_path;
std::filesystem::path scratch;

// Runs the CLI with `args`, stdout to `out`; returns the exit code or -1.
int run_cli(const std::string& args, const std::string& out, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" + cli_path + "' " + args + " > '" + out + "' 2>/dev/null";
  int rc = std::system(cmd.c_str());
  if (rc == -1 || !WIFEXITED(rc)) return -1;
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
RingPtr<F> ring(const std::string& name, F f) {
  return make_ring(builtin_algebra(name, f));
}

ClaimParams params(int n, std::size_t samples, std::uint64_t seed = 1) {
  ClaimParams p;
  p.n = n;
  p.samples = samples;
  p.seed = seed;
  return p;
}

template <class F>
Matrix<F> random_matrix(const F& f, SplitMix64& rng, std::size_t r, std::size_t c) {
  Matrix<F> m(f, r, c);
  auto draw = [&](std::uint64_t n) { return rng.below(n); };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng.below(3) != 0) m(i, j) = f.random(draw);
  return m;
}

template <class F>
std::size_t kernel_soundness(const F& f, std::uint64_t seed, Verdict& v) {
  SplitMix64 rng(seed);
  auto draw = [&](std::uint64_t n) { return rng.below(n); };
  std::size_t checked = 0;
  for (int t = 0; t < 1000; ++t) {
    std::size_t r = 1 + rng.below(7), c = 1 + rng.below(7);
    auto m = random_matrix(f, rng, r, c);
    auto once = rref(m);
    v.require(rref(once.form).form == once.form, "rref idempotence");
    auto k = kernel_basis(m);
    v.require(k.dim() + once.rank() == c, "rank-nullity");
    for (std::size_t i = 0; i < k.dim(); ++i) v.require(is_zero_vec(f, m.apply(k.vector(i))), "kernel vector");
    Vec<F> x(c);
    for (auto& e : x) e = f.random(draw);
    auto b = m.apply(x);
    auto s = solve_all(m, b);
    v.require(s.has_value(), "consistent system solved");
    if (s) v.require(m.apply(s->particular) == b, "solution re-multiplies to b");
    Vec<F> b2(r);
    for (auto& e : b2) e = f.random(draw);
    auto s2 = solve_all(m, b2);
    Matrix<F> aug(f, r, c + 1);
    aug.set_block(0, 0, m);
    aug.set_column(c, b2);
    v.require(s2.has_value() == (rank(aug) == once.rank()), "inconsistency detected exactly");
    if (s2) v.require(m.apply(s2->particular) == b2, "solution re-multiplies to b");
    ++checked;
  }
  return checked;
}

void criterion1(Verdict& v) {
  auto a = kernel_soundness(GF(5), 101, v);
  auto b = kernel_soundness(QQ{}, 202, v);
  v.detail << a << " matrices over GF(5), " << b << " over QQ";
}

void criterion2(Verdict& v) {
  struct Row {
    const char* name;
    const char* expected;
  };
  const Row rows[] = {{"DUAL2", "0"}, {"TRUNCPOLY(3)", "0"}, {"A2", "1"}, {"NAKAYAMA(2,2)", "0"}, {"NG3", "GREATER_THAN(6)"}};
  for (const auto& row : rows) {
    auto r = ring(row.name, GF(101));
    auto l = self_injective_dimension(r, Side::left, 6);
    auto rt = self_injective_dimension(r, Side::right, 6);
    v.require(l.to_string() == row.expected && rt.to_string() == row.expected,
              std::string(row.name) + " gave (" + l.to_string() + ", " + rt.to_string() + ")");
    if (l.is_finite()) v.require(l.certified && rt.certified, std::string(row.name) + " uncertified");
    v.detail << row.name << "=(" << l.to_string() << "," << rt.to_string() << ") ";
  }
  auto ng = ring("NG3", GF(101));
  auto e1 = simple_ext_to_regular(ng, Side::left, 0, 1);
  v.require(e1 == 3, "dim Ext^1(S, A) over NG3 is " + std::to_string(e1));
  v.detail << "NG3 Ext^1(S,A)=" << e1;
}

void criterion3(Verdict& v) {
  for (auto name : {"DUAL2", "NAKAYAMA(2,2)"}) {
    auto rep = falsify_claim(ClaimId::THM_1_4, ring(name, GF(101)), params(0, 200));
    v.require(rep.status == ClaimStatus::no_counterexample && exit_code(rep) == 0, std::string(name) + " status");
    v.require(rep.instances >= 200 && rep.consistent == rep.instances, std::string(name) + " instance counts");
    for (auto key : {"gdim", "tdim", "orthdim"}) {
      const auto& d = rep.facts.at("dimensions").at(key);
      v.require(d.size() == 1 && d.contains("0") && d.at("0") == rep.instances,
                std::string(name) + " " + key + " tally " + d.dump());
    }
    v.detail << name << ": " << rep.instances << " modules all 0; ";
  }
  int rc = run_cli("check --claim THM_1_4 --n 0 --samples 200 --algebra builtin:DUAL2", (scratch / "c3.json").string());
  v.require(rc == 0, "CLI exit " + std::to_string(rc));
  v.detail << "CLI exit " << rc;
}

void criterion4(Verdict& v) {
  auto r = ring("NG3", GF(101));
  auto s = simple_modules(r, Side::left).at(0);
  for (int n = 0; n <= 4; ++n) {
    auto rep = falsify_claim(ClaimId::THM_1_4, r, params(n, 50));
    const std::string at = "n=" + std::to_string(n);
    v.require(rep.status == ClaimStatus::no_counterexample && exit_code(rep) == 0, at + " status");
    bool note = false;
    for (const auto& x : rep.notes) note = note || x.find("premise fails") != std::string::npos;
    v.require(note, at + " premise-fails note");
    bool exhibited = false;
    for (const auto& e : rep.evidence)
      if (e.tag.find("orthdim > n") != std::string::npos) exhibited = true;
    v.require(exhibited, at + " no sample with orthdim > n");
    v.require(orthogonal_dimension(s, 8).proves_greater_than(n), at + " simple orthdim");
    int rc = run_cli("check --claim THM_1_4 --samples 50 --algebra builtin:NG3 --n " + std::to_string(n),
                     (scratch / "c4.json").string());
    v.require(rc == 0, at + " CLI exit " + std::to_string(rc));
  }
  v.detail << "orthdim(S) = " << orthogonal_dimension(s, 8).to_string() << ", exhibited for n = 0..4, exit 0";
}

void criterion5(Verdict& v) {
  auto r = ring("A2", GF(101));
  auto s1 = simple_modules(r, Side::left).at(0);
  auto ps = indecomposable_projectives(r, Side::left);
  Analysis<GF> a(s1);
  auto pd = projective_dimension(a);
  auto od = orthogonal_dimension(a);
  auto gd = gorenstein_dimension(a);
  auto td = torsionfree_dimension_upper(a);
  v.require(pd.is_certified_finite() && pd.value == 1, "pd " + pd.to_string());
  v.require(od.is_certified_finite() && od.value == 1, "orthdim " + od.to_string());
  v.require(gd.is_certified_finite() && gd.value == 1, "gdim " + gd.to_string());
  v.require(td.exact == 1, "tdim " + td.to_string());
  v.require(a.ext(1) == 1, "Ext^1 " + std::to_string(a.ext(1)));
  // 0 -> Hom(S1,A) -> Hom(P1,A) -> Hom(P2,A) -> Ext^1(S1,A) -> 0 from 0 -> P2 -> P1 -> S1 -> 0
  auto reg = regular_module(r, Side::left);
  long hom_s = static_cast<long>(hom_space(s1, reg).size());
  long hom_p1 = static_cast<long>(hom_space(ps.at(0), reg).size());
  long hom_p2 = static_cast<long>(hom_space(ps.at(1), reg).size());
  v.require(ps.at(0).dim() == 2 && ps.at(1).dim() == 1, "projective dimensions");
  v.require(hom_p2 - hom_p1 + hom_s == 1, "hom-count oracle " + std::to_string(hom_p2 - hom_p1 + hom_s));
  v.detail << "pd=" << pd.to_string() << " orthdim=" << od.to_string() << " gdim=" << gd.to_string()
           << " tdim=" << td.to_string() << " Ext1=" << a.ext(1);
}

void criterion6(Verdict& v) {
  std::size_t total = 0;
  for (const auto& name : builtin_algebra_names()) {
    auto r = ring(name, GF(101));
    for (Side side : {Side::left, Side::right}) {
      auto suite = sample_suite(r, side, 100, 6);
      for (std::size_t i = 0; i < 100 && i < suite.size(); ++i) {
        auto rep = auslander_bridger_check(suite[i].module);
        v.require(rep.ok, name + " " + suite[i].label);
        ++total;
      }
    }
  }
  auto ng = ring("NG3", GF(101));
  auto rep = auslander_bridger_check(simple_modules(ng, Side::left).at(0));
  v.require(rep.ok && rep.ext2 == 3, "NG3 simple ext2 = " + std::to_string(rep.ext2));
  v.require(rep.ext1 == 0 && rep.module_dim == 1 && rep.double_dual_dim == 4 && rep.ev_kernel == 0,
            "NG3 simple sequence shape");
  v.detail << total << " samples; NG3 S: 0 -> " << rep.ext1 << " -> " << rep.module_dim << " -> "
           << rep.double_dual_dim << " -> " << rep.ext2 << " -> 0";
}

void criterion7(Verdict& v) {
  for (const auto& name : builtin_algebra_names()) {
    auto r = ring(name, GF(101));
    auto rep = falsify_claim(ClaimId::PROP_2_1, r, params(1, 50));
    v.require(rep.status == ClaimStatus::no_counterexample, name + " PROP_2_1 status");
    // direct round trip on applicable members until 50 are found
    auto suite = sample_suite(r, Side::left, 400, 7);
    std::size_t applicable = 0;
    for (const auto& smp : suite) {
      if (applicable == 50) break;
      if (!is_n_torsionfree(smp.module, 1)) continue;
      auto c = cosyzygy_embedding(smp.module, 1);
      const auto& tail = c.seq.objects.at(c.seq.objects.size() - 2);
      auto e = ext_dims(tail, regular_module(r, Side::left), 1);
      v.require(c.cert.ok && c.seq.certify().exact, name + " certificate " + smp.label);
      v.require(e.at(1) == 0, name + " tail not in the orthogonal class " + smp.label);
      v.require(c.seq.objects.at(1) == smp.module, name + " input not at the start " + smp.label);
      ++applicable;
    }
    v.require(applicable == 50, name + " has only " + std::to_string(applicable) + " applicable samples");
    auto lem = falsify_claim(ClaimId::LEMMA_3_1, r, params(1, 50));
    v.require(lem.status == ClaimStatus::no_counterexample, name + " LEMMA_3_1 status");
  }
  auto d = ring("DUAL2", GF(101));
  auto s = simple_modules(d, Side::left).at(0);
  auto seq = extension_from_cocycle(s, s, 0);
  auto st = star_of_ses(seq);
  v.require(seq.objects.at(2).dim() == 2, "DUAL2 middle term");
  v.require(st.cert.ok, "DUAL2 horseshoe certificate");
  v.require(st.transposes.objects.at(3).dim() == 2,
            "middle transpose term has dim " + std::to_string(st.transposes.objects.at(3).dim()));
  v.detail << "50 applicable round trips per algebra; DUAL2 0->S->A->S->0 middle Tr term dim "
           << st.transposes.objects.at(3).dim();
}

template <class F>
void cor_3_5_direct(const RingPtr<F>& r, const std::string& name, Verdict& v, std::size_t& applicable) {
  for (Side side : {Side::left, Side::right}) {
    for (const auto& smp : sample_suite(r, side, 50, 8)) {
      Analysis<F> a(smp.module);
      auto t = torsionfree_dimension_upper(a);
      if (!t.proves_at_most(1)) continue;
      const auto j = static_cast<std::size_t>(*t.upper);
      auto c = embed_into_finite_pd(smp.module, j, truncated_resolution(smp.module, j));
      const std::string at = name + " " + smp.label;
      v.require(c.cert.ok, at + " certificate");
      v.require(c.seq.certify().exact, at + " exactness");
      const auto& nmod = c.seq.objects.at(2);
      const auto& tmod = c.seq.objects.at(3);
      v.require(projective_dimension(nmod).proves_at_most(1), at + " pd N");
      v.require(ext_dims(tmod, regular_module(r, tmod.side()), 1).at(1) == 0, at + " Ext^1(T, A)");
      Analysis<F> ta(tmod);
      auto tf = inf_torsionfree(ta);
      v.require(tf.value && tf.certified, at + " T infinity-torsionfree");
      ++applicable;
    }
  }
}

void criterion8(Verdict& v) {
  for (auto name : {"DUAL2", "A2"}) {
    auto r = ring(name, GF(101));
    auto rep = falsify_claim(ClaimId::COR_3_5, r, params(1, 50));
    v.require(rep.status == ClaimStatus::no_counterexample && rep.witnesses.empty(), std::string(name) + " status");
    std::size_t applicable = 0;
    cor_3_5_direct(r, name, v, applicable);
    cor_3_5_direct(ring(name, QQ{}), std::string(name) + "/QQ", v, applicable);
    v.require(applicable > 0, std::string(name) + " no applicable samples");
    v.detail << name << ": " << applicable << " certified; ";
  }
}

void criterion9(Verdict& v) {
  std::size_t total = 0;
  for (const auto& name : builtin_algebra_names()) {
    auto r = ring(name, GF(101));
    SampleParams sp;
    sp.max_dim = 12;
    auto suite = sample_suite(r, Side::left, 40, 9, sp);
    SplitMix64 rng(99);
    for (int t = 0; t < 100; ++t) {
      const auto& m = suite[rng.below(suite.size())].module;
      const auto& n = suite[rng.below(suite.size())].module;
      auto lhs = ext_dims(m, n, 3);
      auto rhs = ext_dims(vector_space_dual(n), vector_space_dual(m), 3);
      v.require(lhs == rhs, name + " pair " + std::to_string(t));
      ++total;
    }
  }
  v.detail << total << " pairs, degrees 0..3";
}

void criterion10(Verdict& v) {
  std::size_t both = 0;
  for (const auto& name : builtin_algebra_names()) {
    auto r = ring(name, GF(101));
    auto l = self_injective_dimension(r, Side::left, 8);
    auto rt = self_injective_dimension(r, Side::right, 8);
    if (l.is_certified_finite() && rt.is_certified_finite()) {
      v.require(l.value == rt.value, name + " left " + l.to_string() + " right " + rt.to_string());
      ++both;
    }
    auto z = falsify_claim(ClaimId::ZAKS, r, params(1, 10));
    v.require(z.status != ClaimStatus::counterexample, name + " ZAKS report");
  }
  auto cor = falsify_claim(ClaimId::COR_4_9, ring("A2", GF(101)), params(1, 50));
  v.require(exit_code(cor) == 0, "COR_4_9 on A2 status " + std::string(to_string(cor.status)));
  int rc = run_cli("check --claim COR_4_9 --n 1 --algebra builtin:A2", (scratch / "c10.json").string());
  v.require(rc == 0, "CLI exit " + std::to_string(rc));
  v.detail << both << " algebras with both sides certified finite agree; COR_4_9 A2 n=1 exit " << rc;
}

void criterion11(Verdict& v) {
  struct Run {
    ClaimId id;
    const char* algebra;
    int n;
  };
  const Run runs[] = {{ClaimId::THM_1_4, "NG3", 2}, {ClaimId::PROP_4_1, "NG3", 1}, {ClaimId::Q_5_1, "DUAL2", 1},
                      {ClaimId::COR_3_5, "A2", 1}};
  for (const auto& run : runs) {
    auto r = ring(run.algebra, GF(101));
    setenv("TORSIONFREE_LAB_THREADS", "1", 1);
    auto a = dump(report_to_json(falsify_claim(run.id, r, params(run.n, 40, 17))));
    setenv("TORSIONFREE_LAB_THREADS", "3", 1);
    auto b = dump(report_to_json(falsify_claim(run.id, r, params(run.n, 40, 17))));
    unsetenv("TORSIONFREE_LAB_THREADS");
    v.require(a == b, std::string(to_string(run.id)) + " differs across runs");
  }
  auto f1 = (scratch / "d1.json").string(), f2 = (scratch / "d2.json").string();
  const std::string args = "check --claim PROP_4_1 --n 1 --samples 60 --seed 42 --algebra builtin:NG3";
  int rc1 = run_cli(args, f1, "TORSIONFREE_LAB_THREADS=1");
  int rc2 = run_cli(args, f2, "TORSIONFREE_LAB_THREADS=4");
  auto s1 = slurp(f1), s2 = slurp(f2);
  v.require(rc1 == rc2 && rc1 >= 0, "CLI exit codes");
  v.require(!s1.empty() && s1 == s2, "CLI reports differ");
  v.detail << "library and CLI reports byte-identical (" << s1.size() << " bytes)";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];
  scratch = std::filesystem::temp_directory_path() / ("tfl_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(scratch);

  const std::pair<const char*, std::function<void(Verdict&)>> criteria[] = {
      {"kernel soundness", criterion1},
      {"self-injective dimension table", criterion2},
      {"all dimensions vanish on self-injective algebras", criterion3},
      {"orthogonal dimension exceeds n on NG3", criterion4},
      {"exact values for S1 over A2", criterion5},
      {"Auslander-Bridger sequence", criterion6},
      {"cosyzygy round trip and horseshoe", criterion7},
      {"finite-pd embedding certificates", criterion8},
      {"Ext duality", criterion9},
      {"two-sided self-injective dimensions agree", criterion10},
      {"deterministic reports", criterion11},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Verdict v;
    try {
      fn(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail.str("");
      v.detail << "exception: " << e.what();
    }
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << index << " " << name << ": " << v.detail.str() << std::endl;
  }
  std::filesystem::remove_all(scratch);
  return failures == 0 ? 0 : 1;
}

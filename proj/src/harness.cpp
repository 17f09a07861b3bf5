#include "tfl/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace tfl {

namespace {

struct ClaimInfo {
  ClaimId id;
  const char* name;
  const char* statement;
};

const ClaimInfo kClaims[] = {
    {ClaimId::THM_1_4, "THM_1_4",
     "id_R R = id_R^op R <= n iff every module on either side has G-dim, T-dim and left orthogonal dimension <= n"},
    {ClaimId::PROP_2_1, "PROP_2_1",
     "a module is n-torsionfree iff it is the n-th syzygy of a module with Ext^1..n(-, R) = 0"},
    {ClaimId::LEMMA_2_3, "LEMMA_2_3", "n- and infinity-torsionfree modules are closed under sums and summands"},
    {ClaimId::LEMMA_3_1, "LEMMA_3_1", "a short exact sequence yields exact sequences of duals and transposes"},
    {ClaimId::PROP_3_2, "PROP_3_2",
     "0 -> M -> T1 -> T0 -> A -> 0 with infinity-torsionfree T0, T1 becomes 0 -> M -> P -> T -> A -> 0, P projective"},
    {ClaimId::PROP_3_4, "PROP_3_4",
     "T-dim M <= n gives 0 -> H -> T -> M -> 0 with pd H <= n-1 and T infinity-torsionfree"},
    {ClaimId::COR_3_5, "COR_3_5",
     "T-dim M <= n gives 0 -> M -> N -> T -> 0 with pd N <= n, Ext^1(T, R) = 0 and T infinity-torsionfree"},
    {ClaimId::THM_3_6, "THM_3_6", "T-dim <= n for every left module forces id_R^op R <= n"},
    {ClaimId::PROP_3_10, "PROP_3_10", "every module has left orthogonal dimension <= n iff id_R R <= n"},
    {ClaimId::PROP_4_1, "PROP_4_1", "the torsionless property of the degree-n orthogonal class and its reformulations"},
    {ClaimId::PROP_4_2, "PROP_4_2", "the torsionless property of the full orthogonal class and its reformulations"},
    {ClaimId::COR_4_3, "COR_4_3",
     "the least degrees with the torsionless property agree on the two sides"},
    {ClaimId::PROP_4_4, "PROP_4_4",
     "n-torsionfree m-th syzygies of right modules plus the torsionless property give id_R^op R <= m"},
    {ClaimId::LEMMA_4_5, "LEMMA_4_5", "the torsionless property makes I^0 + ... + I^n an injective cogenerator"},
    {ClaimId::PROP_4_6, "PROP_4_6",
     "id_R^op R < infinity iff the torsionless property holds in some degree and every I^i has finite flat dimension"},
    {ClaimId::THM_4_7, "THM_4_7", "the torsionless property plus g_n(k) or g_n(k)^op gives id_R^op R <= n+k-1"},
    {ClaimId::COR_4_8, "COR_4_8",
     "if fd(I^0 + ... + I^n) <= n then id_R^op R <= n iff the degree-n torsionless property holds"},
    {ClaimId::COR_4_9, "COR_4_9",
     "if id_R R <= n then id_R R = id_R^op R <= n iff the degree-n torsionless property holds"},
    {ClaimId::ZAKS, "ZAKS", "id_R R = id_R^op R when both are finite"},
    {ClaimId::Q_5_1, "Q_5_1", "infinity-torsionfree modules are closed under extensions and kernels of epimorphisms"},
    {ClaimId::Q_5_2, "Q_5_2", "id_R^op R <= n forces T-dim <= n for every left module"},
    {ClaimId::CLAIM_5_2_N1, "CLAIM_5_2_N1", "id_R^op R <= 1 makes every first syzygy infinity-torsionfree"},
};

const ClaimInfo& info(ClaimId id) {
  for (const auto& c : kClaims)
    if (c.id == id) return c;
  throw std::logic_error("unknown claim id");
}

std::string str(int v) { return std::to_string(v); }

// ---------------------------------------------------------------------------------------------
// check context

template <class F>
std::optional<DimResult> selfinj_or_none(const RingPtr<F>& ring, Side side, int bound) {
  try {
    return self_injective_dimension(ring, side, bound);
  } catch (const UnsupportedError&) {
    return std::nullopt;
  }
}

/// Algebra-level quantities shared by the checks of one claim run.
template <class F>
class Context {
 public:
  Context(RingPtr<F> r, const ClaimParams& p)
      : ring(std::move(r)), params(p), opts{p.bound, 512},
        dl(selfinj_or_none(ring, Side::left, p.bound)), dr(selfinj_or_none(ring, Side::right, p.bound)) {}

  RingPtr<F> ring;
  ClaimParams params;
  AnalysisOptions opts;
  std::optional<DimResult> dl, dr;  // id of the left / right regular module

  const std::optional<DimResult>& selfinj(Side s) const { return s == Side::left ? dl : dr; }

  /// The degree-n orthogonal class on `side` has the torsionless property whenever the
  /// regular module on the other side has id <= n.
  bool tp_certified(Side side, int n) const {
    const auto& d = selfinj(opposite(side));
    return n >= 1 && d && d->proves_at_most(n);
  }
  /// Same for the full orthogonal class: any certified finite id on the other side.
  std::optional<int> tp_certified_level(Side side) const {
    const auto& d = selfinj(opposite(side));
    if (d && d->is_certified_finite()) return std::max(1, d->value);
    return std::nullopt;
  }

  /// pd of I^0..I^len of the minimal injective coresolution of the regular module on `side`;
  /// terms past the end of the coresolution are reported as 0.
  std::vector<DimResult> profile(Side side, std::size_t len) {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(static_cast<int>(side), len);
    auto it = profiles_.find(key);
    if (it != profiles_.end()) return it->second;
    auto p = injective_coresolution_pd_profile(ring, side, len, params.bound);
    while (p.size() <= len) p.push_back(DimResult::finite(0, true, "zero term"));
    profiles_[key] = p;
    return p;
  }

  std::vector<Mod<F>> injectives(Side side, std::size_t len) {
    std::lock_guard lock(mu_);
    auto key = std::make_pair(static_cast<int>(side), len);
    auto it = injectives_.find(key);
    if (it != injectives_.end()) return it->second;
    auto terms = injective_coresolution(ring, side, len);
    injectives_[key] = terms;
    return terms;
  }

  /// g_n(k) (side = right) or g_n(k)^op (side = left) through pd I^i <= i+k for i < n.
  std::optional<bool> gnk(Side side) {
    try {
      auto p = profile(side, static_cast<std::size_t>(params.n - 1));
      for (int i = 0; i < params.n; ++i)
        if (!p[i].proves_at_most(i + params.k)) return false;
      return true;
    } catch (const UnsupportedError&) {
      return std::nullopt;
    }
  }

 private:
  std::mutex mu_;
  std::map<std::pair<int, std::size_t>, std::vector<DimResult>> profiles_;
  std::map<std::pair<int, std::size_t>, std::vector<Mod<F>>> injectives_;
};

template <class F>
struct Instance {
  std::string label;
  std::vector<Mod<F>> modules;
  std::optional<ExactSeq<F>> seq;
};

enum class Verdict { holds, violated, undecided, skipped };

struct Outcome {
  Verdict verdict = Verdict::holds;
  std::string detail;
  std::vector<std::string> exhibits;
  Json data = Json::object();
};

Outcome holds(std::string d) { return {Verdict::holds, std::move(d), {}, Json::object()}; }
Outcome violated(std::string d) { return {Verdict::violated, std::move(d), {}, Json::object()}; }
Outcome undecided(std::string d) { return {Verdict::undecided, std::move(d), {}, Json::object()}; }
Outcome skipped(std::string d) { return {Verdict::skipped, std::move(d), {}, Json::object()}; }

std::string join(const std::vector<std::string>& v, const char* sep = "; ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

// ---------------------------------------------------------------------------------------------
// module helpers

template <class F>
bool in_perp(Analysis<F>& a, int n) {
  for (int i = 1; i <= n; ++i)
    if (a.ext(i) != 0) return false;
  return true;
}

/// Least i <= limit with Ext^i(Tr M, Λ) != 0.
template <class F>
std::optional<int> first_tf_failure(Analysis<F>& a, int limit) {
  for (int i = 1; i <= limit; ++i)
    if (a.ext_transpose(i) != 0) return i;
  return std::nullopt;
}

template <class F>
bool certified_tf(const Mod<F>& m, const AnalysisOptions& opts) {
  Analysis<F> a(m, opts);
  auto f = inf_torsionfree(a);
  return f.value && f.certified;
}

template <class F>
ModHom<F> random_hom(const Mod<F>& source, const Mod<F>& target, SplitMix64& rng) {
  auto basis = hom_space(source, target);
  auto out = zero_hom(source, target);
  const F& f = source.field();
  for (const auto& b : basis) out.matrix.add_scaled(b.matrix, f.random([&](std::uint64_t n) { return rng.below(n); }));
  return out;
}

/// Walks 0 -> M -> P_0 -> M_1 -> 0, 0 -> M_1 -> P_1 -> M_2 -> 0, ... for M ∈ ⊥n that fails to be
/// k-torsionfree. Some M_i with i < k must fail to be torsionless, and M_i lies in ⊥(n+i).
template <class F>
Outcome cosyzygy_chain(const Mod<F>& m, int n, int k, const AnalysisOptions& opts) {
  Mod<F> x = m;
  for (int i = 0; i < k; ++i) {
    Analysis<F> ax(x, opts);
    if (!in_perp(ax, n + i)) return violated("cosyzygy " + str(i) + " is not in the degree-" + str(n + i) + " orthogonal class");
    if (ax.ext_transpose(1) != 0) return holds("cosyzygy " + str(i) + " is not torsionless");
    x = cosyzygy_embedding(x, 1, opts).seq.objects[3];
  }
  return violated("cosyzygies 0.." + str(k - 1) + " are torsionless although M is not " + str(k) + "-torsionfree");
}

// ---------------------------------------------------------------------------------------------
// checks

template <class F>
Outcome check_dimensions(Context<F>& ctx, const Instance<F>& in) {
  const auto& m = in.modules.at(0);
  const int n = ctx.params.n;
  Analysis<F> a(m, ctx.opts);
  auto g = gorenstein_dimension(a);
  auto t = torsionfree_dimension_upper(a);
  auto o = orthogonal_dimension(a);
  Outcome out;
  out.detail = "G-dim " + g.to_string() + ", T-dim " + t.to_string() + ", orthdim " + o.to_string();
  out.data = {{"gdim", g.to_string()}, {"tdim", t.to_string()}, {"orthdim", o.to_string()}};
  if (g.is_certified_finite() && (o.proves_greater_than(g.value) || t.proves_greater_than(g.value))) {
    out.verdict = Verdict::violated;
    out.detail += ": a dimension exceeds the G-dim";
    return out;
  }
  const bool left = m.side() == Side::left;
  if (g.proves_greater_than(n)) out.exhibits.push_back(left ? "(2) G-dim > n, left" : "(3) G-dim > n, right");
  if (t.proves_greater_than(n)) out.exhibits.push_back("(4) T-dim > n");
  if (o.proves_greater_than(n)) out.exhibits.push_back("(5) orthdim > n");
  const auto& dl = ctx.dl;
  const auto& dr = ctx.dr;
  if (dl && dr && dl->proves_at_most(n) && dr->proves_at_most(n)) {
    if (!out.exhibits.empty()) {
      out.verdict = Verdict::violated;
      out.detail += ": exceeds n although id_R R and id_R^op R are <= n";
    } else if (!(g.proves_at_most(n) && t.proves_at_most(n) && o.proves_at_most(n))) {
      out.verdict = Verdict::undecided;
    }
  }
  return out;
}

template <class F>
Outcome check_orthdim(Context<F>& ctx, const Instance<F>& in) {
  const auto& m = in.modules.at(0);
  const int n = ctx.params.n, b = ctx.params.bound;
  Analysis<F> a(m, ctx.opts);
  auto o = orthogonal_dimension(a);
  Outcome out;
  out.detail = "orthdim " + o.to_string();
  out.data = {{"orthdim", o.to_string()}};
  std::optional<int> nonzero;
  for (int i = n + 1; i <= b; ++i)
    if (a.ext(i) != 0) {
      nonzero = i;
      break;
    }
  if (nonzero && o.proves_at_most(n))
    return violated(out.detail + " but Ext^" + str(*nonzero) + "(M, R) != 0");
  if (o.is_certified_finite()) {
    for (int i = o.value + 1; i <= b; ++i)
      if (a.ext(i) != 0) return violated(out.detail + " but Ext^" + str(i) + "(M, R) != 0");
  }
  if (o.proves_greater_than(n)) out.exhibits.push_back("orthdim > n");
  const auto& d = ctx.selfinj(m.side());
  if (d && d->proves_at_most(n)) {
    if (o.proves_greater_than(n)) return violated(out.detail + " although id of the regular module is " + d->to_string());
    if (!o.proves_at_most(n)) out.verdict = Verdict::undecided;
  }
  return out;
}

template <class F>
Outcome check_cosyzygy(Context<F>& ctx, const Instance<F>& in) {
  const auto& m = in.modules.at(0);
  const int n = ctx.params.n;
  Analysis<F> a(m, ctx.opts);
  const bool tf = is_n_torsionfree(a, n);
  try {
    auto c = cosyzygy_embedding(m, n, ctx.opts);
    if (!tf) return violated("built a cosyzygy sequence for a module that is not " + str(n) + "-torsionfree");
    if (!c.cert.ok) return violated("certificate failed: " + join(c.cert.failures));
    return holds(str(n) + "-torsionfree; cosyzygy sequence certified (" + str(static_cast<int>(c.cert.checks.size())) +
                 " checks)");
  } catch (const PreconditionError& e) {
    if (tf) return violated(std::string("refused an ") + str(n) + "-torsionfree module: " + e.what());
    return holds("not " + str(n) + "-torsionfree; construction refused");
  }
}

template <class F>
Outcome check_syzygy_of_perp(Context<F>& ctx, const Instance<F>& in) {
  const auto& x = in.modules.at(0);
  const int n = ctx.params.n;
  Analysis<F> a(x, ctx.opts);
  if (!in_perp(a, n)) return skipped("not in the degree-" + str(n) + " orthogonal class");
  if (!is_n_torsionfree(a.syzygy(n), n)) return violated("syzygy " + str(n) + " is not " + str(n) + "-torsionfree");
  return holds("syzygy " + str(n) + " is " + str(n) + "-torsionfree");
}

template <class F>
Outcome check_sum(Context<F>& ctx, const Instance<F>& in) {
  const auto& m = in.modules.at(0);
  const auto& n = in.modules.at(1);
  const int b = ctx.params.bound;
  auto s = direct_sum(std::vector<Mod<F>>{m, n}).sum;
  Analysis<F> am(m, ctx.opts), an(n, ctx.opts), as(s, ctx.opts);
  for (int i = 1; i <= b; ++i) {
    auto em = am.ext_transpose(i), en = an.ext_transpose(i), es = as.ext_transpose(i);
    if (es != em + en)
      return violated("dim Ext^" + str(i) + "(Tr, R): sum " + std::to_string(es) + ", summands " + std::to_string(em) +
                      " + " + std::to_string(en));
  }
  auto fm = inf_torsionfree(am), fn = inf_torsionfree(an), fs = inf_torsionfree(as);
  if (fm.value && fm.certified && fn.value && fn.certified && !fs.value)
    return violated("summands are infinity-torsionfree but the sum is not");
  if (fs.value && fs.certified && (!fm.value || !fn.value)) return violated("the sum is infinity-torsionfree but a summand is not");
  return holds("torsionfree degrees add up to " + str(b));
}

template <class F>
Outcome check_star_ses(Context<F>&, const Instance<F>& in) {
  auto r = star_of_ses(*in.seq);
  if (!r.cert.ok) return violated("certificate failed: " + join(r.cert.failures));
  return holds("dual and transpose sequences certified");
}

template <class F>
Outcome check_bridge(Context<F>& ctx, const Instance<F>& in) {
  try {
    auto c = projective_bridge(*in.seq, ctx.opts);
    if (!c.cert.ok) return violated("certificate failed: " + join(c.cert.failures));
    return holds("0 -> M -> P -> T -> A -> 0 certified");
  } catch (const PreconditionError& e) {
    return skipped(e.what());
  }
}

template <class F>
Outcome check_compress(Context<F>& ctx, const Instance<F>& in, int n) {
  const auto& m = in.modules.at(0);
  Analysis<F> a(m, ctx.opts);
  auto t = torsionfree_dimension_upper(a);
  if (!t.proves_at_most(n)) return skipped("T-dim " + t.to_string() + " not certified <= " + str(n));
  const auto j = static_cast<std::size_t>(*t.upper);
  auto c = torsionfree_compress(m, truncated_resolution(m, j), j, ctx.opts);
  if (!c.cert.ok) return violated("certificate failed: " + join(c.cert.failures));
  return holds("T-dim " + t.to_string() + "; 0 -> H -> T -> M -> 0 certified");
}

template <class F>
Outcome check_embed(Context<F>& ctx, const Instance<F>& in, int n) {
  const auto& m = in.modules.at(0);
  Analysis<F> a(m, ctx.opts);
  auto t = torsionfree_dimension_upper(a);
  Outcome out;
  if (t.proves_greater_than(n)) out.exhibits.push_back("T-dim > n");
  if (!t.proves_at_most(n)) {
    out.verdict = Verdict::skipped;
    out.detail = "T-dim " + t.to_string() + " not certified <= " + str(n);
    return out;
  }
  const auto j = static_cast<std::size_t>(*t.upper);
  auto c = embed_into_finite_pd(m, j, truncated_resolution(m, j), ctx.opts);
  if (!c.cert.ok) return violated("certificate failed: " + join(c.cert.failures));
  out.detail = "T-dim " + t.to_string() + "; 0 -> M -> N -> T -> 0 certified";
  return out;
}

/// Torsionless property of ⊥n on the left (level = n) or of ⊥ (level = nullopt).
template <class F>
Outcome check_tp_left(Context<F>& ctx, const Instance<F>& in, std::optional<int> level) {
  const auto& m = in.modules.at(0);
  const int b = ctx.params.bound;
  Analysis<F> a(m, ctx.opts);
  Outcome out;
  bool perp;
  int depth;  // degrees of ⊥ membership available to the chain check
  std::optional<int> tp;
  if (level) {
    perp = in_perp(a, *level);
    depth = *level;
    if (ctx.tp_certified(Side::left, *level)) tp = *level;
  } else {
    auto f = in_left_orthogonal(a);
    perp = f.value;
    depth = b;
    tp = ctx.tp_certified_level(Side::left);
    // under a certified level d only membership in ⊥d is needed
    if (tp && !perp && in_perp(a, *tp)) perp = true, depth = *tp;
  }
  auto flag = inf_torsionfree(a);
  const std::string cls = level ? "degree-" + str(*level) + " orthogonal class" : "orthogonal class";
  if (perp) {
    const bool torsionless = a.ext_transpose(1) == 0;
    if (!torsionless) out.exhibits.push_back("(1) not torsionless in the " + cls);
    if (!flag.value) {
      out.exhibits.push_back("(2) not infinity-torsionfree in the " + cls);
      auto k = first_tf_failure(a, b);
      if (k) {
        auto chain = cosyzygy_chain(m, depth, *k, ctx.opts);
        if (chain.verdict == Verdict::violated) return chain;
      }
      if (level) {
        auto t = torsionfree_dimension_upper(a);
        if (t.proves_at_most(*level))
          return violated("T-dim " + t.to_string() + " <= n in the " + cls + " but not infinity-torsionfree");
      }
    }
  }
  if (level && !flag.value && is_n_torsionfree(a, *level)) out.exhibits.push_back("(4) n-torsionfree, not infinity-torsionfree");
  out.detail = std::string(perp ? "in" : "not in") + " the " + cls + "; " +
               (flag.value ? "infinity-torsionfree" : "not infinity-torsionfree") + (flag.certified ? "" : " up to bound");
  if (tp && !out.exhibits.empty()) {
    out.verdict = Verdict::violated;
    out.detail += "; the torsionless property is certified by id_R^op R";
  }
  return out;
}

/// Right-module side of the same equivalences: (5) n-torsionfree but not in ⊥, (6) ⊥n but not ⊥
/// (level n), or (4) infinity-torsionfree but not in ⊥ (level ∞).
template <class F>
Outcome check_tp_right(Context<F>& ctx, const Instance<F>& in, std::optional<int> level) {
  const auto& nmod = in.modules.at(0);
  Analysis<F> a(nmod, ctx.opts);
  Outcome out;
  auto perp = in_left_orthogonal(a);
  const bool definite_not_perp = !perp.value;
  bool tf;
  if (level) {
    tf = is_n_torsionfree(a, *level);
    if (tf && definite_not_perp) out.exhibits.push_back("(5) n-torsionfree right module not in the orthogonal class");
    if (in_perp(a, *level) && definite_not_perp) out.exhibits.push_back("(6) right module in the degree-n class only");
  } else {
    auto f = inf_torsionfree(a);
    tf = f.value && f.certified;
    if (tf && definite_not_perp) out.exhibits.push_back("(4) infinity-torsionfree right module not in the orthogonal class");
  }
  out.detail = std::string(tf ? "torsionfree" : "not torsionfree") + ", " + (perp.value ? "in" : "not in") +
               " the orthogonal class";
  if (tf && definite_not_perp) {
    // Tr N is then a left module in the degree-n (resp. full) class that is not infinity-torsionfree
    auto tr = a.transpose().module;
    Analysis<F> at(tr, ctx.opts);
    const int need = level ? *level : ctx.params.bound;
    if (!in_perp(at, need) || inf_torsionfree(at).value)
      return violated(out.detail + "; its transpose does not exhibit the left-side failure");
  }
  std::optional<int> tp = level ? (ctx.tp_certified(Side::left, *level) ? level : std::nullopt)
                                : ctx.tp_certified_level(Side::left);
  if (tp && !out.exhibits.empty()) {
    out.verdict = Verdict::violated;
    out.detail += "; the torsionless property is certified by id_R^op R";
  }
  return out;
}

template <class F>
Outcome check_level_bounds(Context<F>& ctx, const Instance<F>& in) {
  const auto& m = in.modules.at(0);
  const int b = ctx.params.bound;
  Analysis<F> a(m, ctx.opts);
  int t = 0;
  while (t < b && a.ext(t + 1) == 0) ++t;
  bool all = false;
  if (t == b) {
    auto f = in_left_orthogonal(a);
    all = f.value && f.certified;
  }
  const bool torsionless = a.ext_transpose(1) == 0;
  Outcome out;
  out.data = {{"side", to_string(m.side())}};
  if (torsionless || t == 0) {
    out.detail = torsionless ? "torsionless" : "Ext^1(M, R) != 0";
    return out;
  }
  const int lower = all ? b + 1 : t + 1;
  out.data["lower"] = lower;
  out.detail = "in the degree-" + str(t) + (all ? " and full" : "") + " orthogonal class, not torsionless";
  out.exhibits.push_back("torsionless level > " + str(lower - 1) + ", " + to_string(m.side()));
  for (const auto* d : {&ctx.dl, &ctx.dr}) {
    if (*d && (*d)->is_certified_finite() && lower - 1 >= std::max(1, (*d)->value))
      return violated(out.detail + "; a certified id of " + (*d)->to_string() + " puts the level at most " +
                      str(std::max(1, (*d)->value)));
  }
  return out;
}

template <class F>
Outcome check_syzygy_tf_perp(Context<F>& ctx, const Instance<F>& in) {
  const auto& nmod = in.modules.at(0);
  const int n = ctx.params.n, m = ctx.params.k;
  Analysis<F> a(nmod, ctx.opts);
  Analysis<F> ax(a.syzygy(m), ctx.opts);
  Outcome out;
  if (!is_n_torsionfree(ax, n)) {
    out.exhibits.push_back("syzygy m not n-torsionfree");
    out.detail = "syzygy " + str(m) + " is not " + str(n) + "-torsionfree";
    return out;
  }
  auto f = in_left_orthogonal(ax);
  out.detail = "syzygy " + str(m) + " is " + str(n) + "-torsionfree and " + (f.value ? "in" : "not in") +
               " the orthogonal class";
  if (ctx.tp_certified(Side::left, n) && !f.value) out.verdict = Verdict::violated;
  return out;
}

template <class F>
Outcome check_cogenerator(Context<F>& ctx, const Instance<F>& in) {
  const auto& s = in.modules.at(0);
  const int n = ctx.params.n;
  auto inj = ctx.injectives(s.side(), static_cast<std::size_t>(n));
  Analysis<F> a(s, ctx.opts);
  auto reg = regular_module(ctx.ring, s.side());
  Outcome out;
  bool all_zero = true;
  Json dims = Json::array();
  for (int i = 0; i <= n; ++i) {
    std::size_t h = static_cast<std::size_t>(i) < inj.size() ? hom_space(s, inj[i]).size() : 0;
    std::size_t e = i == 0 ? hom_space(s, reg).size() : a.ext(i);
    dims.push_back(h);
    if (h != e)
      return violated("dim Hom(S, I^" + str(i) + ") = " + std::to_string(h) + " but dim Ext^" + str(i) +
                      "(S, R) = " + std::to_string(e));
    if (h != 0) all_zero = false;
  }
  out.data = {{"hom_dims", dims}};
  if (all_zero) {
    out.exhibits.push_back("Hom(S, I^0 + ... + I^n) = 0");
    out.detail = "Hom(S, I^i) = 0 for i <= " + str(n) + ": S is in the degree-n class and S* = 0";
    if (ctx.tp_certified(s.side(), n)) out.verdict = Verdict::violated;
  } else {
    out.detail = "Hom(S, I^0 + ... + I^n) != 0";
  }
  return out;
}

template <class F>
Outcome check_injective_profile(Context<F>& ctx, const Instance<F>&) {
  const auto& dr = ctx.dr;
  if (!dr) return undecided("id_R^op R is not available");
  const int len = dr->is_certified_finite() ? std::max(1, dr->value) : ctx.params.bound;
  std::vector<DimResult> p;
  try {
    p = ctx.profile(Side::left, static_cast<std::size_t>(len));
  } catch (const UnsupportedError& e) {
    return undecided(e.what());
  }
  Outcome out;
  Json pj = Json::array();
  for (const auto& d : p) pj.push_back(d.to_string());
  out.data = {{"pd_profile", pj}};
  out.detail = "pd I^0..I^" + str(len) + ": " + pj.dump();
  if (dr->is_certified_finite()) {
    int top = 0;
    bool all = true;
    for (const auto& d : p) {
      if (d.proves_greater_than(dr->value)) return violated(out.detail + " exceeds id_R^op R = " + dr->to_string());
      if (d.is_certified_finite())
        top = std::max(top, d.value);
      else
        all = false;
    }
    if (all && top != dr->value) return violated(out.detail + ": maximum differs from id_R^op R = " + dr->to_string());
    if (!all) out.verdict = Verdict::undecided;
  } else {
    bool finite = std::all_of(p.begin(), p.end(), [](const DimResult& d) { return d.is_certified_finite(); });
    if (finite) out.exhibits.push_back("finite pd profile with id_R^op R > bound");
    if (std::any_of(p.begin(), p.end(), [](const DimResult& d) { return !d.is_finite(); }))
      out.exhibits.push_back("I^i of infinite or unbounded pd");
  }
  return out;
}

/// g_n(k)-type checks on one sample: Ω^{n+k-1} is n-torsionfree when the profile criterion holds
/// for the sample's side, and Ext^j(Ext^{i+k}(M, R), R) = 0 for 1 <= i <= n, j < i.
template <class F>
Outcome check_gnk(Context<F>& ctx, const Instance<F>& in) {
  const auto& m = in.modules.at(0);
  const int n = ctx.params.n, k = ctx.params.k;
  // g_n(k) concerns left modules and is read off the right profile; g_n(k)^op the other way round
  auto g = ctx.gnk(opposite(m.side()));
  Analysis<F> a(m, ctx.opts);
  Outcome out;
  const std::string name = m.side() == Side::left ? "g_n(k)" : "g_n(k)^op";
  for (int i = 1; i <= n; ++i) {
    auto e = ext_module_to_regular(a.resolution(), static_cast<std::size_t>(i + k));
    if (e.dim() == 0) continue;
    auto dims = ext_dims(e, regular_module(ctx.ring, e.side()), static_cast<std::size_t>(i - 1));
    for (int j = 0; j < i; ++j)
      if (dims[j] != 0) {
        out.exhibits.push_back(name + " fails");
        out.detail = "Ext^" + str(j) + "(Ext^" + str(i + k) + "(M, R), R) != 0";
        if (g && *g) out.verdict = Verdict::violated;
        return out;
      }
  }
  if (g && *g) {
    const auto s = static_cast<std::size_t>(n + k - 1);
    if (!is_n_torsionfree(a.syzygy(s), static_cast<std::size_t>(n)))
      return violated(name + " holds but syzygy " + str(n + k - 1) + " is not " + str(n) + "-torsionfree");
    out.detail = "syzygy " + str(n + k - 1) + " is " + str(n) + "-torsionfree";
  } else {
    out.detail = "double Ext vanishes";
  }
  return out;
}

template <class F>
Outcome check_zaks(Context<F>& ctx, const Instance<F>&) {
  const auto& dl = ctx.dl;
  const auto& dr = ctx.dr;
  std::string d = "id_R R = " + (dl ? dl->to_string() : "unavailable") + ", id_R^op R = " +
                  (dr ? dr->to_string() : "unavailable");
  if (dl && dr && dl->is_certified_finite() && dr->is_certified_finite()) {
    if (dl->value != dr->value) return violated(d);
    return holds(d);
  }
  return undecided(d);
}

template <class F>
Outcome check_closure(Context<F>& ctx, const Instance<F>& in) {
  const auto& s = *in.seq;
  // extension: 0 -> A -> E -> C -> 0; kernel: 0 -> K -> T -> T' -> 0 (five objects either way)
  const bool kernel = in.label.rfind("kernel", 0) == 0;
  std::vector<std::size_t> given = kernel ? std::vector<std::size_t>{2, 3} : std::vector<std::size_t>{1, 3};
  const std::size_t made = kernel ? 1 : 2;
  for (auto i : given)
    if (!certified_tf(s.objects[i], ctx.opts)) return skipped("an end term is not certified infinity-torsionfree");
  if (!s.certify().exact) return violated("the sequence is not exact");
  Analysis<F> a(s.objects[made], ctx.opts);
  auto f = inf_torsionfree(a);
  const std::string what = kernel ? "kernel" : "extension";
  if (!f.value) return violated("the " + what + " is not infinity-torsionfree: " + f.note);
  if (!f.certified) return undecided("the " + what + " is infinity-torsionfree up to the bound");
  return holds("the " + what + " is infinity-torsionfree");
}

template <class F>
Outcome check_tdim_at_most(Context<F>& ctx, const Instance<F>& in) {
  const int n = ctx.params.n;
  Analysis<F> a(in.modules.at(0), ctx.opts);
  auto t = torsionfree_dimension_upper(a);
  if (t.proves_greater_than(n)) return violated("T-dim " + t.to_string());
  if (!t.proves_at_most(n)) return undecided("T-dim " + t.to_string());
  return holds("T-dim " + t.to_string());
}

template <class F>
Outcome check_first_syzygy(Context<F>& ctx, const Instance<F>& in) {
  Analysis<F> a(in.modules.at(0), ctx.opts);
  Analysis<F> ak(a.syzygy(1), ctx.opts);
  if (ak.ext_transpose(1) != 0) return violated("the first syzygy is not torsionless");
  auto f = inf_torsionfree(ak);
  if (!f.value) return violated("the first syzygy is not infinity-torsionfree: " + f.note);
  if (!f.certified) return undecided("the first syzygy is infinity-torsionfree up to the bound");
  return holds("the first syzygy is infinity-torsionfree: " + f.note);
}

template <class F>
Outcome run_check(const std::string& check, Context<F>& ctx, const Instance<F>& in) {
  const int n = ctx.params.n;
  if (check == "dimensions") return check_dimensions(ctx, in);
  if (check == "orthdim") return check_orthdim(ctx, in);
  if (check == "cosyzygy") return check_cosyzygy(ctx, in);
  if (check == "syzygy_of_perp") return check_syzygy_of_perp(ctx, in);
  if (check == "sum") return check_sum(ctx, in);
  if (check == "star_ses") return check_star_ses(ctx, in);
  if (check == "bridge") return check_bridge(ctx, in);
  if (check == "compress") return check_compress(ctx, in, n);
  if (check == "compress_any") return check_compress(ctx, in, ctx.params.bound);
  if (check == "embed") return check_embed(ctx, in, n);
  if (check == "embed_any") return check_embed(ctx, in, ctx.params.bound);
  if (check == "tp_left") return check_tp_left(ctx, in, n);
  if (check == "tp_right") return check_tp_right(ctx, in, n);
  if (check == "tp_left_all") return check_tp_left(ctx, in, std::nullopt);
  if (check == "tp_right_all") return check_tp_right(ctx, in, std::nullopt);
  if (check == "level_bounds") return check_level_bounds(ctx, in);
  if (check == "syzygy_tf_perp") return check_syzygy_tf_perp(ctx, in);
  if (check == "cogenerator") return check_cogenerator(ctx, in);
  if (check == "injective_profile") return check_injective_profile(ctx, in);
  if (check == "gnk") return check_gnk(ctx, in);
  if (check == "zaks") return check_zaks(ctx, in);
  if (check == "closure") return check_closure(ctx, in);
  if (check == "tdim_at_most") return check_tdim_at_most(ctx, in);
  if (check == "first_syzygy") return check_first_syzygy(ctx, in);
  throw std::invalid_argument("unknown check " + check);
}

// ---------------------------------------------------------------------------------------------
// task runner

template <class F>
struct Task {
  std::string check;
  std::function<Instance<F>()> make;
};

template <class F>
struct Result {
  Instance<F> instance;
  Outcome outcome;
};

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next++;
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(worker_count(), count);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

template <class F>
Outcome guarded_check(const std::string& check, Context<F>& ctx, const Instance<F>& in) {
  try {
    return run_check(check, ctx, in);
  } catch (const UnsupportedError& e) {
    return skipped(std::string("unsupported: ") + e.what());
  } catch (const PreconditionError& e) {
    return skipped(std::string("precondition: ") + e.what());
  }
}

template <class F>
Json instance_data(const Instance<F>& in, const ClaimParams& p) {
  Json d = Json::object();
  d["params"] = {{"n", p.n}, {"k", p.k}, {"bound", p.bound}};
  if (!in.modules.empty()) {
    Json ms = Json::array();
    for (const auto& m : in.modules) ms.push_back(module_to_json(m));
    d["modules"] = ms;
  }
  if (in.seq) d["sequence"] = sequence_to_json(*in.seq);
  return d;
}

constexpr std::size_t kMaxWitnesses = 5;
constexpr std::size_t kMaxEvidencePerTag = 2;

template <class F>
class ClaimRun {
 public:
  ClaimRun(std::string claim, const RingPtr<F>& ring, const ClaimParams& params) : ctx(ring, params) {
    report.claim = std::move(claim);
    report.algebra = ring->name();
    report.field = ring->field().spec();
    report.params = params;
    report.facts["selfinjdim"] = {{"left", ctx.dl ? dim_result_to_json(*ctx.dl) : Json(nullptr)},
                                  {"right", ctx.dr ? dim_result_to_json(*ctx.dr) : Json(nullptr)}};
    report.facts["exhibits"] = Json::object();
  }

  Context<F> ctx;
  ClaimReport report;
  std::vector<Outcome> outcomes;  // of the last run, in task order

  void add(std::string check, std::function<Instance<F>()> make) { tasks_.push_back({std::move(check), std::move(make)}); }

  void add_samples(const std::string& check, const std::vector<Sample<F>>& suite) {
    for (const auto& s : suite) add(check, [s] { return Instance<F>{s.label, {s.module}, std::nullopt}; });
  }

  void run() {
    std::vector<std::optional<Result<F>>> results(tasks_.size());
    parallel_for(tasks_.size(), [&](std::size_t i) {
      auto in = tasks_[i].make();
      auto o = guarded_check(tasks_[i].check, ctx, in);
      results[i] = Result<F>{std::move(in), std::move(o)};
    });
    outcomes.clear();
    for (std::size_t i = 0; i < results.size(); ++i) absorb(tasks_[i].check, *results[i]);
    tasks_.clear();
  }

  bool exhibited(const std::string& tag) const { return report.facts.at("exhibits").contains(tag); }
  bool any_exhibit(const std::string& prefix) const {
    for (const auto& [k, v] : report.facts.at("exhibits").items())
      if (k.rfind(prefix, 0) == 0) return true;
    return false;
  }
  bool violated() const { return !report.witnesses.empty() || violations_ > 0; }
  void note(std::string s) { report.notes.push_back(std::move(s)); }

  ClaimReport finish(bool premise_undecided) {
    if (violated())
      report.status = ClaimStatus::counterexample;
    else if (premise_undecided)
      report.status = ClaimStatus::premise_undecided;
    else
      report.status = ClaimStatus::no_counterexample;
    for (const auto* list : {&report.witnesses, &report.evidence})
      for (const auto& w : *list)
        if (!reverify_witness(ctx.ring, witness_to_json(w), ctx.params))
          throw std::logic_error("witness does not re-verify: " + w.check + " on " + w.label);
    return report;
  }

 private:
  std::vector<Task<F>> tasks_;
  std::size_t violations_ = 0;
  std::map<std::string, std::size_t> evidence_count_;

  void absorb(const std::string& check, const Result<F>& r) {
    const auto& o = r.outcome;
    outcomes.push_back(o);
    ++report.instances;
    switch (o.verdict) {
      case Verdict::holds: ++report.consistent; break;
      case Verdict::undecided: ++report.undecided; break;
      case Verdict::skipped: ++report.skipped; break;
      case Verdict::violated:
        ++violations_;
        if (report.witnesses.size() < kMaxWitnesses)
          report.witnesses.push_back({check, r.instance.label, "", o.detail, instance_data(r.instance, ctx.params)});
        break;
    }
    auto& ex = report.facts["exhibits"];
    for (const auto& tag : o.exhibits) {
      ex[tag] = ex.contains(tag) ? ex[tag].template get<std::size_t>() + 1 : 1;
      if (o.verdict != Verdict::violated && evidence_count_[tag]++ < kMaxEvidencePerTag)
        report.evidence.push_back({check, r.instance.label, tag, o.detail, instance_data(r.instance, ctx.params)});
    }
  }
};

// ---------------------------------------------------------------------------------------------
// instance builders

constexpr std::uint64_t kTaskStreams = std::uint64_t{1} << 40;

SplitMix64 task_stream(std::uint64_t seed, std::uint64_t purpose, std::uint64_t t) {
  return SplitMix64(seed).split(kTaskStreams + purpose).split(t);
}

template <class F>
std::function<Instance<F>()> extension_task(const std::vector<Sample<F>>& suite, std::uint64_t seed,
                                            std::uint64_t purpose, std::size_t t) {
  return [&suite, seed, purpose, t] {
    auto rng = task_stream(seed, purpose, t);
    const auto& c = suite[rng.below(suite.size())];
    const auto& a = suite[rng.below(suite.size())];
    const auto count = ext1_class_count(c.module, a.module);
    const std::size_t idx = count == 0 ? 0 : 1 + rng.below(count);
    return Instance<F>{"extension[" + std::to_string(idx) + "](" + c.label + ", " + a.label + ")", {},
                       extension_from_cocycle(c.module, a.module, idx)};
  };
}

template <class F>
std::function<Instance<F>()> pair_task(const std::vector<Sample<F>>& suite, std::uint64_t seed, std::uint64_t purpose,
                                       std::size_t t) {
  return [&suite, seed, purpose, t] {
    auto rng = task_stream(seed, purpose, t);
    const auto& x = suite[rng.below(suite.size())];
    const auto& y = suite[rng.below(suite.size())];
    return Instance<F>{"sum(" + x.label + ", " + y.label + ")", {x.module, y.module}, std::nullopt};
  };
}

/// 0 -> ker f -> T1 -> T0 -> coker f -> 0 for a random f between two members of `pool`.
template <class F>
std::function<Instance<F>()> bridge_task(const std::vector<Sample<F>>& pool, std::uint64_t seed, std::uint64_t purpose,
                                         std::size_t t) {
  return [&pool, seed, purpose, t] {
    auto rng = task_stream(seed, purpose, t);
    const auto& x = pool[rng.below(pool.size())];
    const auto& y = pool[rng.below(pool.size())];
    auto f = random_hom(x.module, y.module, rng);
    auto kc = kernel_cokernel(f);
    return Instance<F>{"map(" + x.label + ", " + y.label + ")", {},
                       ExactSeq<F>::from_maps({kc.kernel.map, f, kc.cokernel.map})};
  };
}

/// 0 -> K -> T1 ⊕ P -> T2 -> 0 for a random f : T1 -> T2 plus the projective cover P -> T2.
template <class F>
std::function<Instance<F>()> kernel_task(const std::vector<Sample<F>>& pool, std::uint64_t seed, std::uint64_t purpose,
                                         std::size_t t) {
  return [&pool, seed, purpose, t] {
    auto rng = task_stream(seed, purpose, t);
    const auto& x = pool[rng.below(pool.size())];
    const auto& y = pool[rng.below(pool.size())];
    auto f = random_hom(x.module, y.module, rng);
    auto cover = projective_cover(y.module, supports_minimal(y.module));
    auto p = cover.projective.as_module();
    ModHom<F> pi{p, y.module, cover.map};
    auto ds = direct_sum(std::vector<Mod<F>>{x.module, p});
    ModHom<F> h{ds.sum, y.module, compose(f, ds.projections[0]).matrix + compose(pi, ds.projections[1]).matrix};
    auto kc = kernel_cokernel(h);
    return Instance<F>{"kernel(" + x.label + " + cover, " + y.label + ")", {},
                       ExactSeq<F>::from_maps({kc.kernel.map, h})};
  };
}

template <class F>
std::vector<Sample<F>> certified_tf_members(const std::vector<Sample<F>>& suite, const AnalysisOptions& opts) {
  std::vector<char> keep(suite.size(), 0);
  parallel_for(suite.size(), [&](std::size_t i) {
    try {
      keep[i] = certified_tf(suite[i].module, opts);
    } catch (const UnsupportedError&) {
    }
  });
  std::vector<Sample<F>> out;
  for (std::size_t i = 0; i < suite.size(); ++i)
    if (keep[i]) out.push_back(suite[i]);
  return out;
}

std::string dim_or_na(const std::optional<DimResult>& d) { return d ? d->to_string() : "unavailable"; }

enum class Tri { yes, no, unknown };

Tri at_most(const std::optional<DimResult>& d, int n) {
  if (!d) return Tri::unknown;
  if (d->proves_at_most(n)) return Tri::yes;
  if (d->proves_greater_than(n)) return Tri::no;
  return Tri::unknown;
}

void validate_params(ClaimId id, const ClaimParams& p) {
  if (p.bound < 1) throw std::invalid_argument("bound must be >= 1");
  if (p.samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (p.n < 0) throw std::invalid_argument("n must be >= 0");
  switch (id) {
    case ClaimId::PROP_2_1:
    case ClaimId::PROP_4_1:
    case ClaimId::COR_4_9:
    case ClaimId::LEMMA_4_5:
      if (p.n < 1) throw std::invalid_argument(std::string(to_string(id)) + " needs n >= 1");
      break;
    case ClaimId::PROP_4_4:
    case ClaimId::THM_4_7:
      if (p.n < 1 || p.k < 1) throw std::invalid_argument(std::string(to_string(id)) + " needs n, k >= 1");
      break;
    default: break;
  }
  if (p.n > p.bound) throw std::invalid_argument("n must not exceed the bound");
}

// ---------------------------------------------------------------------------------------------
// claims

template <class F>
struct Suites {
  std::vector<Sample<F>> left, right;
};

template <class F>
Suites<F> suites(const RingPtr<F>& ring, const ClaimParams& p) {
  return {sample_suite(ring, Side::left, p.samples, p.seed), sample_suite(ring, Side::right, p.samples, p.seed)};
}

template <class F>
std::vector<Sample<F>> simples_of(const RingPtr<F>& ring, Side side) {
  std::vector<Sample<F>> out;
  auto ss = simple_modules(ring, side);
  for (std::size_t j = 0; j < ss.size(); ++j) out.push_back({ss[j], "simple[" + std::to_string(j) + "]"});
  return out;
}

Json tally(const std::vector<Outcome>& outs, const char* key) {
  std::map<std::string, std::size_t> c;
  for (const auto& o : outs)
    if (o.data.contains(key)) ++c[o.data.at(key).get<std::string>()];
  Json j = Json::object();
  for (const auto& [k, v] : c) j[k] = v;
  return j;
}

template <class F>
ClaimReport claim_thm_1_4(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("THM_1_4", ring, p);
  auto s = suites(ring, p);
  run.add_samples("dimensions", s.left);
  run.add_samples("dimensions", s.right);
  run.run();
  run.report.facts["dimensions"] = {{"gdim", tally(run.outcomes, "gdim")},
                                    {"tdim", tally(run.outcomes, "tdim")},
                                    {"orthdim", tally(run.outcomes, "orthdim")}};
  const int n = p.n;
  Tri l = at_most(run.ctx.dl, n), r = at_most(run.ctx.dr, n);
  bool undecided = false;
  const std::string ids = "id_R R = " + dim_or_na(run.ctx.dl) + ", id_R^op R = " + dim_or_na(run.ctx.dr);
  if (l == Tri::yes && r == Tri::yes) {
    run.note("premise holds (" + ids + "): every sample must have all dimensions <= " + str(n));
  } else if (l == Tri::no || r == Tri::no) {
    run.note("premise fails (" + ids + "): conditions (2)-(5) must fail as well");
    for (const char* c : {"(2)", "(3)", "(4)", "(5)"})
      run.note(std::string(c) + (run.any_exhibit(c) ? " exhibited by a sampled module" : " not exhibited by the samples"));
    if (n >= 1 && !run.any_exhibit("(4)")) run.note("T-dim > n is only provable for n = 0 (lower bound 1)");
  } else {
    run.note("premise undecided (" + ids + ")");
    undecided = true;
  }
  return run.finish(undecided);
}

template <class F>
ClaimReport claim_prop_2_1(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("PROP_2_1", ring, p);
  auto s = suites(ring, p);
  run.add_samples("cosyzygy", s.left);
  run.add_samples("syzygy_of_perp", s.left);
  run.add_samples("cosyzygy", s.right);
  run.add_samples("syzygy_of_perp", s.right);
  run.run();
  return run.finish(false);
}

template <class F>
ClaimReport claim_lemma_2_3(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("LEMMA_2_3", ring, p);
  auto s = suites(ring, p);
  for (std::size_t t = 0; t < p.samples; ++t) run.add("sum", pair_task(s.left, p.seed, 0, t));
  for (std::size_t t = 0; t < p.samples; ++t) run.add("sum", pair_task(s.right, p.seed, 1, t));
  run.run();
  return run.finish(false);
}

template <class F>
ClaimReport claim_lemma_3_1(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("LEMMA_3_1", ring, p);
  auto s = suites(ring, p);
  for (std::size_t t = 0; t < p.samples; ++t) run.add("star_ses", extension_task(s.left, p.seed, 2, t));
  for (std::size_t t = 0; t < p.samples; ++t) run.add("star_ses", extension_task(s.right, p.seed, 5, t));
  run.run();
  return run.finish(false);
}

template <class F>
void add_bridge_tasks(ClaimRun<F>& run, const std::vector<Sample<F>>& suite, const std::vector<Sample<F>>& pool,
                      const ClaimParams& p) {
  for (const auto& smp : suite)
    run.add("bridge", [&smp] {
      return Instance<F>{"resolution(" + smp.label + ")", {}, truncated_resolution(smp.module, 2)};
    });
  if (!pool.empty())
    for (std::size_t t = 0; t < p.samples; ++t) run.add("bridge", bridge_task(pool, p.seed, 3, t));
}

template <class F>
ClaimReport claim_prop_3_2(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("PROP_3_2", ring, p);
  auto left = sample_suite(ring, Side::left, p.samples, p.seed);
  auto pool = certified_tf_members(left, run.ctx.opts);
  run.report.facts["certified_torsionfree_samples"] = pool.size();
  add_bridge_tasks(run, left, pool, p);
  run.run();
  return run.finish(false);
}

template <class F>
ClaimReport claim_compress(ClaimId id, const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run(to_string(id), ring, p);
  auto s = suites(ring, p);
  const char* check = id == ClaimId::PROP_3_4 ? "compress" : "embed";
  run.add_samples(check, s.left);
  run.add_samples(check, s.right);
  run.run();
  return run.finish(false);
}

template <class F>
ClaimReport claim_thm_3_6(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("THM_3_6", ring, p);
  run.add_samples("embed", sample_suite(ring, Side::left, p.samples, p.seed));
  run.run();
  Tri r = at_most(run.ctx.dr, p.n);
  bool undecided = false;
  if (r == Tri::yes) {
    run.note("id_R^op R = " + dim_or_na(run.ctx.dr) + " <= n: the conclusion holds");
  } else if (r == Tri::no) {
    run.note("id_R^op R = " + dim_or_na(run.ctx.dr) + " > n: some left module must have T-dim > n");
    run.note(run.exhibited("T-dim > n") ? "a sampled module has T-dim > n"
                                        : "no sampled module proves T-dim > n (only T-dim >= 1 is provable)");
  } else {
    run.note("id_R^op R undecided");
    undecided = true;
  }
  return run.finish(undecided);
}

template <class F>
ClaimReport claim_prop_3_10(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("PROP_3_10", ring, p);
  auto s = suites(ring, p);
  run.add_samples("orthdim", s.left);
  run.add_samples("orthdim", s.right);
  run.run();
  run.report.facts["orthdim"] = tally(run.outcomes, "orthdim");
  bool undecided = false;
  for (Side side : {Side::left, Side::right}) {
    Tri t = at_most(run.ctx.selfinj(side), p.n);
    const std::string who = side == Side::left ? "left" : "right";
    if (t == Tri::unknown) {
      undecided = true;
      run.note(who + ": id of the regular module undecided");
    } else if (t == Tri::yes) {
      run.note(who + ": id <= n, every sample must have orthdim <= n");
    } else {
      run.note(who + ": id > n, some module must have orthdim > n");
    }
  }
  if (run.exhibited("orthdim > n")) run.note("a sampled module has orthdim > n");
  return run.finish(undecided);
}

template <class F>
void note_tp(ClaimRun<F>& run, int n) {
  auto& fact = run.report.facts["torsionless_property"];
  if (run.any_exhibit("(1)") || run.any_exhibit("(2)") || run.any_exhibit("(4)") || run.any_exhibit("(5)") ||
      run.any_exhibit("(6)")) {
    fact = "refuted";
    run.note("the degree-" + str(n) + " orthogonal class lacks the torsionless property (exhibited); every "
             "equivalent condition fails");
  } else if (run.ctx.tp_certified(Side::left, n)) {
    fact = "certified";
    run.note("the torsionless property is certified by id_R^op R = " + dim_or_na(run.ctx.dr));
  } else {
    fact = "not refuted";
    run.note("no sampled module refutes the torsionless property");
  }
}

template <class F>
ClaimReport claim_prop_4_1(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("PROP_4_1", ring, p);
  auto s = suites(ring, p);
  run.add_samples("tp_left", s.left);
  run.add_samples("tp_right", s.right);
  run.run();
  note_tp(run, p.n);
  return run.finish(false);
}

template <class F>
ClaimReport claim_prop_4_2(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("PROP_4_2", ring, p);
  auto s = suites(ring, p);
  run.add_samples("tp_left_all", s.left);
  run.add_samples("tp_right_all", s.right);
  run.run();
  auto& fact = run.report.facts["torsionless_property"];
  if (run.any_exhibit("(1)") || run.any_exhibit("(2)") || run.any_exhibit("(4)")) {
    fact = "refuted";
    run.note("the orthogonal class lacks the torsionless property (exhibited)");
  } else if (auto lvl = run.ctx.tp_certified_level(Side::left)) {
    fact = "certified";
    run.note("the torsionless property is certified through degree " + str(*lvl));
  } else {
    fact = "not refuted";
    run.note("no sampled module refutes the torsionless property");
  }
  return run.finish(false);
}

template <class F>
ClaimReport claim_cor_4_3(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("COR_4_3", ring, p);
  auto s = suites(ring, p);
  run.add_samples("level_bounds", s.left);
  run.add_samples("level_bounds", s.right);
  run.run();
  int lo[2] = {1, 1};
  for (const auto& o : run.outcomes)
    if (o.data.contains("lower")) {
      int side = o.data.at("side") == "left" ? 0 : 1;
      lo[side] = std::max(lo[side], o.data.at("lower").template get<int>());
    }
  std::optional<int> hi;
  for (const auto* d : {&run.ctx.dl, &run.ctx.dr})
    if (*d && (*d)->is_certified_finite()) hi = std::min(hi.value_or(1 << 30), std::max(1, (*d)->value));
  Json levels = Json::object();
  levels["left_lower"] = lo[0];
  levels["right_lower"] = lo[1];
  levels["upper"] = hi ? Json(*hi) : Json(nullptr);
  run.report.facts["levels"] = levels;
  const int lower = std::max(lo[0], lo[1]);
  if (hi)
    run.note("common level in [" + str(lower) + ", " + str(*hi) + "]");
  else
    run.note("common level >= " + str(lower) + "; no certified upper bound");
  return run.finish(false);
}

template <class F>
ClaimReport claim_prop_4_4(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("PROP_4_4", ring, p);
  run.add_samples("syzygy_tf_perp", sample_suite(ring, Side::right, p.samples, p.seed));
  run.run();
  const bool tp = run.ctx.tp_certified(Side::left, p.n);
  run.note(tp ? "the torsionless property is certified by id_R^op R = " + dim_or_na(run.ctx.dr)
              : "the torsionless property is not certified; only the syzygy condition is sampled");
  if (tp && at_most(run.ctx.dr, p.k) == Tri::no)
    run.note(run.exhibited("syzygy m not n-torsionfree")
                 ? "id_R^op R > m and a sampled syzygy is not n-torsionfree, as required"
                 : "id_R^op R > m: some m-th syzygy must fail to be n-torsionfree; none sampled");
  return run.finish(false);
}

template <class F>
ClaimReport claim_lemma_4_5(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("LEMMA_4_5", ring, p);
  auto simples = simples_of(ring, Side::left);
  run.add_samples("cogenerator", simples);
  run.run();
  if (run.exhibited("Hom(S, I^0 + ... + I^n) = 0"))
    run.note("a simple module misses I^0 + ... + I^n, so the degree-n torsionless property fails");
  else
    run.note("I^0 + ... + I^n cogenerates every simple module");
  return run.finish(false);
}

template <class F>
ClaimReport claim_prop_4_6(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("PROP_4_6", ring, p);
  run.add("injective_profile", [] { return Instance<F>{"algebra", {}, std::nullopt}; });
  run.run();
  if (!run.outcomes.empty() && run.outcomes[0].data.contains("pd_profile"))
    run.report.facts["pd_profile"] = run.outcomes[0].data["pd_profile"];
  bool undecided = !run.ctx.dr || (!run.ctx.dr->is_certified_finite() && !run.ctx.dr->proves_greater_than(p.bound));
  if (run.ctx.dr && run.ctx.dr->is_certified_finite())
    run.note("id_R^op R = " + run.ctx.dr->to_string() + ": the torsionless property holds in degree " +
             str(std::max(1, run.ctx.dr->value)) + " and every I^i has pd <= id_R^op R");
  else if (run.exhibited("finite pd profile with id_R^op R > bound"))
    run.note("every checked I^i has finite pd, so the torsionless property must fail in every degree up to the bound");
  return run.finish(undecided);
}

template <class F>
ClaimReport claim_thm_4_7(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("THM_4_7", ring, p);
  auto s = suites(ring, p);
  run.add_samples("gnk", s.left);
  run.add_samples("gnk", s.right);
  run.add_samples("tp_left", s.left);
  run.run();
  auto g = run.ctx.gnk(Side::right), gop = run.ctx.gnk(Side::left);
  run.report.facts["g_n(k)"] = g ? Json(*g) : Json(nullptr);
  run.report.facts["g_n(k)^op"] = gop ? Json(*gop) : Json(nullptr);
  const bool established = (g && *g) || (gop && *gop);
  const bool refuted = run.exhibited("g_n(k) fails") && run.exhibited("g_n(k)^op fails");
  bool undecided = false;
  if (established) {
    run.note(std::string(g && *g ? "g_n(k)" : "g_n(k)^op") + " holds by the injective pd profile");
    if (at_most(run.ctx.dr, p.n + p.k - 1) == Tri::no)
      run.note(run.any_exhibit("(1)")
                   ? "id_R^op R > n+k-1 and the torsionless property fails (exhibited), as required"
                   : "id_R^op R > n+k-1: the torsionless property must fail; no sampled module exhibits it");
  } else if (refuted) {
    run.note("premise fails: g_n(k) and g_n(k)^op are both refuted by sampled modules");
  } else {
    run.note("premise undecided: the profile criterion does not establish g_n(k) or g_n(k)^op");
    undecided = true;
  }
  return run.finish(undecided);
}

template <class F>
ClaimReport claim_cor_4_8(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("COR_4_8", ring, p);
  auto s = suites(ring, p);
  run.add_samples("tp_left", s.left);
  run.add_samples("cogenerator", simples_of(ring, Side::left));
  run.run();
  Tri premise = Tri::yes;
  try {
    for (const auto& d : run.ctx.profile(Side::left, static_cast<std::size_t>(p.n))) {
      if (d.proves_greater_than(p.n)) premise = Tri::no;
      else if (!d.proves_at_most(p.n) && premise == Tri::yes) premise = Tri::unknown;
    }
  } catch (const UnsupportedError&) {
    premise = Tri::unknown;
  }
  bool undecided = false;
  if (premise == Tri::no) {
    run.note("premise fails: some I^i with i <= n has pd > n");
  } else if (premise == Tri::unknown) {
    run.note("premise undecided");
    undecided = true;
  } else {
    Tri r = at_most(run.ctx.dr, p.n);
    if (r == Tri::yes)
      run.note("id_R^op R <= n: the torsionless property holds and no exhibit may occur");
    else if (r == Tri::no)
      run.note(run.any_exhibit("(1)") || run.any_exhibit("Hom(S")
                   ? "id_R^op R > n and the torsionless property fails (exhibited), as required"
                   : "id_R^op R > n: the torsionless property must fail; no sampled module exhibits it");
    else
      undecided = true;
  }
  return run.finish(undecided);
}

template <class F>
ClaimReport claim_cor_4_9(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("COR_4_9", ring, p);
  auto s = suites(ring, p);
  run.add("zaks", [] { return Instance<F>{"algebra", {}, std::nullopt}; });
  run.add_samples("tp_left", s.left);
  run.add_samples("cogenerator", simples_of(ring, Side::left));
  run.run();
  Tri l = at_most(run.ctx.dl, p.n);
  bool undecided = false;
  if (l == Tri::no) {
    run.note("premise fails: id_R R = " + dim_or_na(run.ctx.dl) + " > n");
  } else if (l == Tri::unknown) {
    run.note("premise undecided: id_R R = " + dim_or_na(run.ctx.dl));
    undecided = true;
  } else {
    Tri r = at_most(run.ctx.dr, p.n);
    if (r == Tri::yes)
      run.note("id_R R = " + dim_or_na(run.ctx.dl) + ", id_R^op R = " + dim_or_na(run.ctx.dr) +
               ": the torsionless property holds and no sampled module in the class fails it");
    else if (r == Tri::no)
      run.note("id_R^op R > n: the torsionless property must fail");
    else
      undecided = true;
  }
  return run.finish(undecided);
}

template <class F>
ClaimReport claim_zaks(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("ZAKS", ring, p);
  run.add("zaks", [] { return Instance<F>{"algebra", {}, std::nullopt}; });
  run.run();
  run.note(run.outcomes.at(0).detail);
  return run.finish(run.report.undecided > 0);
}

template <class F>
ClaimReport claim_q_5_1(const RingPtr<F>& ring, const ClaimParams& p) {
  ClaimRun<F> run("Q_5_1", ring, p);
  std::vector<std::vector<Sample<F>>> pools;
  for (Side side : {Side::left, Side::right}) {
    auto suite = sample_suite(ring, side, p.samples, p.seed);
    pools.push_back(certified_tf_members(suite, run.ctx.opts));
  }
  run.report.facts["certified_torsionfree_samples"] = {{"left", pools[0].size()}, {"right", pools[1].size()}};
  for (std::size_t side = 0; side < 2; ++side) {
    const auto& pool = pools[side];
    if (pool.empty()) continue;
    for (std::size_t t = 0; t < p.samples; ++t) {
      run.add("closure", extension_task(pool, p.seed, 6 + side, t));
      run.add("closure", kernel_task(pool, p.seed, 8 + side, t));
    }
  }
  run.run();
  for (Side side : {Side::left, Side::right}) {
    const auto& d = run.ctx.selfinj(side);
    const std::string who = side == Side::left ? "left" : "right";
    if (d && d->is_certified_finite())
      run.note(who + ": id of the regular module is " + d->to_string() +
               ", so the opposite orthogonal class has the torsionless property and closure is expected");
    else
      run.note(who + ": the closure question is open here; results are experimental");
  }
  return run.finish(false);
}

template <class F>
ClaimReport claim_q_5_2(ClaimId id, const RingPtr<F>& ring, const ClaimParams& p) {
  const bool n1 = id == ClaimId::CLAIM_5_2_N1;
  ClaimRun<F> run(to_string(id), ring, p);
  const int n = n1 ? 1 : p.n;
  if (at_most(run.ctx.dr, n) != Tri::yes) {
    run.note("premise not certified: id_R^op R = " + dim_or_na(run.ctx.dr) + " is not certified <= " + str(n));
    return run.finish(true);
  }
  run.add_samples(n1 ? "first_syzygy" : "tdim_at_most", sample_suite(ring, Side::left, p.samples, p.seed));
  run.run();
  run.note("id_R^op R = " + run.ctx.dr->to_string() + " <= " + str(n));
  return run.finish(false);
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// public API

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> ids = [] {
    std::vector<ClaimId> v;
    for (const auto& c : kClaims) v.push_back(c.id);
    return v;
  }();
  return ids;
}

const char* to_string(ClaimId id) { return info(id).name; }

std::optional<ClaimId> parse_claim(std::string_view name) {
  for (const auto& c : kClaims)
    if (name == c.name) return c.id;
  return std::nullopt;
}

const char* claim_statement(ClaimId id) { return info(id).statement; }

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::no_counterexample: return "NO_COUNTEREXAMPLE";
    case ClaimStatus::counterexample: return "COUNTEREXAMPLE";
    case ClaimStatus::premise_undecided: return "PREMISE_UNDECIDED";
  }
  return "?";
}

Json witness_to_json(const Witness& w) {
  Json j = Json::object();
  j["check"] = w.check;
  j["label"] = w.label;
  if (!w.tag.empty()) j["tag"] = w.tag;
  j["detail"] = w.detail;
  j["data"] = w.data;
  return j;
}

Json report_to_json(const ClaimReport& r) {
  Json j = Json::object();
  j["claim"] = r.claim;
  j["algebra"] = r.algebra;
  j["field"] = field_to_json(r.field);
  j["params"] = {{"n", r.params.n},
                 {"k", r.params.k},
                 {"bound", r.params.bound},
                 {"samples", r.params.samples},
                 {"seed", r.params.seed}};
  j["status"] = to_string(r.status);
  j["counts"] = {{"instances", r.instances},
                 {"consistent", r.consistent},
                 {"undecided", r.undecided},
                 {"skipped", r.skipped}};
  j["facts"] = r.facts;
  Json ws = Json::array(), ev = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_to_json(w));
  for (const auto& w : r.evidence) ev.push_back(witness_to_json(w));
  j["witnesses"] = ws;
  j["evidence"] = ev;
  j["notes"] = r.notes;
  return j;
}

int exit_code(const ClaimReport& r) {
  switch (r.status) {
    case ClaimStatus::no_counterexample: return 0;
    case ClaimStatus::counterexample: return 1;
    case ClaimStatus::premise_undecided: return 3;
  }
  return 1;
}

std::size_t worker_count() {
  if (const char* env = std::getenv("TORSIONFREE_LAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

template <class F>
std::vector<Sample<F>> sample_suite(const RingPtr<F>& ring, Side side, std::size_t count, std::uint64_t seed,
                                    const SampleParams& params) {
  std::vector<Sample<F>> out;
  auto add = [&](Mod<F> m, std::string label) {
    if (m.dim() == 0 || m.dim() > params.max_dim) return;
    out.push_back({std::move(m), std::move(label)});
  };
  auto idx = [](const char* what, std::size_t j) { return std::string(what) + "[" + std::to_string(j) + "]"; };
  add(regular_module(ring, side), "regular");
  try {
    auto simples = simple_modules(ring, side);
    for (std::size_t j = 0; j < simples.size(); ++j) out.push_back({simples[j], idx("simple", j)});
    auto projectives = indecomposable_projectives(ring, side);
    for (std::size_t j = 0; j < projectives.size(); ++j) add(projectives[j], idx("projective", j));
    auto op_projectives = indecomposable_projectives(ring, opposite(side));
    for (std::size_t j = 0; j < op_projectives.size(); ++j) {
      auto inj = vector_space_dual(op_projectives[j]);
      add(inj, idx("injective", j));
      add(semisimple_top(inj).module, "top(" + idx("injective", j) + ")");
    }
    const bool minimal = supports_minimal(regular_module(ring, side));
    for (std::size_t j = 0; j < simples.size(); ++j) {
      add(syzygy(simples[j], 1, minimal), "syzygy1(" + idx("simple", j) + ")");
      add(syzygy(simples[j], 2, minimal), "syzygy2(" + idx("simple", j) + ")");
    }
    auto op_simples = simple_modules(ring, opposite(side));
    for (std::size_t j = 0; j < op_simples.size(); ++j) {
      add(transpose(op_simples[j]).module, "transpose(" + idx("simple_op", j) + ")");
      add(star_dual(op_simples[j]).dual, "star(" + idx("simple_op", j) + ")");
    }
  } catch (const UnsupportedError&) {
  }
  const std::size_t builtins = out.size();
  const SplitMix64 root(seed);
  const std::uint64_t side_bit = side == Side::left ? 0 : 1;
  for (std::size_t i = 0; builtins + i < count; ++i) {
    auto rng = root.split(2 * i + side_bit);
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto r = random_module(ring, side, rng, params.random);
      if (r.module.dim() == 0 || r.module.dim() > params.max_dim) continue;
      out.push_back({std::move(r.module), idx("random", i) + ":" + to_string(r.step)});
      break;
    }
  }
  return out;
}

template <class F>
ClaimReport falsify_claim(ClaimId id, const RingPtr<F>& ring, const ClaimParams& params) {
  validate_params(id, params);
  switch (id) {
    case ClaimId::THM_1_4: return claim_thm_1_4(ring, params);
    case ClaimId::PROP_2_1: return claim_prop_2_1(ring, params);
    case ClaimId::LEMMA_2_3: return claim_lemma_2_3(ring, params);
    case ClaimId::LEMMA_3_1: return claim_lemma_3_1(ring, params);
    case ClaimId::PROP_3_2: return claim_prop_3_2(ring, params);
    case ClaimId::PROP_3_4:
    case ClaimId::COR_3_5: return claim_compress(id, ring, params);
    case ClaimId::THM_3_6: return claim_thm_3_6(ring, params);
    case ClaimId::PROP_3_10: return claim_prop_3_10(ring, params);
    case ClaimId::PROP_4_1: return claim_prop_4_1(ring, params);
    case ClaimId::PROP_4_2: return claim_prop_4_2(ring, params);
    case ClaimId::COR_4_3: return claim_cor_4_3(ring, params);
    case ClaimId::PROP_4_4: return claim_prop_4_4(ring, params);
    case ClaimId::LEMMA_4_5: return claim_lemma_4_5(ring, params);
    case ClaimId::PROP_4_6: return claim_prop_4_6(ring, params);
    case ClaimId::THM_4_7: return claim_thm_4_7(ring, params);
    case ClaimId::COR_4_8: return claim_cor_4_8(ring, params);
    case ClaimId::COR_4_9: return claim_cor_4_9(ring, params);
    case ClaimId::ZAKS: return claim_zaks(ring, params);
    case ClaimId::Q_5_1:
    case ClaimId::Q_5_2:
    case ClaimId::CLAIM_5_2_N1: return question_experiment(id, ring, params);
  }
  throw std::invalid_argument("unknown claim");
}

template <class F>
ClaimReport question_experiment(ClaimId id, const RingPtr<F>& ring, const ClaimParams& params) {
  validate_params(id, params);
  switch (id) {
    case ClaimId::Q_5_1: return claim_q_5_1(ring, params);
    case ClaimId::Q_5_2:
    case ClaimId::CLAIM_5_2_N1: return claim_q_5_2(id, ring, params);
    default: throw std::invalid_argument(std::string(to_string(id)) + " is not a question experiment");
  }
}

template <class F>
ClaimReport construction_roundtrips(const RingPtr<F>& ring, const ClaimParams& params) {
  if (params.n < 1) throw std::invalid_argument("construction round trips need n >= 1");
  ClaimRun<F> run("CONSTRUCTIONS", ring, params);
  auto s = suites(ring, params);
  for (const auto* suite : {&s.left, &s.right}) {
    run.add_samples("cosyzygy", *suite);
    run.add_samples("syzygy_of_perp", *suite);
    run.add_samples("compress_any", *suite);
    run.add_samples("embed_any", *suite);
  }
  for (std::size_t t = 0; t < params.samples; ++t) run.add("star_ses", extension_task(s.left, params.seed, 2, t));
  for (std::size_t t = 0; t < params.samples; ++t) run.add("star_ses", extension_task(s.right, params.seed, 5, t));
  auto pool = certified_tf_members(s.left, run.ctx.opts);
  add_bridge_tasks(run, s.left, pool, params);
  run.run();
  return run.finish(false);
}

template <class F>
bool reverify_witness(const RingPtr<F>& ring, const Json& witness, const ClaimParams& params) {
  ClaimParams p = params;
  const auto& data = witness.at("data");
  if (data.contains("params")) {
    p.n = data["params"].at("n").get<int>();
    p.k = data["params"].at("k").get<int>();
    p.bound = data["params"].at("bound").get<int>();
  }
  Context<F> ctx(ring, p);
  Instance<F> in;
  in.label = witness.at("label").get<std::string>();
  if (data.contains("modules"))
    for (const auto& m : data["modules"]) in.modules.push_back(module_from_json(m, ring));
  if (data.contains("sequence")) in.seq = sequence_from_json(data["sequence"], ring);
  auto o = guarded_check(witness.at("check").get<std::string>(), ctx, in);
  if (witness.contains("tag")) {
    const auto tag = witness["tag"].get<std::string>();
    return std::find(o.exhibits.begin(), o.exhibits.end(), tag) != o.exhibits.end();
  }
  return o.verdict == Verdict::violated;
}

#define TFL_INSTANTIATE(F)                                                                                        \
  template std::vector<Sample<F>> sample_suite(const RingPtr<F>&, Side, std::size_t, std::uint64_t,             \
                                               const SampleParams&);                                            \
  template ClaimReport falsify_claim(ClaimId, const RingPtr<F>&, const ClaimParams&);                           \
  template ClaimReport question_experiment(ClaimId, const RingPtr<F>&, const ClaimParams&);                     \
  template ClaimReport construction_roundtrips(const RingPtr<F>&, const ClaimParams&);                          \
  template bool reverify_witness(const RingPtr<F>&, const Json&, const ClaimParams&);

TFL_INSTANTIATE(PrimeField)
TFL_INSTANTIATE(RationalField)

}  // namespace tfl

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfl/constructions.hpp"
#include "tfl/serialize.hpp"

namespace tfl {

enum class ClaimId {
  THM_1_4,
  PROP_2_1,
  LEMMA_2_3,
  LEMMA_3_1,
  PROP_3_2,
  PROP_3_4,
  COR_3_5,
  THM_3_6,
  PROP_3_10,
  PROP_4_1,
  PROP_4_2,
  COR_4_3,
  PROP_4_4,
  LEMMA_4_5,
  PROP_4_6,
  THM_4_7,
  COR_4_8,
  COR_4_9,
  ZAKS,
  Q_5_1,
  Q_5_2,
  CLAIM_5_2_N1,
};

const std::vector<ClaimId>& all_claims();
const char* to_string(ClaimId id);
std::optional<ClaimId> parse_claim(std::string_view name);
/// One-line statement of what the check for `id` tests.
const char* claim_statement(ClaimId id);

enum class ClaimStatus { no_counterexample, counterexample, premise_undecided };
const char* to_string(ClaimStatus s);

struct ClaimParams {
  int n = 1;
  int k = 1;
  int bound = 8;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
};

/// A module, pair or sequence that failed (witness) or illustrates (evidence) a check.
/// `data` holds the serialized objects under "modules" and/or "sequence".
struct Witness {
  std::string check;
  std::string label;
  std::string tag;  // evidence only: the exhibited condition
  std::string detail;
  Json data = Json::object();
};

struct ClaimReport {
  std::string claim;
  std::string algebra;
  FieldSpec field;
  ClaimParams params;
  ClaimStatus status = ClaimStatus::no_counterexample;
  Json facts = Json::object();  // algebra-level quantities used by the check
  std::size_t instances = 0, consistent = 0, undecided = 0, skipped = 0;
  std::vector<Witness> witnesses;
  std::vector<Witness> evidence;
  std::vector<std::string> notes;
};

Json witness_to_json(const Witness& w);
Json report_to_json(const ClaimReport& r);
/// Exit code of the CLI for a report: 0, 1 (counterexample) or 3 (premise undecided).
int exit_code(const ClaimReport& r);

struct SampleParams {
  RandomModuleParams random{};
  /// Larger random draws are discarded and redrawn.
  std::size_t max_dim = 50;
};

template <class F>
struct Sample {
  Mod<F> module;
  std::string label;
};

/// Built-in modules (regular, simples, indecomposable projectives, tops, syzygies, transposes,
/// duals) followed by random cokernels and extensions until `count` members are reached. Random
/// member i uses stream i split from `seed`.
template <class F>
std::vector<Sample<F>> sample_suite(const RingPtr<F>& ring, Side side, std::size_t count, std::uint64_t seed,
                                    const SampleParams& params = {});

/// Sample-based falsification of one claim. Throws std::invalid_argument for invalid params.
template <class F>
ClaimReport falsify_claim(ClaimId id, const RingPtr<F>& ring, const ClaimParams& params);

/// Q_5_1, Q_5_2 and CLAIM_5_2_N1.
template <class F>
ClaimReport question_experiment(ClaimId id, const RingPtr<F>& ring, const ClaimParams& params);

/// Runs every construction on the applicable samples and checks each certificate.
template <class F>
ClaimReport construction_roundtrips(const RingPtr<F>& ring, const ClaimParams& params);

/// Re-runs the check a witness records on its deserialized objects; true when it fails again
/// (or, for evidence, exhibits the same condition again).
template <class F>
bool reverify_witness(const RingPtr<F>& ring, const Json& witness, const ClaimParams& params);

/// Worker count: TORSIONFREE_LAB_THREADS when set and positive, else the hardware concurrency.
std::size_t worker_count();

}  // namespace tfl

#pragma once

// Round trips Graph -> group -> Graph. The Up pipeline reads the edges of R
// off (H, *, pi_R) with phi_up; the Down pipeline reads them off the bare
// group H_R, finding the vertex-like naturals by centralizer dimension and
// the edges with phi_down.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "mekler/definable.hpp"
#include "mekler/report.hpp"

namespace mekler {

enum class Pipeline { Up, Down };

std::string_view pipeline_name(Pipeline p);

// g and h are powers of each other modulo Z(H).
bool approx_equiv(const GroupContext& ctx, const GroupElement& g, const GroupElement& h);

struct RecoveredClass {
  Natural label;  // the common support vertex of the members
  std::vector<GroupElement> members;
};

struct EdgeEvidence {
  Natural a;
  Natural b;
  bool edge = false;
  // Trace for the class representatives.
  FormulaTrace trace;
  std::size_t member_pairs = 0;
  // Every member pair gave the representatives' verdict.
  bool consistent = true;
};

struct RecoveredGraph {
  Pipeline pipeline = Pipeline::Up;
  std::vector<RecoveredClass> classes;
  std::set<NaturalPair> edges;
  std::vector<EdgeEvidence> evidence;
  std::size_t candidates_examined = 0;
  std::size_t y_size = 0;
  // Verdicts were constant on classes and, for Down, the definable Y set
  // agreed with the syntactic one on every candidate.
  bool consistent = true;
  std::size_t syntactic_disagreements = 0;

  NaturalGraph as_natural_graph() const;
};

struct RecoveryOptions {
  // Random central translates added per sampled element of Y.
  std::size_t sample_budget = 2;
  std::uint64_t seed = 1;
  // Down only: largest support of the H_R cosets scanned for Y.
  std::size_t support_budget = 2;
};

// Requires the gadget of every pair of naturals in the fragment.
RecoveredGraph recover_graph_up(const GroupContext& ctx, const std::set<NaturalPair>& r_edges,
                                const RecoveryOptions& options = {});

// Requires an adequate fragment (see subgroup_adequacy).
RecoveredGraph recover_graph_down(const GroupContext& ctx, const std::set<NaturalPair>& r_edges,
                                  const RecoveryOptions& options = {});

struct RoundtripOptions {
  std::uint32_t p = 3;
  std::size_t auxiliary_naturals = kRequiredPartners;  // Down fragments only
  RecoveryOptions recovery;
};

struct RoundtripResult {
  Pipeline pipeline = Pipeline::Up;
  NaturalGraph input;
  std::set<Natural> auxiliary;
  std::size_t fragment_vertices = 0;
  std::size_t fragment_edges = 0;
  bool fragment_nice = false;
  RecoveredGraph recovered;
  // Recovered classes are exactly input + auxiliary naturals, the edges on the
  // input naturals are the input edges, and auxiliaries are isolated.
  bool identical = false;
};

// The fragment for a pipeline: fully gadgeted on the input naturals, plus
// the auxiliary naturals for Down.
std::set<Natural> fragment_naturals(const NaturalGraph& g, Pipeline pipeline, std::size_t auxiliary,
                                    std::set<Natural>* added = nullptr);

RoundtripResult roundtrip(const NaturalGraph& g, Pipeline pipeline, const RoundtripOptions& options = {});

// Fragment statistics, adequacy and per-edge traces.
void append_roundtrip_section(Report& report, const GroupContext& ctx, const RoundtripResult& result);

std::string to_string(const NaturalGraph& g);

}  // namespace mekler

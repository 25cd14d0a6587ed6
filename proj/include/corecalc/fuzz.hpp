#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "corecalc/generators.hpp"

/**
 * Randomized executable-theorem campaigns. Each campaign generates `count`
 * seeded instances, asserts the unconditional containment on every one, and
 * asserts equality whenever the qualification hypothesis holds. Campaign
 * names are stable identifiers used in summaries and counterexample files.
 */

namespace corecalc {

struct CampaignStats {
  std::string name;
  int instances = 0;
  int qc_true = 0;         ///< instances whose qualification hypothesis held
  int equal_under_qc = 0;  ///< of those, how many met the conclusion — must match qc_true
  int violations = 0;      ///< any failed containment, equality, or agreement
  double seconds = 0;      ///< wall-clock time spent in this campaign
};

struct FuzzOutcome {
  std::vector<CampaignStats> campaigns;
  int total_violations = 0;
  std::vector<std::string> counterexample_files;
};

/**
 * Runs every campaign. `dim` (clamped to [1,4]) sets the ambient dimension
 * for set campaigns; map and marginal campaigns use block dimensions of at
 * most two. Violations write a minimized instance file under out_dir and are
 * counted, never thrown. Deterministic for fixed (dim, count, seed, cfg).
 */
FuzzOutcome run_campaigns(Index dim, int count, std::uint64_t seed, const GenConfig& cfg,
                          const std::string& out_dir);

/**
 * Greedy constraint-dropping minimizer: repeatedly removes rows while
 * `still_failing` stays true. Exposed for direct testing.
 */
Polyhedron shrink_while(const Polyhedron& p,
                        const std::function<bool(const Polyhedron&)>& still_failing);

/** Render the per-campaign table as aligned text (one line per campaign). */
std::string stats_table(const FuzzOutcome& out);

}  // namespace corecalc

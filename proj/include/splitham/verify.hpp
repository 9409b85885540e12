#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "splitham/cover_build.hpp"
#include "splitham/generate.hpp"
#include "splitham/graph.hpp"
#include "splitham/hamilton.hpp"

namespace splitham {

enum class Verdict { Verified, HypothesisUnmet, Counterexample, Inconclusive };

std::string verdict_name(Verdict v);

struct Hypotheses {
    bool split = false;
    bool k_connected = false;
    bool star_free = false;         // no induced K_{1,r+1}
    bool star_plus_e_free = false;  // no induced K_{1,r+1}+e
    bool min_order = false;

    bool all() const { return split && k_connected && star_free && star_plus_e_free && min_order; }
    bool all_but_order() const { return split && k_connected && star_free && star_plus_e_free; }
};

struct PairOutcomes {
    int pairs = 0;
    int constructed = 0;
    int certified = 0;
    int oracle_checked = 0;
    bool oracle_agreed = true;
};

struct VerificationReport {
    std::string graph6;
    int n = 0;
    int r = 3;
    Hypotheses hypotheses;
    PairOutcomes pipeline;
    Verdict verdict = Verdict::Inconclusive;
    std::string note;
    std::optional<SplitPartition> partition;       // sorted index arrays, when split
    nlohmann::json witnesses;                      // freeness diagnostics, when violated
    std::optional<HamiltonOracleReport> findings;  // below-threshold oracle exploration
    double total_ms = 0.0;

    nlohmann::json to_json() const;  // "timings" carries every nondeterministic field
};

struct VerifyOptions {
    int r = 3;
    int oracle_cap = kDefaultOracleCap;
    double oracle_rate_small = 1.0;  // pair fraction cross-checked when n <= threshold
    double oracle_rate_large = 0.05;
    int oracle_small_threshold = 14;
    std::uint64_t budget = kDefaultSearchBudget;
    std::uint64_t sample_seed = 0x5eed;
    bool record_below_threshold = true;
};

// Hypothesis checks for the r-parameterized statement: split, r-connected,
// {K_{1,r+1}, K_{1,r+1}+e}-free, order >= min_order.
Hypotheses check_hypotheses(const Graph& g, int r, int min_order);

// Full statement at r = 3 with minimum order 2r+7: every vertex pair gets an
// avoiding I-cover, a Hamiltonian path, and a certificate check; a fraction of
// pairs is additionally confirmed by the exact oracle.  For r > 3 the
// constructive machinery is unproven, so only the oracle runs.  Hypothesis
// failures yield HYPOTHESIS_UNMET, never an error.
VerificationReport verify_theorem(const Graph& g, const VerifyOptions& opts);

// I-cover existence only (hypothesis floor: order >= 9).
VerificationReport verify_icover_lemma(const Graph& g, const VerifyOptions& opts);

// I-cover + length bounding; all path lengths must be even in [2,6]
// (hypothesis floor: order >= 11).
VerificationReport verify_length_lemma(const Graph& g, const VerifyOptions& opts);

enum class CampaignCheck { Theorem, ICover, Lengths };

struct CampaignOptions {
    GenSpec spec;
    CampaignCheck check = CampaignCheck::Theorem;
    VerifyOptions verify;
    int jobs = 0;  // 0 = hardware concurrency
    bool pushdown_filters = true;  // exhaustive mode: skip rows/columns that
                                   // cannot satisfy the degree consequences of
                                   // the connectivity and freeness hypotheses
    std::vector<std::string> input_graph6;  // when non-empty, verify these instead
};

struct CampaignSummary {
    std::uint64_t total = 0;
    std::uint64_t verified = 0;
    std::uint64_t hypothesis_unmet = 0;
    std::uint64_t counterexample = 0;
    std::uint64_t inconclusive = 0;
    double elapsed_ms = 0.0;

    int exit_code() const;
    nlohmann::json to_json(const std::string& check_name) const;
};

std::string campaign_check_name(CampaignCheck c);

// Streams graphs from the generation spec (or the explicit list), verifies each on a
// worker pool, and writes one JSON report line per graph in generation order.
// Identical options (seed included) give byte-identical report lines except
// for the "timings" object.
CampaignSummary campaign(const CampaignOptions& opts, std::ostream* report_lines);

}  // namespace splitham

#include <regex>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "splitham/generate.hpp"
#include "splitham/verify.hpp"

using namespace splitham;

namespace {

std::string strip_timings(const std::string& report) {
    // Reports are JSON lines; drop the "timings" object from each.
    std::istringstream in(report);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        auto j = nlohmann::json::parse(line);
        j.erase("timings");
        out << j.dump() << '\n';
    }
    return out.str();
}

}  // namespace

TEST_CASE("verify_theorem on the qualifying family fixture") {
    Graph g = gen_family_complete_split(10, 3);
    VerifyOptions opts;
    VerificationReport rep = verify_theorem(g, opts);
    CHECK(rep.verdict == Verdict::Verified);
    CHECK(rep.hypotheses.all());
    CHECK(rep.pipeline.pairs == 78);
    CHECK(rep.pipeline.constructed == 78);
    CHECK(rep.pipeline.certified == 78);
    CHECK(rep.pipeline.oracle_checked == 78);  // n = 13 <= full-oracle threshold
    CHECK(rep.pipeline.oracle_agreed);
}

TEST_CASE("hypothesis failures are verdicts, not errors") {
    Graph claw(4);
    for (int v = 1; v <= 3; ++v) claw.add_edge(0, v);
    VerifyOptions opts;
    VerificationReport rep = verify_theorem(claw, opts);
    CHECK(rep.verdict == Verdict::HypothesisUnmet);
    CHECK(rep.hypotheses.split);
    CHECK(!rep.hypotheses.k_connected);
    CHECK(!rep.hypotheses.min_order);

    Graph c4(4);
    for (int v = 0; v < 4; ++v) c4.add_edge(v, (v + 1) % 4);
    rep = verify_theorem(c4, opts);
    CHECK(rep.verdict == Verdict::HypothesisUnmet);
    CHECK(!rep.hypotheses.split);
}

TEST_CASE("below-threshold qualifying graphs get oracle findings") {
    Graph g = gen_family_complete_split(6, 3);  // n = 9: all hypotheses except order
    VerifyOptions opts;
    VerificationReport rep = verify_theorem(g, opts);
    CHECK(rep.verdict == Verdict::HypothesisUnmet);
    CHECK(rep.hypotheses.all_but_order());
    CHECK(!rep.hypotheses.min_order);
    REQUIRE(rep.findings.has_value());
    CHECK(rep.findings->connected);  // this family is Hamilton-connected already
}

TEST_CASE("report JSON carries the schema and verdict") {
    Graph g = gen_family_complete_split(10, 3);
    VerifyOptions opts;
    auto j = verify_theorem(g, opts).to_json();
    CHECK(j["schema"] == "v1");
    CHECK(j["verdict"] == "VERIFIED");
    CHECK(j["n"] == 13);
    CHECK(j["hypotheses"]["split"] == true);
    CHECK(j["pipeline"]["pairs"] == 78);
    CHECK(j.contains("timings"));
}

TEST_CASE("reports carry the partition and freeness witnesses") {
    VerifyOptions opts;
    auto j = verify_theorem(parse_graph6("D?{"), opts).to_json();  // K_{1,4}
    CHECK(j["partition"]["S"] == std::vector<int>{0, 4});
    CHECK(j["partition"]["I"] == std::vector<int>{1, 2, 3});
    CHECK(j["witnesses"]["star"] == std::vector<int>{4, 0, 1, 2, 3});

    auto ok = verify_theorem(gen_family_complete_split(10, 3), opts).to_json();
    CHECK(ok.contains("partition"));
    CHECK(!ok.contains("witnesses"));  // nothing to report on a free graph

    Graph c4(4);
    for (int v = 0; v < 4; ++v) c4.add_edge(v, (v + 1) % 4);
    CHECK(!verify_theorem(c4, opts).to_json().contains("partition"));
}

TEST_CASE("lemma checks at their own order thresholds") {
    VerifyOptions opts;
    Graph g9 = gen_family_complete_split(6, 3);  // n = 9
    CHECK(verify_icover_lemma(g9, opts).verdict == Verdict::Verified);
    CHECK(verify_length_lemma(g9, opts).verdict == Verdict::HypothesisUnmet);  // needs n >= 11
    Graph g11 = gen_family_complete_split(8, 3);  // n = 11
    CHECK(verify_length_lemma(g11, opts).verdict == Verdict::Verified);
}

TEST_CASE("campaign over random graphs: determinism and accounting") {
    CampaignOptions opts;
    opts.spec.mode = GenMode::Random;
    opts.spec.n_min = 13;
    opts.spec.n_max = 14;
    opts.spec.s_min = 10;
    opts.spec.s_max = 12;
    opts.spec.edge_probability = 0.85;
    opts.spec.seed = 99;
    opts.spec.count = 60;
    opts.jobs = 2;

    std::ostringstream r1, r2;
    CampaignSummary s1 = campaign(opts, &r1);
    CampaignSummary s2 = campaign(opts, &r2);
    CHECK(s1.total == 60);
    CHECK(s2.total == s1.total);
    CHECK(s2.verified == s1.verified);
    CHECK(s1.total == s1.verified + s1.hypothesis_unmet + s1.counterexample + s1.inconclusive);
    CHECK(s1.counterexample == 0);
    CHECK(s1.inconclusive == 0);
    CHECK(s1.verified > 0);
    CHECK(strip_timings(r1.str()) == strip_timings(r2.str()));
    CHECK(s1.exit_code() == 0);

    std::string raw = r1.str();
    CHECK(std::count(raw.begin(), raw.end(), '\n') == 60);
}

TEST_CASE("report bytes do not depend on the worker count") {
    CampaignOptions opts;
    opts.spec.mode = GenMode::Random;
    opts.spec.n_min = 13;
    opts.spec.n_max = 14;
    opts.spec.s_min = 10;
    opts.spec.s_max = 12;
    opts.spec.edge_probability = 0.9;
    opts.spec.seed = 321;
    opts.spec.count = 30;
    std::ostringstream serial, parallel;
    opts.jobs = 1;
    campaign(opts, &serial);
    opts.jobs = 2;
    campaign(opts, &parallel);
    CHECK(strip_timings(serial.str()) == strip_timings(parallel.str()));
}

TEST_CASE("campaign over explicit graph6 input and exit codes") {
    CampaignOptions opts;
    opts.input_graph6 = {to_graph6(gen_family_complete_split(10, 3))};
    std::ostringstream out;
    CampaignSummary s = campaign(opts, &out);
    CHECK(s.total == 1);
    CHECK(s.verified == 1);
    CHECK(s.exit_code() == 0);

    CampaignOptions unmet;
    unmet.input_graph6 = {"Cs"};  // K_{1,3}
    CampaignSummary s2 = campaign(unmet, nullptr);
    CHECK(s2.hypothesis_unmet == 1);
    CHECK(s2.exit_code() == 3);
}

TEST_CASE("exhaustive icover campaign at n = 9 stays clean") {
    CampaignOptions opts;
    opts.spec.mode = GenMode::Exhaustive;
    opts.spec.n_min = 9;
    opts.spec.n_max = 9;
    opts.check = CampaignCheck::ICover;
    opts.jobs = 2;
    CampaignSummary s = campaign(opts, nullptr);
    CHECK(s.counterexample == 0);
    CHECK(s.inconclusive == 0);
    CHECK(s.verified > 100);
}

TEST_CASE("complete graphs run the whole pipeline with an empty cover") {
    // |I| = 0 short-circuits every cover stage; threading still has to produce
    // certificates for all 78 pairs.
    Graph k13 = gen_family_complete_split(13, 0);
    VerifyOptions opts;
    VerificationReport rep = verify_theorem(k13, opts);
    CHECK(rep.verdict == Verdict::Verified);
    CHECK(rep.pipeline.certified == 78);
}

TEST_CASE("exhausted search budgets surface as INCONCLUSIVE") {
    Graph g = gen_family_complete_split(10, 3);
    VerifyOptions opts;
    opts.budget = 1;
    VerificationReport rep = verify_theorem(g, opts);
    CHECK(rep.verdict == Verdict::Inconclusive);
    CHECK(!rep.note.empty());
}

TEST_CASE("oracle-only mode for r = 4") {
    // K15 is a 4-connected {K15-star}-free split graph of order 2*4+7.
    Graph k15 = gen_family_complete_split(15, 0);
    VerifyOptions opts;
    opts.r = 4;
    VerificationReport rep = verify_theorem(k15, opts);
    CHECK(rep.verdict == Verdict::Verified);
    CHECK(rep.pipeline.constructed == 0);  // constructive pipeline disabled
    CHECK(rep.pipeline.oracle_checked == rep.pipeline.pairs);
}

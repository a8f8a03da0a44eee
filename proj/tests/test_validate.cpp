#include <gtest/gtest.h>

#include <smcv/families.hpp>
#include <smcv/validate.hpp>

#include "oracles.hpp"

using namespace smcv;

TEST(DiameterCharacterization, Examples) {
    for (const Digraph& d : {complete_digraph(4), cycle(5), cycle(3)}) {
        const auto v = check_diameter_characterization(d);
        EXPECT_EQ(v.outcome, Outcome::holds) << describe(d);
        EXPECT_TRUE(v.hypothesis_satisfied);
    }
    EXPECT_EQ(check_diameter_characterization(complete_digraph(4)).details.at("smc_v"), "4");
    EXPECT_EQ(oracle::smcv(cycle(5)), 1);
    EXPECT_EQ(check_diameter_characterization(cycle(5)).details.at("smc_v"), "1");
}

TEST(DiameterUpperBound, Examples) {
    const auto f6 = check_diameter_upper_bound(figure1_family(6));
    EXPECT_EQ(f6.outcome, Outcome::holds);
    EXPECT_EQ(f6.details.at("bound"), "5");
    EXPECT_EQ(f6.counters, std::vector<std::string>{"tight"});
    const auto c4 = check_diameter_upper_bound(cycle(4));
    EXPECT_EQ(c4.outcome, Outcome::holds);
    EXPECT_EQ(c4.details.at("bound"), "3");
    EXPECT_EQ(check_diameter_upper_bound(complete_digraph(3)).outcome, Outcome::vacuous);
}

TEST(LowerBound, Examples) {
    const auto f6 = check_lower_bound(figure1_family(6));
    EXPECT_EQ(f6.outcome, Outcome::holds);
    EXPECT_EQ(f6.details.at("bound"), "4");
    EXPECT_TRUE(f6.counters.empty());
    for (int n = 2; n <= 5; ++n) {
        const auto k = check_lower_bound(complete_digraph(n));
        EXPECT_EQ(k.outcome, Outcome::holds);
        EXPECT_EQ(k.details.at("bound"), std::to_string(n));
    }
}

TEST(EllBound, Examples) {
    const auto c5 = check_ell_bound(cycle(5));
    EXPECT_TRUE(c5.hypothesis_satisfied);
    EXPECT_EQ(c5.outcome, Outcome::holds);
    EXPECT_EQ(c5.details.at("ell"), "5");
    EXPECT_EQ(check_ell_bound(complete_digraph(3)).outcome, Outcome::vacuous);
    EXPECT_FALSE(check_ell_bound(complete_digraph(3)).hypothesis_satisfied);
}

TEST(Corollary, CompleteDigraphIsObservedNotFailed) {
    InstanceAnalysis a(complete_digraph(4));
    const auto v = check_corollary(a);
    EXPECT_EQ(v.details.at("mode"), "observe");
    EXPECT_TRUE(v.observed_violation);
    EXPECT_NE(v.outcome, Outcome::fails);
    InstanceAnalysis c5(cycle(5));
    const auto w = check_corollary(c5);
    EXPECT_EQ(w.details.at("mode"), "assert");
    EXPECT_EQ(w.outcome, Outcome::holds);
}

TEST(DStar, Examples) {
    const auto c5 = check_dstar(cycle(5), VertexColoring::uniform(5));
    EXPECT_EQ(c5.details.at("item_iii.hypothesis"), "yes");
    EXPECT_EQ(c5.details.at("item_iii.holds"), "yes");
    EXPECT_EQ(c5.outcome, Outcome::holds);
    const auto k = check_dstar(complete_digraph(4), VertexColoring::distinct(4));
    EXPECT_EQ(k.details.at("dstar"), "empty");
    EXPECT_EQ(k.outcome, Outcome::vacuous);
    EXPECT_THROW(check_dstar(cycle(4), VertexColoring::distinct(4)), std::invalid_argument);
}

TEST(LineDigraphTheorem, Examples) {
    const auto c4 = check_line_digraph_theorem(cycle(4));
    EXPECT_EQ(c4.outcome, Outcome::holds);
    EXPECT_EQ(c4.details.at("smc"), "1");
    EXPECT_EQ(c4.details.at("smc_formula"), "1");
    const auto c3 = check_line_digraph_theorem(cycle(3));
    EXPECT_EQ(c3.outcome, Outcome::vacuous);
    EXPECT_EQ(c3.details.at("smc_v_line"), "3");
    EXPECT_EQ(c3.details.at("smc"), "1");
    EXPECT_EQ(c3.details.at("exception_confirmed"), "yes");
}

TEST(BadPairLemma, Examples) {
    EXPECT_EQ(check_bad_pair_lemma(cycle(4)).outcome, Outcome::holds);
    EXPECT_EQ(check_bad_pair_lemma(cycle(4)).details.at("induced_is_smc"), "yes");
    const auto c3 = check_bad_pair_lemma(cycle(3));
    EXPECT_EQ(c3.outcome, Outcome::vacuous);
    EXPECT_FALSE(c3.hypothesis_satisfied);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const Digraph d = random_strong_oriented(4, rng.between(4, 6), rng);
        EXPECT_EQ(check_bad_pair_lemma(d).outcome, Outcome::holds) << describe(d);
    }
}

TEST(TournamentTheorem, SmallTournamentsAreVacuous) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto v = check_tournament_theorem(random_strong_tournament(6, seed));
        EXPECT_EQ(v.outcome, Outcome::vacuous);
    }
    EXPECT_THROW(check_tournament_theorem(cycle(4)), std::invalid_argument);
}

TEST(Validator, ExhaustiveFourVertexCorpusHasNoFailures) {
    const auto summary = run_corpus(parse_corpus_spec("strong-digraphs:n=4"));
    EXPECT_EQ(summary.instances, oracle::count_strong_digraphs(4));
    EXPECT_TRUE(summary.passed());
    EXPECT_EQ(summary.certificates_failed, 0);
    // line-digraph checks need smc_v of an m-vertex digraph: m >= 10 exceeds the default guard
    int large = 0;
    for (const Digraph& d : materialize(parse_corpus_spec("strong-digraphs:n=4")))
        if (d.size() >= 10) ++large;
    for (const auto& [id, t] : summary.tallies) {
        EXPECT_EQ(t.fail, 0) << id;
        const bool line_based = id == "line_digraph" || id == "bad_pair_lemma";
        EXPECT_EQ(t.skipped, line_based ? large : 0) << id;
        EXPECT_EQ(t.instances, t.pass + t.fail + t.vacuous + t.skipped) << id;
    }
    // complete digraph K4 breaks the corollary outside girth >= 4
    EXPECT_GT(summary.tallies.at("corollary").observed_violations, 0);
}

TEST(Validator, GuardedInstancesAreSkipped) {
    const auto v = check_diameter_characterization(cycle(10));
    EXPECT_EQ(v.outcome, Outcome::skipped);
    EXPECT_EQ(v.details.at("skipped_guard"), "smcv_max_order");
}

TEST(CorpusSpecParsing, Examples) {
    const auto s = parse_corpus_spec("random-strong:n=5,count=7,seed=3,max-m=9");
    EXPECT_EQ(s.kind, "random-strong");
    EXPECT_EQ(s.n, 5);
    EXPECT_EQ(s.count, 7);
    EXPECT_EQ(s.seed, 3u);
    EXPECT_EQ(s.max_m, 9);
    EXPECT_TRUE(parse_corpus_spec("strong-oriented:n=4").oriented_only);
    EXPECT_THROW(parse_corpus_spec("bogus:n=3"), CorpusError);
    EXPECT_THROW(parse_corpus_spec("cycle:count=3"), CorpusError);
    EXPECT_THROW(parse_corpus_spec("cycle:n=x"), CorpusError);
    EXPECT_THROW(parse_corpus_spec("cycle:n=3,wat=1"), CorpusError);
}

TEST(CorpusSpecParsing, MaterializeFilters) {
    for (const Digraph& d : materialize(parse_corpus_spec("strong-digraphs:n=4,max-m=6,oriented=1"))) {
        EXPECT_LE(d.size(), 6);
        EXPECT_TRUE(is_oriented(d));
    }
    const auto girth5 = materialize(parse_corpus_spec("strong-digraphs:n=5,min-girth=5"));
    EXPECT_EQ(girth5.size(), 24u);  // the 4! labeled Hamiltonian 5-cycles
    const auto random = materialize(parse_corpus_spec("random-oriented:n=5,count=10,max-m=8"));
    EXPECT_EQ(random.size(), 10u);
    for (const Digraph& d : random) EXPECT_LE(d.size(), 8);
    EXPECT_EQ(random, materialize(parse_corpus_spec("random-oriented:n=5,count=10,max-m=8")));
}

#include <gtest/gtest.h>

#include <numeric>

#include <smcv/families.hpp>
#include <smcv/solvers.hpp>

#include "oracles.hpp"

using namespace smcv;

namespace {

Digraph c4_with_chord() { return Digraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }

}  // namespace

TEST(SmcvExact, Examples) {
    EXPECT_EQ(smcv_exact(cycle(3)).value, 3);
    EXPECT_EQ(smcv_exact(complete_digraph(4)).value, 4);
    EXPECT_EQ(oracle::smcv(cycle(4)), 1);
    EXPECT_EQ(smcv_exact(cycle(4)).value, 1);
    EXPECT_EQ(smcv_exact(figure1_family(6)).value, 5);
}

TEST(SmcvExact, Errors) {
    EXPECT_THROW(smcv_exact(Digraph::build(2, {{0, 1}})), NotStrongError);
    EXPECT_THROW(smcv_exact(cycle(10)), GuardExceeded);
    SolverLimits lifted;
    lifted.smcv_max_order = 10;
    EXPECT_EQ(smcv_exact(cycle(10), lifted).value, 1);
}

TEST(SmcvExact, AgreesWithBruteForceExhaustively) {
    for (int n = 1; n <= 4; ++n) {
        enumerate_strong_digraphs(n, [&](const Digraph& d) {
            const Certificate bounded = smcv_exact(d);
            const Certificate full = smcv_exact(d, {}, SearchRange::full);
            const int expected = oracle::smcv(d);
            ASSERT_EQ(bounded.value, expected);
            ASSERT_EQ(full.value, expected);
            ASSERT_EQ(bounded.vertex_coloring(), full.vertex_coloring());
            ASSERT_TRUE(recheck(d, bounded));
        });
    }
}

TEST(SmcvExact, AgreesWithBruteForceSampledFive) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        const Digraph d = random_strong_digraph(5, rng.between(5, 20), rng);
        EXPECT_EQ(smcv_exact(d).value, oracle::smcv(d));
    }
}

TEST(SmcvExact, InvariantUnderRelabeling) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        const int n = rng.between(3, 7);
        const Digraph d = random_strong_digraph(n, rng.between(n, n * (n - 1)), rng);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        EXPECT_EQ(smcv_exact(d).value, smcv_exact(oracle::relabel(d, perm)).value);
    }
}

TEST(OmegaVExact, Examples) {
    EXPECT_EQ(omega_v_exact(complete_digraph(5)).value, 1);
    const Certificate f6 = omega_v_exact(figure1_family(6));
    EXPECT_EQ(f6.value, 3);
    EXPECT_TRUE(recheck(figure1_family(6), f6));
    EXPECT_EQ(oracle::omega_v(cycle(5)), 5);
    EXPECT_EQ(omega_v_exact(cycle(5)).value, 5);
}

TEST(OmegaVExact, AgreesWithBruteForce) {
    for (int n = 1; n <= 4; ++n)
        enumerate_strong_digraphs(n, [&](const Digraph& d) {
            const Certificate c = omega_v_exact(d);
            ASSERT_EQ(c.value, oracle::omega_v(d));
            ASSERT_TRUE(recheck(d, c));
        });
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed);
        const int n = rng.between(5, 8);
        const Digraph d = random_strong_digraph(n, rng.between(n, 2 * n + 4), rng);
        EXPECT_EQ(omega_v_exact(d).value, oracle::omega_v(d));
    }
}

TEST(OmegaExact, Examples) {
    for (int n = 2; n <= 7; ++n) EXPECT_EQ(omega_exact(cycle(n)).value, n);
    EXPECT_EQ(oracle::omega(complete_digraph(3)), 3);
    const Certificate k3 = omega_exact(complete_digraph(3));
    EXPECT_EQ(k3.value, 3);
    EXPECT_TRUE(recheck(complete_digraph(3), k3));
    const Certificate t = omega_exact(random_strong_tournament(7, 3));
    EXPECT_EQ(t.kind, CertificateKind::hamiltonian_cycle);
    EXPECT_EQ(t.value, 7);
}

TEST(OmegaExact, AgreesWithBruteForce) {
    for (int n = 1; n <= 4; ++n)
        enumerate_strong_digraphs(n, [&](const Digraph& d) {
            const Certificate c = omega_exact(d);
            ASSERT_EQ(c.value, oracle::omega(d));
            ASSERT_TRUE(recheck(d, c));
            if (n >= 2) ASSERT_GE(c.value, n);
        });
}

TEST(OmegaExact, TournamentsUseNArcs) {
    enumerate_strong_tournaments(5, [&](const Digraph& t) { ASSERT_EQ(oracle::omega(t), 5); });
    EXPECT_THROW(omega_exact(complete_digraph(6)), GuardExceeded);  // 30 arcs
}

TEST(HamiltonianCycle, Examples) {
    EXPECT_EQ(hamiltonian_cycle(cycle(3)).vertices, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(hamiltonian_cycle(long_path_tournament(8)).vertices, (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7}));
    // transitive tournament
    std::vector<Arc> arcs;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) arcs.push_back({u, v});
    EXPECT_THROW(hamiltonian_cycle(Digraph::build(4, arcs)), NotStrongError);
    EXPECT_THROW(hamiltonian_cycle(cycle(4)), std::invalid_argument);
}

TEST(HamiltonianCycle, EveryStrongTournamentUpToSix) {
    for (int n = 3; n <= 6; ++n)
        enumerate_strong_tournaments(n, [&](const Digraph& t) {
            const Cycle c = hamiltonian_cycle(t);
            ASSERT_TRUE(is_hamiltonian_cycle(t, c));
            ASSERT_EQ(c.vertices.front(), 0);
        });
}

// U8's only Hamiltonian cycle is 0..7: brute-force over Hamiltonian paths from 0.
TEST(HamiltonianCycle, LongPathTournamentCycleIsUnique) {
    const Digraph u8 = long_path_tournament(8);
    int cycles = 0;
    for (int last = 1; last < 8; ++last) {
        if (!u8.has_arc(last, 0)) continue;
        for (const auto& p : oracle::all_paths(u8, 0, last))
            if (p.size() == 8) ++cycles;
    }
    EXPECT_EQ(cycles, 1);
}

TEST(SmcExact, Examples) {
    EXPECT_EQ(smc_exact(cycle(3)).value, 1);
    EXPECT_EQ(smc_exact(cycle(4)).value, 1);
    EXPECT_EQ(oracle::smc(c4_with_chord()), 2);
    EXPECT_EQ(smc_exact(c4_with_chord()).value, 2);
    EXPECT_EQ(smc_by_formula(c4_with_chord()), 2);
    EXPECT_THROW(smc_exact(complete_digraph(4)), GuardExceeded);
}

TEST(SmcExact, AgreesWithBruteForce) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed);
        const int n = rng.between(2, 5);
        const Digraph d = random_strong_digraph(n, rng.between(n, std::min(n * (n - 1), 7)), rng);
        const Certificate c = smc_exact(d);
        EXPECT_EQ(c.value, oracle::smc(d));
        EXPECT_TRUE(recheck(d, c));
    }
}

TEST(SmcByFormula, Examples) {
    EXPECT_EQ(smc_by_formula(cycle(5)), 1);
    const Digraph t = random_strong_tournament(5, 11);
    EXPECT_EQ(smc_by_formula(t), 6);
    EXPECT_EQ(smc_exact(t).value, 6);
    EXPECT_THROW(smc_by_formula(complete_digraph(3)), HypothesisError);
}

TEST(SmcByFormula, MatchesExactOnOrientedFourVertexDigraphs) {
    int checked = 0;
    enumerate_strong_digraphs(4, [&](const Digraph& d) {
        if (!is_oriented(d)) return;
        ++checked;
        ASSERT_EQ(smc_exact(d).value, smc_by_formula(d));
    });
    EXPECT_GT(checked, 0);
}

TEST(Recheck, RejectsTamperedCertificates) {
    const Digraph d = figure1_family(5);
    Certificate c = smcv_exact(d);
    EXPECT_TRUE(recheck(d, c));
    c.value += 1;
    EXPECT_FALSE(recheck(d, c));
    Certificate bad{CertificateKind::optimal_vertex_coloring, 5, VertexColoring::distinct(5)};
    EXPECT_FALSE(recheck(d, bad));
    Certificate h{CertificateKind::minimal_h_subdigraph, 1, VertexSet{bit(0)}};
    EXPECT_FALSE(recheck(d, h));
    Certificate arcs{CertificateKind::minimal_spanning_arcset, 1, std::vector<Arc>{{1, 0}}};
    EXPECT_FALSE(recheck(d, arcs));
    Certificate cyc{CertificateKind::hamiltonian_cycle, 5, Cycle{{0, 1, 2, 3, 4}}};
    EXPECT_FALSE(recheck(d, cyc));
}

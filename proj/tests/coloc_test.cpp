#include <doctest.h>

#include "support.hpp"

using namespace bbh;
using test::Sim;

namespace {

const TraceEvent* move_of(const std::vector<TraceEvent>& ev, int round, int agent) {
    for (auto& e : ev)
        if (e.kind == EventKind::MOVE && e.round == round && e.agent == agent) return &e;
    return nullptr;
}

}  // namespace

TEST_CASE("leapfrog opening") {
    Sim sim(ProtocolKind::PblColoc, 8, 6, {0, 0, 0});
    NeverActive never;
    for (int r = 0; r < 3; ++r) REQUIRE(sim.step(never));
    // Round 0: the leader leaves with its pebble.
    auto* m0 = move_of(sim.events, 0, 1);
    REQUIRE(m0);
    CHECK(*m0->get("dir") == "cw");
    REQUIRE(m0->get("carry"));
    CHECK(*m0->get("carry") == "1");
    CHECK_FALSE(move_of(sim.events, 0, 2));
    // Round 1: the follower steps out empty handed.
    auto* m1 = move_of(sim.events, 1, 2);
    REQUIRE(m1);
    CHECK_FALSE(m1->get("carry"));
    // Round 2: the leader advances again.
    CHECK(move_of(sim.events, 2, 1));
    CHECK_FALSE(move_of(sim.events, 0, 3));
}

TEST_CASE("quiet runs reset every 4n+1 rounds") {
    for (ProtocolKind p : {ProtocolKind::PblColoc, ProtocolKind::WBColoc}) {
        const int n = 6, period = 4 * n + 1;
        Sim sim(p, n, 3, {0, 0, 0});
        NeverActive never;
        for (int r = 1; r <= 4 * period; ++r) {
            REQUIRE(sim.step(never));
            if (r % period != 0) continue;
            CHECK(sim.st.nodes[0].tokens() == 3);
            for (std::size_t i = 0; i < 3; ++i) {
                CHECK(sim.machine(i) == "Initial");
                CHECK(sim.st.agents[i].pos == 0);
            }
        }
    }
}

TEST_CASE("whiteboard variant keeps its pebbles as marks") {
    Sim sim(ProtocolKind::WBColoc, 7, 4, {0, 0, 0});
    CHECK(sim.st.nodes[0].pebble_marks == 3);
    CHECK(sim.st.nodes[0].pebbles == 0);
    NeverActive never;
    for (int r = 0; r < 3 * sim.period(); ++r) {
        REQUIRE(sim.step(never));
        int marks = 0;
        for (auto& s : sim.st.nodes) {
            CHECK(s.pebbles == 0);
            marks += s.pebble_marks;
        }
        CHECK(marks == 3);
    }
}

TEST_CASE("losing the follower still ends in a true claim") {
    for (ProtocolKind p : {ProtocolKind::PblColoc, ProtocolKind::WBColoc})
        for (int n = 5; n <= 9; ++n)
            for (int bh = 1; bh < n; ++bh) {
                CAPTURE(n);
                CAPTURE(bh);
                Sim sim(p, n, bh, {0, 0, 0});
                KillAgent adv(2);
                for (int r = 0; r < 20 * sim.period(); ++r) REQUIRE(sim.step(adv));
                if (sim.st.alive_count() == 3) continue;
                REQUIRE_FALSE(sim.st.claims.empty());
                for (auto& c : sim.st.claims) CHECK(c.node == bh);
            }
}

TEST_CASE("a lone survivor names the black hole within one period") {
    // Two agents are alive until the black hole is known; a survivor of two
    // deaths learns it on its own and says so before its next iteration would end.
    for (ProtocolKind p : {ProtocolKind::PblColoc, ProtocolKind::WBColoc})
        for (int n = 4; n <= 9; ++n)
            for (int bh = 1; bh < n; ++bh)
                for (std::uint64_t seed = 1; seed <= 8; ++seed) {
                    CAPTURE(n);
                    CAPTURE(bh);
                    CAPTURE(seed);
                    Sim sim(p, n, bh, {0, 0, 0});
                    SeededRandom adv(0.08 * static_cast<double>(seed), 0.5, seed);
                    int alone = -1;
                    for (int r = 0; r < 15 * sim.period(); ++r) {
                        REQUIRE(sim.step(adv));
                        REQUIRE(sim.st.alive_count() >= 1);
                        for (auto& c : sim.st.claims) CHECK(c.node == bh);
                        if (!sim.st.claims.empty()) break;
                        if (alone < 0 && sim.st.alive_count() == 1) alone = r;
                        if (alone >= 0) REQUIRE(r - alone <= sim.period());
                    }
                }
}

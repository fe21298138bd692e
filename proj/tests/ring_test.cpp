#include <doctest.h>

#include <random>

#include "bbh/ring.hpp"

using namespace bbh;

TEST_CASE("neighbor wraps around the ring") {
    CHECK(neighbor(3, Dir::CW, 5) == 4);
    CHECK(neighbor(4, Dir::CW, 5) == 0);
    CHECK(neighbor(0, Dir::CCW, 5) == 4);
}

TEST_CASE("clockwise distance") {
    CHECK(clockwise_distance(1, 4, 9) == 3);
    CHECK(clockwise_distance(4, 1, 9) == 6);
    CHECK(clockwise_distance(2, 2, 9) == 0);
}

TEST_CASE("ring arithmetic properties") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 4 + static_cast<int>(rng() % 30);
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        for (Dir d : {Dir::CW, Dir::CCW}) {
            int p = a;
            for (int i = 0; i < n; ++i) p = neighbor(p, d, n);
            CHECK(p == a);
            CHECK(neighbor(neighbor(a, d, n), opposite(d), n) == a);
        }
        int s = clockwise_distance(a, b, n) + clockwise_distance(b, a, n);
        CHECK((s == 0 || s == n));
        CHECK(advance(a, clockwise_distance(a, b, n), Dir::CW, n) == b);
    }
}

TEST_CASE("whiteboard writes") {
    NodeStore s;
    write_message(s, {WbOpKind::WriteHome, 2}, CommModel::Whiteboard);
    NodeStore want;
    want.home = 2;
    CHECK(s == want);

    NodeStore m;
    m.marking = Marking::Left;
    WbOp right{WbOpKind::WriteMarking};
    right.marking = Marking::Right;
    write_message(m, right, CommModel::Whiteboard);
    REQUIRE(m.marking.has_value());
    CHECK(*m.marking == Marking::Right);

    NodeStore v;
    v.visited = 1;
    write_message(v, {WbOpKind::WriteVisited, 3}, CommModel::Whiteboard);
    CHECK(v.visited == 3);
}

TEST_CASE("clear keeps physical pebbles") {
    NodeStore s;
    s.home = 1;
    s.pebble_marks = 2;
    s.pebbles = 1;
    write_message(s, {WbOpKind::Clear}, CommModel::Whiteboard);
    CHECK(s.whiteboard_empty());
    CHECK(s.pebbles == 1);
}

TEST_CASE("whiteboard writes are rejected in other models") {
    NodeStore s;
    CHECK_THROWS_AS(write_message(s, {WbOpKind::WriteHome, 1}, CommModel::Pebble), ModelViolation);
    CHECK_THROWS_AS(write_message(s, {WbOpKind::WriteHome, 1}, CommModel::F2F), ModelViolation);
}

TEST_CASE("configuration validation") {
    RingConfig c;
    c.n = 6;
    c.bh = 3;
    c.protocol = ProtocolKind::PblColoc;
    c.placement = placement_from_nodes({0, 0, 0});
    CHECK(validate(c).empty());
    c.n = 3;
    CHECK_FALSE(validate(c).empty());
    c.n = 6;
    c.placement = placement_from_nodes({0, 0, 3});
    CHECK_FALSE(validate(c).empty());
    c.protocol = ProtocolKind::WBScat;
    c.placement = placement_from_nodes({0, 0, 2});
    CHECK(validate(c).empty());
    c.placement = placement_from_nodes({1, 1, 1});
    CHECK_FALSE(validate(c).empty());
}

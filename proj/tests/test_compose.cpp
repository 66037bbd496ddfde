#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skolem/builders.hpp"
#include "skolem/compose.hpp"

using namespace skolem;

TEST_CASE("shell layout") {
    SlotSequence s = shell(12, 7);
    CHECK(s.str() == "12,10,8,6,11,9,7,0,0,6,8,10,12,7,9,11");
    CHECK(s.length() == 16);
    CHECK(s.hole_positions() == std::vector<int>{8, 9});
    CHECK(shell_hole_count(12, 7) == 2);

    // The open span sits centrally; both copies of each value are placed.
    SlotSequence wide = shell(24, 15);
    CHECK(shell_hole_count(24, 15) == 2);
    CHECK(wide.hole_positions() == std::vector<int>{16, 17});
    PairSet p = pairs(wide);
    REQUIRE(p.size() == 15);
    for (const auto& [v, pos] : p) {
        CHECK(v >= 10);
        CHECK(pos.second - pos.first == v);
    }
}

TEST_CASE("shell feasibility") {
    CHECK(shell_feasible(12, 7));
    CHECK(shell_feasible(4, 3));
    CHECK_FALSE(shell_feasible(12, 8));  // even order: the parity runs collide
    CHECK_FALSE(shell_feasible(12, 1));  // single run: palindromic, no scaffold
    CHECK_FALSE(shell_feasible(12, 9));  // open span would be negative
    CHECK_FALSE(shell_feasible(4, 4));
    CHECK_FALSE(shell_feasible(5, 0));
    CHECK_THROWS_AS(shell(4, 4), Error);
    try {
        shell(4, 4);
    } catch (const Error& e) {
        CHECK(e.kind() == Errc::InfeasibleShell);
    }
}

TEST_CASE("shell shares nothing with its reverse") {
    for (int n : {12, 16, 20, 24})
        for (int t = 1; t <= n; ++t) {
            if (!shell_feasible(n, t)) continue;
            SlotSequence s = shell(n, t);
            CHECK(common_pairs(s, reverse(s)).count == 0);
        }
}

TEST_CASE("segment text round trip") {
    for (const char* line : {"lit 5,2,4", "holes 2", "shell 12 7", "put 9 @ 1,10"}) {
        Segment seg = Segment::parse(line);
        CHECK(seg.str() == line);
    }
    CHECK(Segment::parse("lit 5, 2 ,4").str() == "lit 5,2,4");

    CHECK_THROWS_AS(Segment::parse("spin 3"), Error);
    CHECK_THROWS_AS(Segment::parse("holes 0"), Error);
    CHECK_THROWS_AS(Segment::parse("put 9 1,10"), Error);
    CHECK_THROWS_AS(Segment::parse("put 9 @ 1"), Error);
    try {
        Segment::parse("spin 3");
    } catch (const Error& e) {
        CHECK(e.kind() == Errc::BadArgument);
    }
}

TEST_CASE("plan text skips comments and blanks") {
    CompositionPlan plan = CompositionPlan::parse(
        "# build the large end first\n"
        "shell 12 7\n"
        "\n"
        "lit 5,2,4,2,3,5,4,3\n"
        "put 1 @ 8,9\n");
    REQUIRE(plan.segments.size() == 3);
    CHECK(plan.str() == "shell 12 7\nlit 5,2,4,2,3,5,4,3\nput 1 @ 8,9\n");

    CHECK_THROWS_AS(CompositionPlan::parse("# nothing\n\n"), Error);
}

TEST_CASE("assemble fills a shell into a full arrangement") {
    CompositionPlan plan = CompositionPlan::parse(
        "shell 12 7\n"
        "lit 5,2,4,2,3,5,4,3\n"
        "put 1 @ 8,9\n");
    SlotSequence s = assemble(plan, SequenceSpec::skolem(12));
    CHECK(s == SlotSequence({12, 10, 8, 6, 11, 9, 7, 1, 1, 6, 8, 10, 12, 7, 9, 11,
                             5, 2, 4, 2, 3, 5, 4, 3}));
}

TEST_CASE("assemble supports scattered puts around a shifted shell") {
    CompositionPlan plan = CompositionPlan::parse(
        "holes 1\n"
        "shell 16 7\n"
        "holes 1\n"
        "lit 5,6,7,3,4,5,3,6,4,7\n"
        "put 9 @ 1,10\n"
        "put 2 @ 9,11\n"
        "put 1 @ 12,13\n"
        "put 8 @ 14,22\n");
    SlotSequence s = assemble(plan, SequenceSpec::skolem(16));
    CHECK(s == SlotSequence({9, 16, 14, 12, 10, 15, 13, 11, 2, 9, 2, 1, 1, 8, 10, 12,
                             14, 16, 11, 13, 15, 8, 5, 6, 7, 3, 4, 5, 3, 6, 4, 7}));
}

TEST_CASE("assemble rejects bad plans") {
    // Put lands on a claimed slot.
    CompositionPlan overlap = CompositionPlan::parse("lit 1,1\nput 1 @ 1,2\n");
    CHECK_THROWS_AS(assemble(overlap, SequenceSpec::skolem(1)), Error);
    try {
        assemble(overlap, SequenceSpec::skolem(1));
    } catch (const Error& e) {
        CHECK(e.kind() == Errc::OverlapError);
    }

    // Put gap contradicts the value.
    CompositionPlan gap = CompositionPlan::parse("put 3 @ 1,5\n");
    CHECK_THROWS_AS(assemble(gap, SequenceSpec::skolem(1)), Error);
    try {
        assemble(gap, SequenceSpec::skolem(1));
    } catch (const Error& e) {
        CHECK(e.kind() == Errc::BadArgument);
    }

    // Assembles cleanly but leaves open slots, so the target family rejects it.
    CompositionPlan open = CompositionPlan::parse("lit 2,3,2,4,3,0,0,4\n");
    CHECK_THROWS_AS(assemble(open, SequenceSpec::skolem(4)), Error);
    try {
        assemble(open, SequenceSpec::skolem(4));
    } catch (const Error& e) {
        CHECK(e.kind() == Errc::ValidationFailed);
    }
}

TEST_CASE("concat and adjoin require disjoint differences") {
    SlotSequence small({1, 1, 4, 2, 3, 2, 4, 3});
    SlotSequence big = interval_langford(5);
    SlotSequence joined = adjoin(small, big);
    CHECK(joined.length() == small.length() + big.length());
    CHECK(pairs(joined).size() == 13);

    CHECK_THROWS_AS(adjoin(small, small), Error);
    try {
        adjoin(small, small);
    } catch (const Error& e) {
        CHECK(e.kind() == Errc::OverlapError);
    }

    SlotSequence holey({1, 1, 2, 0, 2});
    CHECK_THROWS_AS(adjoin(holey, big), Error);
    try {
        adjoin(holey, big);
    } catch (const Error& e) {
        CHECK(e.kind() == Errc::BadArgument);
    }

    // concat passes holes through untouched.
    SlotSequence c = concat(holey, big);
    CHECK(c.length() == holey.length() + big.length());
    CHECK(c.hole_positions() == std::vector<int>{4});
}

TEST_CASE("adjoin adds shared pair counts") {
    SlotSequence f1({1, 1, 4, 2, 3, 2, 4, 3});
    SlotSequence f2({2, 3, 2, 4, 3, 1, 1, 4});
    SlotSequence b1 = interval_langford(5);
    SlotSequence b2 = interval_langford_variant(5);

    int front_common = common_pairs(f1, f2).count;
    int back_common = common_pairs(b1, b2).count;
    CHECK(common_pairs(adjoin(f1, b1), adjoin(f2, b2)).count == front_common + back_common);
    CHECK(common_pairs(adjoin(f1, b1), adjoin(f1, b1)).count == 4 + 9);
}

TEST_CASE("hooked parts interlock into one arrangement") {
    SlotSequence front({1, 1, 2, 0, 2});
    SlotSequence back = reverse(build_hooked_langford_any(3, 6));
    REQUIRE(back.hole_positions() == std::vector<int>{2});

    SlotSequence s = adjoin_hooked(front, back);
    CHECK(s.length() == front.length() + back.length() - 2);
    CHECK(s.hole_positions().empty());
    CHECK(validate(s, SequenceSpec::skolem(8)).valid);

    CHECK_THROWS_AS(adjoin_hooked(back, back), Error);
    try {
        adjoin_hooked(back, back);
    } catch (const Error& e) {
        CHECK(e.kind() == Errc::HookMissing);
    }
}

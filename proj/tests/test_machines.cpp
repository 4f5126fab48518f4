#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lamplab/machines.hpp"
#include "support.hpp"

using namespace lamplab;
using lamplab::testing::fixture_path;
using lamplab::testing::load_registry;

TEST_CASE("fixture machines parse") {
    Registry reg = load_registry({"loop.tm", "halt1.tm", "halt14.tm"});
    REQUIRE(reg.size() == 3);
    CHECK(reg.at(1).name == "LOOP");
    CHECK(reg.at(1).non_halt_states().size() == 1);
    CHECK(reg.at(2).name == "HALT1");
    CHECK(reg.at(2).declared.kind == DeclaredStatus::Kind::HaltsIn);
    CHECK(reg.at(2).declared.steps == 1);
    CHECK(reg.at(3).declared.steps == 14);
    CHECK_THROWS_AS(reg.at(0), std::out_of_range);
    CHECK_THROWS_AS(reg.at(4), std::out_of_range);
}

TEST_CASE("parse rejects malformed machines") {
    SUBCASE("determinism violation") {
        const char* text =
            "machine BAD\nstart q0\nhalt h\n"
            "trans q0 _ -> h _ R\ntrans q0 _ -> q0 _ L\n"
            "trans q0 0 -> h 0 R\ntrans q0 1 -> h 1 R\nend\n";
        CHECK_THROWS_WITH_AS(parse_machines(text),
                             doctest::Contains("determinism violation"), ParseError);
    }
    SUBCASE("dangling state reference") {
        const char* text =
            "machine BAD\nstart q0\nhalt h\n"
            "trans q0 _ -> q9 _ R\ntrans q0 0 -> h 0 R\ntrans q0 1 -> h 1 R\nend\n";
        CHECK_THROWS_WITH_AS(parse_machines(text), doctest::Contains("dangling"), ParseError);
    }
    SUBCASE("missing transition for a symbol") {
        const char* text =
            "machine BAD\nstart q0\nhalt h\n"
            "trans q0 _ -> h _ R\ntrans q0 0 -> h 0 R\nend\n";
        CHECK_THROWS_WITH_AS(parse_machines(text), doctest::Contains("no transition"),
                             ParseError);
    }
    SUBCASE("syntax error carries the line number") {
        try {
            parse_machines("machine X\nstart q0\nbogus line\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
        }
    }
    SUBCASE("duplicate names across a registry") {
        Registry reg;
        reg.add_file(fixture_path("loop.tm"));
        CHECK_THROWS(reg.add_text("machine LOOP\nstart h\nhalt h\nend\n"));
    }
}

TEST_CASE("run_bounded examples") {
    Registry reg = load_registry({"loop.tm", "halt1.tm", "halt14.tm"});
    CHECK(run_bounded(reg.at(1), 1000) == RunStatus{false, 1000});
    CHECK(run_bounded(reg.at(2), 1000) == RunStatus{true, 1});
    CHECK(run_bounded(reg.at(3), 13) == RunStatus{false, 13});
    CHECK(run_bounded(reg.at(3), 14) == RunStatus{true, 14});
    CHECK(run_bounded(reg.at(3), 1000) == RunStatus{true, 14});
}

TEST_CASE("start state equal to halt state halts at step 0") {
    auto ms = parse_machines("machine TRIV\nstart h\nhalt h\nend\n");
    REQUIRE(ms.size() == 1);
    CHECK(run_bounded(ms[0], 0) == RunStatus{true, 0});
    CHECK(run_bounded(ms[0], 100) == RunStatus{true, 0});
}

TEST_CASE("halts_within examples and monotonicity") {
    Registry reg = load_registry({"loop.tm", "halt1.tm", "halt14.tm"});
    CHECK(!halts_within(reg.at(2), 0));
    CHECK(halts_within(reg.at(2), 5));
    CHECK(!halts_within(reg.at(1), 1000000));
    for (std::uint64_t k = 0; k <= 40; ++k) {
        if (halts_within(reg.at(3), k)) {
            for (std::uint64_t k2 = k; k2 <= 40; ++k2) CHECK(halts_within(reg.at(3), k2));
            break;
        }
    }
}

TEST_CASE("simulation is deterministic") {
    Registry reg = load_registry({"halt14.tm"});
    RunStatus a = run_bounded(reg.at(1), 10);
    RunStatus b = run_bounded(reg.at(1), 10);
    CHECK(a == b);
}

TEST_CASE("declared statuses audit cleanly") {
    Registry reg = load_registry({"loop_declared.tm", "halt1.tm", "halt14.tm"});
    CHECK(!audit_registry(reg, 100000).has_value());
}

TEST_CASE("audit reports a wrong declaration") {
    Registry reg;
    reg.add_text(
        "machine LIAR\nstatus loops\nstart q0\nhalt h\n"
        "trans q0 _ -> h _ R\ntrans q0 0 -> h 0 R\ntrans q0 1 -> h 1 R\nend\n");
    auto bad = audit_registry(reg, 1000);
    REQUIRE(bad.has_value());
    CHECK(bad->find("LIAR") != std::string::npos);
}

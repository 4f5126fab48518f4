#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lamplab/lamp.hpp"
#include "support.hpp"

#include <memory>
#include <random>

using namespace lamplab;
using lamplab::testing::halting_set;

namespace {

// A-oracle for registry [LOOP]: A = Z minus (2 + 60Z)
AOracle loop_oracle() {
    auto hs = std::make_shared<HaltingSet>(lamplab::testing::load_registry({"loop.tm"}));
    return [hs](long long i) { return hs->member_A(Int(static_cast<long>(i))); };
}

Word random_word(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(0, 5);
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(static_cast<Gen>(gen(rng)));
    return w;
}

}  // namespace

TEST_CASE("parse_word") {
    CHECK(parse_word("ee") == Word{Gen::Eps, Gen::Eps});
    CHECK(parse_word("aeA") == Word{Gen::A, Gen::Eps, Gen::AInv});
    CHECK(parse_word("a e A") == Word{Gen::A, Gen::Eps, Gen::AInv});
    CHECK_THROWS_AS(parse_word("aeAxf"), LexError);
    try {
        parse_word("aeAxf");
    } catch (const LexError& e) {
        CHECK(e.pos == 3);
    }
}

TEST_CASE("eval_factor examples") {
    CHECK(eval_factor(parse_word("a")) == LampElement{{}, 1});
    CHECK(eval_factor(parse_word("aeA")) == LampElement{{1}, 0});
    CHECK(eval_factor(parse_word("eaeA")) == LampElement{{0, 1}, 0});
    CHECK_THROWS_AS(eval_factor(parse_word("ab")), std::invalid_argument);
}

TEST_CASE("lamplighter product and inverse") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> gen(0, 2);  // plain-factor generators only
    std::uniform_int_distribution<int> len(0, 20);
    for (int i = 0; i < 2000; ++i) {
        Word w;
        for (int j = len(rng); j > 0; --j) w.push_back(static_cast<Gen>(gen(rng)));
        LampElement g = eval_factor(w);
        CHECK((g * g.inverse()).is_identity());
        CHECK((g.inverse() * g).is_identity());
    }
}

TEST_CASE("eval_factor is a homomorphism on concatenation") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> gen(0, 2);  // plain-factor generators only
    for (int i = 0; i < 2000; ++i) {
        Word w1, w2;
        std::uniform_int_distribution<int> len(0, 20);
        for (int j = len(rng); j > 0; --j) w1.push_back(static_cast<Gen>(gen(rng)));
        for (int j = len(rng); j > 0; --j) w2.push_back(static_cast<Gen>(gen(rng)));
        Word cat = w1;
        cat.insert(cat.end(), w2.begin(), w2.end());
        CHECK(eval_factor(cat) == eval_factor(w1) * eval_factor(w2));
    }
}

TEST_CASE("amalgamated subgroup membership") {
    AOracle in_A = loop_oracle();
    CHECK(in_amalgamated_subgroup(LampElement{{}, 0}, in_A));
    CHECK(!in_amalgamated_subgroup(LampElement{{2}, 0}, in_A));  // 2 is in B
    CHECK(!in_amalgamated_subgroup(LampElement{{0}, 1}, in_A));
    CHECK(in_amalgamated_subgroup(LampElement{{0, 3}, 0}, in_A));
}

TEST_CASE("normal form examples") {
    AOracle in_A = loop_oracle();
    CHECK(normal_form(parse_word("ee"), in_A).empty());

    auto nf_f = normal_form(parse_word("f"), in_A);
    REQUIRE(nf_f.size() == 1);
    CHECK(nf_f[0].factor == Factor::Plain);  // transferred across the identification
    CHECK(nf_f[0].elem == LampElement{{0}, 0});

    // u_2 uhat_2: 2 is not in A, so no transfer and two syllables remain
    auto nf_u2 = normal_form(parse_word("aaeAAbbfBB"), in_A);
    REQUIRE(nf_u2.size() == 2);
    CHECK(nf_u2[0].factor == Factor::Plain);
    CHECK(nf_u2[1].factor == Factor::Hat);
    CHECK(nf_u2[0].elem == LampElement{{2}, 0});
    CHECK(nf_u2[1].elem == LampElement{{2}, 0});
}

TEST_CASE("is_trivial examples") {
    AOracle in_A = loop_oracle();
    // relator [eps, a eps a^-1]
    CHECK(is_trivial(parse_word("aeAeaeAe"), in_A));
    // u_0 uhat_0^-1 dies because 0 is in A
    CHECK(is_trivial(parse_word("ef"), in_A));
    // u_2 uhat_2^-1 survives because 2 is not in A
    Word w = u_word(2, Factor::Plain);
    Word inv = inverse_word(u_word(2, Factor::Hat));
    w.insert(w.end(), inv.begin(), inv.end());
    CHECK(!is_trivial(w, in_A));
}

TEST_CASE("defining relators are trivial") {
    AOracle in_A = loop_oracle();
    CHECK(is_trivial(parse_word("ee"), in_A));
    CHECK(is_trivial(parse_word("ff"), in_A));
    for (long long i = -30; i <= 30; ++i) {
        for (Factor f : {Factor::Plain, Factor::Hat}) {
            // commutator [eps, a^i eps a^-i]
            Word ui = u_word(i, f);
            Word eps{f == Factor::Plain ? Gen::Eps : Gen::EpsHat};
            Word comm = eps;
            comm.insert(comm.end(), ui.begin(), ui.end());
            comm.insert(comm.end(), eps.begin(), eps.end());
            comm.insert(comm.end(), ui.begin(), ui.end());
            CHECK(is_trivial(comm, in_A));
        }
    }
}

TEST_CASE("identification criterion: u_j uhat_j^-1 trivial iff j in A") {
    AOracle in_A = loop_oracle();
    for (long long j = -30; j <= 30; ++j) {
        Word w = u_word(j, Factor::Plain);
        Word inv = inverse_word(u_word(j, Factor::Hat));
        w.insert(w.end(), inv.begin(), inv.end());
        CHECK(is_trivial(w, in_A) == in_A(j));
    }
}

TEST_CASE("w * w^-1 is always trivial") {
    AOracle in_A = loop_oracle();
    std::mt19937_64 rng(99);
    for (int i = 0; i < 1000; ++i) {
        Word w = random_word(rng, 12);
        Word inv = inverse_word(w);
        Word prod = w;
        prod.insert(prod.end(), inv.begin(), inv.end());
        CHECK(is_trivial(prod, in_A));
    }
}

TEST_CASE("conjugation preserves triviality") {
    AOracle in_A = loop_oracle();
    std::mt19937_64 rng(123);
    for (int i = 0; i < 500; ++i) {
        Word g = random_word(rng, 6);
        Word w = random_word(rng, 10);
        Word conj = g;
        conj.insert(conj.end(), w.begin(), w.end());
        Word ginv = inverse_word(g);
        conj.insert(conj.end(), ginv.begin(), ginv.end());
        CHECK(is_trivial(conj, in_A) == is_trivial(w, in_A));
    }
}

TEST_CASE("forward and reverse scans agree") {
    AOracle in_A = loop_oracle();
    std::mt19937_64 rng(314);
    for (int i = 0; i < 1000; ++i) {
        Word w = random_word(rng, 12);
        bool fwd = normal_form(w, in_A, ScanOrder::Forward).empty();
        bool rev = normal_form(w, in_A, ScanOrder::Reverse).empty();
        CHECK(fwd == rev);
    }
}

TEST_CASE("normal form shape invariants") {
    AOracle in_A = loop_oracle();
    std::mt19937_64 rng(271828);
    for (int i = 0; i < 500; ++i) {
        auto nf = normal_form(random_word(rng, 12), in_A);
        for (std::size_t j = 0; j < nf.size(); ++j) {
            CHECK(!nf[j].elem.is_identity());
            if (j + 1 < nf.size()) CHECK(nf[j].factor != nf[j + 1].factor);
            if (nf.size() > 1) CHECK(!in_amalgamated_subgroup(nf[j].elem, in_A));
        }
        if (nf.size() == 1 && in_amalgamated_subgroup(nf[0].elem, in_A))
            CHECK(nf[0].factor == Factor::Plain);
    }
}

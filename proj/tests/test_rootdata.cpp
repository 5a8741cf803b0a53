#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "adlvkit/rootdata.hpp"

using namespace rootdata;
using adlv::Int;
using adlv::IntVec;
using adlv::Rat;
using adlv::RatVec;

TEST_CASE("root counts per type") {
    CHECK(RootDatum::build("A1:gl").all_roots().size() == 2);
    CHECK(RootDatum::build("A2:gl").all_roots().size() == 6);
    CHECK(RootDatum::build("A2:adjoint").all_roots().size() == 6);
    CHECK(RootDatum::build("A2:sc").all_roots().size() == 6);
    CHECK(RootDatum::build("B2:adjoint").all_roots().size() == 8);
    CHECK(RootDatum::build("C3:adjoint").all_roots().size() == 18);
    CHECK(RootDatum::build("D4:adjoint").all_roots().size() == 24);
    CHECK(RootDatum::build("E6:adjoint").all_roots().size() == 72);
    CHECK(RootDatum::build("E7:adjoint").all_roots().size() == 126);
    CHECK(RootDatum::build("A2:gl:d=2").all_roots().size() == 12);
    CHECK_THROWS(RootDatum::build("E8:adjoint"));
    CHECK_THROWS(RootDatum::build("F4:adjoint"));
    CHECK_THROWS(RootDatum::build("G2:adjoint"));
}

TEST_CASE("reflection examples") {
    auto gl2 = RootDatum::build("A1:gl");
    const Root& a1 = gl2.simple_root(0);
    CHECK(gl2.reflect(a1, IntVec{1, 0}) == IntVec{0, 1});

    auto gl3 = RootDatum::build("A2:gl");
    int e13 = gl3.root_index({1, 0, -1});
    REQUIRE(e13 >= 0);
    CHECK(gl3.reflect(gl3.root(e13), IntVec{2, 0, 0}) == IntVec{0, 0, 2});
    // pairing-zero fixed point
    CHECK(gl3.reflect(gl3.root(e13), IntVec{1, 5, 1}) == IntVec{1, 5, 1});
}

TEST_CASE("involution property of reflections, fuzzed") {
    auto rd = RootDatum::build("D4:adjoint");
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> coord(-6, 6);
    std::uniform_int_distribution<size_t> pick(0, rd.all_roots().size() - 1);
    for (int it = 0; it < 500; ++it) {
        IntVec lam(rd.rank_y());
        for (auto& c : lam) c = coord(rng);
        const Root& al = rd.all_roots()[pick(rng)];
        CHECK(rd.reflect(al, rd.reflect(al, lam)) == lam);
    }
}

TEST_CASE("dominant representative") {
    auto gl3 = RootDatum::build("A2:gl");
    auto [bar1, w1] = gl3.dominant_rep(IntVec{0, 1, 0});
    CHECK(bar1 == IntVec{1, 0, 0});
    CHECK(gl3.word_of(w1) == std::vector<int>{0});

    auto [bar2, w2] = gl3.dominant_rep(IntVec{0, 0, 1});
    CHECK(bar2 == IntVec{1, 0, 0});
    CHECK(gl3.word_of(w2) == std::vector<int>{0, 1});
    CHECK(w2.apply_y(IntVec{0, 0, 1}) == bar2);

    auto [bar3, w3] = gl3.dominant_rep(IntVec{3, 2, 2});
    CHECK(bar3 == IntVec{3, 2, 2});
    CHECK(w3.is_identity());
}

TEST_CASE("dominant representative is unique in orbit (exhaustive small types)") {
    for (const char* spec : {"A2:adjoint", "B2:adjoint", "A2:gl"}) {
        auto rd = RootDatum::build(spec);
        std::mt19937_64 rng(3);
        std::uniform_int_distribution<Int> coord(-4, 4);
        for (int it = 0; it < 50; ++it) {
            IntVec lam(rd.rank_y());
            for (auto& c : lam) c = coord(rng);
            IntVec bar = rd.dominant_rep(lam).first;
            // walk the whole orbit, collect dominant members
            std::map<IntVec, bool> seen;
            std::vector<IntVec> stack{lam};
            seen[lam] = true;
            std::vector<IntVec> dominant;
            while (!stack.empty()) {
                IntVec v = stack.back();
                stack.pop_back();
                if (rd.is_dominant(v)) dominant.push_back(v);
                for (int k = 0; k < rd.num_simple(); ++k) {
                    IntVec nv = rd.reflect(rd.simple_root(k), v);
                    if (!seen.count(nv)) {
                        seen[nv] = true;
                        stack.push_back(nv);
                    }
                }
            }
            REQUIRE(dominant.size() == 1);
            CHECK(dominant[0] == bar);
        }
    }
}

TEST_CASE("dominance order") {
    auto gl2 = RootDatum::build("A1:gl");
    CHECK(gl2.leq_dominance({Rat(0), Rat(1)}, {Rat(1, 2), Rat(1, 2)}));
    CHECK(!gl2.leq_dominance({Rat(1), Rat(0)}, {Rat(1, 2), Rat(1, 2)}));
    CHECK(gl2.leq_dominance({Rat(1), Rat(0)}, {Rat(1), Rat(0)}));
    // incomparable central directions
    CHECK(!gl2.leq_dominance({Rat(0), Rat(0)}, {Rat(1), Rat(1)}));
}

TEST_CASE("minuscule test") {
    auto gl3 = RootDatum::build("A2:gl");
    CHECK(gl3.is_minuscule({1, 1, 0}));
    CHECK(gl3.is_minuscule({0, 1, 0}));  // conjugate of a minuscule
    CHECK(!gl3.is_minuscule({2, 0, 0}));
    CHECK(gl3.is_minuscule({0, 0, 0}));
    auto d4 = RootDatum::build("D4:adjoint");
    CHECK(d4.is_minuscule({1, 0, 0, 0}));
    CHECK(!d4.is_minuscule({0, 1, 0, 0}));
}

TEST_CASE("pi set") {
    auto gl3 = RootDatum::build("A2:gl");
    auto pi = gl3.pi_set();
    REQUIRE(pi.size() == 3);
    CHECK(gl3.root(pi[0]).x == IntVec{-1, 1, 0});
    CHECK(gl3.root(pi[1]).x == IntVec{0, -1, 1});
    CHECK(gl3.root(pi[2]).x == IntVec{1, 0, -1});

    auto gl2 = RootDatum::build("A1:gl");
    auto pi2 = gl2.pi_set();
    REQUIRE(pi2.size() == 2);

    auto prod = RootDatum::build("A2:gl:d=2");
    CHECK(prod.pi_set().size() == 6);
    CHECK(prod.components().size() == 2);
}

TEST_CASE("weyl group orders") {
    CHECK(RootDatum::build("A1:gl").weyl_order() == 2);
    CHECK(RootDatum::build("A2:gl").weyl_order() == 6);
    CHECK(RootDatum::build("A3:gl").weyl_order() == 24);
    CHECK(RootDatum::build("A4:adjoint").weyl_order() == 120);
    CHECK(RootDatum::build("B2:adjoint").weyl_order() == 8);
    CHECK(RootDatum::build("B3:adjoint").weyl_order() == 48);
    CHECK(RootDatum::build("C2:adjoint").weyl_order() == 8);
    CHECK(RootDatum::build("C3:adjoint").weyl_order() == 48);
    CHECK(RootDatum::build("C4:adjoint").weyl_order() == 384);
    CHECK(RootDatum::build("D4:adjoint").weyl_order() == 192);
    CHECK(RootDatum::build("A2:sc").weyl_order() == 6);
    CHECK(RootDatum::build("A2:gl:d=2").weyl_order() == 36);
}

TEST_CASE("weyl enumeration visits distinct elements with correct lengths") {
    auto rd = RootDatum::build("B2:adjoint");
    std::map<IntVec, int> seen;
    size_t n = rd.enumerate_weyl([&](const WeylElement& w) {
        seen[w.on_y.a] += 1;
        auto word = rd.word_of(w);
        CHECK(static_cast<int>(word.size()) == rd.length(w));
        CHECK(rd.from_word(word) == w);
    });
    CHECK(n == 8);
    CHECK(seen.size() == 8);
}

TEST_CASE("pairing invariance under the Weyl group, fuzzed") {
    auto rd = RootDatum::build("C3:adjoint");
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> coord(-5, 5);
    std::vector<WeylElement> elems;
    rd.enumerate_weyl([&](const WeylElement& w) {
        if (elems.size() < 60) elems.push_back(w);
    });
    std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
    std::uniform_int_distribution<size_t> pickroot(0, rd.all_roots().size() - 1);
    for (int it = 0; it < 300; ++it) {
        IntVec lam(rd.rank_y());
        for (auto& c : lam) c = coord(rng);
        const auto& w = elems[pick(rng)];
        const auto& alpha = rd.all_roots()[pickroot(rng)];
        CHECK(RootDatum::pairing(w.apply_x(alpha.x), w.apply_y(lam)) ==
              RootDatum::pairing(alpha.x, lam));
    }
}

TEST_CASE("sigma commutes with dominance") {
    auto rd = RootDatum::build("A3:adjoint:sigma=flip");
    CHECK(rd.sigma_order() == 2);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Int> coord(-4, 4);
    for (int it = 0; it < 200; ++it) {
        IntVec lam(rd.rank_y());
        for (auto& c : lam) c = coord(rng);
        IntVec lhs = rd.dominant_rep(rd.apply_sigma_y(lam)).first;
        IntVec rhs = rd.apply_sigma_y(rd.dominant_rep(lam).first);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("gl flip automorphism") {
    auto rd = RootDatum::build("A2:gl:sigma=flip");
    CHECK(rd.sigma_order() == 2);
    // alpha_1 -> alpha_2 under the flip
    IntVec a1{1, -1, 0};
    CHECK(rd.sigma_x().apply(a1) == IntVec{0, 1, -1});
}

TEST_CASE("levi subdatum") {
    auto gl3 = RootDatum::build("A2:gl");
    auto m = gl3.levi({0});
    CHECK(m.all_roots().size() == 2);
    CHECK(m.rank_y() == 3);
    auto torus = gl3.levi({});
    CHECK(torus.all_roots().empty());
    CHECK(torus.num_simple() == 0);
}

TEST_CASE("minuscule representatives") {
    auto gl3 = RootDatum::build("A2:gl");
    auto reps = gl3.minuscule_reps();
    REQUIRE(reps.size() == 2);
    CHECK(reps[0] == IntVec{1, 0, 0});
    CHECK(reps[1] == IntVec{1, 1, 0});

    auto c3 = RootDatum::build("C3:adjoint");
    auto reps_c3 = c3.minuscule_reps();
    REQUIRE(reps_c3.size() == 1);
    CHECK(reps_c3[0] == IntVec{0, 0, 1});

    auto d4 = RootDatum::build("D4:adjoint");
    CHECK(d4.minuscule_reps().size() == 3);

    CHECK(RootDatum::build("A2:sc").minuscule_reps().empty());
}

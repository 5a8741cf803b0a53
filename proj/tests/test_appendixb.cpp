#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adlvkit/appendixb.hpp"

using namespace appendixb;
using affine::omega_part;
using affine::power;
using rootdata::RootDatum;
using adlv::IntVec;

namespace {

BasicElement omega1_pow(const RootDatum& rd, int m) {
    IntVec e1(rd.rank_y(), 0);
    e1[0] = 1;
    return {power(omega_part(rd, e1), m)};
}

std::vector<int> one_based(const std::vector<int>& J) {
    std::vector<int> out;
    for (int k : J) out.push_back(k + 1);
    return out;
}

}  // namespace

TEST_CASE("minimal Levi sets for type A") {
    auto a3 = RootDatum::build("A3:adjoint");
    // gcd(2, 4) = 2: two blocks of size 2
    auto w = minimal_levi_J(a3, omega1_pow(a3, 2));
    CHECK(one_based(w.J) == std::vector<int>{1, 3});
    // coprime powers are superbasic: empty witness would be wrong, expect all
    for (int m : {1, 3}) {
        auto ws = minimal_levi_J(a3, omega1_pow(a3, m));
        CHECK(ws.J.size() == 3);
    }
    // gcd(3, 6) = 3 in A5: pattern {s_{i+2j}} with f = 2, h = 3
    auto a5 = RootDatum::build("A5:adjoint");
    auto w5 = minimal_levi_J(a5, omega1_pow(a5, 3));
    CHECK(one_based(w5.J) == std::vector<int>{1, 3, 5});
}

TEST_CASE("minimal Levi sets for B, C, D") {
    auto b3 = RootDatum::build("B3:adjoint");
    auto reps_b3 = basic_representatives(b3);
    REQUIRE(reps_b3.size() == 1);
    CHECK(one_based(minimal_levi_J(b3, reps_b3[0]).J) == std::vector<int>{3});

    auto c2 = RootDatum::build("C2:adjoint");
    auto reps_c2 = basic_representatives(c2);
    REQUIRE(reps_c2.size() == 1);
    CHECK(one_based(minimal_levi_J(c2, reps_c2[0]).J) == std::vector<int>{1});

    auto c3 = RootDatum::build("C3:adjoint");
    auto reps_c3 = basic_representatives(c3);
    REQUIRE(reps_c3.size() == 1);
    CHECK(one_based(minimal_levi_J(c3, reps_c3[0]).J) == std::vector<int>{1, 3});

    auto d4 = RootDatum::build("D4:adjoint");
    auto reps_d4 = basic_representatives(d4);
    REQUIRE(reps_d4.size() == 3);
    std::set<std::vector<int>> jsets;
    for (const auto& b : reps_d4) jsets.insert(one_based(minimal_levi_J(d4, b).J));
    // the vector class gives {s3, s4}; the two spinor classes give {s1, s3}
    // and {s1, s4}
    CHECK(jsets.count({3, 4}) == 1);
    CHECK(jsets.count({1, 3}) == 1);
    CHECK(jsets.count({1, 4}) == 1);
}

TEST_CASE("minimal Levi set for E6") {
    auto e6 = RootDatum::build("E6:adjoint");
    auto reps = basic_representatives(e6);
    REQUIRE(reps.size() == 2);
    for (const auto& b : reps)
        CHECK(one_based(minimal_levi_J(e6, b).J) == std::vector<int>{1, 3, 5, 6});
}

TEST_CASE("uniqueness verification on small types, both modes agree") {
    for (const char* spec :
         {"A2:adjoint", "A3:adjoint", "A4:adjoint", "A5:adjoint", "D4:adjoint",
          "A3:adjoint:sigma=flip", "D4:adjoint:sigma=flip", "C2:adjoint",
          "C3:adjoint", "B3:adjoint"}) {
        auto rd = RootDatum::build(spec);
        for (const auto& b : basic_representatives(rd)) {
            auto pruned = verify_uniqueness(rd, b, false);
            auto full = verify_uniqueness(rd, b, true);
            CHECK(pruned.all_fixed);
            CHECK(full.all_fixed);
            CHECK(pruned.J == full.J);
        }
    }
}

TEST_CASE("certification serialization") {
    auto a3 = RootDatum::build("A3:adjoint");
    auto b = omega1_pow(a3, 2);
    auto rep = verify_uniqueness(a3, b, false);
    std::string j = certification_json(a3, b, rep);
    CHECK(j.find("\"verdict\": \"all_fixed\"") != std::string::npos);
}

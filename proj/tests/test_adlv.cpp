#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "adlvkit/adlv.hpp"

using namespace strata;
using affine::BasicElement;
using affine::ExtAffineElement;
using affine::omega_part;
using affine::power;
using rootdata::RootDatum;
using adlv::Int;
using adlv::IntVec;
using adlv::Rat;
using adlv::RatVec;

namespace {

BasicElement omega1_pow(const RootDatum& rd, int m) {
    IntVec e1(rd.rank_y(), 0);
    e1[0] = 1;
    return {power(omega_part(rd, e1), m)};
}

BasicElement product_b(const RootDatum& prod, int n, int d, int m) {
    IntVec e(n * d, 0);
    e[(d - 1) * n] = 1;
    return {power(omega_part(prod, e), m)};
}

}  // namespace

TEST_CASE("generic vectors") {
    auto gl3 = RootDatum::build("A2:gl");
    auto b = omega1_pow(gl3, 1);
    IntVec v = generic_vector(gl3, b);
    CHECK(v[0] == v[1]);
    CHECK(v[1] == v[2]);
    CHECK(v[0] != 0);
    CHECK(is_superbasic(gl3, b));

    BasicElement one{ExtAffineElement::identity(3)};
    IntVec v1 = generic_vector(gl3, one);
    // regular: no root vanishes
    for (const auto& r : gl3.all_roots())
        CHECK(RootDatum::pairing(r.x, v1) != 0);
    CHECK(!is_superbasic(gl3, one));

    auto c2 = RootDatum::build("C2:adjoint");
    auto gens = affine::omega_generators(c2);
    REQUIRE(gens.size() == 1);
    BasicElement w{gens[0].element};
    IntVec vc = generic_vector(c2, w);
    // the genericity contract
    auto tw = w.twist(c2);
    CHECK(tw.lin_y.apply(vc) == vc);
}

TEST_CASE("classification for GL_2") {
    auto gl2 = RootDatum::build("A1:gl");
    auto b = omega1_pow(gl2, 1);
    auto rep = classify_lambda(gl2, {1, 0}, b, {0, 0});
    CHECK(rep.in_A);
    CHECK(rep.natural == IntVec{1, 0});
    CHECK(rep.R_set.empty());
    CHECK(rep.stratum_dim == 0);
    CHECK(rep.is_top);
    REQUIRE(rep.is_small.has_value());
    CHECK(*rep.is_small);

    auto rep2 = classify_lambda(gl2, {1, 0}, b, {1, 0});
    CHECK(rep2.in_A);
    CHECK(rep2.natural == IntVec{0, 1});
    CHECK(rep2.is_top);

    auto rep3 = classify_lambda(gl2, {1, 0}, b, {2, 0});
    CHECK(!rep3.in_A);

    CHECK_THROWS(classify_lambda(gl2, {2, 0}, b, {0, 0}));  // not minuscule
}

TEST_CASE("top criterion agrees with the R-test on windows") {
    auto gl3 = RootDatum::build("A2:gl");
    for (int m : {1, 2}) {
        auto b = omega1_pow(gl3, m);
        IntVec mu(3, 0);
        for (int i = 0; i < m; ++i) mu[i] = 1;
        IntVec v = generic_vector(gl3, b);
        // walk the nonempty locus through the class partition enumeration
        auto part = count_top_classes(gl3, mu, b);
        for (const auto& [lam, cid] : part.class_of)
            CHECK(is_top_by_criterion(gl3, mu, b, lam, v));
        // also check some non-top members: is_top_by_criterion asserts
        // agreement internally, so a non-throw is the test
        std::mt19937_64 rng(9);
        std::uniform_int_distribution<Int> d(-3, 3);
        int seen = 0;
        for (int it = 0; it < 400 && seen < 40; ++it) {
            IntVec lam{d(rng), d(rng), d(rng)};
            auto rep = classify_lambda(gl3, mu, b, lam);
            if (!rep.in_A) continue;
            ++seen;
            CHECK(is_top_by_criterion(gl3, mu, b, lam, v) == rep.is_top);
        }
        CHECK(seen > 0);
    }
}

TEST_CASE("class counting matches crystal multiplicities") {
    struct Case {
        const char* spec;
        int m;
        IntVec mu;
        int expected;
    };
    std::vector<Case> cases = {
        {"A1:gl", 1, {1, 0}, 1},
        {"A2:gl", 1, {1, 0, 0}, 1},
        {"A2:gl", 2, {1, 1, 0}, 1},
        {"A3:gl", 1, {1, 0, 0, 0}, 1},
        {"A3:gl", 3, {1, 1, 1, 0}, 1},
    };
    for (const auto& c : cases) {
        auto rd = RootDatum::build(c.spec);
        auto b = omega1_pow(rd, c.m);
        auto part = count_top_classes(rd, c.mu, b);
        CHECK(part.stabilized);
        CHECK(static_cast<int>(part.representatives.size()) == c.expected);
        auto ul = isocrystal::ul_best(rd, b);
        auto cr = crystal::crystal_generate(rd, c.mu);
        CHECK(crystal::weight_mult_class(rd, cr, ul) == c.expected);
    }
}

TEST_CASE("class counting on a product datum") {
    auto prod = RootDatum::build("A2:gl:d=2");
    auto bb = product_b(prod, 3, 2, 2);
    IntVec bmu{1, 0, 0, 1, 0, 0};
    auto part = count_top_classes(prod, bmu, bb);
    CHECK(part.stabilized);
    CHECK(part.representatives.size() == 2);
    auto ul = isocrystal::ul_best(prod, bb);
    auto cr = crystal::crystal_generate(prod, bmu);
    CHECK(crystal::weight_mult_class(prod, cr, ul) == 2);
}

TEST_CASE("equivalence moves stay inside the class") {
    auto gl3 = RootDatum::build("A2:gl");
    auto b = omega1_pow(gl3, 1);
    IntVec mu{1, 0, 0};
    auto part = count_top_classes(gl3, mu, b);
    auto tw = b.twist(gl3);
    IntVec v = generic_vector(gl3, b);
    auto gamma = levi_omega_centralizer(gl3, tw, adlv::to_rat(v));
    for (const auto& [lam, cid] : part.class_of) {
        for (const auto& mv : equivalence_moves(gl3, mu, b, lam)) {
            if (mv.tag == "orbit_longest") continue;
            CHECK(gamma_canonical(gamma, mv.target) == gamma_canonical(gamma, lam));
        }
    }
}

TEST_CASE("orbit-longest moves connect strata within a class") {
    // GL_4 with b = w1^2 has finite wall orbits, so the longest-element moves
    // genuinely fire
    auto gl4 = RootDatum::build("A3:gl");
    auto b = omega1_pow(gl4, 2);
    IntVec mu{1, 1, 0, 0};
    auto part = count_top_classes(gl4, mu, b);
    REQUIRE(part.stabilized);
    int fired = 0;
    for (const auto& [lam, cid] : part.class_of) {
        for (const auto& mv : equivalence_moves(gl4, mu, b, lam)) {
            auto it = part.class_of.find(mv.target);
            if (it != part.class_of.end()) CHECK(it->second == cid);
            if (mv.tag == "orbit_longest" && mv.target != lam) ++fired;
        }
    }
    CHECK(fired > 0);
}

TEST_CASE("smallness") {
    auto gl2 = RootDatum::build("A1:gl");
    auto b = omega1_pow(gl2, 1);
    auto [small0, pi0] = small_and_type(gl2, {1, 0}, b, {0, 0});
    CHECK(small0);
    CHECK(pi0.empty());  // superbasic: no finite wall orbits

    // a coweight with lambda_beta >= 1 on a full wall orbit is not small
    auto gl4 = RootDatum::build("A3:gl");
    auto b2 = omega1_pow(gl4, 2);
    IntVec mu{1, 1, 0, 0};
    auto part = count_top_classes(gl4, mu, b2);
    bool found_not_small = false, found_small = false;
    for (const auto& [lam, cid] : part.class_of) {
        auto rep = classify_lambda(gl4, mu, b2, lam);
        REQUIRE(rep.is_small.has_value());
        if (*rep.is_small)
            found_small = true;
        else
            found_not_small = true;
        (void)found_not_small;
    }
    // every class has a small representative
    std::set<int> small_classes;
    for (const auto& [lam, cid] : part.class_of) {
        auto rep = classify_lambda(gl4, mu, b2, lam);
        if (*rep.is_small) small_classes.insert(cid);
    }
    CHECK(found_small);
    CHECK(small_classes.size() == part.representatives.size());
}

TEST_CASE("superbasic tables") {
    auto tab = superbasic_table(2, 1, 1, {{0, 0}});
    CHECK(tab.a_table[0] == IntVec{2, 1});
    CHECK(tab.lambda_flat[0] == IntVec{0, 1});
    CHECK(tab.dim_value == 0);
    CHECK(tab.is_top);

    auto tab3 = superbasic_table(3, 1, 1, {{0, 0, 0}});
    CHECK(tab3.is_top);
    IntVec flat_sum(3, 0);
    for (const auto& f : tab3.lambda_flat) flat_sum = adlv::add(flat_sum, f);
    CHECK(flat_sum == IntVec{0, 0, 1});

    // a two-copy table
    auto tab2 = superbasic_table(2, 2, 1, {{0, 0}, {0, 0}});
    CHECK(tab2.a_table.size() == 2);
    CHECK(tab2.dim_value >= 0);
}

TEST_CASE("flat coweights") {
    auto gl2 = RootDatum::build("A1:gl");
    auto b = omega1_pow(gl2, 1);
    CHECK(lambda_flat(gl2, b, {0, 0}) == IntVec{0, 1});
    CHECK(top_by_flat(gl2, {1, 0}, b, {0, 0}));

    // omega-equivariance of the flat coweight
    auto gl3 = RootDatum::build("A2:gl");
    auto b3 = omega1_pow(gl3, 1);
    auto w1 = omega1_pow(gl3, 1).omega;
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> d(-4, 4);
    int seen = 0;
    for (int it = 0; it < 600 && seen < 80; ++it) {
        IntVec lam{d(rng), d(rng), d(rng)};
        auto rep = classify_lambda(gl3, {1, 0, 0}, b3, lam);
        if (!rep.in_A) continue;
        ++seen;
        CHECK(lambda_flat(gl3, b3, w1.apply_y(lam)) == lambda_flat(gl3, b3, lam));
    }
    CHECK(seen > 0);

    // the flat criterion matches the dimension test on the nonempty locus
    for (int m : {1, 2}) {
        auto b_m = omega1_pow(gl3, m);
        IntVec mu(3, 0);
        for (int i = 0; i < m; ++i) mu[i] = 1;
        int seen2 = 0;
        for (Int a = -3; a <= 3; ++a)
            for (Int c = -3; c <= 3; ++c)
                for (Int e = -3; e <= 3; ++e) {
                    IntVec lam{a, c, e};
                    auto rep = classify_lambda(gl3, mu, b_m, lam);
                    if (!rep.in_A) continue;
                    ++seen2;
                    CHECK(top_by_flat(gl3, mu, b_m, lam) == rep.is_top);
                }
        CHECK(seen2 > 0);
    }
}

TEST_CASE("report serialization") {
    auto gl2 = RootDatum::build("A1:gl");
    auto b = omega1_pow(gl2, 1);
    auto rep = classify_lambda(gl2, {1, 0}, b, {0, 0});
    std::string j = report_json(gl2, rep, 0);
    CHECK(j.find("\"top\":true") != std::string::npos);
}

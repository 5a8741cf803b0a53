#include "adlvkit/oracles.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace oracles {

using adlv::Error;
using adlv::RatVec;

namespace {

RatVec half_sum_pos_coroots(const RootDatum& rd) {
    RatVec r(rd.rank_y(), Rat(0));
    for (const auto& a : rd.all_roots())
        if (a.positive)
            for (int i = 0; i < rd.rank_y(); ++i) r[i] += Rat(a.coroot[i], 2);
    return r;
}

// W-invariant form on Y_R: B(x, y) = sum_{alpha} <alpha, x><alpha, y>
Rat form(const RootDatum& rd, const RatVec& x, const RatVec& y) {
    Rat s = 0;
    for (const auto& a : rd.all_roots()) {
        RatVec ax = adlv::to_rat(a.x);
        s += adlv::dot(ax, x) * adlv::dot(ax, y);
    }
    return s;
}

}  // namespace

BigInt weyl_dim(const RootDatum& rd, const IntVec& mu) {
    IntVec bar = rd.dominant_rep(mu).first;
    RatVec rho_v = half_sum_pos_coroots(rd);
    Rat num = 1, den = 1;
    for (const auto& a : rd.all_roots()) {
        if (!a.positive) continue;
        RatVec ax = adlv::to_rat(a.x);
        num *= adlv::dot(ax, adlv::to_rat(bar)) + adlv::dot(ax, rho_v);
        den *= adlv::dot(ax, rho_v);
    }
    Rat d = num / den;
    ADLV_CHECK(denominator(d) == 1, "Weyl dimension is not integral");
    return numerator(d);
}

Int WeightTable::mult(const RootDatum& rd, const IntVec& lam) const {
    auto it = mult_dominant.find(rd.dominant_rep(lam).first);
    return it == mult_dominant.end() ? 0 : it->second;
}

BigInt WeightTable::total(const RootDatum& rd) const {
    BigInt s = 0;
    for (const auto& [lam, m] : mult_dominant) {
        // orbit size by closure
        std::set<IntVec> orbit{lam};
        std::deque<IntVec> queue{lam};
        while (!queue.empty()) {
            IntVec v = queue.front();
            queue.pop_front();
            for (int k = 0; k < rd.num_simple(); ++k) {
                IntVec nv = rd.reflect(rd.simple_root(k), v);
                if (orbit.insert(nv).second) queue.push_back(nv);
            }
        }
        s += BigInt(m) * BigInt(orbit.size());
    }
    return s;
}

WeightTable freudenthal(const RootDatum& rd, const IntVec& mu) {
    IntVec bar = rd.dominant_rep(mu).first;
    // weight set: closure under +- simple coroots inside
    // {lam : dominant rep <= mu, lam = mu mod Z Phi^vee}
    std::set<IntVec> weights{bar};
    std::deque<IntVec> queue{bar};
    auto member = [&](const IntVec& v) {
        return rd.leq_dominance(adlv::to_rat(rd.dominant_rep(v).first),
                                adlv::to_rat(bar));
    };
    while (!queue.empty()) {
        IntVec v = queue.front();
        queue.pop_front();
        for (int k = 0; k < rd.num_simple(); ++k) {
            for (int sgn : {1, -1}) {
                IntVec nv = adlv::add(v, adlv::scale(sgn, rd.simple_root(k).coroot));
                if (weights.count(nv) || !member(nv)) continue;
                weights.insert(nv);
                queue.push_back(nv);
            }
        }
    }
    // dominant representatives ordered by depth below mu
    std::vector<std::pair<Int, IntVec>> doms;
    for (const auto& w : weights) {
        if (!rd.is_dominant(w)) continue;
        // depth: coefficient sum of mu - w over the simple coroots
        IntVec diff = adlv::sub(bar, w);
        Int depth = 0;
        {
            adlv::IntMat A(rd.rank_y(), rd.num_simple());
            for (int k = 0; k < rd.num_simple(); ++k)
                for (int i = 0; i < rd.rank_y(); ++i)
                    A.at(i, k) = rd.simple_root(k).coroot[i];
            auto sol = adlv::lattice::solve_unique_rational(A, adlv::to_rat(diff));
            ADLV_CHECK(sol.has_value(), "weight not below mu in the coroot lattice");
            for (const Rat& c : *sol) {
                ADLV_CHECK(denominator(c) == 1, "non-integral weight depth");
                depth += adlv::to_int(c);
            }
        }
        doms.push_back({depth, w});
    }
    std::sort(doms.begin(), doms.end());

    WeightTable table;
    RatVec rho_v = half_sum_pos_coroots(rd);
    RatVec mu_rho = adlv::add(adlv::to_rat(bar), rho_v);
    Rat mu_norm = form(rd, mu_rho, mu_rho);
    for (const auto& [depth, lam] : doms) {
        if (lam == bar) {
            table.mult_dominant[lam] = 1;
            continue;
        }
        RatVec lam_rho = adlv::add(adlv::to_rat(lam), rho_v);
        Rat denom = mu_norm - form(rd, lam_rho, lam_rho);
        ADLV_CHECK(denom != 0, "Freudenthal denominator vanishes");
        Rat rhs = 0;
        for (const auto& a : rd.all_roots()) {
            if (!a.positive) continue;
            for (Int k = 1;; ++k) {
                IntVec up = adlv::add(lam, adlv::scale(k, a.coroot));
                if (!weights.count(up)) break;
                auto it = table.mult_dominant.find(rd.dominant_rep(up).first);
                ADLV_CHECK(it != table.mult_dominant.end(),
                           "Freudenthal processing order violated");
                rhs += Rat(2) * it->second *
                       form(rd, adlv::to_rat(up), adlv::to_rat(a.coroot));
            }
        }
        Rat m = rhs / denom;
        ADLV_CHECK(denominator(m) == 1 && m >= 0, "non-integral multiplicity");
        table.mult_dominant[lam] = adlv::to_int(m);
    }
    return table;
}

}  // namespace oracles

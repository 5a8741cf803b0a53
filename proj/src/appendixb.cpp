#include "adlvkit/appendixb.hpp"

#include <chrono>
#include <set>
#include <unordered_set>

#include "json.hpp"

namespace appendixb {

using adlv::Error;
namespace lattice = adlv::lattice;

LeviWitness minimal_levi_J(const RootDatum& rd, const BasicElement& b) {
    LeviWitness w;
    w.v = strata::generic_vector(rd, b);
    auto [vbar, z] = rd.dominant_rep(w.v);
    w.vbar = vbar;
    w.z = z;
    for (int k = 0; k < rd.num_simple(); ++k)
        if (rd.pair_simple(k, vbar) == 0) w.J.push_back(k);
    // the set is stable under the diagram automorphism
    std::set<IntVec> jroots;
    for (int k : w.J) jroots.insert(rd.simple_root(k).x);
    for (int k : w.J)
        ADLV_CHECK(jroots.count(rd.sigma_x().apply(rd.simple_root(k).x)) == 1,
                   "Levi simple set is not sigma-stable");
    return w;
}

namespace {

struct SimpleCorootTable {
    std::vector<IntVec> coroots;  // per simple index
    int index_of(const IntVec& c) const {
        for (size_t i = 0; i < coroots.size(); ++i)
            if (coroots[i] == c) return static_cast<int>(i);
        return -1;
    }
};

SimpleCorootTable simple_coroots(const RootDatum& rd) {
    SimpleCorootTable t;
    for (int k = 0; k < rd.num_simple(); ++k)
        t.coroots.push_back(rd.simple_root(k).coroot);
    return t;
}

}  // namespace

UniquenessReport verify_uniqueness(const RootDatum& rd, const BasicElement& b,
                                   bool exhaustive) {
    auto t0 = std::chrono::steady_clock::now();
    UniquenessReport rep;
    LeviWitness w = minimal_levi_J(rd, b);
    rep.J = w.J;
    rep.exhaustive = exhaustive;
    SimpleCorootTable table = simple_coroots(rd);
    std::set<int> jset(w.J.begin(), w.J.end());
    const size_t jn = w.J.size();

    if (jn == 0) {  // unramified: nothing to verify
        rep.decisive = true;
        rep.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        return rep;
    }

    bool sigma_trivial = rd.sigma_y().is_identity();

    if (!exhaustive) {
        // breadth-first over the Weyl orbit of the unordered coroot set of J,
        // each state stored as the sorted concatenation of its coroots
        const int n = rd.rank_y();
        auto pack = [&](std::vector<IntVec> blocks) {
            std::sort(blocks.begin(), blocks.end());
            IntVec flat;
            for (const auto& c : blocks)
                flat.insert(flat.end(), c.begin(), c.end());
            return flat;
        };
        std::vector<IntVec> blocks0;
        for (int k : w.J) blocks0.push_back(rd.simple_root(k).coroot);
        IntVec start = pack(blocks0);
        std::unordered_set<IntVec, adlv::IntVecHash> seen{start};
        std::vector<IntVec> stack{start};
        bool inconclusive_hit = false;
        while (!stack.empty()) {
            IntVec cur = stack.back();
            stack.pop_back();
            // a hit: all entries are simple coroots
            std::set<int> image;
            bool hit = true;
            for (size_t j = 0; j < jn && hit; ++j) {
                IntVec c(cur.begin() + j * n, cur.begin() + (j + 1) * n);
                int idx = table.index_of(c);
                if (idx < 0)
                    hit = false;
                else
                    image.insert(idx);
            }
            if (hit) {
                ++rep.candidates;
                if (image != jset) {
                    if (sigma_trivial) {
                        rep.all_fixed = false;  // any witness violates
                    } else {
                        inconclusive_hit = true;
                    }
                }
            }
            for (int k = 0; k < rd.num_simple(); ++k) {
                std::vector<IntVec> blocks;
                for (size_t j = 0; j < jn; ++j) {
                    IntVec c(cur.begin() + j * n, cur.begin() + (j + 1) * n);
                    blocks.push_back(rd.reflect(rd.simple_root(k), c));
                }
                IntVec next = pack(std::move(blocks));
                if (seen.insert(next).second) stack.push_back(std::move(next));
            }
        }
        rep.decisive = !inconclusive_hit;
        if (!rep.decisive) {
            // a twisted-fixed witness may or may not exist; settle by scan
            UniquenessReport full = verify_uniqueness(rd, b, true);
            full.seconds += std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
            return full;
        }
        rep.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        return rep;
    }

    // exhaustive scan of the Weyl group
    IntMat sy = rd.sigma_y();
    rd.enumerate_weyl_y([&](const IntMat& m) {
        if (!sigma_trivial && !(sy.mul(m) == m.mul(sy))) return;
        std::set<int> image;
        for (size_t j = 0; j < jn; ++j) {
            int idx = table.index_of(m.apply(rd.simple_root(w.J[j]).coroot));
            if (idx < 0) return;
            image.insert(idx);
        }
        ++rep.candidates;
        if (image != jset) {
            rep.all_fixed = false;
            if (rep.counterexamples.size() < 8) rep.counterexamples.push_back(m);
        }
    });
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

std::vector<BasicElement> basic_representatives(const RootDatum& rd) {
    std::vector<IntVec> full;
    for (int i = 0; i < rd.rank_y(); ++i) {
        IntVec e(rd.rank_y(), 0);
        e[i] = 1;
        full.push_back(e);
    }
    auto gens = lattice::quotient_generators(full, rd.coroot_lattice_rows(),
                                             rd.rank_y());
    // enumerate the whole finite class group
    std::set<IntVec> classes;
    auto Lq = lattice::row_hnf(rd.coroot_lattice_rows(), rd.rank_y());
    std::vector<IntVec> reps{adlv::zero_vec(rd.rank_y())};
    classes.insert(adlv::zero_vec(rd.rank_y()));
    for (const auto& g : gens) {
        ADLV_CHECK(g.order > 0, "infinite fundamental group in basic enumeration");
        std::vector<IntVec> next = reps;
        for (const auto& r : reps) {
            IntVec acc = r;
            for (adlv::Int k = 1; k < g.order; ++k) {
                acc = adlv::add(acc, g.rep);
                IntVec residue = lattice::reduce_mod(Lq, acc);
                if (classes.insert(residue).second) next.push_back(acc);
            }
        }
        reps = next;
    }
    std::vector<BasicElement> out;
    for (const auto& y : reps) {
        if (lattice::in_lattice(Lq, y)) continue;  // trivial class
        out.push_back({affine::omega_part(rd, y)});
    }
    return out;
}

std::string certification_json(const RootDatum& rd, const BasicElement& b,
                               const UniquenessReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["datum"] = rd.spec_text();
    j["b"] = affine::to_text(rd, b.omega);
    nlohmann::json jj = nlohmann::json::array();
    for (int k : rep.J) jj.push_back(k + 1);  // 1-based labels
    j["J"] = jj;
    j["candidates"] = rep.candidates;
    j["mode"] = rep.exhaustive ? "exhaustive" : "pruned";
    j["verdict"] = rep.all_fixed ? "all_fixed" : "counterexample";
    j["seconds"] = rep.seconds;
    if (!rep.counterexamples.empty()) {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& m : rep.counterexamples) cs.push_back(m.a);
        j["counterexamples"] = cs;
    }
    return j.dump(2);
}

}  // namespace appendixb

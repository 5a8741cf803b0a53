#pragma once

#include "adlvkit/adlv.hpp"

// Brute-force certification of the minimal twisted-stable Levi attached to a
// basic element, and of the conjugation-rigidity of its simple-reflection
// set: any sigma-fixed z mapping the set into the simple reflections must
// fix it. Pruned mode walks the Weyl orbit of the root tuple; exhaustive
// mode scans the whole Weyl group.

namespace appendixb {

using affine::BasicElement;
using rootdata::RootDatum;
using rootdata::WeylElement;
using adlv::Int;
using adlv::IntMat;
using adlv::IntVec;

struct LeviWitness {
    std::vector<int> J;  // simple indices, sorted
    IntVec v;            // the generic fixed vector used
    IntVec vbar;         // its dominant conjugate
    WeylElement z;       // minimal with z(v) = vbar
};

LeviWitness minimal_levi_J(const RootDatum& rd, const BasicElement& b);

struct UniquenessReport {
    std::vector<int> J;
    size_t candidates = 0;  // exhaustive: sigma-fixed z with simple images;
                            // pruned: orbit tuples with simple images
    bool all_fixed = true;
    bool exhaustive = false;
    bool decisive = true;   // pruned mode may defer to the exhaustive scan
    std::vector<IntMat> counterexamples;  // actions on Y, capped
    double seconds = 0;
};

UniquenessReport verify_uniqueness(const RootDatum& rd, const BasicElement& b,
                                   bool exhaustive);

// one Omega representative per nontrivial fundamental-group class
std::vector<BasicElement> basic_representatives(const RootDatum& rd);

std::string certification_json(const RootDatum& rd, const BasicElement& b,
                               const UniquenessReport& rep);

}  // namespace appendixb

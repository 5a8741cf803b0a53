#pragma once

#include <map>

#include "adlvkit/rootdata.hpp"

// Independent checks for the path-model crystals: the Weyl dimension formula
// and the Freudenthal multiplicity recursion for highest-weight modules of
// the dual group (weights in Y, roots of the dual group = coroots). These
// deliberately share no code with the crystal module.

namespace oracles {

using rootdata::RootDatum;
using adlv::BigInt;
using adlv::Int;
using adlv::IntVec;
using adlv::Rat;

// dim V_mu = prod_{alpha > 0} <alpha, mu + rho^vee> / <alpha, rho^vee>
BigInt weyl_dim(const RootDatum& rd, const IntVec& mu);

struct WeightTable {
    std::map<IntVec, Int> mult_dominant;  // dominant weight -> multiplicity

    Int mult(const RootDatum& rd, const IntVec& lam) const;
    BigInt total(const RootDatum& rd) const;  // sum over Weyl orbits
};

// all weight multiplicities of V_mu by the Freudenthal recursion
WeightTable freudenthal(const RootDatum& rd, const IntVec& mu);

}  // namespace oracles

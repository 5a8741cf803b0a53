#pragma once

#include "adlvkit/affine.hpp"

// sigma-conjugacy invariants of basic elements: Kottwitz point, Newton
// point, defect, best integral approximation, and the nonemptiness /
// dimension formulas they feed.

namespace isocrystal {

using affine::AffineMap;
using affine::BasicElement;
using affine::ExtAffineElement;
using rootdata::RootDatum;
using adlv::Int;
using adlv::IntVec;
using adlv::Rat;
using adlv::RatVec;

// class in pi_1(G)_sigma = Y / (Z Phi^vee + (1 - sigma) Y), stored as the
// canonical residue under the lattice normal form
struct KottwitzPoint {
    IntVec residue;
    bool operator==(const KottwitzPoint& o) const { return residue == o.residue; }
};

struct NewtonPoint {
    RatVec value;  // dominant rational coweight
};

// the maximal class in Y_sigma = Y / (1 - sigma) Y with matching Kottwitz
// point and sigma-average below the Newton point
struct BestApprox {
    IntVec class_residue;   // canonical residue mod (1 - sigma) Y
    IntVec representative;  // a maximizing integral coweight
    RatVec average;         // its sigma-average (raw, not dominantized)
};

KottwitzPoint kottwitz(const RootDatum& rd, const ExtAffineElement& x);
KottwitzPoint kottwitz_of_coweight(const RootDatum& rd, const IntVec& lam);

// Newton point of the twisted action: the linear part has finite order n and
// the n-th power is a pure translation t^{n nu}
NewtonPoint newton(const RootDatum& rd, const AffineMap& twist);
inline NewtonPoint newton(const RootDatum& rd, const ExtAffineElement& x) {
    return newton(rd, AffineMap::from(x).compose(AffineMap::sigma_of(rd)));
}
// the same vector before dominantization
RatVec newton_raw(const RootDatum& rd, const AffineMap& twist);

// sigma-average, dominantized (the raw variant is used for order comparisons
// on Y_sigma classes, where it is class-invariant)
RatVec sigma_average(const RootDatum& rd, const IntVec& lam);
RatVec sigma_average_raw(const RootDatum& rd, const IntVec& lam);

// dim Y^sigma - dim V_{b,sigma}, both by exact kernel computation
Int defect(const RootDatum& rd, const BasicElement& b);
Int defect_of_twist(const RootDatum& rd, const AffineMap& twist);

BestApprox ul_best(const RootDatum& rd, const BasicElement& b);

bool adlv_nonempty(const RootDatum& rd, const IntVec& mu, const BasicElement& b);

// <rho, mu - nu(b)> - defect(b)/2 ; must be a nonnegative integer
Int adlv_dim(const RootDatum& rd, const IntVec& mu, const BasicElement& b);

}  // namespace isocrystal

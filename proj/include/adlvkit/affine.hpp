#pragma once

#include <optional>

#include "adlvkit/rootdata.hpp"

// Extended affine Weyl group Y x| W_0 acting on Y_R by v -> t + w(v), affine
// roots with the sign convention a(v) = -<alpha, v> + k, the length-zero
// subgroup Omega, and the twisted calculus (lambda_gamma, dagger, natural,
// epsilon) attached to a basic element b acting through b∘sigma.

namespace affine {

using rootdata::Root;
using rootdata::RootDatum;
using rootdata::WeylElement;
using adlv::Int;
using adlv::IntMat;
using adlv::IntVec;
using adlv::Rat;
using adlv::RatVec;

struct AffineRoot {
    IntVec x;   // underlying root, X coordinates
    Int level;  // the affine function is v -> -<x, v> + level

    Rat value_at(const RatVec& v) const {
        return Rat(level) - adlv::dot(adlv::to_rat(x), v);
    }
    bool operator==(const AffineRoot& o) const {
        return x == o.x && level == o.level;
    }
};

struct ExtAffineElement {
    IntVec t;       // translation part
    WeylElement w;  // finite part; action is v -> t + w(v)

    static ExtAffineElement identity(int n) {
        return {adlv::zero_vec(n), WeylElement::identity(n)};
    }
    static ExtAffineElement translation(const IntVec& lam) {
        return {lam, WeylElement::identity(static_cast<int>(lam.size()))};
    }
    bool operator==(const ExtAffineElement& o) const {
        return t == o.t && w == o.w;
    }
    ExtAffineElement mul(const ExtAffineElement& o) const {
        return {adlv::add(t, w.apply_y(o.t)), w.mul(o.w)};
    }
    ExtAffineElement inverse() const {
        WeylElement wi = w.inverse();
        return {adlv::neg(wi.apply_y(t)), wi};
    }
    IntVec apply_y(const IntVec& v) const { return adlv::add(t, w.apply_y(v)); }
    RatVec apply_y(const RatVec& v) const {
        return adlv::add(adlv::to_rat(t), w.apply_y(v));
    }
};

// A general affine-linear lattice automorphism; used for the twisted action
// b∘sigma (and its conjugates), whose linear part need not lie in W_0.
struct AffineMap {
    IntMat lin_y, lin_x;
    IntVec t;

    static AffineMap identity(int n) {
        return {IntMat::identity(n), IntMat::identity(n), adlv::zero_vec(n)};
    }
    static AffineMap from(const ExtAffineElement& x) {
        return {x.w.on_y, x.w.on_x, x.t};
    }
    static AffineMap sigma_of(const RootDatum& rd) {
        return {rd.sigma_y(), rd.sigma_x(), adlv::zero_vec(rd.rank_y())};
    }
    bool operator==(const AffineMap& o) const {
        return t == o.t && lin_y == o.lin_y;
    }
    AffineMap compose(const AffineMap& o) const {  // this after o
        return {lin_y.mul(o.lin_y), lin_x.mul(o.lin_x),
                adlv::add(t, lin_y.apply(o.t))};
    }
    AffineMap inverse() const {
        IntMat iy = lin_x.transpose(), ix = lin_y.transpose();
        return {iy, ix, adlv::neg(iy.apply(t))};
    }
    IntVec apply_y(const IntVec& v) const { return adlv::add(t, lin_y.apply(v)); }
    RatVec apply_y(const RatVec& v) const {
        return adlv::add(adlv::to_rat(t), lin_y.apply(v));
    }
    // image of an affine root under the isometry: functions transform by the
    // inverse on the argument
    AffineRoot apply(const AffineRoot& a) const {
        IntVec bx = lin_x.apply(a.x);
        return {bx, a.level + adlv::dot(bx, t)};
    }
    AffineMap conjugate(const AffineMap& x) const {  // this x this^{-1}
        return compose(x).compose(inverse());
    }
};

// A length-zero element of the extended affine Weyl group, standing for a
// basic sigma-conjugacy class. carries the twisted action b∘sigma.
struct BasicElement {
    ExtAffineElement omega;

    AffineMap twist(const RootDatum& rd) const {
        return AffineMap::from(omega).compose(AffineMap::sigma_of(rd));
    }
};

enum class OrbitCase { strongly_orthogonal, alpha_plus_alpha_d, infinite };

struct OrbitData {
    int seed = -1;                       // root index of alpha
    std::vector<int> root_orbit;         // orbit of alpha under p(b)sigma
    std::vector<AffineRoot> affine_orbit;  // one period of the b sigma orbit
    bool finite = false;                 // the generated reflection group
    std::optional<ExtAffineElement> longest;
    OrbitCase case_tag = OrbitCase::infinite;
};

// (alpha, 0) for alpha < 0, (alpha, 1) otherwise
AffineRoot tilde_root(const RootDatum& rd, const Root& alpha);

bool affine_root_positive(const RootDatum& rd, const AffineRoot& a);

// reflection through the zero locus of a: t^{k alpha^vee} s_alpha
ExtAffineElement affine_reflection(const RootDatum& rd, const AffineRoot& a);

// length by the closed-form inversion count over the affine roots
Int aff_length(const RootDatum& rd, const ExtAffineElement& x);

// the Omega-component of t^y; its class in pi_1 = Y / Z Phi^vee is [y]
ExtAffineElement omega_part(const RootDatum& rd, const IntVec& y);

struct OmegaGenerator {
    ExtAffineElement element;
    IntVec class_rep;  // in Y
    Int order = 0;     // order in pi_1(G); 0 = infinite
};

// generators of Omega realizing pi_1(G) = Y / Z Phi^vee
std::vector<OmegaGenerator> omega_generators(const RootDatum& rd);

// <gamma, lambda> for gamma < 0 and <gamma, lambda> - 1 otherwise
Int lambda_gamma(const RootDatum& rd, const IntVec& lam, const Root& gamma);

// the unique w in W_0 with w(Phi^+) = {gamma : lambda_gamma >= 0}, computed
// as the chamber of lambda pushed off the walls in the antidominant
// direction (symbolic perturbation by the sum of fundamental coweights)
WeylElement epsilon_of(const RootDatum& rd, const IntVec& lam);

// dagger = twist(lambda), natural = dagger - lambda
std::pair<IntVec, IntVec> natural_dagger(const AffineMap& twist, const IntVec& lam);

// orbit of alpha under the linear part and of tilde(alpha) under the twist,
// with finiteness of the generated reflection group and its longest element
OrbitData orbit_data(const RootDatum& rd, const AffineMap& twist, int root_idx);

bool fixed_by_twist(const AffineMap& twist, const ExtAffineElement& x);

// canonical text form t^(c1,...,cn)*s_{i1} s_{i2} ...
std::string to_text(const RootDatum& rd, const ExtAffineElement& x);

inline ExtAffineElement power(const ExtAffineElement& x, Int k) {
    int n = static_cast<int>(x.t.size());
    ExtAffineElement base = k >= 0 ? x : x.inverse();
    ExtAffineElement r = ExtAffineElement::identity(n);
    for (Int i = 0; i < (k >= 0 ? k : -k); ++i) r = r.mul(base);
    return r;
}

}  // namespace affine

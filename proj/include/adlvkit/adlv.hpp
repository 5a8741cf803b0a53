#pragma once

#include <map>
#include <optional>
#include <string>

#include "adlvkit/crystal.hpp"

// Stratum combinatorics for the affine Deligne-Lusztig varieties attached to
// a minuscule dominant mu and a basic b: membership of a coweight lambda in
// the nonempty locus, the root set R(lambda) computing the stratum
// dimension, top strata, their equivalence classes under the twisted
// centralizer, small coweights with their parahoric types, and the GL_n
// superbasic table machinery.

namespace strata {

using affine::AffineMap;
using affine::BasicElement;
using affine::ExtAffineElement;
using rootdata::RootDatum;
using rootdata::WeylElement;
using adlv::Int;
using adlv::IntVec;
using adlv::Rat;
using adlv::RatVec;

struct LambdaReport {
    IntVec lambda, dagger, natural;
    bool in_A = false;
    std::vector<int> R_set;  // root indices, sorted
    Int stratum_dim = 0;
    bool is_top = false;
    std::optional<bool> is_small;
    std::optional<std::vector<int>> Pi_of;  // indices into all_roots
};

struct ClassPartition {
    std::vector<IntVec> representatives;  // first enumerated lambda per class
    std::map<IntVec, int> class_of;       // enumerated top lambda -> class id
    Int window_bound = 0;
    bool stabilized = false;
    Int max_stratum_dim = -1;  // over the enumerated nonempty strata
};

struct SuperbasicTable {
    int n = 0, d = 0;
    Int m = 0;
    std::vector<IntVec> lambda_tuple;
    std::vector<IntVec> a_table;  // d rows, strictly decreasing
    std::vector<WeylElement> eps_seq;
    std::vector<WeylElement> w_seq;
    std::vector<IntVec> lambda_flat;
    Int dim_value = 0;
    bool is_top = false;
};

struct Move {
    IntVec target;
    std::string tag;  // "omega" | "orbit_longest" | "levi_omega"
};

// abelian group Omega_{M_v} cap J_b acting affinely on Y; used both for the
// sanctioned equivalence moves and for canonical orbit representatives
struct GammaGroup {
    std::vector<ExtAffineElement> generators;
    std::vector<int> power_period;  // g^period is a pure translation
    adlv::lattice::RowHNF translation_lattice;
    std::vector<std::vector<AffineMap>> powers;  // per generator, 0..period-1
};

// integer vector of the fixed space of p(b sigma) such that any root
// vanishing on it vanishes on the whole fixed space
IntVec generic_vector(const RootDatum& rd, const BasicElement& b);

bool is_superbasic(const RootDatum& rd, const BasicElement& b);

LambdaReport classify_lambda(const RootDatum& rd, const IntVec& mu,
                             const BasicElement& b, const IntVec& lam);

// top criterion via the Levi M_{bar v} recursion and the orbit sign
// condition; asserts agreement with the |R(lambda)| test
bool is_top_by_criterion(const RootDatum& rd, const IntVec& mu,
                         const BasicElement& b, const IntVec& lam,
                         const IntVec& v);

// smallness and the parahoric type Pi(lambda) of a top stratum
std::pair<bool, std::vector<int>> small_and_type(const RootDatum& rd,
                                                 const IntVec& mu,
                                                 const BasicElement& b,
                                                 const IntVec& lam);

// the sanctioned class-preserving moves out of a top lambda
std::vector<Move> equivalence_moves(const RootDatum& rd, const IntVec& mu,
                                    const BasicElement& b, const IntVec& lam);

GammaGroup levi_omega_centralizer(const RootDatum& rd, const AffineMap& twist,
                                  const RatVec& v);

// canonical representative of the Gamma-orbit of lam (minimum over the
// finite exponent box, reduced modulo the translation sublattice)
IntVec gamma_canonical(const GammaGroup& g, const IntVec& lam);

// default enumeration window: <theta, mu> plus twice the Coxeter number
Int default_window(const RootDatum& rd, const IntVec& mu);

// visit every lambda in the nonempty locus whose simple pairings are bounded
// by the window (directions with vanishing pairings are pinned to a
// transversal, they carry no stratum data)
void enumerate_nonempty(const RootDatum& rd, const IntVec& mu,
                        const BasicElement& b, Int window,
                        const std::function<void(const IntVec&)>& visit);

// enumerate the nonempty locus inside the window, keep the top strata in
// A(v), and count their classes; window 0 means the default bound
ClassPartition count_top_classes(const RootDatum& rd, const IntVec& mu,
                                 const BasicElement& b, Int window = 0);

SuperbasicTable superbasic_table(int n, int d, Int m,
                                 const std::vector<IntVec>& lambda_tuple);

// eps_lambda^{-1}(lambda natural); indexes the crystal weight of a top
// superbasic stratum
IntVec lambda_flat(const RootDatum& rd, const BasicElement& b, const IntVec& lam);

// top test through lambda_flat: in the Weyl orbit of mu and congruent to the
// best integral approximation modulo (1 - sigma) Y
bool top_by_flat(const RootDatum& rd, const IntVec& mu, const BasicElement& b,
                 const IntVec& lam);

// JSON row per report, stable field order
std::string report_json(const RootDatum& rd, const LambdaReport& rep,
                        std::optional<int> class_id = std::nullopt);

}  // namespace strata

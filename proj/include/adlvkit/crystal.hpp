#pragma once

#include <map>
#include <optional>

#include "adlvkit/isocrystal.hpp"

// Littelmann path model for the highest-weight crystals of the dual group.
// Weights live in Y; the roots of the dual group are the coroots, so the
// root operators act through the height functions t -> <alpha_i, pi(t)> and
// step reflections lambda -> lambda - <alpha_i, lambda> alpha_i^vee, all
// inside the ambient datum.

namespace crystal {

using isocrystal::BestApprox;
using rootdata::RootDatum;
using adlv::Int;
using adlv::IntVec;
using adlv::Rat;
using adlv::RatVec;

// A piecewise-linear path from the origin, stored as its polyline of
// displacement steps. Paths are taken modulo reparametrization, so the
// canonical form merges consecutive positively-parallel steps; equality of
// canonical forms is path equality.
struct Path {
    std::vector<RatVec> steps;

    RatVec endpoint(int n) const;
    static Path straight(const IntVec& target);
    void canonicalize();
    bool operator<(const Path& o) const { return steps < o.steps; }
    bool operator==(const Path& o) const { return steps == o.steps; }
};

struct Crystal {
    IntVec highest_weight;
    std::vector<Path> elements;           // element 0 is the highest path
    std::vector<IntVec> weights;          // endpoint per element
    std::vector<std::vector<int>> f_edge; // [simple index][element] -> element or -1
    std::map<Path, int> index_of;

    size_t size() const { return elements.size(); }
};

// lowering and raising operators; absence is a value
std::optional<Path> root_op_f(const RootDatum& rd, int i, const Path& p);
std::optional<Path> root_op_e(const RootDatum& rd, int i, const Path& p);

// closure of the straight path under the lowering operators
Crystal crystal_generate(const RootDatum& rd, const IntVec& mu,
                         size_t element_cap = 2000000);

Int weight_mult(const Crystal& c, const IntVec& lam);
// count of elements whose weight lies in the class of ul modulo (1-sigma)Y
Int weight_mult_class(const RootDatum& rd, const Crystal& c, const BestApprox& ul);

// multiplicities of the highest-weight crystals in the concatenation of the
// B_{mu_i}; keys are the dominant highest weights
std::map<IntVec, Int> tensor_decompose(const RootDatum& rd,
                                       const std::vector<IntVec>& mus,
                                       size_t element_cap = 2000000);

// decomposition of B_mu under the Levi spanned by the simple indices in J:
// multiplicities of the M-highest elements, bucketed by M-dominant weight
std::map<IntVec, Int> restrict_levi(const RootDatum& rd, const IntVec& mu,
                                    const std::vector<int>& J,
                                    size_t element_cap = 2000000);

// JSON graph form: nodes carry weight and canonical path, edges the simple
// index of the lowering operator
std::string export_json(const RootDatum& rd, const Crystal& c);

}  // namespace crystal

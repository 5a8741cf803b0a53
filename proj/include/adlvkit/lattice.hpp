#pragma once

#include <optional>

#include "adlvkit/matrix.hpp"

// Integer lattice utilities: Hermite/Smith reduction, integral solving,
// kernels, canonical residues modulo a sublattice. These back the various
// lattice quotients (fundamental group, sigma-coinvariants) and the affine
// fiber computations elsewhere in the library.

namespace adlv {
namespace lattice {

// Row-style Hermite normal form of the lattice spanned by the given rows.
// Pivots are positive, strictly to the right as rows descend, entries above
// each pivot are reduced into [0, pivot). Zero rows are dropped.
struct RowHNF {
    IntMat basis;                 // rank x n
    std::vector<int> pivot_col;   // per basis row
    int n = 0;

    int rank() const { return basis.rows; }
};

RowHNF row_hnf(const std::vector<IntVec>& rows, int n);

// Canonical representative of v modulo the lattice.
IntVec reduce_mod(const RowHNF& L, IntVec v);

inline bool in_lattice(const RowHNF& L, const IntVec& v) {
    return is_zero(reduce_mod(L, v));
}

// Column echelon form A * U = H with U unimodular; used for integral solving
// and kernels.
struct ColEchelon {
    IntMat H;  // m x n, echelon by columns
    IntMat U;  // n x n unimodular
    std::vector<int> pivot_row;  // per pivot column 0..rank-1
    int rank = 0;
};

ColEchelon col_echelon(IntMat A);

// One integral solution of A x = b, if any.
std::optional<IntVec> solve_integral(const IntMat& A, const IntVec& b);

// Basis of the integer kernel lattice {x : A x = 0}. Also spans the rational
// kernel.
std::vector<IntVec> kernel_basis(const IntMat& A);

// Intersection of the lattices spanned by the two sets of rows.
std::vector<IntVec> intersect(const std::vector<IntVec>& gens1,
                              const std::vector<IntVec>& gens2, int n);

// Generators of the quotient (lattice spanned by `big`) / (lattice spanned by
// `small`), small must be contained in big. order == 0 means infinite order.
struct QuotientGen {
    IntVec rep;  // in ambient coordinates
    Int order = 0;
};

std::vector<QuotientGen> quotient_generators(const std::vector<IntVec>& big,
                                             const std::vector<IntVec>& small,
                                             int n);

// Unique rational solution of A x = b where A has full column rank; nullopt
// if the system is inconsistent. Throws if columns are dependent.
std::optional<RatVec> solve_unique_rational(const IntMat& A, const RatVec& b);

// Some rational solution of A x = b, or nullopt if inconsistent.
std::optional<RatVec> solve_any_rational(const IntMat& A, const RatVec& b);

}  // namespace lattice
}  // namespace adlv

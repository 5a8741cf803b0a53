#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "adlvkit/lattice.hpp"
#include "adlvkit/matrix.hpp"

// Exact based root data for types A-D, E6, E7 in adjoint, simply connected
// and GL_n (product) form, with Weyl group machinery and a diagram
// automorphism sigma.
//
// Coordinate conventions are chosen so that the pairing between the
// character lattice X and the cocharacter lattice Y is always the dot
// product:
//   - gl:      X and Y in the standard bases e_i / e_i^vee,
//   - adjoint: X in the simple-root basis, Y in the fundamental-coweight
//              basis,
//   - sc:      X in the fundamental-weight basis, Y in the simple-coroot
//              basis.

namespace rootdata {

using adlv::Int;
using adlv::IntMat;
using adlv::IntVec;
using adlv::Rat;
using adlv::RatVec;

struct Root {
    IntVec x;              // coordinates in the X basis
    IntVec coroot;         // coordinates of the coroot in the Y basis
    IntVec simple_coeffs;  // expansion in simple roots
    bool positive = false; // recomputed from simple_coeffs on construction
};

// A Weyl group element, stored as its action on Y together with the
// contragredient action on X. Both matrices preserve the dot pairing, so the
// inverse comes for free by transposing.
struct WeylElement {
    IntMat on_y;
    IntMat on_x;

    static WeylElement identity(int n) {
        return {IntMat::identity(n), IntMat::identity(n)};
    }
    bool is_identity() const { return on_y.is_identity(); }
    bool operator==(const WeylElement& o) const { return on_y == o.on_y; }

    WeylElement mul(const WeylElement& o) const {
        return {on_y.mul(o.on_y), on_x.mul(o.on_x)};
    }
    WeylElement inverse() const {
        return {on_x.transpose(), on_y.transpose()};
    }
    IntVec apply_y(const IntVec& v) const { return on_y.apply(v); }
    RatVec apply_y(const RatVec& v) const { return on_y.apply(v); }
    IntVec apply_x(const IntVec& v) const { return on_x.apply(v); }
};

enum class Isogeny { adjoint, simply_connected, gl_product };

struct DatumSpec {
    char letter = 'A';
    int rank = 1;
    Isogeny isogeny = Isogeny::adjoint;
    int copies = 1;          // product of d copies with cyclic twist
    std::string sigma = "id";  // id | flip
};

DatumSpec parse_datum_spec(const std::string& text);

class RootDatum {
  public:
    // --- basic data -------------------------------------------------------
    int rank_y() const { return n_; }
    const std::vector<Root>& all_roots() const { return roots_; }
    const std::vector<int>& simple() const { return simple_; }  // indices into all_roots
    const Root& root(int i) const { return roots_[i]; }
    const Root& simple_root(int k) const { return roots_[simple_[k]]; }
    int num_simple() const { return static_cast<int>(simple_.size()); }
    Isogeny isogeny() const { return isogeny_; }
    const std::string& spec_text() const { return spec_text_; }
    int copies() const { return copies_; }

    int root_index(const IntVec& x) const;  // -1 if not a root
    bool is_root(const IntVec& x) const { return root_index(x) >= 0; }

    static Int pairing(const IntVec& x, const IntVec& y) { return adlv::dot(x, y); }
    Int pair_simple(int k, const IntVec& lam) const {
        return adlv::dot(simple_root(k).x, lam);
    }

    // diagram automorphism
    const IntMat& sigma_y() const { return sigma_y_; }
    const IntMat& sigma_x() const { return sigma_x_; }
    int sigma_order() const { return sigma_order_; }
    IntVec apply_sigma_y(const IntVec& v) const { return sigma_y_.apply(v); }

    // half-sum of positive roots, in X coordinates
    const RatVec& rho() const { return rho_; }
    // interior point of the base alcove with <alpha_i, p> = 1/(h_c + 1)
    const RatVec& alcove_point() const { return alcove_point_; }

    // connected components of the Dynkin diagram: lists of simple indices,
    // plus the highest root and Coxeter number of each component
    const std::vector<std::vector<int>>& components() const { return components_; }
    const std::vector<int>& highest_roots() const { return highest_; }
    const std::vector<int>& coxeter_numbers() const { return coxeter_; }
    int max_coxeter_number() const;

    // --- operations -------------------------------------------------------
    IntVec reflect(const Root& alpha, const IntVec& lam) const;
    RatVec reflect(const Root& alpha, const RatVec& lam) const;

    WeylElement simple_reflection(int k) const;
    WeylElement reflection(const Root& alpha) const;
    // fast left multiplication w -> s_k * w
    WeylElement left_mul_simple(int k, const WeylElement& w) const;

    bool is_dominant(const IntVec& lam) const;
    bool is_dominant(const RatVec& lam) const;

    // unique dominant W-conjugate together with the minimal w : w(lam) = bar
    std::pair<IntVec, WeylElement> dominant_rep(const IntVec& lam) const;
    std::pair<RatVec, WeylElement> dominant_rep(const RatVec& lam) const;

    // v <= v' in the dominance order: v' - v a nonnegative rational
    // combination of positive coroots
    bool leq_dominance(const RatVec& v, const RatVec& vp) const;

    bool is_minuscule(const IntVec& mu) const;

    // minus simple roots plus the highest roots, as indices into all_roots
    std::vector<int> pi_set() const;

    // Weyl group element utilities
    int length(const WeylElement& w) const;
    std::vector<int> word_of(const WeylElement& w) const;
    WeylElement from_word(const std::vector<int>& word) const;
    // apply w to a root, as a root index
    int apply_to_root(const WeylElement& w, int root_idx) const;

    // Streaming enumeration of the Weyl group by breadth-first closure over
    // simple reflections; visits each element exactly once and returns |W|.
    // Memory stays proportional to the largest pair of adjacent length
    // layers.
    size_t enumerate_weyl(const std::function<void(const WeylElement&)>& visit) const;
    size_t weyl_order() const { return enumerate_weyl(nullptr); }
    // leaner variant carrying only the action on Y
    size_t enumerate_weyl_y(const std::function<void(const IntMat&)>& visit) const;
    // reconstruct the full element from its action on Y
    WeylElement weyl_from_y(const IntMat& on_y) const;

    // sublattice generator rows
    std::vector<IntVec> coroot_lattice_rows() const;   // Z Phi^vee
    std::vector<IntVec> one_minus_sigma_rows() const;  // (1 - sigma) Y

    // Levi subdatum spanned by the given simple indices (same lattice Y)
    RootDatum levi(const std::vector<int>& simple_subset) const;
    // Levi of the centralizer of a (rational) vector v: simples vanishing on v
    RootDatum levi_of_vector(const RatVec& v) const;
    std::vector<int> simples_vanishing_on(const RatVec& v) const;
    // subdatum of an arbitrary root subsystem, seeded by a simple system
    // given as indices into all_roots
    RootDatum levi_subsystem(const std::vector<int>& base_root_indices) const;
    // simple system of the subsystem of roots vanishing on v: the
    // indecomposable positive ones
    std::vector<int> subsystem_base_on(const RatVec& v) const;

    // dominant nonzero minuscule coweights, one per fundamental-group class
    // that admits one (non-product data only)
    std::vector<IntVec> minuscule_reps() const;

    // --- construction -----------------------------------------------------
    static RootDatum build(const DatumSpec& spec);
    static RootDatum build(const std::string& spec_text) {
        return build(parse_datum_spec(spec_text));
    }

  private:
    void finalize();  // derives components, rho, alcove point; validates

    int n_ = 0;
    Isogeny isogeny_ = Isogeny::adjoint;
    int copies_ = 1;
    // integer form of the projection onto simple-coroot coordinates:
    // coefficients of diff are cone_P_ * diff / cone_q_
    IntMat cone_P_;
    Int cone_q_ = 1;
    std::string spec_text_;
    std::vector<Root> roots_;
    std::vector<int> simple_;
    std::unordered_map<IntVec, int, adlv::IntVecHash> root_of_x_;
    IntMat sigma_y_, sigma_x_;
    int sigma_order_ = 1;
    RatVec rho_;
    RatVec alcove_point_;
    std::vector<std::vector<int>> components_;
    std::vector<int> highest_;
    std::vector<int> coxeter_;
};

}  // namespace rootdata

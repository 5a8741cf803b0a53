#include "adlvkit/affine.hpp"

#include <algorithm>

namespace affine {

using adlv::Error;
namespace lattice = adlv::lattice;

AffineRoot tilde_root(const RootDatum& rd, const Root& alpha) {
    ADLV_CHECK(rd.is_root(alpha.x), "tilde_root: not a root");
    return {alpha.x, alpha.positive ? Int(1) : Int(0)};
}

bool affine_root_positive(const RootDatum& rd, const AffineRoot& a) {
    int idx = rd.root_index(a.x);
    ADLV_CHECK(idx >= 0, "affine root over a non-root");
    return rd.root(idx).positive ? a.level >= 1 : a.level >= 0;
}

ExtAffineElement affine_reflection(const RootDatum& rd, const AffineRoot& a) {
    int idx = rd.root_index(a.x);
    ADLV_CHECK(idx >= 0, "affine root over a non-root");
    const Root& alpha = rd.root(idx);
    return {adlv::scale(a.level, alpha.coroot), rd.reflection(alpha)};
}

Int aff_length(const RootDatum& rd, const ExtAffineElement& x) {
    // ell(t^lam w) = sum_{alpha>0, w(alpha)>0} |<w(alpha), lam>|
    //              + sum_{alpha>0, w(alpha)<0} |<w(alpha), lam> + 1|
    Int len = 0;
    for (const Root& r : rd.all_roots()) {
        if (!r.positive) continue;
        IntVec beta = x.w.apply_x(r.x);
        int bidx = rd.root_index(beta);
        ADLV_CHECK(bidx >= 0, "Weyl image is not a root");
        Int p = RootDatum::pairing(beta, x.t);
        len += std::llabs(rd.root(bidx).positive ? p : p + 1);
    }
    return len;
}

ExtAffineElement omega_part(const RootDatum& rd, const IntVec& y) {
    // pull y + (alcove point) back into the base alcove by simple affine
    // reflections; what is left of t^y is its Omega-component
    RatVec q = adlv::add(adlv::to_rat(y), rd.alcove_point());
    ExtAffineElement u = ExtAffineElement::identity(rd.rank_y());
    std::vector<AffineRoot> walls;
    for (int idx : rd.pi_set()) walls.push_back(tilde_root(rd, rd.root(idx)));
    size_t guard = 0;
    while (true) {
        bool moved = false;
        for (const AffineRoot& a : walls) {
            if (a.value_at(q) < 0) {
                ExtAffineElement s = affine_reflection(rd, a);
                q = s.apply_y(q);
                u = s.mul(u);
                moved = true;
            }
        }
        if (!moved) break;
        ADLV_CHECK(++guard < 100000, "alcove reduction did not terminate");
    }
    ExtAffineElement omega = u.mul(ExtAffineElement::translation(y));
    ADLV_CHECK(aff_length(rd, omega) == 0, "Omega-part has nonzero length");
    return omega;
}

std::vector<OmegaGenerator> omega_generators(const RootDatum& rd) {
    std::vector<IntVec> full;
    for (int i = 0; i < rd.rank_y(); ++i) {
        IntVec e(rd.rank_y(), 0);
        e[i] = 1;
        full.push_back(e);
    }
    auto gens = lattice::quotient_generators(full, rd.coroot_lattice_rows(),
                                             rd.rank_y());
    std::vector<OmegaGenerator> out;
    for (const auto& g : gens) {
        OmegaGenerator og;
        og.element = omega_part(rd, g.rep);
        og.class_rep = g.rep;
        og.order = g.order;
        if (og.element == ExtAffineElement::identity(rd.rank_y())) continue;
        out.push_back(og);
    }
    return out;
}

Int lambda_gamma(const RootDatum& rd, const IntVec& lam, const Root& gamma) {
    ADLV_CHECK(rd.is_root(gamma.x), "lambda_gamma: not a root");
    Int p = RootDatum::pairing(gamma.x, lam);
    return gamma.positive ? p - 1 : p;
}

WeylElement epsilon_of(const RootDatum& rd, const IntVec& lam) {
    // chamber of lam - eps*delta, delta the sum of the fundamental coweights;
    // pairings become lexicographic pairs (<gamma,lam>, -<gamma,delta>)
    const int s = rd.num_simple();
    RatVec delta(rd.rank_y(), Rat(0));
    if (s > 0) {
        IntMat G(s, s);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j)
                G.at(i, j) = adlv::dot(rd.simple_root(i).x, rd.simple_root(j).coroot);
        RatVec ones(s, Rat(1));
        auto sol = lattice::solve_unique_rational(G, ones);
        ADLV_CHECK(sol.has_value(), "fundamental coweight system inconsistent");
        for (int j = 0; j < s; ++j)
            for (int i = 0; i < rd.rank_y(); ++i)
                delta[i] += (*sol)[j] * rd.simple_root(j).coroot[i];
    }
    RatVec a = adlv::to_rat(lam), b = adlv::scale(Rat(-1), delta);
    WeylElement w = WeylElement::identity(rd.rank_y());
    size_t guard = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int k = 0; k < s; ++k) {
            RatVec ax = adlv::to_rat(rd.simple_root(k).x);
            Rat pa = adlv::dot(ax, a), pb = adlv::dot(ax, b);
            if (pa < 0 || (pa == 0 && pb < 0)) {
                a = rd.reflect(rd.simple_root(k), a);
                b = rd.reflect(rd.simple_root(k), b);
                w = rd.left_mul_simple(k, w);
                moved = true;
                ADLV_CHECK(++guard < 1000000, "epsilon chamber walk did not terminate");
            }
        }
    }
    WeylElement eps = w.inverse();
    // the defining property is an exact chamber condition; verify it
    for (const Root& r : rd.all_roots()) {
        if (!r.positive) continue;
        int img = rd.root_index(eps.apply_x(r.x));
        ADLV_CHECK(img >= 0, "epsilon image is not a root");
        ADLV_CHECK(lambda_gamma(rd, lam, rd.root(img)) >= 0,
                   "epsilon chamber is not the lambda_gamma cone");
    }
    return eps;
}

std::pair<IntVec, IntVec> natural_dagger(const AffineMap& twist, const IntVec& lam) {
    IntVec dag = twist.apply_y(lam);
    return {dag, adlv::sub(dag, lam)};
}

OrbitData orbit_data(const RootDatum& rd, const AffineMap& twist, int root_idx) {
    OrbitData od;
    od.seed = root_idx;
    // orbit of the root under the linear part
    int cur = root_idx;
    size_t guard = 0;
    do {
        od.root_orbit.push_back(cur);
        cur = rd.root_index(twist.lin_x.apply(rd.root(cur).x));
        ADLV_CHECK(cur >= 0, "twist image is not a root");
        ADLV_CHECK(++guard < 10000, "root orbit did not close");
    } while (cur != root_idx);
    const size_t r = od.root_orbit.size();

    // one period of the affine orbit; closure fails iff the level drifts
    AffineRoot a = tilde_root(rd, rd.root(root_idx));
    for (size_t i = 0; i < r; ++i) {
        od.affine_orbit.push_back(a);
        a = twist.apply(a);
    }
    bool closed = (a == od.affine_orbit[0]);

    // the generated reflection group is finite iff the walls share a point
    bool consistent = false;
    if (closed) {
        IntMat A(static_cast<int>(r), rd.rank_y());
        RatVec rhs(r);
        for (size_t i = 0; i < r; ++i) {
            for (int j = 0; j < rd.rank_y(); ++j)
                A.at(static_cast<int>(i), j) = od.affine_orbit[i].x[j];
            rhs[i] = od.affine_orbit[i].level;
        }
        consistent = lattice::solve_any_rational(A, rhs).has_value();
    }
    if (!closed || !consistent) {
        od.finite = false;
        od.case_tag = OrbitCase::infinite;
        return od;
    }
    od.finite = true;

    auto strongly_orthogonal = [&](const std::vector<int>& orbit) {
        for (size_t i = 0; i < orbit.size(); ++i)
            for (size_t j = i + 1; j < orbit.size(); ++j) {
                const Root& ri = rd.root(orbit[i]);
                const Root& rj = rd.root(orbit[j]);
                if (RootDatum::pairing(ri.x, rj.coroot) != 0) return false;
                if (rd.is_root(adlv::add(ri.x, rj.x))) return false;
                if (rd.is_root(adlv::sub(ri.x, rj.x))) return false;
            }
        return true;
    };
    auto product_over = [&](const std::vector<int>& orbit) {
        ExtAffineElement p = ExtAffineElement::identity(rd.rank_y());
        for (int idx : orbit)
            p = p.mul(affine_reflection(rd, tilde_root(rd, rd.root(idx))));
        return p;
    };

    if (strongly_orthogonal(od.root_orbit)) {
        od.case_tag = OrbitCase::strongly_orthogonal;
        od.longest = product_over(od.root_orbit);
    } else {
        // the remaining finite shape: even orbit with <alpha^d, alpha^vee> = -1
        ADLV_CHECK(r % 2 == 0, "unexpected finite orbit shape");
        const size_t d = r / 2;
        const Root& al = rd.root(root_idx);
        const Root& ald = rd.root(od.root_orbit[d]);
        ADLV_CHECK(RootDatum::pairing(ald.x, al.coroot) == -1,
                   "unexpected finite orbit pairing");
        int xi = rd.root_index(adlv::add(al.x, ald.x));
        ADLV_CHECK(xi >= 0, "alpha + alpha^d is not a root");
        std::vector<int> xi_orbit;
        int c = xi;
        do {
            xi_orbit.push_back(c);
            c = rd.root_index(twist.lin_x.apply(rd.root(c).x));
        } while (c != xi);
        ADLV_CHECK(xi_orbit.size() == d, "xi orbit has unexpected size");
        ADLV_CHECK(strongly_orthogonal(xi_orbit), "xi orbit is not strongly orthogonal");
        od.case_tag = OrbitCase::alpha_plus_alpha_d;
        od.longest = product_over(xi_orbit);
    }
    ADLV_CHECK(od.longest->mul(*od.longest) ==
                   ExtAffineElement::identity(rd.rank_y()),
               "longest element is not an involution");
    ADLV_CHECK(fixed_by_twist(twist, *od.longest),
               "longest element is not fixed by the twist");
    return od;
}

bool fixed_by_twist(const AffineMap& twist, const ExtAffineElement& x) {
    return twist.conjugate(AffineMap::from(x)) == AffineMap::from(x);
}

std::string to_text(const RootDatum& rd, const ExtAffineElement& x) {
    std::string s = "t^" + adlv::to_string(x.t);
    auto word = rd.word_of(x.w);
    if (!word.empty()) {
        s += "*";
        for (size_t i = 0; i < word.size(); ++i) {
            if (i) s += " ";
            s += "s" + std::to_string(word[i] + 1);
        }
    }
    return s;
}

}  // namespace affine

#include "adlvkit/adlv.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "json.hpp"

namespace strata {

using adlv::Error;
namespace lattice = adlv::lattice;

namespace {

Int lambda_g(const RootDatum& rd, const IntVec& lam, int root_idx) {
    return affine::lambda_gamma(rd, lam, rd.root(root_idx));
}

std::vector<IntVec> kernel_of_twist(const RootDatum& rd, const AffineMap& tw) {
    adlv::IntMat A = tw.lin_y;
    for (int i = 0; i < A.rows; ++i) A.at(i, i) -= 1;
    return lattice::kernel_basis(A);
}

bool vector_is_central(const RootDatum& rd, const IntVec& u) {
    for (int k = 0; k < rd.num_simple(); ++k)
        if (rd.pair_simple(k, u) != 0) return false;
    return true;
}

// Weyl orbit of mu as a sorted list
std::vector<IntVec> weyl_orbit(const RootDatum& rd, const IntVec& mu) {
    std::set<IntVec> orbit{mu};
    std::deque<IntVec> queue{mu};
    while (!queue.empty()) {
        IntVec v = queue.front();
        queue.pop_front();
        for (int k = 0; k < rd.num_simple(); ++k) {
            IntVec nv = rd.reflect(rd.simple_root(k), v);
            if (orbit.insert(nv).second) queue.push_back(nv);
        }
    }
    return {orbit.begin(), orbit.end()};
}

WeylElement sigma_twist_weyl(const RootDatum& rd, const WeylElement& z) {
    // sigma z sigma^{-1}
    adlv::IntMat sy = rd.sigma_y(), sx = rd.sigma_x();
    adlv::IntMat sy_inv = sx.transpose(), sx_inv = sy.transpose();
    return {sy.mul(z.on_y).mul(sy_inv), sx.mul(z.on_x).mul(sx_inv)};
}

IntVec natural_of(const RootDatum& rd, const BasicElement& b, const IntVec& lam) {
    return affine::natural_dagger(b.twist(rd), lam).second;
}

bool in_A_of_v(const RootDatum& rd, const AffineMap& tw, const IntVec& v,
               const IntVec& lam) {
    // lambda_alpha >= 0 for every root positive on v
    (void)tw;
    for (size_t i = 0; i < rd.all_roots().size(); ++i) {
        if (RootDatum::pairing(rd.root(static_cast<int>(i)).x, v) <= 0) continue;
        if (lambda_g(rd, lam, static_cast<int>(i)) < 0) return false;
    }
    return true;
}

}  // namespace

IntVec generic_vector(const RootDatum& rd, const BasicElement& b) {
    AffineMap tw = b.twist(rd);
    std::vector<IntVec> ker = kernel_of_twist(rd, tw);
    const int r = static_cast<int>(ker.size());
    if (r == 0) return adlv::zero_vec(rd.rank_y());
    auto generic = [&](const IntVec& v) {
        for (const auto& root : rd.all_roots()) {
            if (RootDatum::pairing(root.x, v) != 0) continue;
            for (const auto& u : ker)
                if (RootDatum::pairing(root.x, u) != 0) return false;
        }
        return true;
    };
    for (Int bound = 1; bound <= 64; ++bound) {
        std::vector<Int> c(r, -bound);
        while (true) {
            IntVec v(rd.rank_y(), 0);
            for (int j = 0; j < r; ++j) v = adlv::add(v, adlv::scale(c[j], ker[j]));
            if (generic(v)) return v;
            int j = 0;
            while (j < r && c[j] == bound) c[j++] = -bound;
            if (j == r) break;
            ++c[j];
        }
    }
    throw Error("no generic vector found (search cap exceeded)");
}

bool is_superbasic(const RootDatum& rd, const BasicElement& b) {
    for (const auto& u : kernel_of_twist(rd, b.twist(rd)))
        if (!vector_is_central(rd, u)) return false;
    return true;
}

LambdaReport classify_lambda(const RootDatum& rd, const IntVec& mu,
                             const BasicElement& b, const IntVec& lam) {
    ADLV_CHECK(rd.is_dominant(mu), "classify_lambda: mu must be dominant");
    ADLV_CHECK(rd.is_minuscule(mu), "classify_lambda: mu must be minuscule");
    AffineMap tw = b.twist(rd);
    LambdaReport rep;
    rep.lambda = lam;
    auto [dag, nat] = affine::natural_dagger(tw, lam);
    rep.dagger = dag;
    rep.natural = nat;
    rep.in_A = (rd.dominant_rep(nat).first == mu);
    if (!rep.in_A) return rep;
    ADLV_CHECK(isocrystal::adlv_nonempty(rd, mu, b),
               "nonempty stratum inside an empty variety");
    AffineMap tw_inv = tw.inverse();
    for (size_t i = 0; i < rd.all_roots().size(); ++i) {
        const auto& alpha = rd.root(static_cast<int>(i));
        if (RootDatum::pairing(alpha.x, nat) != -1) continue;
        bool in_R = lambda_g(rd, lam, static_cast<int>(i)) >= 1;
        // the two defining forms of R agree
        int pre = rd.root_index(tw_inv.lin_x.apply(alpha.x));
        ADLV_CHECK(pre >= 0, "twist preimage is not a root");
        ADLV_CHECK(in_R == (lambda_g(rd, lam, pre) >= 0),
                   "R(lambda) forms disagree");
        if (in_R) rep.R_set.push_back(static_cast<int>(i));
    }
    rep.stratum_dim = static_cast<Int>(rep.R_set.size());
    rep.is_top = (rep.stratum_dim == isocrystal::adlv_dim(rd, mu, b));
    if (rep.is_top) {
        auto [small, pi] = small_and_type(rd, mu, b, lam);
        rep.is_small = small;
        rep.Pi_of = pi;
    }
    return rep;
}

std::pair<bool, std::vector<int>> small_and_type(const RootDatum& rd,
                                                 const IntVec& mu,
                                                 const BasicElement& b,
                                                 const IntVec& lam) {
    (void)mu;
    AffineMap tw = b.twist(rd);
    bool small = true;
    std::vector<int> pi_of;
    for (int idx : rd.pi_set()) {
        auto od = affine::orbit_data(rd, tw, idx);
        bool some_nonpos = false, all_ge0 = true, all_lem1 = true;
        for (int beta : od.root_orbit) {
            Int lg = lambda_g(rd, lam, beta);
            some_nonpos |= (lg <= 0);
            all_ge0 &= (lg >= 0);
            all_lem1 &= (lg <= -1);
        }
        small &= some_nonpos;
        if (od.finite) {
            // the sign trichotomy on finite wall orbits of a top stratum
            ADLV_CHECK(all_ge0 || all_lem1,
                       "mixed signs on a finite wall orbit of a top stratum");
            if (all_ge0) pi_of.push_back(idx);
        }
    }
    return {small, pi_of};
}

bool is_top_by_criterion(const RootDatum& rd, const IntVec& mu,
                         const BasicElement& b, const IntVec& lam,
                         const IntVec& v) {
    LambdaReport rep = classify_lambda(rd, mu, b, lam);
    ADLV_CHECK(rep.in_A, "is_top_by_criterion requires lambda in the nonempty locus");
    AffineMap tw = b.twist(rd);

    // sign condition on the twist orbits outside the centralizer of v
    bool cond2 = true;
    std::vector<bool> seen(rd.all_roots().size(), false);
    for (size_t i = 0; i < rd.all_roots().size() && cond2; ++i) {
        if (seen[i]) continue;
        if (RootDatum::pairing(rd.root(static_cast<int>(i)).x, v) == 0) continue;
        bool all_ge0 = true, all_lem1 = true;
        int cur = static_cast<int>(i);
        do {
            seen[cur] = true;
            Int lg = lambda_g(rd, lam, cur);
            all_ge0 &= (lg >= 0);
            all_lem1 &= (lg <= -1);
            cur = rd.root_index(tw.lin_x.apply(rd.root(cur).x));
        } while (cur != static_cast<int>(i));
        if (!all_ge0 && !all_lem1) cond2 = false;
    }

    // top condition inside the Levi, after conjugating v to dominant position
    auto [vbar, z] = rd.dominant_rep(v);
    RootDatum M = rd.levi_of_vector(adlv::to_rat(vbar));
    WeylElement sz = sigma_twist_weyl(rd, z);
    ExtAffineElement bM =
        ExtAffineElement{adlv::zero_vec(rd.rank_y()), z}
            .mul(b.omega)
            .mul(ExtAffineElement{adlv::zero_vec(rd.rank_y()), sz.inverse()});
    ADLV_CHECK(affine::aff_length(M, bM) == 0,
               "conjugated element is not length-zero in the Levi");
    BasicElement bM_elt{bM};
    AffineMap twM = bM_elt.twist(M);
    IntVec zlam = z.apply_y(lam);
    IntVec natM = affine::natural_dagger(twM, zlam).second;
    ADLV_CHECK(natM == z.apply_y(rep.natural),
               "Levi natural does not match the conjugated natural");
    IntVec eta = M.dominant_rep(natM).first;
    Int rM = 0;
    AffineMap twM_inv = twM.inverse();
    for (size_t i = 0; i < M.all_roots().size(); ++i) {
        const auto& alpha = M.root(static_cast<int>(i));
        if (RootDatum::pairing(alpha.x, natM) != -1) continue;
        if (affine::lambda_gamma(M, zlam, alpha) >= 1) ++rM;
    }
    bool cond1 = (rM == isocrystal::adlv_dim(M, eta, bM_elt));

    bool result = cond1 && cond2;
    ADLV_CHECK(result == rep.is_top,
               "Levi-orbit criterion disagrees with the |R(lambda)| test");
    return result;
}

GammaGroup levi_omega_centralizer(const RootDatum& rd, const AffineMap& twist,
                                  const RatVec& v) {
    const int n = rd.rank_y();
    RootDatum M = rd.levi_subsystem(rd.subsystem_base_on(v));
    // lattice {y : (lin - 1) y in Z Phi^vee_M}
    std::vector<IntVec> coroots = M.coroot_lattice_rows();
    const int s = static_cast<int>(coroots.size());
    adlv::IntMat B(n, n + s);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            B.at(i, j) = twist.lin_y.at(i, j) - (i == j ? 1 : 0);
    for (int k = 0; k < s; ++k)
        for (int i = 0; i < n; ++i) B.at(i, n + k) = -coroots[k][i];
    std::vector<IntVec> L;
    for (const auto& w : lattice::kernel_basis(B))
        L.push_back(IntVec(w.begin(), w.begin() + n));
    auto quots = lattice::quotient_generators(L, coroots, n);

    GammaGroup g;
    std::vector<IntVec> taus;
    for (const auto& q : quots) {
        ExtAffineElement omega = affine::omega_part(M, q.rep);
        if (omega == ExtAffineElement::identity(n)) continue;
        ADLV_CHECK(affine::fixed_by_twist(twist, omega),
                   "Levi Omega generator is not fixed by the twist");
        int period = adlv::matrix_order(omega.w.on_y);
        ExtAffineElement p = affine::power(omega, period);
        ADLV_CHECK(p.w.is_identity(), "period power has a nontrivial linear part");
        if (!adlv::is_zero(p.t)) taus.push_back(p.t);
        std::vector<AffineMap> pows;
        AffineMap acc = AffineMap::identity(n);
        for (int k = 0; k < period; ++k) {
            pows.push_back(acc);
            acc = AffineMap::from(omega).compose(acc);
        }
        g.generators.push_back(omega);
        g.power_period.push_back(period);
        g.powers.push_back(std::move(pows));
    }
    // the group is abelian (it embeds in the fundamental group of the Levi);
    // the canonical-form machinery depends on it
    for (size_t i = 0; i < g.generators.size(); ++i)
        for (size_t j = i + 1; j < g.generators.size(); ++j)
            ADLV_CHECK(g.generators[i].mul(g.generators[j]) ==
                           g.generators[j].mul(g.generators[i]),
                       "Levi Omega centralizer is not abelian");
    g.translation_lattice = lattice::row_hnf(taus, n);
    return g;
}

IntVec gamma_canonical(const GammaGroup& g, const IntVec& lam) {
    const int r = static_cast<int>(g.generators.size());
    std::optional<IntVec> best;
    std::vector<int> e(r, 0);
    while (true) {
        IntVec x = lam;
        for (int j = 0; j < r; ++j)
            if (e[j] > 0) x = g.powers[j][e[j]].apply_y(x);
        x = lattice::reduce_mod(g.translation_lattice, x);
        if (!best || x < *best) best = x;
        int j = 0;
        while (j < r && e[j] + 1 == g.power_period[j]) e[j++] = 0;
        if (j == r) break;
        ++e[j];
    }
    return best ? *best : lam;
}

Int default_window(const RootDatum& rd, const IntVec& mu) {
    Int theta_mu = 0;
    for (int h : rd.highest_roots())
        theta_mu = std::max(theta_mu, RootDatum::pairing(rd.root(h).x, mu));
    return theta_mu + 2 * rd.max_coxeter_number();
}

namespace {

// Walk the nonempty locus fiberwise: for each Weyl conjugate eta of mu the
// solutions of twist(lambda) - lambda = eta form a coset of the fixed
// lattice of the twist; directions without simple pairings are pinned.
void enumerate_fibers(const RootDatum& rd, const IntVec& mu,
                      const BasicElement& b, Int B,
                      const std::function<void(const IntVec&, const IntVec&)>& fn) {
    const int n = rd.rank_y();
    AffineMap tw = b.twist(rd);
    std::vector<IntVec> orbit = weyl_orbit(rd, mu);
    adlv::IntMat A = tw.lin_y;
    for (int i = 0; i < n; ++i) A.at(i, i) -= 1;
    std::vector<IntVec> K = lattice::kernel_basis(A);
    const int s = rd.num_simple();
    const int r = static_cast<int>(K.size());
    // transformed kernel basis with the centrally-paired part pinned away
    adlv::IntMat P(s, r);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j) P.at(i, j) = rd.pair_simple(i, K[j]);
    auto E = lattice::col_echelon(P);
    std::vector<IntVec> dirs;
    for (int c = 0; c < E.rank; ++c) {
        IntVec dir(n, 0);
        for (int j = 0; j < r; ++j)
            dir = adlv::add(dir, adlv::scale(E.U.at(j, c), K[j]));
        dirs.push_back(dir);
    }
    const int rr = static_cast<int>(dirs.size());
    std::vector<RatVec> leftinv;  // rows of the rational left inverse
    if (rr > 0) {
        adlv::IntMat Pp(s, rr);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < rr; ++j) Pp.at(i, j) = rd.pair_simple(i, dirs[j]);
        adlv::IntMat G = Pp.transpose().mul(Pp);
        for (int j = 0; j < rr; ++j) {
            RatVec ej(rr, Rat(0));
            ej[j] = 1;
            auto col = lattice::solve_unique_rational(G, ej);
            ADLV_CHECK(col.has_value(), "degenerate direction Gram matrix");
            RatVec row(s, Rat(0));
            for (int i = 0; i < s; ++i)
                for (int k2 = 0; k2 < rr; ++k2)
                    row[i] += (*col)[k2] * Pp.at(i, k2);
            leftinv.push_back(row);
        }
    }
    for (const IntVec& eta : orbit) {
        auto lam0_opt = lattice::solve_integral(A, adlv::sub(eta, tw.t));
        if (!lam0_opt) continue;
        IntVec lam0 = *lam0_opt;
        // size-reduce the particular solution along the kernel lattice
        for (int pass = 0; pass < 4; ++pass)
            for (const auto& k : K) {
                Int kk = adlv::dot(k, k);
                if (kk == 0) continue;
                Int q = adlv::rat_floor(Rat(2 * adlv::dot(lam0, k) + kk, 2 * kk));
                lam0 = adlv::sub(lam0, adlv::scale(q, k));
            }
        std::vector<Int> bound(rr, 0);
        for (int j = 0; j < rr; ++j) {
            Rat total = 0;
            for (int i = 0; i < s; ++i) {
                Rat coef = leftinv[j][i];
                if (coef < 0) coef = -coef;
                Int pl = rd.pair_simple(i, lam0);
                total += coef * (B + (pl < 0 ? -pl : pl));
            }
            bound[j] = adlv::rat_ceil(total);
        }
        std::vector<Int> t(rr, 0);
        for (int j = 0; j < rr; ++j) t[j] = -bound[j];
        while (true) {
            IntVec lam = lam0;
            for (int j = 0; j < rr; ++j)
                lam = adlv::add(lam, adlv::scale(t[j], dirs[j]));
            bool in_window = true;
            for (int i = 0; i < s && in_window; ++i) {
                Int p = rd.pair_simple(i, lam);
                if (p > B || p < -B) in_window = false;
            }
            if (in_window) fn(lam, eta);
            int j = 0;
            while (j < rr && t[j] == bound[j]) t[j++] = -bound[j];
            if (j == rr) break;
            ++t[j];
        }
    }
}

}  // namespace

void enumerate_nonempty(const RootDatum& rd, const IntVec& mu,
                        const BasicElement& b, Int window,
                        const std::function<void(const IntVec&)>& visit) {
    ADLV_CHECK(rd.is_dominant(mu) && rd.is_minuscule(mu),
               "enumerate_nonempty: mu must be dominant minuscule");
    if (window <= 0) window = default_window(rd, mu);
    enumerate_fibers(rd, mu, b, window,
                     [&](const IntVec& lam, const IntVec&) { visit(lam); });
}

ClassPartition count_top_classes(const RootDatum& rd, const IntVec& mu,
                                 const BasicElement& b, Int window) {
    ADLV_CHECK(rd.is_dominant(mu) && rd.is_minuscule(mu),
               "count_top_classes: mu must be dominant minuscule");
    ADLV_CHECK(isocrystal::adlv_nonempty(rd, mu, b),
               "count_top_classes on an empty variety");
    AffineMap tw = b.twist(rd);
    Int dimX = isocrystal::adlv_dim(rd, mu, b);
    IntVec v = generic_vector(rd, b);
    GammaGroup gamma = levi_omega_centralizer(rd, tw, adlv::to_rat(v));
    if (window <= 0) window = default_window(rd, mu);

    struct Run {
        std::map<IntVec, IntVec> rep_of_key;  // canonical key -> first lambda
        std::map<IntVec, IntVec> key_of_lam;
        Int max_dim = -1;
    };
    auto enumerate = [&](Int B) {
        Run run;
        enumerate_fibers(rd, mu, b, B, [&](const IntVec& lam, const IntVec& eta) {
            Int dim = 0;
            for (size_t i = 0; i < rd.all_roots().size(); ++i) {
                if (RootDatum::pairing(rd.root(static_cast<int>(i)).x, eta) != -1)
                    continue;
                if (lambda_g(rd, lam, static_cast<int>(i)) >= 1) ++dim;
            }
            run.max_dim = std::max(run.max_dim, dim);
            if (dim == dimX && in_A_of_v(rd, tw, v, lam)) {
                IntVec key = gamma_canonical(gamma, lam);
                run.key_of_lam[lam] = key;
                run.rep_of_key.emplace(key, lam);
            }
        });
        return run;
    };

    Run base = enumerate(window);
    Run plus1 = enumerate(window + 1);
    Run plus2 = enumerate(window + 2);
    auto keys_of = [](const Run& r) {
        std::vector<IntVec> ks;
        for (const auto& [k, rep] : r.rep_of_key) ks.push_back(k);
        return ks;
    };
    ClassPartition part;
    part.window_bound = window;
    part.stabilized = (keys_of(base) == keys_of(plus1)) &&
                      (keys_of(base) == keys_of(plus2));
    part.max_stratum_dim = std::max({base.max_dim, plus1.max_dim, plus2.max_dim});
    std::map<IntVec, int> id_of_key;
    for (const auto& [key, rep] : base.rep_of_key) {
        int id = static_cast<int>(part.representatives.size());
        id_of_key[key] = id;
        part.representatives.push_back(rep);
    }
    for (const auto& [lam, key] : base.key_of_lam)
        part.class_of[lam] = id_of_key.at(key);
    return part;
}

std::vector<Move> equivalence_moves(const RootDatum& rd, const IntVec& mu,
                                    const BasicElement& b, const IntVec& lam) {
    LambdaReport rep = classify_lambda(rd, mu, b, lam);
    ADLV_CHECK(rep.in_A && rep.is_top, "equivalence moves require a top stratum");
    AffineMap tw = b.twist(rd);
    std::vector<Move> moves;
    auto check_top = [&](const IntVec& target, const char* tag) {
        LambdaReport r2 = classify_lambda(rd, mu, b, target);
        ADLV_CHECK(r2.in_A && r2.is_top,
                   std::string("move '") + tag + "' left the top locus");
    };

    // relabeling by the length-zero part of the twisted centralizer
    GammaGroup omega_g =
        levi_omega_centralizer(rd, tw, RatVec(rd.rank_y(), Rat(0)));
    for (const auto& g : omega_g.generators) {
        for (const ExtAffineElement& h : {g, g.inverse()}) {
            IntVec target = h.apply_y(lam);
            check_top(target, "omega");
            moves.push_back({target, "omega"});
        }
    }

    // longest elements of the finite wall orbits
    for (int idx : rd.pi_set()) {
        auto od = affine::orbit_data(rd, tw, idx);
        if (!od.finite || !od.longest.has_value()) continue;
        bool some_zero = false, all_ge1 = true, all_lem1 = true;
        for (int beta : od.root_orbit) {
            Int lg = lambda_g(rd, lam, beta);
            some_zero |= (lg == 0);
            all_ge1 &= (lg >= 1);
            all_lem1 &= (lg <= -1);
        }
        if (some_zero) {
            moves.push_back({lam, "orbit_longest"});
        } else if (all_ge1 || all_lem1) {
            IntVec target = od.longest->apply_y(lam);
            check_top(target, "orbit_longest");
            moves.push_back({target, "orbit_longest"});
        }
    }

    // Levi length-zero moves inside A(v)
    IntVec v = generic_vector(rd, b);
    if (in_A_of_v(rd, tw, v, lam)) {
        GammaGroup gv = levi_omega_centralizer(rd, tw, adlv::to_rat(v));
        for (const auto& g : gv.generators) {
            for (const ExtAffineElement& h : {g, g.inverse()}) {
                IntVec target = h.apply_y(lam);
                if (!in_A_of_v(rd, tw, v, target)) continue;
                check_top(target, "levi_omega");
                moves.push_back({target, "levi_omega"});
            }
        }
    }
    return moves;
}

SuperbasicTable superbasic_table(int n, int d, Int m,
                                 const std::vector<IntVec>& lambda_tuple) {
    ADLV_CHECK(n >= 2 && d >= 1 && m >= 1, "superbasic_table: bad parameters");
    ADLV_CHECK(std::gcd(static_cast<long long>(m), static_cast<long long>(n)) == 1,
               "superbasic_table requires gcd(m, n) = 1");
    ADLV_CHECK(static_cast<int>(lambda_tuple.size()) == d, "tuple size mismatch");
    RootDatum gl = RootDatum::build("A" + std::to_string(n - 1) + ":gl");
    rootdata::DatumSpec pspec;
    pspec.letter = 'A';
    pspec.rank = n - 1;
    pspec.isogeny = rootdata::Isogeny::gl_product;
    pspec.copies = d;
    RootDatum prod = RootDatum::build(pspec);

    // bb = (1, ..., 1, omega_1^m) on the product
    IntVec e_last(n * d, 0);
    e_last[(d - 1) * n] = 1;
    BasicElement bb{affine::power(affine::omega_part(prod, e_last), m)};
    IntVec lam_cat(n * d);
    for (int t = 0; t < d; ++t)
        for (int i = 0; i < n; ++i) lam_cat[t * n + i] = lambda_tuple[t][i];
    IntVec nat_cat = natural_of(prod, bb, lam_cat);
    IntVec bmu_cat = prod.dominant_rep(nat_cat).first;
    LambdaReport rep = classify_lambda(prod, bmu_cat, bb, lam_cat);
    ADLV_CHECK(rep.in_A, "tuple is not in the nonempty locus");

    SuperbasicTable tab;
    tab.n = n;
    tab.d = d;
    tab.m = m;
    tab.lambda_tuple = lambda_tuple;

    auto perm_of = [&](const WeylElement& w) {
        // w(e_i) = e_{p[i]}
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) {
            IntVec e(n, 0);
            e[i] = 1;
            IntVec img = w.apply_y(e);
            for (int j = 0; j < n; ++j)
                if (img[j] == 1) p[i] = j;
        }
        return p;
    };

    for (int t = 0; t < d; ++t) {
        WeylElement eps = affine::epsilon_of(gl, lambda_tuple[t]);
        tab.eps_seq.push_back(eps);
        auto p = perm_of(eps);
        IntVec row(n);
        for (int i = 0; i < n; ++i)
            row[i] = (p[i] + 1) + Int(n) * lambda_tuple[t][p[i]];
        for (int i = 0; i + 1 < n; ++i)
            ADLV_CHECK(row[i] > row[i + 1], "a-row is not strictly decreasing");
        tab.a_table.push_back(row);
    }

    // solve the recursion for w_t and lambda_flat_t; entries are distinct
    // modulo n since gcd(m, n) = 1
    for (int t = 0; t < d; ++t) {
        const IntVec& cur = tab.a_table[t];
        const IntVec& next = tab.a_table[(t + 1) % d];
        Int shift = (t == d - 1) ? -m : 0;
        std::vector<int> w(n, -1);
        IntVec flat(n, 0);
        for (int i = 0; i < n; ++i) {
            Int target = cur[i] + shift;  // a_{t,i} (+ m on the wrap)
            int found = -1;
            for (int j = 0; j < n; ++j)
                if (((next[j] - target) % n + n) % n == 0) {
                    ADLV_CHECK(found < 0, "a-values collide modulo n");
                    found = j;
                }
            ADLV_CHECK(found >= 0, "recursion unsolvable");
            w[i] = found;
            flat[i] = (next[found] - target) / n;
        }
        WeylElement wt = WeylElement::identity(n);
        {
            adlv::IntMat my(n, n), mx(n, n);
            for (int i = 0; i < n; ++i) {
                my.at(w[i], i) = 1;
                mx.at(w[i], i) = 1;
            }
            wt = WeylElement{my, mx};
        }
        tab.w_seq.push_back(wt);
        tab.lambda_flat.push_back(flat);
    }

    // cross-checks: flat = eps^{-1}(natural), eps_{t+1} = eps_t w_t^{-1}
    for (int t = 0; t < d; ++t) {
        IntVec nat_t(n);
        for (int i = 0; i < n; ++i) nat_t[i] = nat_cat[t * n + i];
        ADLV_CHECK(tab.eps_seq[t].inverse().apply_y(nat_t) == tab.lambda_flat[t],
                   "flat coweight does not match eps^{-1}(natural)");
        if (t + 1 < d)
            ADLV_CHECK(tab.eps_seq[t + 1] ==
                           tab.eps_seq[t].mul(tab.w_seq[t].inverse()),
                       "eps recursion violated");
    }

    Int len = 0;
    for (const auto& w : tab.w_seq) len += gl.length(w);
    Rat dim_rat = -Rat(len);
    for (int t = 0; t < d; ++t) {
        IntVec bmu_t(n);
        for (int i = 0; i < n; ++i) bmu_t[i] = bmu_cat[t * n + i];
        dim_rat += adlv::dot(gl.rho(), adlv::to_rat(adlv::sub(bmu_t, tab.lambda_flat[t])));
    }
    ADLV_CHECK(denominator(dim_rat) == 1, "table dimension is not integral");
    tab.dim_value = adlv::to_int(dim_rat);

    // top test: length n-1, Coxeter product, and the flat sum hits the best
    // integral approximation of omega_1^m
    WeylElement wprod = WeylElement::identity(n);
    for (int t = d - 1; t >= 0; --t) wprod = wprod.mul(tab.w_seq[t]);
    bool coxeter = false;
    if (gl.length(wprod) == n - 1) {
        std::set<int> supp;
        for (int letter : gl.word_of(wprod)) supp.insert(letter);
        coxeter = (static_cast<int>(supp.size()) == n - 1);
    }
    IntVec flat_sum(n, 0);
    for (const auto& f : tab.lambda_flat) flat_sum = adlv::add(flat_sum, f);
    IntVec lam_mn(n);
    for (int i = 1; i <= n; ++i)
        lam_mn[i - 1] = (Int(i) * m) / n - (Int(i - 1) * m) / n;
    bool top_by_lemmas = (len == n - 1) && coxeter && (flat_sum == lam_mn);
    bool top_by_dim = (tab.dim_value == isocrystal::adlv_dim(prod, bmu_cat, bb));
    ADLV_CHECK(top_by_lemmas == top_by_dim,
               "Coxeter/sum conditions disagree with the dimension test");
    tab.is_top = top_by_dim;
    return tab;
}

IntVec lambda_flat(const RootDatum& rd, const BasicElement& b, const IntVec& lam) {
    WeylElement eps = affine::epsilon_of(rd, lam);
    return eps.inverse().apply_y(natural_of(rd, b, lam));
}

bool top_by_flat(const RootDatum& rd, const IntVec& mu, const BasicElement& b,
                 const IntVec& lam) {
    ADLV_CHECK(is_superbasic(rd, b), "flat criterion requires a superbasic element");
    IntVec flat = lambda_flat(rd, b, lam);
    if (rd.dominant_rep(flat).first != mu) return false;
    auto ul = isocrystal::ul_best(rd, b);
    auto L = lattice::row_hnf(rd.one_minus_sigma_rows(), rd.rank_y());
    return lattice::reduce_mod(L, flat) == lattice::reduce_mod(L, ul.class_residue);
}

std::string report_json(const RootDatum& rd, const LambdaReport& rep,
                        std::optional<int> class_id) {
    nlohmann::json j;
    j["lambda"] = rep.lambda;
    j["natural"] = rep.natural;
    j["in_A"] = rep.in_A;
    nlohmann::json roots = nlohmann::json::array();
    for (int idx : rep.R_set) roots.push_back(rd.root(idx).x);
    j["R"] = roots;
    j["dim"] = rep.stratum_dim;
    j["top"] = rep.is_top;
    if (rep.is_small) j["small"] = *rep.is_small;
    if (rep.Pi_of) {
        nlohmann::json pi = nlohmann::json::array();
        for (int idx : *rep.Pi_of) pi.push_back(rd.root(idx).x);
        j["Pi"] = pi;
    }
    if (class_id) j["class_id"] = *class_id;
    return j.dump();
}

}  // namespace strata

#include "adlvkit/isocrystal.hpp"

#include <map>

namespace isocrystal {

namespace lattice = adlv::lattice;
using adlv::Error;

namespace {

lattice::RowHNF kottwitz_lattice(const RootDatum& rd) {
    std::vector<IntVec> rows = rd.coroot_lattice_rows();
    for (const auto& r : rd.one_minus_sigma_rows()) rows.push_back(r);
    return lattice::row_hnf(rows, rd.rank_y());
}

lattice::RowHNF coinvariant_lattice(const RootDatum& rd) {
    return lattice::row_hnf(rd.one_minus_sigma_rows(), rd.rank_y());
}

int kernel_dim(const adlv::IntMat& m) {
    adlv::IntMat a = m;
    for (int i = 0; i < a.rows; ++i) a.at(i, i) -= 1;
    return static_cast<int>(lattice::kernel_basis(a).size());
}

}  // namespace

KottwitzPoint kottwitz(const RootDatum& rd, const ExtAffineElement& x) {
    return {lattice::reduce_mod(kottwitz_lattice(rd), x.t)};
}

KottwitzPoint kottwitz_of_coweight(const RootDatum& rd, const IntVec& lam) {
    return {lattice::reduce_mod(kottwitz_lattice(rd), lam)};
}

RatVec newton_raw(const RootDatum& rd, const AffineMap& twist) {
    int n = adlv::matrix_order(twist.lin_y);
    AffineMap p = twist;
    for (int i = 1; i < n; ++i) p = p.compose(twist);
    ADLV_CHECK(p.lin_y.is_identity(), "twist power is not a translation");
    RatVec nu(rd.rank_y());
    for (int i = 0; i < rd.rank_y(); ++i) nu[i] = Rat(p.t[i], n);
    return nu;
}

NewtonPoint newton(const RootDatum& rd, const AffineMap& twist) {
    return {rd.dominant_rep(newton_raw(rd, twist)).first};
}

RatVec sigma_average_raw(const RootDatum& rd, const IntVec& lam) {
    int m = rd.sigma_order();
    IntVec acc(rd.rank_y(), 0);
    IntVec cur = lam;
    for (int i = 0; i < m; ++i) {
        acc = adlv::add(acc, cur);
        cur = rd.apply_sigma_y(cur);
    }
    RatVec avg(rd.rank_y());
    for (int i = 0; i < rd.rank_y(); ++i) avg[i] = Rat(acc[i], m);
    return avg;
}

RatVec sigma_average(const RootDatum& rd, const IntVec& lam) {
    return rd.dominant_rep(sigma_average_raw(rd, lam)).first;
}

Int defect_of_twist(const RootDatum& rd, const AffineMap& twist) {
    // V_{b,sigma} = {v : twist(v) = v + nu} is a translate of ker(lin - 1);
    // check it is nonempty as stated
    RatVec nu = newton_raw(rd, twist);
    adlv::IntMat A = twist.lin_y;
    for (int i = 0; i < A.rows; ++i) A.at(i, i) -= 1;
    RatVec rhs(rd.rank_y());
    for (int i = 0; i < rd.rank_y(); ++i) rhs[i] = nu[i] - twist.t[i];
    ADLV_CHECK(lattice::solve_any_rational(A, rhs).has_value(),
               "fixed space of the twist is empty");
    return kernel_dim(rd.sigma_y()) - kernel_dim(twist.lin_y);
}

Int defect(const RootDatum& rd, const BasicElement& b) {
    return defect_of_twist(rd, b.twist(rd));
}

BestApprox ul_best(const RootDatum& rd, const BasicElement& b) {
    const int n = rd.rank_y();
    AffineMap tw = b.twist(rd);
    RatVec nu = newton_raw(rd, tw);
    for (const auto& r : rd.all_roots())
        ADLV_CHECK(adlv::dot(adlv::to_rat(r.x), nu) == 0,
                   "ul_best requires a basic element");
    KottwitzPoint kb = kottwitz(rd, b.omega);
    auto Lk = kottwitz_lattice(rd);
    auto Ls = coinvariant_lattice(rd);

    // candidates live in Y_sigma; enumerate class representatives through a
    // generating set of the quotient rather than a full box in Y
    std::vector<IntVec> fullY;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        fullY.push_back(e);
    }
    auto gens = lattice::quotient_generators(fullY, rd.one_minus_sigma_rows(), n);
    std::vector<IntVec> free_reps;
    std::vector<std::pair<IntVec, Int>> torsion_reps;
    for (const auto& g : gens) {
        if (g.order == 0)
            free_reps.push_back(g.rep);
        else
            torsion_reps.push_back({g.rep, g.order});
    }
    const int kf = static_cast<int>(free_reps.size());

    Rat tworho_nu = adlv::dot(adlv::scale(Rat(2), rd.rho()), nu);
    if (tworho_nu < 0) tworho_nu = -tworho_nu;
    Int base = adlv::rat_ceil(tworho_nu) + n;

    std::optional<IntVec> last_residue;
    for (Int radius = base; radius <= base + 8; ++radius) {
        // collect candidate classes within the coefficient box
        std::map<IntVec, std::pair<IntVec, RatVec>> classes;  // residue -> (rep, avg)
        std::vector<Int> tors(torsion_reps.size(), 0);
        while (true) {
            IntVec shift(n, 0);
            for (size_t j = 0; j < torsion_reps.size(); ++j)
                shift = adlv::add(shift, adlv::scale(tors[j], torsion_reps[j].first));
            std::vector<Int> c(kf, -radius);
            while (true) {
                IntVec lam = shift;
                for (int j = 0; j < kf; ++j)
                    lam = adlv::add(lam, adlv::scale(c[j], free_reps[j]));
                if (lattice::reduce_mod(Lk, lam) == kb.residue) {
                    RatVec avg = sigma_average_raw(rd, lam);
                    if (rd.leq_dominance(avg, nu)) {
                        IntVec res = lattice::reduce_mod(Ls, lam);
                        auto it = classes.find(res);
                        if (it == classes.end())
                            classes.emplace(res, std::make_pair(lam, avg));
                        else
                            ADLV_CHECK(it->second.second == avg,
                                       "sigma-average is not class-invariant");
                    }
                }
                int j = 0;
                while (j < kf && c[j] == radius) c[j++] = -radius;
                if (j == kf) break;
                ++c[j];
            }
            size_t j = 0;
            while (j < torsion_reps.size() && tors[j] + 1 == torsion_reps[j].second)
                tors[j++] = 0;
            if (j == torsion_reps.size()) break;
            ++tors[j];
        }
        ADLV_CHECK(!classes.empty(), "no integral approximation candidates");
        // the maximum has the strictly largest <2 rho, average>: distinct
        // classes tied there are incomparable, so a tie at the top already
        // rules out a unique maximum
        RatVec tworho = adlv::scale(Rat(2), rd.rho());
        const std::pair<const IntVec, std::pair<IntVec, RatVec>>* best = nullptr;
        Rat best_val;
        for (const auto& c : classes) {
            Rat v = adlv::dot(tworho, c.second.second);
            if (!best || v > best_val) {
                best = &c;
                best_val = v;
            }
        }
        for (const auto& c : classes) {
            if (&c == best) continue;
            ADLV_CHECK(adlv::dot(tworho, c.second.second) != best_val,
                       "best integral approximation is not unique");
        }
        bool dominates = true;
        for (const auto& c : classes)
            if (!rd.leq_dominance(c.second.second, best->second.second)) {
                dominates = false;
                break;
            }
        if (dominates) {
            if (last_residue && *last_residue == best->first) {
                // stable under window enlargement
                return {best->first, best->second.first, best->second.second};
            }
            last_residue = best->first;
        } else {
            last_residue.reset();
        }
    }
    throw Error("ul_best did not stabilize within the window cap");
}

bool adlv_nonempty(const RootDatum& rd, const IntVec& mu, const BasicElement& b) {
    ADLV_CHECK(rd.is_dominant(mu), "adlv_nonempty: mu must be dominant");
    if (!(kottwitz_of_coweight(rd, mu) == kottwitz(rd, b.omega))) return false;
    RatVec nu = newton(rd, b.twist(rd)).value;
    RatVec avg = sigma_average_raw(rd, mu);
    ADLV_CHECK(rd.is_dominant(avg), "sigma-average of dominant mu not dominant");
    return rd.leq_dominance(nu, avg);
}

Int adlv_dim(const RootDatum& rd, const IntVec& mu, const BasicElement& b) {
    ADLV_CHECK(adlv_nonempty(rd, mu, b), "adlv_dim on an empty variety");
    RatVec nu = newton(rd, b.twist(rd)).value;
    Rat val = adlv::dot(rd.rho(), adlv::sub(adlv::to_rat(mu), nu)) -
              Rat(defect(rd, b), 2);
    ADLV_CHECK(denominator(val) == 1, "dimension formula value is not integral");
    Int dim = adlv::to_int(val);
    ADLV_CHECK(dim >= 0, "dimension formula value is negative");
    return dim;
}

}  // namespace isocrystal

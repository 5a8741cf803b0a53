#include "adlvkit/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace rootdata {

using adlv::Error;
using adlv::is_zero;
namespace lattice = adlv::lattice;

DatumSpec parse_datum_spec(const std::string& text) {
    DatumSpec spec;
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    ADLV_CHECK(!parts[0].empty(), "empty datum spec");
    spec.letter = static_cast<char>(std::toupper(parts[0][0]));
    try {
        spec.rank = std::stoi(parts[0].substr(1));
    } catch (...) {
        throw Error("bad rank in datum spec '" + text + "'");
    }
    for (size_t i = 1; i < parts.size(); ++i) {
        const std::string& p = parts[i];
        if (p == "adjoint")
            spec.isogeny = Isogeny::adjoint;
        else if (p == "sc")
            spec.isogeny = Isogeny::simply_connected;
        else if (p == "gl")
            spec.isogeny = Isogeny::gl_product;
        else if (p.rfind("d=", 0) == 0)
            spec.copies = std::stoi(p.substr(2));
        else if (p.rfind("sigma=", 0) == 0) {
            std::string s = p.substr(6);
            if (s == "id" || s == "1")
                spec.sigma = "id";
            else if (s == "flip" || s == "2")
                spec.sigma = "flip";
            else
                throw Error("unsupported sigma spec '" + s + "'");
        } else
            throw Error("unknown datum spec component '" + p + "'");
    }
    ADLV_CHECK(spec.copies >= 1, "copies must be >= 1");
    if (spec.copies > 1)
        ADLV_CHECK(spec.isogeny == Isogeny::gl_product,
                   "products are only supported in gl form");
    if (spec.isogeny == Isogeny::gl_product)
        ADLV_CHECK(spec.letter == 'A', "gl form requires type A");
    return spec;
}

namespace {

// Cartan matrix with C[i][j] = <alpha_i, alpha_j^vee>, 0-indexed.
IntMat cartan_matrix(char letter, int rank) {
    auto chain = [&](IntMat& c) {
        for (int i = 0; i + 1 < rank; ++i) {
            c.at(i, i + 1) = -1;
            c.at(i + 1, i) = -1;
        }
    };
    IntMat c(rank, rank);
    for (int i = 0; i < rank; ++i) c.at(i, i) = 2;
    switch (letter) {
        case 'A':
            ADLV_CHECK(rank >= 1, "rank too small for type A");
            chain(c);
            break;
        case 'B':
            ADLV_CHECK(rank >= 2, "rank too small for type B");
            chain(c);
            c.at(rank - 2, rank - 1) = -2;
            break;
        case 'C':
            ADLV_CHECK(rank >= 2, "rank too small for type C");
            chain(c);
            c.at(rank - 1, rank - 2) = -2;
            break;
        case 'D':
            ADLV_CHECK(rank >= 3, "rank too small for type D");
            for (int i = 0; i + 1 < rank - 1; ++i) {
                c.at(i, i + 1) = -1;
                c.at(i + 1, i) = -1;
            }
            c.at(rank - 3, rank - 1) = -1;
            c.at(rank - 1, rank - 3) = -1;
            break;
        case 'E': {
            ADLV_CHECK(rank == 6 || rank == 7,
                       "type E is supported for rank 6 and 7 only");
            std::vector<std::pair<int, int>> edges = {{0, 2}, {2, 3}, {3, 4},
                                                      {4, 5}, {1, 3}};
            if (rank == 7) edges.push_back({5, 6});
            for (auto [a, b] : edges) {
                c.at(a, b) = -1;
                c.at(b, a) = -1;
            }
            break;
        }
        default:
            throw Error(std::string("unsupported type '") + letter +
                        "' (E8, F4, G2 and others are rejected)");
    }
    return c;
}

// flip permutation of simple indices, 0-indexed; identity if none exists
std::vector<int> flip_permutation(char letter, int rank) {
    std::vector<int> p(rank);
    for (int i = 0; i < rank; ++i) p[i] = i;
    if (letter == 'A') {
        for (int i = 0; i < rank; ++i) p[i] = rank - 1 - i;
    } else if (letter == 'D') {
        std::swap(p[rank - 2], p[rank - 1]);
    } else if (letter == 'E' && rank == 6) {
        p[0] = 5;
        p[5] = 0;
        p[2] = 4;
        p[4] = 2;
    } else {
        throw Error("datum has no nontrivial diagram flip");
    }
    return p;
}

struct Seed {
    IntVec x, coroot;
};

std::vector<Root> close_roots(const std::vector<Seed>& simples, int n) {
    const int s = static_cast<int>(simples.size());
    std::vector<Root> roots;
    std::unordered_map<IntVec, int, adlv::IntVecHash> seen;
    std::deque<int> queue;
    for (int k = 0; k < s; ++k) {
        Root r;
        r.x = simples[k].x;
        r.coroot = simples[k].coroot;
        r.simple_coeffs = IntVec(s, 0);
        r.simple_coeffs[k] = 1;
        seen[r.x] = static_cast<int>(roots.size());
        queue.push_back(static_cast<int>(roots.size()));
        roots.push_back(r);
    }
    while (!queue.empty()) {
        int idx = queue.front();
        queue.pop_front();
        for (int k = 0; k < s; ++k) {
            Root cur = roots[idx];  // copy: roots may reallocate
            Int a = adlv::dot(cur.x, simples[k].coroot);
            Int b = adlv::dot(simples[k].x, cur.coroot);
            Root nr;
            nr.x = adlv::sub(cur.x, adlv::scale(a, simples[k].x));
            nr.coroot = adlv::sub(cur.coroot, adlv::scale(b, simples[k].coroot));
            nr.simple_coeffs = cur.simple_coeffs;
            nr.simple_coeffs[k] -= a;
            if (seen.count(nr.x)) continue;
            seen[nr.x] = static_cast<int>(roots.size());
            queue.push_back(static_cast<int>(roots.size()));
            roots.push_back(nr);
        }
        // also include the negative
        Root cur = roots[idx];
        Root neg;
        neg.x = adlv::neg(cur.x);
        neg.coroot = adlv::neg(cur.coroot);
        neg.simple_coeffs = adlv::neg(cur.simple_coeffs);
        if (!seen.count(neg.x)) {
            seen[neg.x] = static_cast<int>(roots.size());
            queue.push_back(static_cast<int>(roots.size()));
            roots.push_back(neg);
        }
    }
    (void)n;
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        return a.simple_coeffs < b.simple_coeffs;
    });
    return roots;
}

}  // namespace

int RootDatum::root_index(const IntVec& x) const {
    auto it = root_of_x_.find(x);
    return it == root_of_x_.end() ? -1 : it->second;
}

IntVec RootDatum::reflect(const Root& alpha, const IntVec& lam) const {
    ADLV_CHECK(is_root(alpha.x), "reflect: not a root of this datum");
    return adlv::sub(lam, adlv::scale(adlv::dot(alpha.x, lam), alpha.coroot));
}

RatVec RootDatum::reflect(const Root& alpha, const RatVec& lam) const {
    ADLV_CHECK(is_root(alpha.x), "reflect: not a root of this datum");
    Rat c = adlv::dot(adlv::to_rat(alpha.x), lam);
    return adlv::sub(lam, adlv::scale(c, adlv::to_rat(alpha.coroot)));
}

WeylElement RootDatum::reflection(const Root& alpha) const {
    WeylElement w = WeylElement::identity(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            w.on_y.at(i, j) -= alpha.coroot[i] * alpha.x[j];
            w.on_x.at(i, j) -= alpha.x[i] * alpha.coroot[j];
        }
    return w;
}

WeylElement RootDatum::simple_reflection(int k) const {
    return reflection(simple_root(k));
}

WeylElement RootDatum::left_mul_simple(int k, const WeylElement& w) const {
    const Root& al = simple_root(k);
    WeylElement r = w;
    // on_y: subtract coroot (x^T w.on_y); on_x: subtract x (coroot^T w.on_x)
    IntVec row_y(n_, 0), row_x(n_, 0);
    for (int j = 0; j < n_; ++j) {
        Int sy = 0, sx = 0;
        for (int l = 0; l < n_; ++l) {
            sy += al.x[l] * w.on_y.at(l, j);
            sx += al.coroot[l] * w.on_x.at(l, j);
        }
        row_y[j] = sy;
        row_x[j] = sx;
    }
    for (int i = 0; i < n_; ++i) {
        if (al.coroot[i] != 0)
            for (int j = 0; j < n_; ++j) r.on_y.at(i, j) -= al.coroot[i] * row_y[j];
        if (al.x[i] != 0)
            for (int j = 0; j < n_; ++j) r.on_x.at(i, j) -= al.x[i] * row_x[j];
    }
    return r;
}

bool RootDatum::is_dominant(const IntVec& lam) const {
    for (int k = 0; k < num_simple(); ++k)
        if (pair_simple(k, lam) < 0) return false;
    return true;
}

bool RootDatum::is_dominant(const RatVec& lam) const {
    for (int k = 0; k < num_simple(); ++k)
        if (adlv::dot(adlv::to_rat(simple_root(k).x), lam) < 0) return false;
    return true;
}

namespace {
template <class Vec, class PairFn, class ReflFn>
std::pair<Vec, WeylElement> dominant_rep_impl(const RootDatum& rd, Vec lam,
                                              PairFn pair, ReflFn refl) {
    WeylElement w = WeylElement::identity(rd.rank_y());
    bool moved = true;
    size_t guard = 0;
    while (moved) {
        moved = false;
        for (int k = 0; k < rd.num_simple(); ++k) {
            if (pair(k, lam) < 0) {
                lam = refl(k, lam);
                w = rd.left_mul_simple(k, w);
                moved = true;
                ADLV_CHECK(++guard < 1000000, "dominant_rep did not terminate");
            }
        }
    }
    return {lam, w};
}
}  // namespace

std::pair<IntVec, WeylElement> RootDatum::dominant_rep(const IntVec& lam) const {
    return dominant_rep_impl(
        *this, lam, [&](int k, const IntVec& v) { return pair_simple(k, v); },
        [&](int k, const IntVec& v) { return reflect(simple_root(k), v); });
}

std::pair<RatVec, WeylElement> RootDatum::dominant_rep(const RatVec& lam) const {
    return dominant_rep_impl(
        *this, lam,
        [&](int k, const RatVec& v) {
            return adlv::dot(adlv::to_rat(simple_root(k).x), v);
        },
        [&](int k, const RatVec& v) { return reflect(simple_root(k), v); });
}

bool RootDatum::leq_dominance(const RatVec& v, const RatVec& vp) const {
    const int s = num_simple();
    if (s == 0) return v == vp;
    RatVec d = adlv::sub(vp, v);
    // clear denominators, then decompose over the simple coroots with the
    // precomputed integer projection
    Int t = 1;
    for (const Rat& c : d) {
        Int den = static_cast<Int>(denominator(c));
        t = t / std::gcd(t, den) * den;
    }
    IntVec D(n_);
    for (int i = 0; i < n_; ++i) D[i] = adlv::to_int(d[i] * t);
    IntVec c = cone_P_.apply(D);
    for (Int ci : c)
        if (ci < 0) return false;
    // membership in the span: A * c == q * D
    for (int i = 0; i < n_; ++i) {
        Int acc = 0;
        for (int k = 0; k < s; ++k) acc += simple_root(k).coroot[i] * c[k];
        if (acc != cone_q_ * D[i]) return false;
    }
    return true;
}

bool RootDatum::is_minuscule(const IntVec& mu) const {
    IntVec bar = dominant_rep(mu).first;
    for (const Root& r : roots_) {
        if (!r.positive) continue;
        Int p = adlv::dot(r.x, bar);
        if (p < 0 || p > 1) return false;
    }
    return true;
}

std::vector<int> RootDatum::pi_set() const {
    std::vector<int> out;
    for (int k = 0; k < num_simple(); ++k) {
        int idx = root_index(adlv::neg(simple_root(k).x));
        ADLV_CHECK(idx >= 0, "missing negative simple root");
        out.push_back(idx);
    }
    for (int h : highest_) out.push_back(h);
    return out;
}

int RootDatum::length(const WeylElement& w) const {
    int len = 0;
    for (const Root& r : roots_) {
        if (!r.positive) continue;
        int img = root_index(w.on_x.apply(r.x));
        ADLV_CHECK(img >= 0, "Weyl image is not a root");
        if (!roots_[img].positive) ++len;
    }
    return len;
}

std::vector<int> RootDatum::word_of(const WeylElement& w) const {
    std::vector<int> rev;
    WeylElement cur = w;
    size_t guard = 0;
    while (!cur.is_identity()) {
        bool found = false;
        for (int k = 0; k < num_simple(); ++k) {
            int img = root_index(cur.on_x.apply(simple_root(k).x));
            ADLV_CHECK(img >= 0, "Weyl image is not a root");
            if (!roots_[img].positive) {
                rev.push_back(k);
                cur = cur.mul(simple_reflection(k));
                found = true;
                break;
            }
        }
        ADLV_CHECK(found, "element has no descent but is not the identity");
        ADLV_CHECK(++guard < 100000, "word extraction did not terminate");
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

WeylElement RootDatum::from_word(const std::vector<int>& word) const {
    WeylElement w = WeylElement::identity(n_);
    for (int k : word) w = w.mul(simple_reflection(k));
    return w;
}

int RootDatum::apply_to_root(const WeylElement& w, int root_idx) const {
    int img = root_index(w.on_x.apply(roots_[root_idx].x));
    ADLV_CHECK(img >= 0, "Weyl image is not a root");
    return img;
}

size_t RootDatum::enumerate_weyl(
    const std::function<void(const WeylElement&)>& visit) const {
    // breadth-first closure over left multiplication by simple reflections,
    // deduplicated on the orbit of a regular dominant vector; only two
    // adjacent length layers are retained
    IntVec v0(n_, 0);
    for (const Root& r : roots_)
        if (r.positive) v0 = adlv::add(v0, r.coroot);
    struct Node {
        IntVec v;
        WeylElement w;
    };
    using Set = std::unordered_set<IntVec, adlv::IntVecHash>;
    Set prev, cur;
    std::vector<Node> frontier;
    frontier.push_back({v0, WeylElement::identity(n_)});
    cur.insert(v0);
    size_t count = 0;
    while (!frontier.empty()) {
        std::vector<Node> next_frontier;
        Set next;
        for (const Node& node : frontier) {
            if (visit) visit(node.w);
            ++count;
            for (int k = 0; k < num_simple(); ++k) {
                IntVec nv = reflect(simple_root(k), node.v);
                if (nv == node.v) continue;
                if (prev.count(nv) || cur.count(nv) || next.count(nv)) continue;
                next.insert(nv);
                next_frontier.push_back({std::move(nv), left_mul_simple(k, node.w)});
            }
        }
        prev = std::move(cur);
        cur = std::move(next);
        frontier = std::move(next_frontier);
    }
    return count;
}

size_t RootDatum::enumerate_weyl_y(
    const std::function<void(const IntMat&)>& visit) const {
    IntVec v0(n_, 0);
    for (const Root& r : roots_)
        if (r.positive) v0 = adlv::add(v0, r.coroot);
    struct Node {
        IntVec v;
        IntMat m;
    };
    using Set = std::unordered_set<IntVec, adlv::IntVecHash>;
    Set prev, cur;
    std::vector<Node> frontier;
    frontier.push_back({v0, IntMat::identity(n_)});
    cur.insert(v0);
    size_t count = 0;
    while (!frontier.empty()) {
        std::vector<Node> next_frontier;
        Set next;
        for (const Node& node : frontier) {
            if (visit) visit(node.m);
            ++count;
            for (int k = 0; k < num_simple(); ++k) {
                IntVec nv = reflect(simple_root(k), node.v);
                if (nv == node.v) continue;
                if (prev.count(nv) || cur.count(nv) || next.count(nv)) continue;
                next.insert(nv);
                // rank-one update m -> s_k m on the Y side
                const Root& al = simple_root(k);
                IntMat nm = node.m;
                for (int j = 0; j < n_; ++j) {
                    Int s = 0;
                    for (int l = 0; l < n_; ++l) s += al.x[l] * node.m.at(l, j);
                    if (s == 0) continue;
                    for (int i = 0; i < n_; ++i)
                        if (al.coroot[i] != 0) nm.at(i, j) -= al.coroot[i] * s;
                }
                next_frontier.push_back({std::move(nv), std::move(nm)});
            }
        }
        prev = std::move(cur);
        cur = std::move(next);
        frontier = std::move(next_frontier);
    }
    return count;
}

WeylElement RootDatum::weyl_from_y(const IntMat& on_y) const {
    // on_x is the inverse transpose; Weyl matrices are unimodular, so solve
    // column by column over the rationals and read off integer entries
    IntMat on_x(n_, n_);
    IntMat yt = on_y.transpose();
    for (int c = 0; c < n_; ++c) {
        RatVec e(n_, Rat(0));
        e[c] = 1;
        auto col = lattice::solve_unique_rational(yt, e);
        ADLV_CHECK(col.has_value(), "matrix is not invertible");
        for (int i = 0; i < n_; ++i) on_x.at(i, c) = adlv::to_int((*col)[i]);
    }
    return {on_y, on_x};
}

std::vector<IntVec> RootDatum::coroot_lattice_rows() const {
    std::vector<IntVec> rows;
    for (int k = 0; k < num_simple(); ++k) rows.push_back(simple_root(k).coroot);
    return rows;
}

std::vector<IntVec> RootDatum::one_minus_sigma_rows() const {
    std::vector<IntVec> rows;
    for (int j = 0; j < n_; ++j) {
        IntVec e(n_, 0);
        e[j] = 1;
        rows.push_back(adlv::sub(e, sigma_y_.apply(e)));
    }
    return rows;
}

RootDatum RootDatum::levi(const std::vector<int>& simple_subset) const {
    std::vector<Seed> seeds;
    for (int k : simple_subset)
        seeds.push_back({simple_root(k).x, simple_root(k).coroot});
    RootDatum m;
    m.n_ = n_;
    m.isogeny_ = isogeny_;
    m.copies_ = 1;
    m.spec_text_ = spec_text_ + ":levi";
    m.roots_ = close_roots(seeds, n_);
    m.sigma_y_ = sigma_y_;
    m.sigma_x_ = sigma_x_;
    m.sigma_order_ = sigma_order_;
    m.finalize();
    return m;
}

std::vector<int> RootDatum::simples_vanishing_on(const RatVec& v) const {
    std::vector<int> out;
    for (int k = 0; k < num_simple(); ++k)
        if (adlv::dot(adlv::to_rat(simple_root(k).x), v) == 0) out.push_back(k);
    return out;
}

RootDatum RootDatum::levi_of_vector(const RatVec& v) const {
    return levi(simples_vanishing_on(v));
}

RootDatum RootDatum::levi_subsystem(const std::vector<int>& base_root_indices) const {
    std::vector<Seed> seeds;
    for (int idx : base_root_indices)
        seeds.push_back({roots_[idx].x, roots_[idx].coroot});
    RootDatum m;
    m.n_ = n_;
    m.isogeny_ = isogeny_;
    m.copies_ = 1;
    m.spec_text_ = spec_text_ + ":levi";
    m.roots_ = close_roots(seeds, n_);
    // a subsystem need not be sigma-stable; it then carries the trivial
    // automorphism and all twisting happens through explicit affine maps
    bool stable = true;
    for (int idx : base_root_indices) {
        IntVec img = sigma_x_.apply(roots_[idx].x);
        bool found = false;
        for (int jdx : base_root_indices) found |= (roots_[jdx].x == img);
        stable &= found;
    }
    if (stable) {
        m.sigma_y_ = sigma_y_;
        m.sigma_x_ = sigma_x_;
        m.sigma_order_ = sigma_order_;
    }
    m.finalize();
    return m;
}

std::vector<int> RootDatum::subsystem_base_on(const RatVec& v) const {
    std::vector<int> pos;
    for (size_t i = 0; i < roots_.size(); ++i)
        if (roots_[i].positive &&
            adlv::dot(adlv::to_rat(roots_[i].x), v) == 0)
            pos.push_back(static_cast<int>(i));
    std::vector<int> base;
    for (int i : pos) {
        bool decomposable = false;
        for (int j : pos) {
            if (j == i) continue;
            IntVec diff = adlv::sub(roots_[i].x, roots_[j].x);
            int k = root_index(diff);
            if (k >= 0 && roots_[k].positive &&
                adlv::dot(adlv::to_rat(roots_[k].x), v) == 0) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) base.push_back(i);
    }
    return base;
}

int RootDatum::max_coxeter_number() const {
    int h = 2;
    for (int c : coxeter_) h = std::max(h, c);
    return h;
}

std::vector<IntVec> RootDatum::minuscule_reps() const {
    ADLV_CHECK(copies_ == 1, "minuscule_reps: use per-copy lists for products");
    std::vector<IntVec> out;
    if (isogeny_ == Isogeny::gl_product) {
        for (int k = 1; k < n_; ++k) {
            IntVec mu(n_, 0);
            for (int i = 0; i < k; ++i) mu[i] = 1;
            out.push_back(mu);
        }
        return out;
    }
    if (isogeny_ == Isogeny::adjoint) {
        // fundamental coweights whose simple root has coefficient one in the
        // highest root of its component
        for (size_t c = 0; c < components_.size(); ++c) {
            const Root& theta = roots_[highest_[c]];
            for (int k : components_[c]) {
                if (theta.simple_coeffs[k] == 1) {
                    IntVec mu(n_, 0);
                    mu[k] = 1;  // adjoint Y basis is the fundamental coweights
                    out.push_back(mu);
                }
            }
        }
        return out;
    }
    return out;  // simply connected: no nonzero minuscule coweights
}

void RootDatum::finalize() {
    // positivity is recomputed from the expansion, never trusted from input
    for (auto& r : roots_) {
        bool has_pos = false, has_neg = false;
        for (Int c : r.simple_coeffs) {
            if (c > 0) has_pos = true;
            if (c < 0) has_neg = true;
        }
        ADLV_CHECK(has_pos != has_neg, "root with mixed-sign expansion");
        r.positive = has_pos;
    }
    root_of_x_.clear();
    simple_.clear();
    const int s_guess = static_cast<int>(roots_.size());
    for (int i = 0; i < s_guess; ++i) root_of_x_[roots_[i].x] = i;
    // simple roots are the ones whose expansion is a basis vector
    int s = static_cast<int>(roots_.empty() ? 0 : roots_[0].simple_coeffs.size());
    simple_.assign(s, -1);
    for (int i = 0; i < s_guess; ++i) {
        const IntVec& c = roots_[i].simple_coeffs;
        int nz = -1;
        bool basis = true;
        for (int j = 0; j < s; ++j) {
            if (c[j] == 0) continue;
            if (c[j] != 1 || nz >= 0) {
                basis = false;
                break;
            }
            nz = j;
        }
        if (basis && nz >= 0) simple_[nz] = i;
    }
    for (int k = 0; k < s; ++k) ADLV_CHECK(simple_[k] >= 0, "missing simple root");

    for (const Root& r : roots_)
        ADLV_CHECK(adlv::dot(r.x, r.coroot) == 2, "<alpha, alpha^vee> != 2");

    // components of the Dynkin diagram
    components_.clear();
    std::vector<int> comp_of(s, -1);
    for (int k = 0; k < s; ++k) {
        if (comp_of[k] >= 0) continue;
        std::vector<int> comp{k};
        comp_of[k] = static_cast<int>(components_.size());
        for (size_t q = 0; q < comp.size(); ++q) {
            for (int j = 0; j < s; ++j) {
                if (comp_of[j] >= 0) continue;
                if (adlv::dot(simple_root(comp[q]).x, simple_root(j).coroot) != 0) {
                    comp_of[j] = comp_of[k];
                    comp.push_back(j);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components_.push_back(comp);
    }

    highest_.assign(components_.size(), -1);
    coxeter_.assign(components_.size(), 0);
    for (size_t i = 0; i < roots_.size(); ++i) {
        const Root& r = roots_[i];
        if (!r.positive) continue;
        int comp = -1;
        Int height = 0;
        for (int j = 0; j < s; ++j)
            if (r.simple_coeffs[j] != 0) {
                comp = comp_of[j];
                height += r.simple_coeffs[j];
            }
        ADLV_CHECK(comp >= 0, "root with empty support");
        if (highest_[comp] < 0 ||
            height > coxeter_[comp] - 1) {
            highest_[comp] = static_cast<int>(i);
            coxeter_[comp] = static_cast<int>(height) + 1;
        }
    }
    for (size_t c = 0; c < components_.size(); ++c) {
        ADLV_CHECK(highest_[c] >= 0, "component without highest root");
        for (int k = 0; k < s; ++k)
            ADLV_CHECK(adlv::dot(roots_[highest_[c]].x, simple_root(k).coroot) >= 0,
                       "highest root is not dominant");
    }

    // rho and the base-alcove interior point
    rho_.assign(n_, Rat(0));
    for (const Root& r : roots_)
        if (r.positive)
            for (int i = 0; i < n_; ++i) rho_[i] += Rat(r.x[i], 2);
    for (int k = 0; k < s; ++k)
        ADLV_CHECK(adlv::dot(rho_, simple_root(k).coroot) == 1,
                   "<rho, alpha_i^vee> != 1");

    if (s > 0) {
        IntMat G(s, s);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j)
                G.at(i, j) = adlv::dot(simple_root(i).x, simple_root(j).coroot);
        RatVec rhs(s);
        for (int i = 0; i < s; ++i) rhs[i] = Rat(1, coxeter_[comp_of[i]] + 1);
        auto sol = lattice::solve_unique_rational(G, rhs);
        ADLV_CHECK(sol.has_value(), "alcove point system inconsistent");
        alcove_point_.assign(n_, Rat(0));
        for (int j = 0; j < s; ++j)
            for (int i = 0; i < n_; ++i)
                alcove_point_[i] += (*sol)[j] * simple_root(j).coroot[i];
        for (const Root& r : roots_) {
            if (!r.positive) continue;
            Rat v = adlv::dot(adlv::to_rat(r.x), alcove_point_);
            ADLV_CHECK(v > 0 && v < 1, "alcove point outside the base alcove");
        }
    } else {
        alcove_point_.assign(n_, Rat(0));
    }

    // integer projection onto simple-coroot coordinates: with A the matrix
    // of simple coroots and G = A^T A its Gram matrix, the coefficients of a
    // span member d are G^{-1} A^T d; store q G^{-1} A^T with integer q
    if (s > 0) {
        IntMat A(n_, s);
        for (int k = 0; k < s; ++k)
            for (int i = 0; i < n_; ++i) A.at(i, k) = simple_root(k).coroot[i];
        IntMat At = A.transpose();
        IntMat G = At.mul(A);
        std::vector<RatVec> ginv_cols(s);
        for (int c = 0; c < s; ++c) {
            RatVec e(s, Rat(0));
            e[c] = 1;
            auto col = lattice::solve_unique_rational(G, e);
            ADLV_CHECK(col.has_value(), "coroot Gram matrix is singular");
            ginv_cols[c] = *col;
        }
        Int q = 1;
        for (const auto& col : ginv_cols)
            for (const Rat& x : col) {
                Int den = static_cast<Int>(denominator(x));
                q = q / std::gcd(q, den) * den;
            }
        cone_q_ = q;
        cone_P_ = IntMat(s, n_);
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < n_; ++j) {
                Rat acc = 0;
                for (int k = 0; k < s; ++k)
                    acc += ginv_cols[k][i] * At.at(k, j);
                cone_P_.at(i, j) = adlv::to_int(acc * q);
            }
    } else {
        cone_P_ = IntMat(0, n_);
        cone_q_ = 1;
    }

    // sigma sanity: permutes the simple roots and preserves the pairing
    if (sigma_y_.rows == 0) {
        sigma_y_ = IntMat::identity(n_);
        sigma_x_ = IntMat::identity(n_);
        sigma_order_ = 1;
    }
    ADLV_CHECK(sigma_x_.transpose().mul(sigma_y_).is_identity(),
               "sigma does not preserve the pairing");
    for (int k = 0; k < s; ++k) {
        IntVec img = sigma_x_.apply(simple_root(k).x);
        int idx = root_index(img);
        bool is_simple = false;
        for (int j = 0; j < s; ++j) is_simple |= (idx == simple_[j]);
        ADLV_CHECK(is_simple, "sigma does not permute the simple roots");
        ADLV_CHECK(roots_[idx].coroot == sigma_y_.apply(simple_root(k).coroot),
                   "sigma acts inconsistently on coroots");
    }
}

RootDatum RootDatum::build(const DatumSpec& spec) {
    RootDatum base;
    base.isogeny_ = spec.isogeny;
    base.copies_ = 1;
    std::vector<Seed> seeds;
    std::vector<int> flip;  // permutation of simple indices, if requested

    if (spec.isogeny == Isogeny::gl_product) {
        const int nn = spec.rank + 1;
        base.n_ = nn;
        for (int i = 0; i + 1 < nn; ++i) {
            IntVec x(nn, 0), cr(nn, 0);
            x[i] = 1;
            x[i + 1] = -1;
            cr[i] = 1;
            cr[i + 1] = -1;
            seeds.push_back({x, cr});
        }
    } else {
        const int s = spec.rank;
        base.n_ = s;
        IntMat C = cartan_matrix(spec.letter, s);
        for (int i = 0; i < s; ++i) {
            IntVec x(s, 0), cr(s, 0);
            if (spec.isogeny == Isogeny::adjoint) {
                x[i] = 1;
                for (int j = 0; j < s; ++j) cr[j] = C.at(j, i);
            } else {
                for (int j = 0; j < s; ++j) x[j] = C.at(i, j);
                cr[i] = 1;
            }
            seeds.push_back({x, cr});
        }
    }
    base.roots_ = close_roots(seeds, base.n_);

    // base sigma
    if (spec.sigma == "flip") {
        if (spec.isogeny == Isogeny::gl_product) {
            const int nn = base.n_;
            base.sigma_y_ = IntMat(nn, nn);
            base.sigma_x_ = IntMat(nn, nn);
            for (int i = 0; i < nn; ++i) {
                base.sigma_y_.at(nn - 1 - i, i) = -1;
                base.sigma_x_.at(nn - 1 - i, i) = -1;
            }
        } else {
            std::vector<int> p = flip_permutation(spec.letter, spec.rank);
            base.sigma_y_ = IntMat(base.n_, base.n_);
            base.sigma_x_ = IntMat(base.n_, base.n_);
            for (int i = 0; i < base.n_; ++i) {
                base.sigma_y_.at(p[i], i) = 1;
                base.sigma_x_.at(p[i], i) = 1;
            }
        }
    } else {
        base.sigma_y_ = IntMat::identity(base.n_);
        base.sigma_x_ = IntMat::identity(base.n_);
    }

    RootDatum out;
    if (spec.copies == 1) {
        out = std::move(base);
    } else {
        // product of d copies; the twist cycles the factors and applies the
        // base sigma on wraparound
        const int d = spec.copies, n0 = base.n_;
        out.n_ = n0 * d;
        out.isogeny_ = spec.isogeny;
        out.copies_ = d;
        const int s0 = static_cast<int>(base.roots_[0].simple_coeffs.size());
        for (const Root& r : base.roots_) {
            for (int t = 0; t < d; ++t) {
                Root nr;
                nr.x = IntVec(out.n_, 0);
                nr.coroot = IntVec(out.n_, 0);
                nr.simple_coeffs = IntVec(s0 * d, 0);
                for (int i = 0; i < n0; ++i) {
                    nr.x[t * n0 + i] = r.x[i];
                    nr.coroot[t * n0 + i] = r.coroot[i];
                }
                for (int i = 0; i < s0; ++i)
                    nr.simple_coeffs[t * s0 + i] = r.simple_coeffs[i];
                out.roots_.push_back(nr);
            }
        }
        std::sort(out.roots_.begin(), out.roots_.end(),
                  [](const Root& a, const Root& b) {
                      return a.simple_coeffs < b.simple_coeffs;
                  });
        out.sigma_y_ = IntMat(out.n_, out.n_);
        out.sigma_x_ = IntMat(out.n_, out.n_);
        for (int t = 0; t + 1 < d; ++t)
            for (int i = 0; i < n0; ++i) {
                out.sigma_y_.at(t * n0 + i, (t + 1) * n0 + i) = 1;
                out.sigma_x_.at(t * n0 + i, (t + 1) * n0 + i) = 1;
            }
        for (int i = 0; i < n0; ++i)
            for (int j = 0; j < n0; ++j) {
                out.sigma_y_.at((d - 1) * n0 + i, j) = base.sigma_y_.at(i, j);
                out.sigma_x_.at((d - 1) * n0 + i, j) = base.sigma_x_.at(i, j);
            }
    }
    out.sigma_order_ = adlv::matrix_order(out.sigma_y_);
    std::string canon;
    canon += spec.letter;
    canon += std::to_string(spec.rank);
    canon += spec.isogeny == Isogeny::adjoint ? ":adjoint"
             : spec.isogeny == Isogeny::simply_connected ? ":sc"
                                                         : ":gl";
    if (spec.copies > 1) canon += ":d=" + std::to_string(spec.copies);
    if (spec.sigma != "id") canon += ":sigma=" + spec.sigma;
    out.spec_text_ = canon;
    out.finalize();
    return out;
}

}  // namespace rootdata

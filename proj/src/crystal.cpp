#include "adlvkit/crystal.hpp"

#include <deque>
#include <sstream>

#include "json.hpp"

namespace crystal {

using adlv::Error;
namespace lattice = adlv::lattice;

RatVec Path::endpoint(int n) const {
    RatVec e(n, Rat(0));
    for (const auto& s : steps) e = adlv::add(e, s);
    return e;
}

Path Path::straight(const IntVec& target) {
    Path p;
    if (!adlv::is_zero(target)) p.steps.push_back(adlv::to_rat(target));
    return p;
}

void Path::canonicalize() {
    std::vector<RatVec> out;
    for (const auto& s : steps) {
        if (adlv::is_zero(s)) continue;
        if (!out.empty()) {
            // merge if positively parallel to the previous step
            const RatVec& prev = out.back();
            int pivot = -1;
            for (size_t i = 0; i < s.size(); ++i)
                if (s[i] != 0 || prev[i] != 0) {
                    pivot = static_cast<int>(i);
                    break;
                }
            if (pivot >= 0 && s[pivot] != 0 && prev[pivot] != 0 &&
                (s[pivot] > 0) == (prev[pivot] > 0)) {
                Rat c = s[pivot] / prev[pivot];
                if (adlv::scale(c, prev) == s) {
                    out.back() = adlv::add(prev, s);
                    continue;
                }
            }
        }
        out.push_back(s);
    }
    steps = std::move(out);
}

namespace {

// vertex heights of the path under <alpha_i, .>
std::vector<Rat> heights(const RootDatum& rd, int i, const Path& p) {
    RatVec ax = adlv::to_rat(rd.simple_root(i).x);
    std::vector<Rat> h{Rat(0)};
    Rat cur = 0;
    for (const auto& s : p.steps) {
        cur += adlv::dot(ax, s);
        h.push_back(cur);
    }
    return h;
}

RatVec reflect_step(const RootDatum& rd, int i, const RatVec& s) {
    Rat c = adlv::dot(adlv::to_rat(rd.simple_root(i).x), s);
    return adlv::sub(s, adlv::scale(c, adlv::to_rat(rd.simple_root(i).coroot)));
}

}  // namespace

std::optional<Path> root_op_f(const RootDatum& rd, int i, const Path& p) {
    std::vector<Rat> h = heights(rd, i, p);
    Rat m = 0;
    for (const Rat& v : h) m = std::min(m, v);
    // local minima of the module paths are integral; the operators rely on it
    ADLV_CHECK(denominator(m) == 1, "path height minimum is not integral");
    if (h.back() - m < 1) return std::nullopt;
    size_t k1 = 0;
    for (size_t k = 0; k < h.size(); ++k)
        if (h[k] == m) k1 = k;
    // first crossing of m+1 after k1; split the crossing step if needed
    Path q;
    for (size_t k = 0; k < k1; ++k) q.steps.push_back(p.steps[k]);
    size_t k = k1;
    while (true) {
        ADLV_CHECK(k < p.steps.size(), "no crossing above the minimum");
        if (h[k + 1] >= m + 1) {
            Rat c = (m + 1 - h[k]) / (h[k + 1] - h[k]);
            RatVec head = adlv::scale(c, p.steps[k]);
            q.steps.push_back(reflect_step(rd, i, head));
            if (c != 1) q.steps.push_back(adlv::sub(p.steps[k], head));
            break;
        }
        q.steps.push_back(reflect_step(rd, i, p.steps[k]));
        ++k;
    }
    for (size_t j = k + 1; j < p.steps.size(); ++j) q.steps.push_back(p.steps[j]);
    q.canonicalize();
    return q;
}

std::optional<Path> root_op_e(const RootDatum& rd, int i, const Path& p) {
    std::vector<Rat> h = heights(rd, i, p);
    Rat m = 0;
    for (const Rat& v : h) m = std::min(m, v);
    ADLV_CHECK(denominator(m) == 1, "path height minimum is not integral");
    if (m > -1) return std::nullopt;
    size_t k2 = 0;
    while (h[k2] != m) ++k2;  // first attainment of the minimum
    // last crossing of m+1 before k2; split the crossing step if needed
    Path q;
    size_t k = k2;
    std::vector<RatVec> tail;
    while (true) {
        ADLV_CHECK(k > 0, "no crossing above the minimum");
        --k;
        if (h[k] >= m + 1) {
            // crossing of m+1 inside step k at fraction c from its start
            Rat c = (h[k] - (m + 1)) / (h[k] - h[k + 1]);
            RatVec head = adlv::scale(c, p.steps[k]);
            tail.push_back(reflect_step(rd, i, adlv::sub(p.steps[k], head)));
            for (size_t j = 0; j < k; ++j) q.steps.push_back(p.steps[j]);
            if (c != 0) q.steps.push_back(head);
            break;
        }
        tail.push_back(reflect_step(rd, i, p.steps[k]));
    }
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) q.steps.push_back(*it);
    for (size_t j = k2; j < p.steps.size(); ++j) q.steps.push_back(p.steps[j]);
    q.canonicalize();
    return q;
}

Crystal crystal_generate(const RootDatum& rd, const IntVec& mu, size_t element_cap) {
    ADLV_CHECK(rd.is_dominant(mu), "crystal_generate: mu must be dominant");
    Crystal c;
    c.highest_weight = mu;
    Path top = Path::straight(mu);
    c.elements.push_back(top);
    c.weights.push_back(mu);
    c.index_of[top] = 0;
    c.f_edge.assign(rd.num_simple(), {});
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int idx = queue.front();
        queue.pop_front();
        for (int i = 0; i < rd.num_simple(); ++i) {
            if (c.f_edge[i].size() < c.elements.size())
                c.f_edge[i].resize(c.elements.size(), -1);
            auto q = root_op_f(rd, i, c.elements[idx]);
            if (!q) {
                c.f_edge[i][idx] = -1;
                continue;
            }
            auto it = c.index_of.find(*q);
            int qidx;
            if (it != c.index_of.end()) {
                qidx = it->second;
            } else {
                qidx = static_cast<int>(c.elements.size());
                ADLV_CHECK(c.elements.size() < element_cap,
                           "crystal element cap exceeded");
                RatVec end = q->endpoint(rd.rank_y());
                ADLV_CHECK(adlv::is_integral(end), "crystal weight is not integral");
                c.elements.push_back(*q);
                c.weights.push_back(adlv::to_int(end));
                c.index_of[*q] = qidx;
                queue.push_back(qidx);
            }
            c.f_edge[i][idx] = qidx;
        }
    }
    for (auto& col : c.f_edge) col.resize(c.elements.size(), -1);
    // exactly one element is killed by every raising operator
    size_t highest = 0;
    for (size_t e = 0; e < c.elements.size(); ++e) {
        bool top_elt = true;
        for (int i = 0; i < rd.num_simple() && top_elt; ++i)
            if (root_op_e(rd, i, c.elements[e])) top_elt = false;
        if (top_elt) ++highest;
    }
    ADLV_CHECK(highest == 1, "crystal has more than one highest element");
    return c;
}

Int weight_mult(const Crystal& c, const IntVec& lam) {
    Int n = 0;
    for (const auto& w : c.weights)
        if (w == lam) ++n;
    return n;
}

Int weight_mult_class(const RootDatum& rd, const Crystal& c, const BestApprox& ul) {
    auto L = lattice::row_hnf(rd.one_minus_sigma_rows(), rd.rank_y());
    IntVec target = lattice::reduce_mod(L, ul.class_residue);
    Int n = 0;
    for (const auto& w : c.weights)
        if (lattice::reduce_mod(L, w) == target) ++n;
    return n;
}

namespace {

bool is_highest_for(const RootDatum& rd, const std::vector<int>& simples,
                    const Path& p) {
    for (int i : simples) {
        std::vector<Rat> h = heights(rd, i, p);
        for (const Rat& v : h)
            if (v < 0) return false;
    }
    return true;
}

}  // namespace

std::map<IntVec, Int> tensor_decompose(const RootDatum& rd,
                                       const std::vector<IntVec>& mus,
                                       size_t element_cap) {
    std::vector<Crystal> factors;
    for (const auto& mu : mus) factors.push_back(crystal_generate(rd, mu, element_cap));
    std::vector<int> all_simple(rd.num_simple());
    for (int i = 0; i < rd.num_simple(); ++i) all_simple[i] = i;
    std::map<IntVec, Int> out;
    std::vector<size_t> idx(factors.size(), 0);
    while (true) {
        Path concat;
        for (size_t j = 0; j < factors.size(); ++j)
            for (const auto& s : factors[j].elements[idx[j]].steps)
                concat.steps.push_back(s);
        concat.canonicalize();
        if (is_highest_for(rd, all_simple, concat)) {
            RatVec end = concat.endpoint(rd.rank_y());
            IntVec wt = adlv::to_int(end);
            ADLV_CHECK(rd.is_dominant(wt), "highest concatenation not dominant");
            out[wt] += 1;
        }
        size_t j = 0;
        while (j < factors.size() && idx[j] + 1 == factors[j].size()) idx[j++] = 0;
        if (j == factors.size()) break;
        ++idx[j];
    }
    return out;
}

std::map<IntVec, Int> restrict_levi(const RootDatum& rd, const IntVec& mu,
                                    const std::vector<int>& J,
                                    size_t element_cap) {
    Crystal c = crystal_generate(rd, mu, element_cap);
    std::map<IntVec, Int> out;
    for (size_t e = 0; e < c.elements.size(); ++e) {
        if (!is_highest_for(rd, J, c.elements[e])) continue;
        for (int j : J)
            ADLV_CHECK(rd.pair_simple(j, c.weights[e]) >= 0,
                       "Levi-highest weight is not Levi-dominant");
        out[c.weights[e]] += 1;
    }
    return out;
}

std::string export_json(const RootDatum& rd, const Crystal& c) {
    nlohmann::json j;
    j["schema"] = 1;
    j["datum"] = rd.spec_text();
    j["highest_weight"] = c.highest_weight;
    auto path_json = [&](const Path& p) {
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& s : p.steps) {
            nlohmann::json step = nlohmann::json::array();
            for (const Rat& x : s) step.push_back(adlv::to_string(x));
            steps.push_back(step);
        }
        return steps;
    };
    nlohmann::json nodes = nlohmann::json::array();
    for (size_t e = 0; e < c.elements.size(); ++e) {
        nlohmann::json node;
        node["id"] = e;
        node["weight"] = c.weights[e];
        node["path"] = path_json(c.elements[e]);
        nodes.push_back(node);
    }
    j["nodes"] = nodes;
    nlohmann::json edges = nlohmann::json::array();
    for (int i = 0; i < rd.num_simple(); ++i)
        for (size_t e = 0; e < c.elements.size(); ++e)
            if (c.f_edge[i][e] >= 0)
                edges.push_back({{"from", e}, {"to", c.f_edge[i][e]}, {"op", i + 1}});
    j["edges"] = edges;
    return j.dump(2);
}

}  // namespace crystal

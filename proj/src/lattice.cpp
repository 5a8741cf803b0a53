#include "adlvkit/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace adlv {
namespace lattice {

RowHNF row_hnf(const std::vector<IntVec>& rows, int n) {
    std::vector<IntVec> work;
    for (const auto& r : rows) {
        ADLV_CHECK(static_cast<int>(r.size()) == n, "row size mismatch");
        if (!is_zero(r)) work.push_back(r);
    }
    std::vector<IntVec> basis;
    std::vector<int> pivots;
    int col = 0;
    while (col < n && !work.empty()) {
        // collect rows with nonzero entry in this column
        std::vector<size_t> live;
        for (size_t i = 0; i < work.size(); ++i)
            if (work[i][col] != 0) live.push_back(i);
        if (live.empty()) {
            ++col;
            continue;
        }
        // euclidean elimination within the column
        while (live.size() > 1) {
            std::sort(live.begin(), live.end(), [&](size_t a, size_t b) {
                return std::llabs(work[a][col]) < std::llabs(work[b][col]);
            });
            size_t p = live[0];
            for (size_t k = 1; k < live.size(); ++k) {
                Int q = work[live[k]][col] / work[p][col];
                work[live[k]] = sub(work[live[k]], scale(q, work[p]));
            }
            std::vector<size_t> next{p};
            for (size_t k = 1; k < live.size(); ++k)
                if (work[live[k]][col] != 0) next.push_back(live[k]);
            live = next;
        }
        size_t p = live[0];
        IntVec prow = work[p];
        if (prow[col] < 0) prow = neg(prow);
        basis.push_back(prow);
        pivots.push_back(col);
        // remove the pivot row, drop rows that became zero
        std::vector<IntVec> rest;
        for (size_t i = 0; i < work.size(); ++i)
            if (i != p && !is_zero(work[i])) rest.push_back(work[i]);
        work = rest;
        ++col;
    }
    // reduce entries above each pivot
    for (size_t i = basis.size(); i-- > 0;) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            Int piv = basis[j][pivots[j]];
            Int v = basis[i][pivots[j]];
            Int q = v / piv;
            if (v - q * piv < 0) q -= 1;  // floor division
            if (q != 0) basis[i] = sub(basis[i], scale(q, basis[j]));
        }
    }
    RowHNF out;
    out.n = n;
    out.basis = IntMat(static_cast<int>(basis.size()), n);
    for (size_t i = 0; i < basis.size(); ++i)
        for (int j = 0; j < n; ++j) out.basis.at(static_cast<int>(i), j) = basis[i][j];
    out.pivot_col = pivots;
    return out;
}

IntVec reduce_mod(const RowHNF& L, IntVec v) {
    ADLV_CHECK(static_cast<int>(v.size()) == L.n, "vector size mismatch");
    for (int i = 0; i < L.basis.rows; ++i) {
        int c = L.pivot_col[i];
        Int piv = L.basis.at(i, c);
        Int q = v[c] / piv;
        if (v[c] - q * piv < 0) q -= 1;
        if (q != 0)
            for (int j = 0; j < L.n; ++j) v[j] -= q * L.basis.at(i, j);
    }
    return v;
}

ColEchelon col_echelon(IntMat A) {
    const int m = A.rows, n = A.cols;
    ColEchelon out;
    out.U = IntMat::identity(n);
    int c = 0;
    for (int r = 0; r < m && c < n; ++r) {
        // gcd-eliminate entries of row r across columns c..n-1
        while (true) {
            int best = -1;
            for (int j = c; j < n; ++j) {
                if (A.at(r, j) == 0) continue;
                if (best < 0 ||
                    std::llabs(A.at(r, j)) < std::llabs(A.at(r, best)))
                    best = j;
            }
            if (best < 0) break;  // row is zero from column c on
            // swap best into position c
            if (best != c) {
                for (int i = 0; i < m; ++i) std::swap(A.at(i, best), A.at(i, c));
                for (int i = 0; i < n; ++i)
                    std::swap(out.U.at(i, best), out.U.at(i, c));
            }
            bool clean = true;
            for (int j = c + 1; j < n; ++j) {
                if (A.at(r, j) == 0) continue;
                Int q = A.at(r, j) / A.at(r, c);
                for (int i = 0; i < m; ++i) A.at(i, j) -= q * A.at(i, c);
                for (int i = 0; i < n; ++i)
                    out.U.at(i, j) -= q * out.U.at(i, c);
                if (A.at(r, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (c < n && A.at(r, c) != 0) {
            if (A.at(r, c) < 0) {
                for (int i = 0; i < m; ++i) A.at(i, c) = -A.at(i, c);
                for (int i = 0; i < n; ++i) out.U.at(i, c) = -out.U.at(i, c);
            }
            out.pivot_row.push_back(r);
            ++c;
        }
    }
    out.rank = c;
    out.H = A;
    return out;
}

std::optional<IntVec> solve_integral(const IntMat& A, const IntVec& b) {
    ADLV_CHECK(static_cast<int>(b.size()) == A.rows, "rhs size mismatch");
    ColEchelon E = col_echelon(A);
    const int n = A.cols;
    IntVec y(n, 0);
    IntVec acc = b;  // b minus contribution of chosen columns
    for (int c = 0; c < E.rank; ++c) {
        int r = E.pivot_row[c];
        Int piv = E.H.at(r, c);
        if (acc[r] % piv != 0) return std::nullopt;
        Int q = acc[r] / piv;
        y[c] = q;
        for (int i = 0; i < A.rows; ++i) acc[i] -= q * E.H.at(i, c);
    }
    if (!is_zero(acc)) return std::nullopt;
    return E.U.apply(y);
}

std::vector<IntVec> kernel_basis(const IntMat& A) {
    ColEchelon E = col_echelon(A);
    std::vector<IntVec> out;
    for (int c = E.rank; c < A.cols; ++c) {
        IntVec v(A.cols);
        for (int i = 0; i < A.cols; ++i) v[i] = E.U.at(i, c);
        out.push_back(v);
    }
    return out;
}

std::vector<IntVec> intersect(const std::vector<IntVec>& gens1,
                              const std::vector<IntVec>& gens2, int n) {
    RowHNF B1 = row_hnf(gens1, n), B2 = row_hnf(gens2, n);
    const int r1 = B1.rank(), r2 = B2.rank();
    if (r1 == 0 || r2 == 0) return {};
    IntMat M(n, r1 + r2);
    for (int j = 0; j < r1; ++j)
        for (int i = 0; i < n; ++i) M.at(i, j) = B1.basis.at(j, i);
    for (int j = 0; j < r2; ++j)
        for (int i = 0; i < n; ++i) M.at(i, r1 + j) = -B2.basis.at(j, i);
    std::vector<IntVec> ker = kernel_basis(M);
    std::vector<IntVec> gens;
    for (const auto& k : ker) {
        IntVec v(n, 0);
        for (int j = 0; j < r1; ++j)
            for (int i = 0; i < n; ++i) v[i] += k[j] * B1.basis.at(j, i);
        gens.push_back(v);
    }
    RowHNF H = row_hnf(gens, n);
    std::vector<IntVec> out;
    for (int i = 0; i < H.rank(); ++i) {
        IntVec v(n);
        for (int j = 0; j < n; ++j) v[j] = H.basis.at(i, j);
        out.push_back(v);
    }
    return out;
}

namespace {

// Diagonalize C by unimodular row/column operations, tracking the inverse of
// the accumulated column transform. Rows of C are sublattice generators in
// the coordinates of the big lattice; rows of Vinv are then the quotient
// generators in those same coordinates.
struct DiagResult {
    std::vector<Int> diag;  // length = cols; 0 where unconstrained
    IntMat Vinv;
};

DiagResult diagonalize(IntMat C) {
    const int k = C.rows, r = C.cols;
    IntMat Vinv = IntMat::identity(r);
    auto col_swap = [&](int a, int b) {
        for (int i = 0; i < k; ++i) std::swap(C.at(i, a), C.at(i, b));
        for (int j = 0; j < r; ++j) std::swap(Vinv.at(a, j), Vinv.at(b, j));
    };
    auto col_addmul = [&](int dst, int src, Int q) {
        // C col_dst += q * col_src ; Vinv row_src -= q * row_dst
        for (int i = 0; i < k; ++i) C.at(i, dst) += q * C.at(i, src);
        for (int j = 0; j < r; ++j) Vinv.at(src, j) -= q * Vinv.at(dst, j);
    };
    auto col_negate = [&](int a) {
        for (int i = 0; i < k; ++i) C.at(i, a) = -C.at(i, a);
        for (int j = 0; j < r; ++j) Vinv.at(a, j) = -Vinv.at(a, j);
    };
    auto row_swap = [&](int a, int b) {
        for (int j = 0; j < r; ++j) std::swap(C.at(a, j), C.at(b, j));
    };
    auto row_addmul = [&](int dst, int src, Int q) {
        for (int j = 0; j < r; ++j) C.at(dst, j) += q * C.at(src, j);
    };

    DiagResult out;
    out.diag.assign(r, 0);
    int t = 0;
    while (t < k && t < r) {
        // find a nonzero pivot in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < k; ++i)
            for (int j = t; j < r; ++j)
                if (C.at(i, j) != 0 &&
                    (pi < 0 || std::llabs(C.at(i, j)) < std::llabs(C.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        if (pi != t) row_swap(pi, t);
        if (pj != t) col_swap(pj, t);
        bool again = false;
        for (int i = t + 1; i < k; ++i)
            if (C.at(i, t) != 0) {
                row_addmul(i, t, -(C.at(i, t) / C.at(t, t)));
                if (C.at(i, t) != 0) again = true;
            }
        for (int j = t + 1; j < r; ++j)
            if (C.at(t, j) != 0) {
                col_addmul(j, t, -(C.at(t, j) / C.at(t, t)));
                if (C.at(t, j) != 0) again = true;
            }
        if (again) continue;  // re-pick a smaller pivot
        if (C.at(t, t) < 0) col_negate(t);
        out.diag[t] = C.at(t, t);
        ++t;
    }
    out.Vinv = Vinv;
    return out;
}

}  // namespace

std::vector<QuotientGen> quotient_generators(const std::vector<IntVec>& big,
                                             const std::vector<IntVec>& small,
                                             int n) {
    RowHNF B = row_hnf(big, n);
    const int r = B.rank();
    if (r == 0) return {};
    // express the small generators in B-coordinates
    IntMat Bt(n, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) Bt.at(j, i) = B.basis.at(i, j);
    std::vector<IntVec> coords;
    for (const auto& s : small) {
        auto sol = solve_integral(Bt, s);
        ADLV_CHECK(sol.has_value(), "small lattice not contained in big lattice");
        coords.push_back(*sol);
    }
    IntMat C(static_cast<int>(coords.size()), r);
    for (size_t i = 0; i < coords.size(); ++i)
        for (int j = 0; j < r; ++j) C.at(static_cast<int>(i), j) = coords[i][j];
    DiagResult D = diagonalize(C);
    std::vector<QuotientGen> out;
    for (int i = 0; i < r; ++i) {
        if (D.diag[i] == 1) continue;  // trivial
        QuotientGen g;
        g.order = D.diag[i];
        g.rep = IntVec(n, 0);
        for (int j = 0; j < r; ++j)
            for (int c = 0; c < n; ++c)
                g.rep[c] += D.Vinv.at(i, j) * B.basis.at(j, c);
        out.push_back(g);
    }
    return out;
}

std::optional<RatVec> solve_any_rational(const IntMat& A, const RatVec& b) {
    ADLV_CHECK(static_cast<int>(b.size()) == A.rows, "rhs size mismatch");
    const int m = A.rows, n = A.cols;
    std::vector<RatVec> M(m, RatVec(n + 1, Rat(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) M[i][j] = A.at(i, j);
        M[i][n] = b[i];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int c = 0; c < n && row < m; ++c) {
        int p = -1;
        for (int i = row; i < m; ++i)
            if (M[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(M[p], M[row]);
        for (int i = 0; i < m; ++i) {
            if (i == row || M[i][c] == 0) continue;
            Rat f = M[i][c] / M[row][c];
            for (int j = c; j <= n; ++j) M[i][j] -= f * M[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (int i = row; i < m; ++i)
        if (M[i][n] != 0) return std::nullopt;
    RatVec x(n, Rat(0));
    for (int r = 0; r < row; ++r) x[pivot_col[r]] = M[r][n] / M[r][pivot_col[r]];
    return x;
}

std::optional<RatVec> solve_unique_rational(const IntMat& A, const RatVec& b) {
    ADLV_CHECK(static_cast<int>(b.size()) == A.rows, "rhs size mismatch");
    const int m = A.rows, n = A.cols;
    // gaussian elimination on [A | b] over the rationals
    std::vector<RatVec> M(m, RatVec(n + 1, Rat(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) M[i][j] = A.at(i, j);
        M[i][n] = b[i];
    }
    std::vector<int> pivot_of_col(n, -1);
    int row = 0;
    for (int c = 0; c < n && row < m; ++c) {
        int p = -1;
        for (int i = row; i < m; ++i)
            if (M[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(M[p], M[row]);
        for (int i = 0; i < m; ++i) {
            if (i == row || M[i][c] == 0) continue;
            Rat f = M[i][c] / M[row][c];
            for (int j = c; j <= n; ++j) M[i][j] -= f * M[row][j];
        }
        pivot_of_col[c] = row;
        ++row;
    }
    for (int c = 0; c < n; ++c)
        ADLV_CHECK(pivot_of_col[c] >= 0, "solve_unique_rational: dependent columns");
    // consistency of the remaining rows
    for (int i = row; i < m; ++i)
        if (M[i][n] != 0) return std::nullopt;
    RatVec x(n, Rat(0));
    for (int c = 0; c < n; ++c) {
        int p = pivot_of_col[c];
        x[c] = M[p][n] / M[p][c];
    }
    return x;
}

}  // namespace lattice
}  // namespace adlv

#pragma once

#include "adlvkit/numeric.hpp"

namespace adlv {

// Small dense integer matrix, row major. Sizes here never exceed the rank of
// the ambient lattice (at most ~12), so everything is done naively.
struct IntMat {
    int rows = 0, cols = 0;
    IntVec a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    Int at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const IntMat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    IntVec apply(const IntVec& v) const {
        ADLV_CHECK(static_cast<int>(v.size()) == cols, "matrix/vector size mismatch");
        IntVec r(rows, 0);
        for (int i = 0; i < rows; ++i) {
            Int s = 0;
            for (int j = 0; j < cols; ++j) s += at(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }

    RatVec apply(const RatVec& v) const {
        ADLV_CHECK(static_cast<int>(v.size()) == cols, "matrix/vector size mismatch");
        RatVec r(rows, Rat(0));
        for (int i = 0; i < rows; ++i) {
            Rat s = 0;
            for (int j = 0; j < cols; ++j) s += v[j] * at(i, j);
            r[i] = s;
        }
        return r;
    }

    IntMat mul(const IntMat& o) const {
        ADLV_CHECK(cols == o.rows, "matrix size mismatch");
        IntMat r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                Int x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
            }
        return r;
    }

    IntMat transpose() const {
        IntMat r(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_identity() const {
        if (rows != cols) return false;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }
};

struct IntMatHash {
    size_t operator()(const IntMat& m) const { return IntVecHash{}(m.a); }
};

// Order of m as a lattice automorphism. Throws if it exceeds the cap, which
// would indicate the matrix is not of finite order.
inline int matrix_order(const IntMat& m, int cap = 4096) {
    IntMat p = m;
    for (int k = 1; k <= cap; ++k) {
        if (p.is_identity()) return k;
        p = p.mul(m);
    }
    throw Error("matrix_order: order exceeds cap, matrix not of finite order?");
}

}  // namespace adlv

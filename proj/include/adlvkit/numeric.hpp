#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace adlv {

using Int = long long;
using IntVec = std::vector<Int>;

// Exact rational scalar. All non-integer arithmetic in the library goes
// through this type; there is no floating point anywhere.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RatVec = std::vector<Rat>;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define ADLV_CHECK(cond, msg)                                        \
    do {                                                             \
        if (!(cond)) {                                               \
            std::ostringstream adlv_check_os_;                       \
            adlv_check_os_ << "invariant violated: " << msg << " (" \
                           << __FILE__ << ":" << __LINE__ << ")";    \
            throw ::adlv::Error(adlv_check_os_.str());               \
        }                                                            \
    } while (0)

inline IntVec zero_vec(size_t n) { return IntVec(n, 0); }

inline IntVec add(const IntVec& a, const IntVec& b) {
    ADLV_CHECK(a.size() == b.size(), "vector size mismatch");
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    ADLV_CHECK(a.size() == b.size(), "vector size mismatch");
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec neg(const IntVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline IntVec scale(Int c, const IntVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const IntVec& a) {
    for (Int x : a)
        if (x != 0) return false;
    return true;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    ADLV_CHECK(a.size() == b.size(), "vector size mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVec to_rat(const IntVec& a) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    return r;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
    ADLV_CHECK(a.size() == b.size(), "vector size mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
    ADLV_CHECK(a.size() == b.size(), "vector size mismatch");
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec scale(const Rat& c, const RatVec& a) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const RatVec& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    ADLV_CHECK(a.size() == b.size(), "vector size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const RatVec& a, const IntVec& b) {
    ADLV_CHECK(a.size() == b.size(), "vector size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_integral(const RatVec& a) {
    for (const Rat& x : a)
        if (denominator(x) != 1) return false;
    return true;
}

inline IntVec to_int(const RatVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        ADLV_CHECK(denominator(a[i]) == 1, "vector is not integral");
        r[i] = static_cast<Int>(numerator(a[i]));
    }
    return r;
}

inline Int to_int(const Rat& x) {
    ADLV_CHECK(denominator(x) == 1, "value is not an integer");
    return static_cast<Int>(numerator(x));
}

inline Int rat_floor(const Rat& x) {
    BigInt q = numerator(x) / denominator(x);
    if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
    return static_cast<Int>(q);
}

inline Int rat_ceil(const Rat& x) { return -rat_floor(-x); }

inline std::string to_string(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline std::string to_string(const IntVec& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

inline std::string to_string(const RatVec& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += to_string(a[i]);
    }
    return s + ")";
}

struct IntVecHash {
    size_t operator()(const IntVec& v) const {
        size_t h = 1469598103934665603ull;
        for (Int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace adlv

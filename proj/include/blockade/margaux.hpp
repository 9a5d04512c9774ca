#pragma once

#include "exact.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace blockade {

/// Exact Gaussian rational, the coordinate field of the Margaux torus.
struct GaussianRat {
    Rat re = 0;
    Rat im = 0;

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRat negated() const { return {-re, -im}; }

    /// Upper half plane closed along the positive reals: im > 0, or im = 0
    /// and re > 0. Exactly one of z, -z qualifies for every nonzero z.
    bool in_upper_half() const { return im > 0 || (im == 0 && re > 0); }

    friend bool operator==(const GaussianRat& x, const GaussianRat& y) = default;
    friend bool operator<(const GaussianRat& x, const GaussianRat& y) {
        if (x.re != y.re)
            return x.re < y.re;
        return x.im < y.im;
    }
};

inline std::string to_string(const GaussianRat& z) {
    std::ostringstream os;
    os << z.re.get_str();
    if (z.im != 0)
        os << (z.im > 0 ? "+" : "") << z.im.get_str() << "i";
    return os.str();
}

/// Point of the rank-two torus: both coordinates nonzero.
struct MargauxPoint {
    GaussianRat a;
    GaussianRat b;

    friend bool operator==(const MargauxPoint& x, const MargauxPoint& y) = default;
    friend bool operator<(const MargauxPoint& x, const MargauxPoint& y) {
        if (!(x.a == y.a))
            return x.a < y.a;
        return x.b < y.b;
    }
};

inline std::string to_string(const MargauxPoint& p) {
    return "(" + to_string(p.a) + ", " + to_string(p.b) + ")";
}

/// Evaluation datum: a torus point with a nonnegative evaluation weight.
struct MargauxModule {
    MargauxPoint point;
    long long m = 0;
};

/// Canonical representative of the sign-flip orbit {(+-a, +-b)}: both
/// coordinates are flipped independently into the upper half plane.
inline MargauxPoint margaux_canonical_point(const MargauxPoint& p) {
    if (p.a.is_zero() || p.b.is_zero())
        throw invalid_input("margaux point " + to_string(p) +
                            " has a zero coordinate, so it does not lie on the torus");
    MargauxPoint q = p;
    if (!q.a.in_upper_half())
        q.a = q.a.negated();
    if (!q.b.in_upper_half())
        q.b = q.b.negated();
    return q;
}

/// Block datum of a finite family of evaluation modules: the canonical points
/// whose evaluation weight is odd, each tagged with residue 1. Entries with
/// even weight contribute the identity class and are dropped. Two modules on
/// the same sign-flip orbit are rejected as a repeated point.
struct MargauxBlockEntry {
    MargauxPoint point;
    int residue = 1;

    friend bool operator==(const MargauxBlockEntry&, const MargauxBlockEntry&) = default;
    friend bool operator<(const MargauxBlockEntry& x, const MargauxBlockEntry& y) {
        return x.point < y.point;
    }
};

struct MargauxBlockDescriptor {
    std::vector<MargauxBlockEntry> entries;  // sorted, points pairwise distinct

    friend bool operator==(const MargauxBlockDescriptor&, const MargauxBlockDescriptor&) = default;
};

inline MargauxBlockDescriptor margaux_block(const std::vector<MargauxModule>& modules) {
    std::vector<MargauxPoint> canon(modules.size());
    for (std::size_t i = 0; i < modules.size(); ++i) {
        if (modules[i].m < 0)
            throw invalid_input("margaux module " + std::to_string(i) +
                                " has a negative evaluation weight");
        canon[i] = margaux_canonical_point(modules[i].point);
        for (std::size_t j = 0; j < i; ++j)
            if (canon[j] == canon[i])
                throw invalid_input("margaux modules " + std::to_string(j) + " and " +
                                    std::to_string(i) + " share the sign-flip orbit of " +
                                    to_string(canon[i]) + "; the family must identify them");
    }
    MargauxBlockDescriptor out;
    for (std::size_t i = 0; i < modules.size(); ++i)
        if (modules[i].m % 2 != 0)
            out.entries.push_back({canon[i], 1});
    std::sort(out.entries.begin(), out.entries.end());
    return out;
}

}  // namespace blockade

#pragma once

#include "exact.hpp"

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace blockade {

/// Integral weight in fundamental-weight coordinates: coords[i] = <w, alpha_i^vee>.
struct Weight {
    std::vector<long long> coords;

    Weight() = default;
    explicit Weight(std::vector<long long> c) : coords(std::move(c)) {}

    static Weight zero(std::size_t rank) { return Weight(std::vector<long long>(rank, 0)); }

    std::size_t rank() const { return coords.size(); }
    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](long long c) { return c == 0; });
    }
    bool is_dominant() const {
        return std::all_of(coords.begin(), coords.end(), [](long long c) { return c >= 0; });
    }
    auto operator<=>(const Weight&) const = default;
};

inline std::string to_string(const Weight& w) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w.coords.size(); ++i)
        os << (i ? "," : "") << w.coords[i];
    os << ']';
    return os.str();
}

/// Root in simple-root coordinates.
using Root = std::vector<long long>;

inline long long root_height(const Root& r) {
    return std::accumulate(r.begin(), r.end(), 0LL);
}

/// Class of a weight in the fundamental group P/Q, presented through the Smith
/// normal form of the Cartan matrix: group_shape lists the cyclic factor
/// orders d1 | d2 | ... (all factors kept, so their product is |det C|),
/// canonical_rep the residues, 0 <= rep[i] < shape[i].
struct FundamentalGroupElement {
    std::vector<long long> canonical_rep;
    std::vector<long long> group_shape;

    bool is_identity() const {
        return std::all_of(canonical_rep.begin(), canonical_rep.end(),
                           [](long long r) { return r == 0; });
    }
    auto operator<=>(const FundamentalGroupElement&) const = default;
};

class RootSystem;
RootSystem build_root_system(char type_letter, int rank);

/// Finite-type irreducible root system datum, Bourbaki node numbering.
/// All derived structure (positive roots, inverse Cartan, Smith form,
/// symmetrized lengths) is computed once at construction.
class RootSystem {
  public:
    char type_letter() const { return type_; }
    int rank() const { return rank_; }

    /// cartan()[i][j] = <alpha_j, alpha_i^vee>.
    const LongMat& cartan() const { return cartan_; }

    /// Sorted by height, then lexicographically; simple roots first.
    const std::vector<Root>& positive_roots() const { return positive_roots_; }
    const Root& highest_root() const { return highest_root_; }

    /// Columns are the fundamental weights in simple-root coordinates,
    /// i.e. the inverse Cartan matrix.
    const RatMat& fundamental_weights_in_root_coords() const { return inv_cartan_; }

    bool is_positive_root(const Root& r) const { return positive_set_.count(r) != 0; }
    bool is_root(const Root& r) const {
        if (is_positive_root(r))
            return true;
        Root neg(r.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            neg[i] = -r[i];
        return is_positive_root(neg);
    }

    /// Fundamental-weight coordinates of a root-lattice vector: C * rc.
    Weight root_to_weight(const Root& rc) const {
        std::vector<long long> fw(rank_, 0);
        for (int j = 0; j < rank_; ++j)
            for (int i = 0; i < rank_; ++i)
                fw[j] += cartan_[j][i] * rc[i];
        return Weight(std::move(fw));
    }

    /// <beta, alpha_i^vee> for beta in simple-root coordinates.
    long long coroot_pairing(const Root& beta, int i) const {
        long long s = 0;
        for (int j = 0; j < rank_; ++j)
            s += cartan_[i][j] * beta[j];
        return s;
    }

    /// Symmetrized form: (alpha_i, alpha_j) = d_i * cartan[i][j], where
    /// d_i = (alpha_i, alpha_i)/2 and long roots have squared length 2.
    /// The d_i are returned pre-multiplied by length_scale() to stay integral.
    long long length_scale() const { return scale_; }
    long long scaled_half_length(int i) const { return d_scaled_[i]; }

    /// Smith data of the Cartan matrix: row transform u with u*C*v = diag.
    const IntMat& smith_row_transform() const { return snf_u_; }
    const std::vector<long long>& fundamental_group_shape() const { return snf_diag_; }

    /// (x, beta) * length_scale() for x in fundamental-weight coordinates and
    /// beta in the root lattice (simple-root coordinates). Exact and integral.
    long long scaled_form(const std::vector<long long>& x_fw, const Root& beta_rc) const {
        long long s = 0;
        for (int j = 0; j < rank_; ++j)
            s += d_scaled_[j] * x_fw[j] * beta_rc[j];
        return s;
    }

    std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

    friend RootSystem build_root_system(char, int);

  private:
    RootSystem() = default;

    char type_ = 0;
    int rank_ = 0;
    LongMat cartan_;
    std::vector<Root> positive_roots_;
    std::set<Root> positive_set_;
    Root highest_root_;
    RatMat inv_cartan_;
    std::vector<long long> d_scaled_;
    long long scale_ = 1;
    IntMat snf_u_;
    std::vector<long long> snf_diag_;
};

namespace detail {

inline LongMat cartan_matrix_for(char type, int rank) {
    auto fail = [&](const std::string& why) {
        throw invalid_input("no root system " + std::string(1, type) + std::to_string(rank) +
                            ": " + why);
    };
    switch (type) {
        case 'A':
            if (rank < 1)
                fail("rank must be at least 1");
            break;
        case 'B':
        case 'C':
            if (rank < 2)
                fail("rank must be at least 2");
            break;
        case 'D':
            if (rank < 3)
                fail("rank must be at least 3");
            break;
        case 'E':
            if (rank < 6 || rank > 8)
                fail("rank must be 6, 7 or 8");
            break;
        case 'F':
            if (rank != 4)
                fail("rank must be 4");
            break;
        case 'G':
            if (rank != 2)
                fail("rank must be 2");
            break;
        default:
            fail("unknown type letter");
    }

    const int n = rank;
    LongMat c(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        c[i][i] = 2;
    auto bond = [&](int i, int j) {  // single edge, 1-indexed nodes
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    };
    switch (type) {
        case 'A':
            for (int i = 1; i < n; ++i)
                bond(i, i + 1);
            break;
        case 'B':
            // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            for (int i = 1; i < n; ++i)
                bond(i, i + 1);
            c[n - 1][n - 2] = -2;
            break;
        case 'C':
            // alpha_n long: transpose of B_n
            for (int i = 1; i < n; ++i)
                bond(i, i + 1);
            c[n - 2][n - 1] = -2;
            break;
        case 'D':
            for (int i = 1; i < n - 2; ++i)
                bond(i, i + 1);
            bond(n - 2, n - 1);
            bond(n - 2, n);
            break;
        case 'E':
            bond(1, 3);
            bond(3, 4);
            bond(4, 5);
            bond(5, 6);
            bond(2, 4);
            if (n >= 7)
                bond(6, 7);
            if (n == 8)
                bond(7, 8);
            break;
        case 'F':
            bond(1, 2);
            bond(2, 3);
            bond(3, 4);
            c[2][1] = -2;  // alpha_3, alpha_4 short
            break;
        case 'G':
            // alpha_1 short
            c[0][1] = -3;
            c[1][0] = -1;
            break;
    }
    return c;
}

// Positive roots by closure over root strings, level by level in height.
// q = p - <beta, alpha_i^vee> >= 1 certifies beta + alpha_i as a root; the
// down-string members needed for p all live at smaller heights, hence are
// already known.
inline void positive_root_closure(const LongMat& cartan, std::vector<Root>& out,
                                  std::set<Root>& set) {
    const int n = static_cast<int>(cartan.size());
    std::vector<Root> level;
    for (int i = 0; i < n; ++i) {
        Root e(n, 0);
        e[i] = 1;
        level.push_back(e);
        set.insert(e);
    }
    std::sort(level.begin(), level.end());
    out = level;
    while (!level.empty()) {
        std::vector<Root> next;
        for (const Root& beta : level) {
            for (int i = 0; i < n; ++i) {
                long long p = 0;
                Root down = beta;
                for (;;) {
                    down[i] -= 1;
                    if (set.count(down) == 0)
                        break;
                    ++p;
                }
                long long pairing = 0;
                for (int j = 0; j < n; ++j)
                    pairing += cartan[i][j] * beta[j];
                if (p - pairing >= 1) {
                    Root up = beta;
                    up[i] += 1;
                    if (set.insert(up).second)
                        next.push_back(up);
                }
            }
        }
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
}

}  // namespace detail

inline RootSystem build_root_system(char type_letter, int rank) {
    RootSystem rs;
    rs.type_ = type_letter;
    rs.rank_ = rank;
    rs.cartan_ = detail::cartan_matrix_for(type_letter, rank);

    detail::positive_root_closure(rs.cartan_, rs.positive_roots_, rs.positive_set_);

    // highest root: the unique positive root theta with theta + alpha_i never a root
    const Root* theta = nullptr;
    for (const Root& beta : rs.positive_roots_) {
        bool top = true;
        for (int i = 0; i < rank && top; ++i) {
            Root up = beta;
            up[i] += 1;
            if (rs.positive_set_.count(up))
                top = false;
        }
        if (top) {
            if (theta)
                throw internal_error("root closure produced two maximal roots");
            theta = &beta;
        }
    }
    if (!theta)
        throw internal_error("root closure produced no maximal root");
    rs.highest_root_ = *theta;

    rs.inv_cartan_ = invert_rational(rs.cartan_);

    // d_i from d_i * a_ij = d_j * a_ji along the Dynkin graph, long roots = 1
    std::vector<Rat> d(rank, 0);
    d[0] = 1;
    std::vector<int> todo{0};
    while (!todo.empty()) {
        int i = todo.back();
        todo.pop_back();
        for (int j = 0; j < rank; ++j) {
            if (j == i || rs.cartan_[i][j] == 0 || d[j] != 0)
                continue;
            d[j] = d[i] * make_rat(to_int(rs.cartan_[i][j]), to_int(rs.cartan_[j][i]));
            todo.push_back(j);
        }
    }
    Rat dmax = d[0];
    for (const Rat& x : d)
        if (x > dmax)
            dmax = x;
    Int scale = 1;
    for (Rat& x : d) {
        if (x == 0)
            throw internal_error("Dynkin graph is disconnected");
        x /= dmax;
        scale = lcm(scale, x.get_den());
    }
    rs.scale_ = scale.get_si();
    rs.d_scaled_.resize(rank);
    for (int i = 0; i < rank; ++i) {
        Rat s = d[i] * static_cast<long>(rs.scale_);
        if (!is_integer(s))
            throw internal_error("length scaling failed");
        rs.d_scaled_[i] = s.get_num().get_si();
    }

    SmithForm snf = smith_normal_form(rs.cartan_);
    rs.snf_u_ = std::move(snf.u);
    rs.snf_diag_.resize(rank);
    for (int i = 0; i < rank; ++i) {
        if (snf.diag[i] <= 0)
            throw internal_error("Cartan matrix is singular");
        rs.snf_diag_[i] = snf.diag[i].get_si();
    }

    // symmetrizability: d_i a_ij == d_j a_ji
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (rs.d_scaled_[i] * rs.cartan_[i][j] != rs.d_scaled_[j] * rs.cartan_[j][i])
                throw internal_error("Cartan matrix is not symmetrizable");

    return rs;
}

inline void require_rank(const RootSystem& rs, const Weight& w, const char* where) {
    if (w.rank() != static_cast<std::size_t>(rs.rank()))
        throw invalid_input(std::string(where) + ": weight " + to_string(w) + " has rank " +
                            std::to_string(w.rank()) + ", expected " + std::to_string(rs.rank()));
}

/// Simple-root coordinates of a weight; integral reports whether the weight
/// lies in the root lattice.
struct RootCoords {
    std::vector<Rat> coords;
    bool integral = false;
};

inline RootCoords weight_in_root_coords(const RootSystem& rs, const Weight& w) {
    require_rank(rs, w, "weight_in_root_coords");
    const RatMat& inv = rs.fundamental_weights_in_root_coords();
    RootCoords out;
    out.coords.resize(rs.rank());
    out.integral = true;
    for (int i = 0; i < rs.rank(); ++i) {
        Rat c = 0;
        for (int j = 0; j < rs.rank(); ++j)
            c += inv[i][j] * static_cast<long>(w.coords[j]);
        if (!is_integer(c))
            out.integral = false;
        out.coords[i] = c;
    }
    return out;
}

/// Image of a weight in P/Q. Residues come from the Smith row transform of
/// the Cartan matrix: r = (U w) mod diag.
inline FundamentalGroupElement fundamental_group_coset(const RootSystem& rs, const Weight& w) {
    require_rank(rs, w, "fundamental_group_coset");
    const IntMat& u = rs.smith_row_transform();
    FundamentalGroupElement out;
    out.group_shape = rs.fundamental_group_shape();
    out.canonical_rep.resize(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
        Int y = 0;
        for (int j = 0; j < rs.rank(); ++j)
            y += u[i][j] * to_int(w.coords[j]);
        const Int d = to_int(out.group_shape[i]);
        Int r = ((y % d) + d) % d;
        out.canonical_rep[i] = r.get_si();
    }
    return out;
}

/// Largest k with beta + k*alpha_i still in the adjoint support, i.e. in
/// Phi, or 0 when the string through beta = -alpha_i passes the origin.
inline long long root_string_upper_bound(const RootSystem& rs, const Root& beta, int i) {
    if (i < 0 || i >= rs.rank())
        throw invalid_input("root_string_upper_bound: node index " + std::to_string(i) +
                            " out of range");
    if (beta.size() != static_cast<std::size_t>(rs.rank()) || !rs.is_root(beta))
        throw invalid_input("root_string_upper_bound: input is not a root");
    long long q = 0;
    Root up = beta;
    for (;;) {
        up[i] += 1;
        const bool origin = std::all_of(up.begin(), up.end(), [](long long c) { return c == 0; });
        if (origin || rs.is_root(up))
            ++q;
        else
            break;
    }
    return q;
}

/// rho-shifted conjugation into the dominant chamber. Reflects the first
/// negative coordinate of w + rho until dominant; a zero coordinate at the
/// end means w + rho sits on a wall ("singular"), otherwise the result is
/// the dominant representative minus rho together with the sign of the
/// Weyl element used.
struct DominantConjugate {
    bool singular = false;
    Weight weight;
    int parity = 1;
};

inline DominantConjugate dominant_conjugate(const RootSystem& rs, const Weight& w) {
    require_rank(rs, w, "dominant_conjugate");
    const int n = rs.rank();
    const LongMat& c = rs.cartan();
    std::vector<long long> x = w.coords;
    for (int i = 0; i < n; ++i)
        x[i] += 1;
    int parity = 1;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < n; ++i)
            if (x[i] < 0) {
                neg = i;
                break;
            }
        if (neg < 0)
            break;
        const long long v = x[neg];
        // s_neg: subtract v times alpha_neg, whose fw coordinates are column neg of C
        for (int j = 0; j < n; ++j)
            x[j] -= v * c[j][neg];
        parity = -parity;
    }
    for (int i = 0; i < n; ++i)
        if (x[i] == 0)
            return {true, Weight{}, 0};
    for (int i = 0; i < n; ++i)
        x[i] -= 1;
    DominantConjugate out;
    out.weight = Weight(std::move(x));
    out.parity = parity;
    return out;
}

/// Unshifted dominant representative of the Weyl orbit of w.
inline Weight dominant_representative(const RootSystem& rs, const Weight& w) {
    require_rank(rs, w, "dominant_representative");
    const int n = rs.rank();
    const LongMat& c = rs.cartan();
    std::vector<long long> x = w.coords;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < n; ++i)
            if (x[i] < 0) {
                neg = i;
                break;
            }
        if (neg < 0)
            return Weight(std::move(x));
        const long long v = x[neg];
        for (int j = 0; j < n; ++j)
            x[j] -= v * c[j][neg];
    }
}

inline const std::vector<Root>& positive_roots(const RootSystem& rs) {
    return rs.positive_roots();
}

inline const Root& highest_root(const RootSystem& rs) { return rs.highest_root(); }

}  // namespace blockade

#pragma once

#include "root_system.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace blockade {

/// Weight diagram or decomposition: weights with strictly positive
/// multiplicities only.
struct WeightMultiset {
    std::map<Weight, long long> entries;

    long long multiplicity(const Weight& w) const {
        auto it = entries.find(w);
        return it == entries.end() ? 0 : it->second;
    }
    bool operator==(const WeightMultiset&) const = default;
};

/// Counters of the always-on internal consistency checks. Both checks throw
/// internal_error on violation, so nonzero counters certify clean runs.
struct InvariantStats {
    std::uint64_t tensor_dimension_checks = 0;
    std::uint64_t freudenthal_total_checks = 0;
};

namespace detail {

inline std::atomic<std::uint64_t>& tensor_check_counter() {
    static std::atomic<std::uint64_t> c{0};
    return c;
}
inline std::atomic<std::uint64_t>& freudenthal_check_counter() {
    static std::atomic<std::uint64_t> c{0};
    return c;
}

inline std::size_t read_cache_limit_from_env() {
    const char* raw = std::getenv("BLOCKADE_CACHE_LIMIT");
    if (!raw || !*raw)
        return 256;
    char* end = nullptr;
    const long long v = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 0)
        return 256;
    return static_cast<std::size_t>(v);
}

using DiagramKey = std::pair<std::string, std::vector<long long>>;

/// Memoized weight diagrams, FIFO eviction, bounded by BLOCKADE_CACHE_LIMIT
/// (0 disables storage). Safe for concurrent readers and writers; results
/// are identical with and without the cache.
class DiagramCache {
  public:
    DiagramCache() : limit_(read_cache_limit_from_env()) {}

    std::shared_ptr<const WeightMultiset> find(const DiagramKey& key) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : it->second;
    }

    void store(const DiagramKey& key, std::shared_ptr<const WeightMultiset> value) {
        std::lock_guard<std::mutex> lock(mu_);
        if (limit_ == 0)
            return;
        if (map_.count(key))
            return;
        while (map_.size() >= limit_ && !order_.empty()) {
            map_.erase(order_.front());
            order_.pop_front();
        }
        map_.emplace(key, std::move(value));
        order_.push_back(key);
    }

    void set_limit(std::size_t limit) {
        std::lock_guard<std::mutex> lock(mu_);
        limit_ = limit;
        while (map_.size() > limit_ && !order_.empty()) {
            map_.erase(order_.front());
            order_.pop_front();
        }
    }
    std::size_t limit() {
        std::lock_guard<std::mutex> lock(mu_);
        return limit_;
    }
    void clear() {
        std::lock_guard<std::mutex> lock(mu_);
        map_.clear();
        order_.clear();
    }

  private:
    std::mutex mu_;
    std::size_t limit_;
    std::map<DiagramKey, std::shared_ptr<const WeightMultiset>> map_;
    std::deque<DiagramKey> order_;
};

inline DiagramCache& diagram_cache() {
    static DiagramCache cache;
    return cache;
}

}  // namespace detail

inline InvariantStats invariant_check_stats() {
    return {detail::tensor_check_counter().load(), detail::freudenthal_check_counter().load()};
}

inline void set_weight_diagram_cache_limit(std::size_t limit) {
    detail::diagram_cache().set_limit(limit);
}
inline std::size_t weight_diagram_cache_limit() { return detail::diagram_cache().limit(); }
inline void clear_weight_diagram_cache() { detail::diagram_cache().clear(); }

/// Dimension of the simple module with highest weight lam, by the Weyl
/// dimension formula. Every division is exact and checked.
inline Int weyl_dimension(const RootSystem& rs, const Weight& lam) {
    require_rank(rs, lam, "weyl_dimension");
    if (!lam.is_dominant())
        throw invalid_input("weyl_dimension: weight " + to_string(lam) + " is not dominant");
    const int n = rs.rank();
    std::vector<long long> shifted(lam.coords);
    std::vector<long long> rho(n, 1);
    for (int i = 0; i < n; ++i)
        shifted[i] += 1;
    Int num = 1, den = 1;
    for (const Root& beta : rs.positive_roots()) {
        // <x, beta^vee> = 2 (x, beta) / (beta, beta), all through the scaled form
        const long long norm = rs.scaled_form(rs.root_to_weight(beta).coords, beta);
        const long long a = 2 * rs.scaled_form(shifted, beta);
        const long long b = 2 * rs.scaled_form(rho, beta);
        if (a % norm != 0 || b % norm != 0)
            throw internal_error("weyl_dimension: non-integral coroot pairing");
        num *= to_int(a / norm);
        den *= to_int(b / norm);
    }
    if (num % den != 0)
        throw internal_error("weyl_dimension: non-integral quotient");
    return num / den;
}

namespace detail {

/// Full weight diagram of the simple module with highest weight lam, by
/// Freudenthal's recursion, processed level by level in depth below lam.
/// The total dimension is checked against the Weyl formula on every
/// computation.
inline std::shared_ptr<const WeightMultiset> weight_diagram(const RootSystem& rs,
                                                            const Weight& lam) {
    require_rank(rs, lam, "freudenthal_multiplicities");
    if (!lam.is_dominant())
        throw invalid_input("freudenthal_multiplicities: weight " + to_string(lam) +
                            " is not dominant");
    const DiagramKey key{rs.name(), lam.coords};
    if (auto hit = diagram_cache().find(key))
        return hit;

    const int n = rs.rank();
    const LongMat& c = rs.cartan();
    const auto& pos = rs.positive_roots();
    const std::size_t nroots = pos.size();
    std::vector<std::vector<long long>> root_fw(nroots);
    std::vector<long long> root_h(nroots);
    for (std::size_t b = 0; b < nroots; ++b) {
        root_fw[b] = rs.root_to_weight(pos[b]).coords;
        root_h[b] = root_height(pos[b]);
    }

    auto result = std::make_shared<WeightMultiset>();
    std::map<Weight, long long>& mult = result->entries;
    mult[lam] = 1;

    std::vector<long long> lam2rho(lam.coords);  // lam + nu + 2 rho, nu filled per candidate
    // level: candidates nu at the current depth, with lam - nu in root coords
    std::map<Weight, Root> level;
    level.emplace(lam, Root(n, 0));

    while (!level.empty()) {
        std::map<Weight, Root> next;
        for (const auto& [nu, down] : level) {
            for (int i = 0; i < n; ++i) {
                Weight child = nu;
                for (int j = 0; j < n; ++j)
                    child.coords[j] -= c[j][i];
                if (next.count(child))
                    continue;
                Root cdown = down;
                cdown[i] += 1;
                next.emplace(std::move(child), std::move(cdown));
            }
        }
        level.clear();
        for (auto& [nu, down] : next) {
            // denominator: ((lam+rho)^2 - (nu+rho)^2) = (lam - nu, lam + nu + 2 rho)
            for (int j = 0; j < n; ++j)
                lam2rho[j] = lam.coords[j] + nu.coords[j] + 2;
            const long long den = rs.scaled_form(lam2rho, down);
            if (den <= 0)
                continue;  // cannot be a weight of the module
            const long long depth = root_height(down);
            long long num = 0;
            for (std::size_t b = 0; b < nroots; ++b) {
                const long long kmax = depth / root_h[b];
                std::vector<long long> x = nu.coords;
                for (long long k = 1; k <= kmax; ++k) {
                    for (int j = 0; j < n; ++j)
                        x[j] += root_fw[b][j];
                    const auto it = mult.find(Weight(x));
                    if (it != mult.end())
                        num += it->second * rs.scaled_form(x, pos[b]);
                }
            }
            num *= 2;
            if (num % den != 0 || num < 0)
                throw internal_error("freudenthal: non-integral multiplicity at " + to_string(nu));
            const long long m = num / den;
            if (m > 0) {
                mult.emplace(nu, m);
                level.emplace(nu, down);
            }
        }
    }

    Int total = 0;
    for (const auto& [nu, m] : mult)
        total += to_int(m);
    if (total != weyl_dimension(rs, lam))
        throw internal_error("freudenthal: diagram total disagrees with the Weyl dimension for " +
                             to_string(lam));
    freudenthal_check_counter().fetch_add(1);

    diagram_cache().store(key, result);
    return result;
}

}  // namespace detail

inline WeightMultiset freudenthal_multiplicities(const RootSystem& rs, const Weight& lam) {
    return *detail::weight_diagram(rs, lam);
}

/// Highest weight of the dual module: the dominant representative of -lam.
inline Weight dual_weight(const RootSystem& rs, const Weight& lam) {
    require_rank(rs, lam, "dual_weight");
    if (!lam.is_dominant())
        throw invalid_input("dual_weight: weight " + to_string(lam) + " is not dominant");
    std::vector<long long> neg(lam.coords);
    for (auto& v : neg)
        v = -v;
    return dominant_representative(rs, Weight(std::move(neg)));
}

/// Decomposition of L(lam) (x) L(mu) into simples, by Klimyk folding of the
/// smaller weight diagram into the other highest weight. The bookkeeping
/// identity sum mult(nu) dim(nu) = dim(lam) dim(mu) is checked on every call.
inline WeightMultiset tensor_decompose(const RootSystem& rs, const Weight& lam,
                                       const Weight& mu) {
    require_rank(rs, lam, "tensor_decompose");
    require_rank(rs, mu, "tensor_decompose");
    if (!lam.is_dominant() || !mu.is_dominant())
        throw invalid_input("tensor_decompose: weights must be dominant");
    const Int dl = weyl_dimension(rs, lam);
    const Int dm = weyl_dimension(rs, mu);
    const Weight& fold = (dl <= dm) ? lam : mu;
    const Weight& base = (dl <= dm) ? mu : lam;

    auto diagram = detail::weight_diagram(rs, fold);
    std::map<Weight, long long> acc;
    const int n = rs.rank();
    for (const auto& [w, m] : diagram->entries) {
        std::vector<long long> t(n);
        for (int j = 0; j < n; ++j)
            t[j] = base.coords[j] + w.coords[j];
        const DominantConjugate dc = dominant_conjugate(rs, Weight(std::move(t)));
        if (dc.singular)
            continue;
        acc[dc.weight] += m * dc.parity;
    }

    WeightMultiset out;
    Int total = 0;
    for (const auto& [nu, m] : acc) {
        if (m < 0)
            throw internal_error("tensor_decompose: negative multiplicity at " + to_string(nu));
        if (m == 0)
            continue;
        out.entries.emplace(nu, m);
        total += to_int(m) * weyl_dimension(rs, nu);
    }
    if (total != dl * dm)
        throw internal_error("tensor_decompose: dimension bookkeeping failed for " +
                             to_string(lam) + " (x) " + to_string(mu));
    detail::tensor_check_counter().fetch_add(1);
    return out;
}

/// Multiplicity c(lam, mu) of the adjoint module inside L(lam)* (x) L(mu),
/// computed from the vanishing-order description of the highest-weight space:
/// c = dim{ v in g_{mu-lam} : e_i^{lam_i + 1} v = 0 for all i }.
/// Three cases on delta = mu - lam:
///   not in the root lattice, or nonzero and not a root  ->  0
///   a root beta  ->  1 when lam_i >= q_i for every i, where q_i is the
///                    upper string bound of beta in direction alpha_i, else 0
///   zero         ->  number of i with lam_i > 0.
inline long long prv_adjoint_multiplicity(const RootSystem& rs, const Weight& lam,
                                          const Weight& mu) {
    require_rank(rs, lam, "prv_adjoint_multiplicity");
    require_rank(rs, mu, "prv_adjoint_multiplicity");
    if (!lam.is_dominant() || !mu.is_dominant())
        throw invalid_input("prv_adjoint_multiplicity: weights must be dominant");
    const int n = rs.rank();
    std::vector<long long> delta(n);
    for (int i = 0; i < n; ++i)
        delta[i] = mu.coords[i] - lam.coords[i];
    const RootCoords rc = weight_in_root_coords(rs, Weight(delta));
    if (!rc.integral)
        return 0;
    Root beta(n);
    bool zero = true;
    for (int i = 0; i < n; ++i) {
        beta[i] = rc.coords[i].get_num().get_si();
        if (beta[i] != 0)
            zero = false;
    }
    if (zero) {
        long long count = 0;
        for (int i = 0; i < n; ++i)
            if (lam.coords[i] > 0)
                ++count;
        return count;
    }
    if (!rs.is_root(beta))
        return 0;
    for (int i = 0; i < n; ++i)
        if (lam.coords[i] < root_string_upper_bound(rs, beta, i))
            return 0;
    return 1;
}

}  // namespace blockade

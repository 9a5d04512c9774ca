#pragma once

#include "exact.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace blockade {

/// Finite set of evaluation points with a group action given by generator
/// permutations, plus one cotangent dimension per orbit. Orbits are
/// canonically named by their least point identifier.
class OrbitSpace {
  public:
    OrbitSpace(std::vector<std::string> points,
               std::vector<std::map<std::string, std::string>> generators,
               std::map<std::string, long long> cotangent)
        : points_(std::move(points)), generators_(std::move(generators)) {
        std::sort(points_.begin(), points_.end());
        for (std::size_t i = 1; i < points_.size(); ++i)
            if (points_[i] == points_[i - 1])
                throw invalid_input("orbit space: duplicate point '" + points_[i] + "'");

        const std::set<std::string> universe(points_.begin(), points_.end());
        for (std::size_t g = 0; g < generators_.size(); ++g) {
            const auto& gen = generators_[g];
            if (gen.size() != points_.size())
                throw invalid_input("orbit space: generator " + std::to_string(g) +
                                    " is not defined on every point");
            std::set<std::string> image;
            for (const auto& [from, to] : gen) {
                if (!universe.count(from))
                    throw invalid_input("orbit space: generator " + std::to_string(g) +
                                        " maps unknown point '" + from + "'");
                if (!universe.count(to))
                    throw invalid_input("orbit space: generator " + std::to_string(g) +
                                        " sends '" + from + "' to unknown point '" + to + "'");
                if (!image.insert(to).second)
                    throw invalid_input("orbit space: generator " + std::to_string(g) +
                                        " is not a bijection (hits '" + to + "' twice)");
            }
        }

        // orbit partition by closure under all generators
        std::map<std::string, std::string> rep;
        for (const std::string& p : points_) {
            if (rep.count(p))
                continue;
            std::vector<std::string> orbit{p};
            std::set<std::string> seen{p};
            for (std::size_t k = 0; k < orbit.size(); ++k)
                for (const auto& gen : generators_) {
                    const std::string& q = gen.at(orbit[k]);
                    if (seen.insert(q).second)
                        orbit.push_back(q);
                }
            std::sort(orbit.begin(), orbit.end());
            const std::string& r = orbit.front();
            for (const std::string& q : orbit)
                rep[q] = r;
            members_[r] = orbit;
            reps_.push_back(r);
        }
        std::sort(reps_.begin(), reps_.end());
        rep_of_ = std::move(rep);

        for (const auto& [point, dim] : cotangent) {
            if (!universe.count(point))
                throw invalid_input("orbit space: cotangent dimension given at unknown point '" +
                                    point + "'");
            if (dim < 1)
                throw invalid_input("orbit space: cotangent dimension at '" + point +
                                    "' must be positive");
            const std::string& r = rep_of_.at(point);
            if (!cotangent_.emplace(r, dim).second)
                throw invalid_input("orbit space: cotangent dimension given twice for the orbit of '" +
                                    r + "'");
        }
        for (const std::string& r : reps_)
            if (!cotangent_.count(r))
                throw invalid_input("orbit space: no cotangent dimension for the orbit of '" + r +
                                    "'");
    }

    const std::vector<std::string>& points() const { return points_; }
    const std::vector<std::map<std::string, std::string>>& generators() const {
        return generators_;
    }
    bool has_point(const std::string& p) const { return rep_of_.count(p) != 0; }

    const std::string& orbit_rep(const std::string& p) const {
        auto it = rep_of_.find(p);
        if (it == rep_of_.end())
            throw invalid_input("orbit space: unknown point '" + p + "'");
        return it->second;
    }
    const std::vector<std::string>& orbit_members(const std::string& p) const {
        return members_.at(orbit_rep(p));
    }
    const std::vector<std::string>& orbit_representatives() const { return reps_; }

    long long cotangent_dim(const std::string& p) const { return cotangent_.at(orbit_rep(p)); }

    const std::map<std::string, long long>& cotangent_by_rep() const { return cotangent_; }

    /// One orbit on which the generator acts by a full cycle.
    static OrbitSpace single_free_orbit(std::vector<std::string> pts, long long d) {
        if (pts.empty())
            throw invalid_input("single_free_orbit: no points");
        std::sort(pts.begin(), pts.end());
        std::vector<std::map<std::string, std::string>> gens;
        if (pts.size() > 1) {
            std::map<std::string, std::string> cycle;
            for (std::size_t i = 0; i < pts.size(); ++i)
                cycle[pts[i]] = pts[(i + 1) % pts.size()];
            gens.push_back(std::move(cycle));
        }
        std::map<std::string, long long> cot{{pts.front(), d}};
        return OrbitSpace(std::move(pts), std::move(gens), std::move(cot));
    }

    /// Untwisted loop situation: trivial action, every cotangent dimension 1.
    static OrbitSpace loop_points(std::vector<std::string> pts) {
        return torus_points(std::move(pts), 1);
    }

    /// n-variable torus situation: trivial action, every cotangent dimension n.
    static OrbitSpace torus_points(std::vector<std::string> pts, long long n) {
        std::map<std::string, long long> cot;
        for (const std::string& p : pts)
            cot[p] = n;
        return OrbitSpace(std::move(pts), {}, std::move(cot));
    }

    /// One sign-flip orbit of four points named base:++ base:+- base:-+
    /// base:--, two commuting involutions, cotangent dimension 2.
    static OrbitSpace margaux_orbit(const std::string& base) {
        return margaux_orbits({base});
    }

    static OrbitSpace margaux_orbits(const std::vector<std::string>& bases) {
        std::vector<std::string> pts;
        std::map<std::string, std::string> flip_a, flip_b;
        for (const std::string& base : bases) {
            const std::string pp = base + ":++", pm = base + ":+-", mp = base + ":-+",
                              mm = base + ":--";
            pts.insert(pts.end(), {pp, pm, mp, mm});
            flip_a[pp] = mp;
            flip_a[mp] = pp;
            flip_a[pm] = mm;
            flip_a[mm] = pm;
            flip_b[pp] = pm;
            flip_b[pm] = pp;
            flip_b[mp] = mm;
            flip_b[mm] = mp;
        }
        std::map<std::string, long long> cot;
        for (const std::string& base : bases)
            cot[base + ":++"] = 2;
        return OrbitSpace(std::move(pts), {std::move(flip_a), std::move(flip_b)},
                          std::move(cot));
    }

  private:
    std::vector<std::string> points_;
    std::vector<std::map<std::string, std::string>> generators_;
    std::map<std::string, std::string> rep_of_;
    std::map<std::string, std::vector<std::string>> members_;
    std::vector<std::string> reps_;
    std::map<std::string, long long> cotangent_;
};

}  // namespace blockade

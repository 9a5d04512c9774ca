#pragma once

#include "orbit_space.hpp"
#include "rep_theory.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace blockade {

/// Simple evaluation module of a twisted form, described by its finitely
/// supported section: point identifier -> dominant weight. Keys may name any
/// point of an orbit; operations canonicalize to the least identifier and
/// drop zero weights, so results never depend on the chosen representatives.
struct EvalModuleDescriptor {
    std::map<std::string, Weight> assignments;

    bool operator==(const EvalModuleDescriptor&) const = default;
};

inline EvalModuleDescriptor canonicalize(const RootSystem& rs, const OrbitSpace& os,
                                         const EvalModuleDescriptor& d) {
    EvalModuleDescriptor out;
    for (const auto& [point, w] : d.assignments) {
        if (!os.has_point(point))
            throw invalid_input("module descriptor: unknown point '" + point + "'");
        require_rank(rs, w, "module descriptor");
        if (!w.is_dominant())
            throw invalid_input("module descriptor: weight " + to_string(w) + " at '" + point +
                                "' is not dominant");
        if (w.is_zero())
            continue;  // zero weights are implicit
        const std::string& rep = os.orbit_rep(point);
        if (!out.assignments.emplace(rep, w).second)
            throw invalid_input("module descriptor: two assignments meet the orbit of '" + rep +
                                "'");
    }
    return out;
}

/// Block invariant: per orbit, the class of the assigned weight in P/Q.
/// Orbits carrying the identity class are left out, so descriptors supported
/// on different orbits can still share a character.
struct SpectralCharacter {
    std::map<std::string, FundamentalGroupElement> assignments;

    bool operator==(const SpectralCharacter&) const = default;
};

inline SpectralCharacter spectral_character(const RootSystem& rs, const OrbitSpace& os,
                                            const EvalModuleDescriptor& d) {
    const EvalModuleDescriptor canon = canonicalize(rs, os, d);
    SpectralCharacter out;
    for (const auto& [rep, w] : canon.assignments) {
        FundamentalGroupElement e = fundamental_group_coset(rs, w);
        if (!e.is_identity())
            out.assignments.emplace(rep, std::move(e));
    }
    return out;
}

/// dim Ext^1 between two simple evaluation modules. Sections differing on
/// two or more orbits leave no room for extensions; a single differing orbit
/// M contributes c(lam_M, mu_M) * d_M; equal sections accumulate the
/// diagonal contribution c(lam_M, lam_M) * d_M over the common support.
/// (The twisted forms in scope are perfect, so no abelianization correction
/// enters the equal-section case.)
inline long long ext_dim(const RootSystem& rs, const OrbitSpace& os,
                         const EvalModuleDescriptor& e_raw, const EvalModuleDescriptor& f_raw) {
    const EvalModuleDescriptor e = canonicalize(rs, os, e_raw);
    const EvalModuleDescriptor f = canonicalize(rs, os, f_raw);

    const Weight zero = Weight::zero(rs.rank());
    std::vector<std::string> differ;
    auto weight_at = [&](const EvalModuleDescriptor& d, const std::string& rep) -> const Weight& {
        auto it = d.assignments.find(rep);
        return it == d.assignments.end() ? zero : it->second;
    };
    std::set<std::string> support;
    for (const auto& [rep, w] : e.assignments)
        support.insert(rep);
    for (const auto& [rep, w] : f.assignments)
        support.insert(rep);
    for (const std::string& rep : support)
        if (weight_at(e, rep) != weight_at(f, rep))
            differ.push_back(rep);

    if (differ.size() >= 2)
        return 0;
    if (differ.size() == 1) {
        const std::string& rep = differ.front();
        return prv_adjoint_multiplicity(rs, weight_at(e, rep), weight_at(f, rep)) *
               os.cotangent_dim(rep);
    }
    long long total = 0;
    for (const auto& [rep, w] : e.assignments)
        total += prv_adjoint_multiplicity(rs, w, w) * os.cotangent_dim(rep);
    return total;
}

/// Two simples lie in the same block exactly when their spectral characters
/// agree.
inline bool same_block(const RootSystem& rs, const OrbitSpace& os, const EvalModuleDescriptor& e,
                       const EvalModuleDescriptor& f) {
    return spectral_character(rs, os, e) == spectral_character(rs, os, f);
}

/// Partition of a module family into blocks: one group per distinct spectral
/// character, groups ordered by their first member, members in input order.
struct BlockGroup {
    SpectralCharacter character;
    std::vector<std::size_t> members;
};

inline std::vector<BlockGroup> blocks_report(const RootSystem& rs, const OrbitSpace& os,
                                             const std::vector<EvalModuleDescriptor>& modules) {
    std::vector<BlockGroup> groups;
    for (std::size_t i = 0; i < modules.size(); ++i) {
        SpectralCharacter sc = spectral_character(rs, os, modules[i]);
        bool placed = false;
        for (BlockGroup& g : groups)
            if (g.character == sc) {
                g.members.push_back(i);
                placed = true;
                break;
            }
        if (!placed)
            groups.push_back({std::move(sc), {i}});
    }
    return groups;
}

/// Chain of descriptors from e to f in which consecutive entries admit a
/// nonzero Ext^1 in at least one direction. The search runs over descriptors
/// supported on the orbits of supp(e) and supp(f) with coordinates bounded by
/// weight_bound, breadth first, so a returned chain has minimal length.
/// Returns nothing when the two ends are not linked inside that window.
inline std::optional<std::vector<EvalModuleDescriptor>> linkage_chain(
    const RootSystem& rs, const OrbitSpace& os, const EvalModuleDescriptor& e_raw,
    const EvalModuleDescriptor& f_raw, long long weight_bound) {
    const EvalModuleDescriptor e = canonicalize(rs, os, e_raw);
    const EvalModuleDescriptor f = canonicalize(rs, os, f_raw);
    if (weight_bound < 0)
        throw invalid_input("linkage_chain: negative weight bound");
    for (const EvalModuleDescriptor* d : {&e, &f})
        for (const auto& [rep, w] : d->assignments)
            for (long long c : w.coords)
                if (c > weight_bound)
                    throw invalid_input("linkage_chain: weight " + to_string(w) + " at '" + rep +
                                        "' exceeds the weight bound " +
                                        std::to_string(weight_bound));
    if (e == f)
        return std::vector<EvalModuleDescriptor>{e};

    std::vector<std::string> reps;
    for (const auto& [rep, w] : e.assignments)
        reps.push_back(rep);
    for (const auto& [rep, w] : f.assignments)
        if (!e.assignments.count(rep))
            reps.push_back(rep);
    std::sort(reps.begin(), reps.end());

    const int n = rs.rank();
    // every weight with coordinates in [0, weight_bound], zero first
    std::vector<Weight> choices;
    {
        Weight w = Weight::zero(n);
        for (;;) {
            choices.push_back(w);
            int i = n - 1;
            while (i >= 0 && w.coords[i] == weight_bound)
                w.coords[i--] = 0;
            if (i < 0)
                break;
            w.coords[i] += 1;
        }
    }
    std::map<Weight, std::size_t> choice_index;
    for (std::size_t i = 0; i < choices.size(); ++i)
        choice_index.emplace(choices[i], i);

    using State = std::vector<std::size_t>;
    auto state_of = [&](const EvalModuleDescriptor& d) {
        State s(reps.size(), 0);
        for (std::size_t o = 0; o < reps.size(); ++o) {
            auto it = d.assignments.find(reps[o]);
            if (it != d.assignments.end())
                s[o] = choice_index.at(it->second);
        }
        return s;
    };
    auto descriptor_of = [&](const State& s) {
        EvalModuleDescriptor d;
        for (std::size_t o = 0; o < reps.size(); ++o)
            if (s[o] != 0)
                d.assignments.emplace(reps[o], choices[s[o]]);
        return d;
    };

    // linked(a, b) depends only on the two weights, not on the orbit
    std::map<std::pair<std::size_t, std::size_t>, bool> linked_memo;
    auto linked = [&](std::size_t a, std::size_t b) {
        const std::pair<std::size_t, std::size_t> key{std::min(a, b), std::max(a, b)};
        auto it = linked_memo.find(key);
        if (it != linked_memo.end())
            return it->second;
        const bool v = prv_adjoint_multiplicity(rs, choices[a], choices[b]) > 0 ||
                       prv_adjoint_multiplicity(rs, choices[b], choices[a]) > 0;
        linked_memo.emplace(key, v);
        return v;
    };

    const State start = state_of(e);
    const State goal = state_of(f);
    std::map<State, State> parent;
    parent.emplace(start, start);
    std::vector<State> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const State cur = queue[head];
        if (cur == goal)
            break;
        for (std::size_t o = 0; o < reps.size(); ++o)
            for (std::size_t c = 0; c < choices.size(); ++c) {
                if (c == cur[o] || !linked(cur[o], c))
                    continue;
                State next = cur;
                next[o] = c;
                if (parent.emplace(next, cur).second)
                    queue.push_back(std::move(next));
            }
    }
    if (!parent.count(goal))
        return std::nullopt;

    std::vector<EvalModuleDescriptor> chain;
    for (State s = goal;; s = parent.at(s)) {
        chain.push_back(descriptor_of(s));
        if (s == parent.at(s))
            break;
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

}  // namespace blockade

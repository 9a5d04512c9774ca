#pragma once

#include "twist_blocks.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blockade {

/// Ext dimension that may be infinite (the abelian rules allow an
/// infinite-dimensional center acting through characters).
struct ExtDimension {
    bool infinite = false;
    long long value = 0;

    static ExtDimension finite(long long v) {
        if (v < 0)
            throw invalid_input("ExtDimension: negative dimension");
        return {false, v};
    }
    static ExtDimension infinity() { return {true, 0}; }

    friend bool operator==(const ExtDimension&, const ExtDimension&) = default;
};

inline std::string to_string(const ExtDimension& d) {
    return d.infinite ? "infinite" : std::to_string(d.value);
}

/// One-dimensional modules over an abelian Lie algebra z: self-extensions
/// have dimension dim z*, distinct characters never extend.
inline ExtDimension ext_onedim_abelian(const ExtDimension& dim_z_dual,
                                       const std::string& lam_label,
                                       const std::string& mu_label) {
    return lam_label == mu_label ? dim_z_dual : ExtDimension::finite(0);
}

/// Simple finite-dimensional module over a reductive algebra z (+) s:
/// a character of the center tensored with a simple s-module, the latter
/// given by a dominant weight or left out when trivial.
struct ReductiveSimpleDescriptor {
    std::string central_character;
    std::optional<Weight> semisimple_weight;  // absent = trivial s-module
};

/// Extensions between simples over a reductive algebra. Complete reducibility
/// kills every contribution except the diagonal one coming from the center,
/// so the four cases (character and weight each equal or not) collapse to
/// dim z* times [A = B].
inline long long ext_reductive_simple(long long dim_z_dual, const RootSystem& rs,
                                      const ReductiveSimpleDescriptor& a,
                                      const ReductiveSimpleDescriptor& b) {
    if (dim_z_dual < 0)
        throw invalid_input("ext_reductive_simple: negative center dimension");
    auto normalized = [&](const ReductiveSimpleDescriptor& d) -> std::optional<Weight> {
        if (!d.semisimple_weight)
            return std::nullopt;
        const Weight& w = *d.semisimple_weight;
        require_rank(rs, w, "ext_reductive_simple");
        if (!w.is_dominant())
            throw invalid_input("ext_reductive_simple: weight " + to_string(w) +
                                " is not dominant");
        if (w.is_zero())
            return std::nullopt;  // the zero weight is the trivial module
        return w;
    };
    const auto wa = normalized(a);
    const auto wb = normalized(b);
    return (a.central_character == b.central_character && wa == wb) ? dim_z_dual : 0;
}

/// Extensions of the trivial module by a simple: only another copy of the
/// trivial module extends it, through the dual of the center.
inline long long ext_trivial_vs_simple(long long dim_z_dual, bool v_nontrivial) {
    if (dim_z_dual < 0)
        throw invalid_input("ext_trivial_vs_simple: negative center dimension");
    return v_nontrivial ? 0 : dim_z_dual;
}

/// Simple module of a current-algebra quotient: a non-evaluation part acting
/// through a label, tensored with an evaluation part. Differing labels kill
/// all extensions; matching labels reduce to the evaluation machinery.
struct GeneralSimpleDescriptor {
    std::string nonev_label;
    EvalModuleDescriptor ev_part;
};

inline long long ext_general_simple(const RootSystem& rs, const OrbitSpace& os,
                                    const GeneralSimpleDescriptor& a,
                                    const GeneralSimpleDescriptor& b) {
    // validate both evaluation parts before any shortcut
    canonicalize(rs, os, a.ev_part);
    canonicalize(rs, os, b.ev_part);
    if (a.nonev_label != b.nonev_label)
        return 0;
    return ext_dim(rs, os, a.ev_part, b.ev_part);
}

/// Reassemble the Ext dimension of a product of r single-orbit pieces from
/// the factorwise dimensions: the factorwise sum counts the dual of the
/// abelianization quotient r times instead of once, so (r-1) * dim_quot is
/// subtracted. Inputs that cannot arise from such a product are rejected.
inline long long combine_factorwise_ext(const std::vector<long long>& ext_dims, long long r,
                                        long long dim_quot) {
    if (r < 1)
        throw invalid_input("combine_factorwise_ext: r must be at least 1");
    if (static_cast<long long>(ext_dims.size()) != r)
        throw invalid_input("combine_factorwise_ext: expected exactly " + std::to_string(r) +
                            " factorwise dimensions, got " + std::to_string(ext_dims.size()));
    if (dim_quot < 0)
        throw invalid_input("combine_factorwise_ext: negative quotient dimension");
    long long sum = 0;
    for (long long d : ext_dims) {
        if (d < 0)
            throw invalid_input("combine_factorwise_ext: negative factorwise dimension");
        sum += d;
    }
    if (sum < (r - 1) * dim_quot)
        throw invalid_input("combine_factorwise_ext: factorwise dimensions are inconsistent "
                            "with the quotient dimension");
    return sum - (r - 1) * dim_quot;
}

}  // namespace blockade

// Walks through the block story for sl_3 evaluation modules at two loop
// points: Ext table, spectral characters, block partition, one linkage chain.
#include "blockade/blockade.hpp"

#include <iostream>

using namespace blockade;

int main() {
    const RootSystem rs = build_root_system('A', 2);
    const OrbitSpace os = OrbitSpace::loop_points({"p", "q"});

    std::vector<EvalModuleDescriptor> modules;
    modules.push_back({});                                            // trivial module
    modules.push_back({{{"p", Weight({1, 1})}}});                     // adjoint at p
    modules.push_back({{{"p", Weight({1, 0})}}});                     // vector rep at p
    modules.push_back({{{"p", Weight({1, 0})}, {"q", Weight({0, 1})}}});

    std::cout << "Ext^1 dimensions between " << modules.size() << " modules:\n    ";
    for (std::size_t j = 0; j < modules.size(); ++j)
        std::cout << " E" << j;
    std::cout << "\n";
    for (std::size_t i = 0; i < modules.size(); ++i) {
        std::cout << "  E" << i << " ";
        for (std::size_t j = 0; j < modules.size(); ++j)
            std::cout << "  " << ext_dim(rs, os, modules[i], modules[j]);
        std::cout << "\n";
    }

    std::cout << "\nblock partition by spectral character:\n";
    for (const BlockGroup& g : blocks_report(rs, os, modules)) {
        std::cout << "  {";
        for (std::size_t k = 0; k < g.members.size(); ++k)
            std::cout << (k ? ", " : "") << "E" << g.members[k];
        std::cout << "}\n";
    }

    std::cout << "\nlinkage chain from the trivial module to the adjoint at p:\n";
    if (auto chain = linkage_chain(rs, os, modules[0], modules[1], 4)) {
        for (const EvalModuleDescriptor& d : *chain) {
            std::cout << "  ->";
            if (d.assignments.empty())
                std::cout << " (trivial)";
            for (const auto& [pt, w] : d.assignments)
                std::cout << " " << pt << ":" << to_string(w);
            std::cout << "\n";
        }
    }
    return 0;
}

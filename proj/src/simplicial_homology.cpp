#include "srtor/simplicial_homology.hpp"

#include "set_family.hpp"

namespace srtor {

FreeChainComplex reduced_chain_complex(const SimplicialComplex& K) {
    std::vector<std::vector<Generator>> levels(static_cast<std::size_t>(K.dimension() + 2));
    // faces() is in canonical order, so each level comes out ascending.
    for (VertexSet f : K.faces()) levels[static_cast<std::size_t>(f.size())].push_back(f.bits());
    return detail::family_chain_complex(levels, -1);
}

HomologyGroup reduced_homology(const SimplicialComplex& K, int degree, const Coefficients& k) {
    return homology_at(reduced_chain_complex(K), degree, k);
}

HomologyGroup reduced_cohomology(const SimplicialComplex& K, int degree, const Coefficients& k) {
    return homology_at(reduced_chain_complex(K).dual(), -degree, k);
}

std::vector<HomologyGroup> reduced_cohomology_all(const SimplicialComplex& K, const Coefficients& k) {
    const FreeChainComplex cochains = reduced_chain_complex(K).dual();
    std::vector<HomologyGroup> by_dual_degree = homology(cochains, k);
    // Dual degrees run -dim ... 1; reverse to get H̃^{-1} first.
    return {by_dual_degree.rbegin(), by_dual_degree.rend()};
}

}  // namespace srtor

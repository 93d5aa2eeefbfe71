#pragma once

#include "srtor/chain_complex.hpp"
#include "srtor/coefficients.hpp"
#include "srtor/homology_group.hpp"
#include "srtor/simplicial_complex.hpp"

namespace srtor {

/// Augmented simplicial chain complex: the empty simplex in degree -1, the
/// k-faces (vertex masks, ascending orientation) in degree k.
FreeChainComplex reduced_chain_complex(const SimplicialComplex& K);

/// H̃_k(K; k), zero for out-of-range k.
HomologyGroup reduced_homology(const SimplicialComplex& K, int degree, const Coefficients& k);

/// H̃^k(K; k) as homology of the dual complex; zero for out-of-range k.
HomologyGroup reduced_cohomology(const SimplicialComplex& K, int degree, const Coefficients& k);

/// H̃^k for k = -1, ..., dim K; element 0 is H̃^{-1}.
std::vector<HomologyGroup> reduced_cohomology_all(const SimplicialComplex& K, const Coefficients& k);

}  // namespace srtor

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "srtor/chain_complex.hpp"
#include "srtor/simplicial_complex.hpp"
#include "srtor/vertex_set.hpp"

namespace srtor {

struct BuildOptions {
    /// Refuse to enumerate subsets of more than this many generators.
    std::size_t max_generators = 24;
    /// Test hook: negate one boundary coefficient, chosen so that d∘d != 0
    /// whenever the complex has two consecutive nonzero differentials.
    bool inject_sign_fault = false;
};

/// (Λ^{*,J}[P], d): a monomial τ_{i_1}⋯τ_{i_n} (i_1 < ⋯ < i_n) sits in degree
/// n when τ_{i_1} ∪ ⋯ ∪ τ_{i_n} = J. Deleting the j-th factor contributes
/// (-1)^{j+1} exactly when the union is unchanged.
///
/// Generator masks are over the positions returned by
/// `P.generators_within(J)`: bit b stands for the b-th generator inside J.
/// Throws SizeLimitExceeded if more than max_generators generators lie in J.
FreeChainComplex build_complement_complex(const Complement& P, VertexSet J,
                                          const BuildOptions& options = {});

/// Throws SizeLimitExceeded, naming the worst offender, if some J in `Js`
/// has more than max_generators generators of P inside it. Builds nothing.
void check_generator_cap(const Complement& P, std::span<const VertexSet> Js, const BuildOptions& options = {});

/// (Λ^*[P], ∂): every monomial, including 1 in degree 0, with the plain
/// alternating deletion differential. Bit b of a generator is τ_{b+1}.
FreeChainComplex build_full_exterior_complex(const Complement& P, const BuildOptions& options = {});

/// Reduced chain complex of the nerve N(U): index sets whose generators do
/// not cover [m], an index set of size n in degree n - 1 (∅ in degree -1).
/// Bit b of a generator is τ_{b+1}.
FreeChainComplex build_nerve_complex(const Complement& P, const BuildOptions& options = {});

}  // namespace srtor

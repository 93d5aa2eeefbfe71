#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/SparseCore>

#include "srtor/coefficients.hpp"
#include "srtor/homology_group.hpp"

namespace srtor {

/// d_n : C_n -> C_{n-1}, rows indexed by degree n-1 generators.
using BoundaryMatrix = Eigen::SparseMatrix<int, Eigen::ColMajor>;

/// Generators are encoded as bitmasks; what a bit means (a vertex, or an index
/// into a complement) is up to the builder that produced the complex.
using Generator = std::uint64_t;

/// Finitely generated free chain complex concentrated in degrees
/// [min_degree, max_degree], with integer boundary matrices.
class FreeChainComplex {
public:
    FreeChainComplex() = default;
    /// generators[k] spans degree min_degree + k; boundaries[k] is d at that
    /// degree (boundaries[0] must have zero rows). Throws std::invalid_argument
    /// if the shapes do not line up.
    FreeChainComplex(int min_degree, std::vector<std::vector<Generator>> generators,
                     std::vector<BoundaryMatrix> boundaries);

    bool empty() const { return generators_.empty(); }
    int min_degree() const { return min_degree_; }
    /// min_degree - 1 when empty.
    int max_degree() const { return min_degree_ + static_cast<int>(generators_.size()) - 1; }

    /// Zero outside [min_degree, max_degree].
    std::size_t rank(int n) const;
    std::size_t total_rank() const;
    const std::vector<Generator>& generators(int n) const;
    /// Zero matrix of the right shape outside the stored range.
    BoundaryMatrix boundary(int n) const;

    /// True iff d_{n-1} d_n = 0 for every n.
    bool squares_to_zero() const;

    /// Cochain complex as a chain complex: degree n here is degree -n of the
    /// dual, with d_{-n} = d_{n+1}^T.
    FreeChainComplex dual() const;

private:
    bool in_range(int n) const { return n >= min_degree_ && n <= max_degree(); }

    int min_degree_ = 0;
    std::vector<std::vector<Generator>> generators_;
    std::vector<BoundaryMatrix> boundaries_;
};

/// Homology in every stored degree; element k is H_{min_degree + k}.
std::vector<HomologyGroup> homology(const FreeChainComplex& c, const Coefficients& k);

/// H_n, zero outside the stored range.
HomologyGroup homology_at(const FreeChainComplex& c, int n, const Coefficients& k);

/// ker(d_out) / im(d_in) at the degree between two boundary maps.
/// Throws NonComposable on a shape mismatch or when d_out * d_in != 0.
HomologyGroup homology_of_pair(const BoundaryMatrix& d_in, const BoundaryMatrix& d_out,
                               const Coefficients& k);

/// Rank of an integer matrix over k (over Z this is the rank over Q).
std::size_t matrix_rank(const BoundaryMatrix& d, const Coefficients& k);

}  // namespace srtor

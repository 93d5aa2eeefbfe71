#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "srtor/vertex_set.hpp"

namespace srtor {

/// Abstract simplicial complex on [m], stored by its maximal faces.
///
/// Any list of faces may be supplied at construction; downward closure is
/// implied and non-maximal entries are dropped. The empty simplex is always a
/// face. Vertices i with {i} not a face ("ghost" vertices) are allowed.
class SimplicialComplex {
public:
    /// Throws std::invalid_argument if m is outside [0, 63] or a face leaves [m].
    SimplicialComplex(int m, std::vector<VertexSet> faces);

    static SimplicialComplex full_simplex(int m);
    /// The complex {∅} on [m]: every vertex is a ghost.
    static SimplicialComplex empty(int m);

    int vertex_count() const { return m_; }
    /// Maximal faces in canonical order; {∅} for the empty complex.
    std::span<const VertexSet> facets() const { return facets_; }

    bool contains(VertexSet face) const;
    /// Every face including ∅, canonical order.
    std::vector<VertexSet> faces() const;
    /// -1 for {∅}.
    int dimension() const;
    bool is_full_simplex() const;

    /// Union of all faces; excludes ghost vertices.
    VertexSet support() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int m_;
    std::vector<VertexSet> facets_;
};

/// Minimal non-faces MF(K), canonical order.
std::vector<VertexSet> missing_faces(const SimplicialComplex& K);

/// Every nonempty subset of [m] that is not a face, canonical order.
/// Throws SizeLimitExceeded when m > 26 (the scan is over 2^m subsets).
std::vector<VertexSet> all_nonfaces(const SimplicialComplex& K);

/// K_J = {σ ∈ K | σ ⊆ J}, keeping the original vertex labels and m.
SimplicialComplex full_subcomplex(const SimplicialComplex& K, VertexSet J);

/// Σ_{σ ∈ K} (-1)^{dim σ}, counting ∅ with dimension -1.
long long reduced_euler_characteristic(const SimplicialComplex& K);

/// Ordered list of non-faces (τ_1, ..., τ_r) containing every missing face.
///
/// Generators are nonempty, pairwise distinct non-faces of the parent complex.
/// The order is fixed at construction since all boundary signs depend on it.
class Complement {
public:
    /// Validates the generator list against K. Throws InvalidComplement for a
    /// face, a duplicate, an empty generator, or an uncovered missing face.
    Complement(const SimplicialComplex& K, std::vector<VertexSet> generators);

    /// MF(K) in canonical order.
    static Complement minimal(const SimplicialComplex& K);
    /// All non-faces in canonical order.
    static Complement maximal(const SimplicialComplex& K);

    int vertex_count() const { return m_; }
    std::size_t size() const { return generators_.size(); }
    std::span<const VertexSet> generators() const { return generators_; }
    const VertexSet& operator[](std::size_t i) const { return generators_[i]; }

    /// Indices (0-based, ascending) of generators contained in J.
    std::vector<std::size_t> generators_within(VertexSet J) const;

private:
    struct Unchecked {};
    Complement(Unchecked, int m, std::vector<VertexSet> generators)
        : m_(m), generators_(std::move(generators)) {}

    int m_;
    std::vector<VertexSet> generators_;
};

/// MF(K) in canonical order followed by the extras, first occurrence kept.
/// Extras already in MF(K) are not repeated. Throws InvalidComplement if an
/// extra is a face of K.
Complement make_complement(const SimplicialComplex& K, std::span<const VertexSet> extra);

}  // namespace srtor

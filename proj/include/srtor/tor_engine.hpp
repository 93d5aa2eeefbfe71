#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srtor/coefficients.hpp"
#include "srtor/complement_chain.hpp"
#include "srtor/homology_group.hpp"
#include "srtor/simplicial_complex.hpp"

namespace srtor {

enum class Route { Complement, Hochster };

/// (i, J): homological degree and multidegree of a Tor group.
struct TorKey {
    int degree;
    VertexSet multidegree;

    friend auto operator<=>(const TorKey&, const TorKey&) = default;
};

/// Sparse bigraded table of Tor_{i,J}^{k[m]}(k(K), k); zero groups are not stored.
class BettiTable {
public:
    BettiTable(int m, Coefficients k) : m_(m), k_(k) {}

    int vertex_count() const { return m_; }
    const Coefficients& coefficients() const { return k_; }
    const std::map<TorKey, HomologyGroup>& entries() const { return entries_; }

    /// The stored group, or zero.
    HomologyGroup at(int degree, VertexSet J) const;
    void set(int degree, VertexSet J, HomologyGroup g);

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    int m_;
    Coefficients k_;
    std::map<TorKey, HomologyGroup> entries_;
};

/// Poincaré polynomial, coefficient of t^e at index e.
struct Polynomial {
    std::vector<std::size_t> coefficients;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// "1 + 2t^3 + t^6"; the zero polynomial renders as "0".
std::string to_string(const Polynomial& p);

/// Multidegrees that can carry a nonzero Tor group: ∅ and every J containing
/// a missing face (otherwise K_J is a simplex). Canonical order.
std::vector<VertexSet> candidate_multidegrees(const SimplicialComplex& K);

/// H_i(Λ^{*,J}[P], d) for i = 0, 1, ... up to the top nonzero chain degree.
std::vector<HomologyGroup> complement_strand(const Complement& P, VertexSet J, const Coefficients& k,
                                             const BuildOptions& options = {});

/// H̃^{|J|-i-1}(K_J) for i = 0, ..., |J|.
std::vector<HomologyGroup> hochster_strand(const SimplicialComplex& K, VertexSet J, const Coefficients& k);

/// H̃_{n-2}(N(U)) for n = 0, 1, ... up to the top nerve degree + 2.
std::vector<HomologyGroup> nerve_strand(const Complement& P, const Coefficients& k,
                                        const BuildOptions& options = {});

HomologyGroup tor_via_complement(const SimplicialComplex& K, const Complement& P, int i, VertexSet J,
                                 const Coefficients& k, const BuildOptions& options = {});

HomologyGroup tor_via_hochster(const SimplicialComplex& K, int i, VertexSet J, const Coefficients& k);

/// Tor_{n,[m]} through the nerve. Requires a nonempty complement: for the
/// full simplex the nerve of an empty cover says nothing about Tor.
HomologyGroup tor_via_nerve(const SimplicialComplex& K, const Complement& P, int n, const Coefficients& k,
                            const BuildOptions& options = {});

/// Full table by the chosen route; the complement route uses MF(K).
BettiTable betti_table(const SimplicialComplex& K, const Coefficients& k, Route route = Route::Hochster,
                       const BuildOptions& options = {});

/// Full table by the complement route with an explicit complement.
BettiTable betti_table(const SimplicialComplex& K, const Complement& P, const Coefficients& k,
                       const BuildOptions& options = {});

/// Σ rank(i, J) t^{2|J| - i}. Throws std::invalid_argument for integer tables.
Polynomial poincare_polynomial(const BettiTable& table);

struct RouteComparison {
    Coefficients coefficients;
    int degree;
    VertexSet multidegree;
    HomologyGroup complement;
    HomologyGroup hochster;
    /// Complement route rerun with every non-face as generator.
    std::optional<HomologyGroup> maximal;
    /// Present for J = [m] only.
    std::optional<HomologyGroup> nerve;
    /// Set when some route at this J was not a chain complex (d∘d ≠ 0).
    std::optional<std::string> defect;
    bool matches = true;
};

struct VerificationReport {
    std::vector<RouteComparison> comparisons;
    /// Comparisons that could not be run, e.g. because of the generator cap.
    std::vector<std::string> skipped;

    bool passed() const;
    std::vector<RouteComparison> mismatches() const;
};

/// Runs every route at every candidate (i, J) for each coefficient system
/// and compares the groups exactly. The maximal complement is only rerun
/// when it fits under the cap at every J; otherwise that leg is listed in
/// `skipped`. Throws SizeLimitExceeded if P itself does not fit.
VerificationReport verify(const SimplicialComplex& K, const Complement& P, std::span<const Coefficients> ks,
                          const BuildOptions& options = {});

}  // namespace srtor

#include "srtor/tor_engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "srtor/complement_chain.hpp"
#include "srtor/errors.hpp"
#include "srtor/simplicial_homology.hpp"

namespace srtor {

namespace {

constexpr int kMaxEnumeratedVertices = 26;

HomologyGroup entry_or_zero(const std::vector<HomologyGroup>& strand, int i) {
    if (i < 0 || static_cast<std::size_t>(i) >= strand.size()) return {};
    return strand[static_cast<std::size_t>(i)];
}

void check_same_vertex_set(const SimplicialComplex& K, const Complement& P) {
    if (K.vertex_count() != P.vertex_count())
        throw std::invalid_argument("complement and complex live on different vertex sets");
}

}  // namespace

HomologyGroup BettiTable::at(int degree, VertexSet J) const {
    const auto it = entries_.find({degree, J});
    return it == entries_.end() ? HomologyGroup{} : it->second;
}

void BettiTable::set(int degree, VertexSet J, HomologyGroup g) {
    if (g.is_zero()) {
        entries_.erase({degree, J});
    } else {
        entries_[{degree, J}] = std::move(g);
    }
}

std::string to_string(const Polynomial& p) {
    std::string out;
    for (std::size_t e = 0; e < p.coefficients.size(); ++e) {
        const std::size_t c = p.coefficients[e];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (e == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += 't';
        if (e != 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "0" : out;
}

std::vector<VertexSet> candidate_multidegrees(const SimplicialComplex& K) {
    const int m = K.vertex_count();
    if (m > kMaxEnumeratedVertices)
        throw SizeLimitExceeded(VertexSet::full(m), static_cast<std::size_t>(m), kMaxEnumeratedVertices);
    const auto mf = missing_faces(K);
    std::vector<VertexSet> out{VertexSet{}};
    const VertexSet::Mask end = VertexSet::Mask{1} << m;
    for (VertexSet::Mask bits = 1; bits < end; ++bits) {
        const VertexSet J(bits);
        if (std::any_of(mf.begin(), mf.end(), [J](VertexSet t) { return t.is_subset_of(J); }))
            out.push_back(J);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<HomologyGroup> complement_strand(const Complement& P, VertexSet J, const Coefficients& k,
                                             const BuildOptions& options) {
    const FreeChainComplex c = build_complement_complex(P, J, options);
    if (c.empty()) return {};
    std::vector<HomologyGroup> strand(static_cast<std::size_t>(c.max_degree() + 1));
    const auto groups = homology(c, k);
    for (int n = c.min_degree(); n <= c.max_degree(); ++n)
        strand[static_cast<std::size_t>(n)] = groups[static_cast<std::size_t>(n - c.min_degree())];
    return strand;
}

std::vector<HomologyGroup> hochster_strand(const SimplicialComplex& K, VertexSet J, const Coefficients& k) {
    const auto cohomology = reduced_cohomology_all(full_subcomplex(K, J), k);
    const int size = J.size();
    std::vector<HomologyGroup> strand(static_cast<std::size_t>(size + 1));
    // cohomology[idx] is H̃^{idx-1}; Tor_i pairs with degree |J| - i - 1.
    for (std::size_t idx = 0; idx < cohomology.size(); ++idx) {
        const int i = size - static_cast<int>(idx);
        if (i >= 0 && i <= size) strand[static_cast<std::size_t>(i)] = cohomology[idx];
    }
    return strand;
}

std::vector<HomologyGroup> nerve_strand(const Complement& P, const Coefficients& k, const BuildOptions& options) {
    const FreeChainComplex nerve = build_nerve_complex(P, options);
    if (nerve.empty()) return {};
    std::vector<HomologyGroup> strand(static_cast<std::size_t>(nerve.max_degree() + 3));
    const auto groups = homology(nerve, k);
    for (int d = nerve.min_degree(); d <= nerve.max_degree(); ++d)
        strand[static_cast<std::size_t>(d + 2)] = groups[static_cast<std::size_t>(d - nerve.min_degree())];
    return strand;
}

HomologyGroup tor_via_complement(const SimplicialComplex& K, const Complement& P, int i, VertexSet J,
                                 const Coefficients& k, const BuildOptions& options) {
    check_same_vertex_set(K, P);
    return entry_or_zero(complement_strand(P, J, k, options), i);
}

HomologyGroup tor_via_hochster(const SimplicialComplex& K, int i, VertexSet J, const Coefficients& k) {
    return entry_or_zero(hochster_strand(K, J, k), i);
}

HomologyGroup tor_via_nerve(const SimplicialComplex& K, const Complement& P, int n, const Coefficients& k,
                            const BuildOptions& options) {
    check_same_vertex_set(K, P);
    if (P.size() == 0) throw std::invalid_argument("the nerve route needs a nonempty complement");
    return entry_or_zero(nerve_strand(P, k, options), n);
}

BettiTable betti_table(const SimplicialComplex& K, const Coefficients& k, Route route, const BuildOptions& options) {
    if (route == Route::Complement) return betti_table(K, Complement::minimal(K), k, options);
    BettiTable table(K.vertex_count(), k);
    for (VertexSet J : candidate_multidegrees(K)) {
        const auto strand = hochster_strand(K, J, k);
        for (std::size_t i = 0; i < strand.size(); ++i) table.set(static_cast<int>(i), J, strand[i]);
    }
    return table;
}

BettiTable betti_table(const SimplicialComplex& K, const Complement& P, const Coefficients& k,
                       const BuildOptions& options) {
    check_same_vertex_set(K, P);
    const auto multidegrees = candidate_multidegrees(K);
    check_generator_cap(P, multidegrees, options);
    BettiTable table(K.vertex_count(), k);
    for (VertexSet J : multidegrees) {
        const auto strand = complement_strand(P, J, k, options);
        for (std::size_t i = 0; i < strand.size(); ++i) table.set(static_cast<int>(i), J, strand[i]);
    }
    return table;
}

Polynomial poincare_polynomial(const BettiTable& table) {
    if (!table.coefficients().is_field())
        throw std::invalid_argument("Poincaré polynomial needs field coefficients");
    Polynomial p;
    for (const auto& [key, group] : table.entries()) {
        const int e = 2 * key.multidegree.size() - key.degree;
        if (static_cast<std::size_t>(e) >= p.coefficients.size()) p.coefficients.resize(static_cast<std::size_t>(e) + 1);
        p.coefficients[static_cast<std::size_t>(e)] += group.free_rank;
    }
    return p;
}

bool VerificationReport::passed() const {
    return std::all_of(comparisons.begin(), comparisons.end(), [](const RouteComparison& c) { return c.matches; });
}

std::vector<RouteComparison> VerificationReport::mismatches() const {
    std::vector<RouteComparison> out;
    std::copy_if(comparisons.begin(), comparisons.end(), std::back_inserter(out),
                 [](const RouteComparison& c) { return !c.matches; });
    return out;
}

VerificationReport verify(const SimplicialComplex& K, const Complement& P, std::span<const Coefficients> ks,
                          const BuildOptions& options) {
    check_same_vertex_set(K, P);
    VerificationReport report;
    const VertexSet everything = VertexSet::full(K.vertex_count());
    const auto multidegrees = candidate_multidegrees(K);
    check_generator_cap(P, multidegrees, options);

    std::optional<Complement> maximal = Complement::maximal(K);
    try {
        check_generator_cap(*maximal, multidegrees, options);
    } catch (const SizeLimitExceeded& e) {
        report.skipped.push_back(std::string("maximal complement: ") + e.what());
        maximal.reset();
    }

    for (const Coefficients& k : ks) {
        for (VertexSet J : multidegrees) {
            std::optional<std::string> defect;
            auto attempt = [&](const char* route, auto&& compute) -> std::optional<std::vector<HomologyGroup>> {
                try {
                    return compute();
                } catch (const NonComposable& e) {
                    defect = std::string(route) + ": " + e.what();
                    return std::nullopt;
                }
            };
            auto complement = attempt("complement", [&] { return complement_strand(P, J, k, options); });
            auto hochster = attempt("hochster", [&] { return hochster_strand(K, J, k); });
            std::optional<std::vector<HomologyGroup>> maximal_strand;
            if (maximal)
                maximal_strand = attempt("maximal", [&] { return complement_strand(*maximal, J, k, options); });
            std::optional<std::vector<HomologyGroup>> nerve;
            if (J == everything && P.size() > 0) nerve = attempt("nerve", [&] { return nerve_strand(P, k, options); });

            std::size_t top = defect ? 1 : 0;
            for (const auto* s : {&complement, &hochster, &maximal_strand, &nerve})
                if (*s) top = std::max(top, (*s)->size());
            for (std::size_t i = 0; i < top; ++i) {
                const int deg = static_cast<int>(i);
                RouteComparison row{k, deg, J, {}, {}, std::nullopt, std::nullopt, defect, !defect};
                if (complement) row.complement = entry_or_zero(*complement, deg);
                if (hochster) row.hochster = entry_or_zero(*hochster, deg);
                row.matches = row.matches && row.complement == row.hochster;
                if (maximal_strand) {
                    row.maximal = entry_or_zero(*maximal_strand, deg);
                    row.matches = row.matches && *row.maximal == row.complement;
                }
                if (nerve) {
                    row.nerve = entry_or_zero(*nerve, deg);
                    row.matches = row.matches && *row.nerve == row.complement;
                }
                report.comparisons.push_back(std::move(row));
            }
        }
    }
    return report;
}

}  // namespace srtor

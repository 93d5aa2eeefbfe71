#include "srtor/simplicial_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "srtor/errors.hpp"

namespace srtor {

namespace {

constexpr int kMaxScanVertices = 26;

void for_each_subset(VertexSet s, auto&& visit) {
    // Gosper-free submask walk, includes both s and ∅.
    const VertexSet::Mask full = s.bits();
    VertexSet::Mask sub = full;
    while (true) {
        visit(VertexSet(sub));
        if (sub == 0) break;
        sub = (sub - 1) & full;
    }
}

}  // namespace

SimplicialComplex::SimplicialComplex(int m, std::vector<VertexSet> faces) : m_(m) {
    if (m < 0 || m > VertexSet::kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(m) + " outside [0, 63]");
    const VertexSet universe = VertexSet::full(m);
    for (VertexSet f : faces) {
        if (!f.is_subset_of(universe))
            throw std::invalid_argument("face " + to_string(f) + " is not a subset of [" +
                                        std::to_string(m) + "]");
    }
    std::sort(faces.begin(), faces.end(), std::greater<>());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (VertexSet f : faces) {
        const bool covered = std::any_of(facets_.begin(), facets_.end(),
                                         [f](VertexSet g) { return f.is_subset_of(g); });
        if (!covered) facets_.push_back(f);
    }
    if (facets_.empty()) facets_.push_back(VertexSet{});
    std::sort(facets_.begin(), facets_.end());
}

SimplicialComplex SimplicialComplex::full_simplex(int m) {
    return SimplicialComplex(m, {VertexSet::full(m)});
}

SimplicialComplex SimplicialComplex::empty(int m) { return SimplicialComplex(m, {}); }

bool SimplicialComplex::contains(VertexSet face) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [face](VertexSet f) { return face.is_subset_of(f); });
}

std::vector<VertexSet> SimplicialComplex::faces() const {
    std::unordered_set<VertexSet> seen;
    for (VertexSet f : facets_) for_each_subset(f, [&](VertexSet s) { seen.insert(s); });
    std::vector<VertexSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

int SimplicialComplex::dimension() const { return facets_.back().size() - 1; }

bool SimplicialComplex::is_full_simplex() const {
    return facets_.size() == 1 && facets_.front() == VertexSet::full(m_);
}

VertexSet SimplicialComplex::support() const {
    VertexSet s;
    for (VertexSet f : facets_) s |= f;
    return s;
}

std::vector<VertexSet> missing_faces(const SimplicialComplex& K) {
    const int m = K.vertex_count();
    std::unordered_set<VertexSet> found;
    for (VertexSet sigma : K.faces()) {
        for (int v = 1; v <= m; ++v) {
            if (sigma.contains(v)) continue;
            const VertexSet tau = sigma | VertexSet(VertexSet::Mask{1} << (v - 1));
            if (K.contains(tau) || found.contains(tau)) continue;
            bool minimal = true;
            for (int w : tau.labels()) {
                if (!K.contains(tau - VertexSet(VertexSet::Mask{1} << (w - 1)))) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) found.insert(tau);
        }
    }
    std::vector<VertexSet> out(found.begin(), found.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> all_nonfaces(const SimplicialComplex& K) {
    const int m = K.vertex_count();
    if (m > kMaxScanVertices)
        throw SizeLimitExceeded(VertexSet::full(m), static_cast<std::size_t>(m), kMaxScanVertices);
    std::vector<VertexSet> out;
    const VertexSet::Mask end = VertexSet::Mask{1} << m;
    for (VertexSet::Mask bits = 1; bits < end; ++bits) {
        if (!K.contains(VertexSet(bits))) out.emplace_back(bits);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex full_subcomplex(const SimplicialComplex& K, VertexSet J) {
    std::vector<VertexSet> restricted;
    restricted.reserve(K.facets().size());
    for (VertexSet f : K.facets()) restricted.push_back(f & J);
    return SimplicialComplex(K.vertex_count(), std::move(restricted));
}

long long reduced_euler_characteristic(const SimplicialComplex& K) {
    long long chi = 0;
    for (VertexSet f : K.faces()) chi += ((f.size() - 1) % 2 == 0) ? 1 : -1;
    return chi;
}

Complement::Complement(const SimplicialComplex& K, std::vector<VertexSet> generators)
    : m_(K.vertex_count()), generators_(std::move(generators)) {
    const VertexSet universe = VertexSet::full(m_);
    std::unordered_set<VertexSet> seen;
    for (VertexSet tau : generators_) {
        if (tau.empty()) throw InvalidComplement("empty generator in complement", tau);
        if (!tau.is_subset_of(universe))
            throw InvalidComplement("generator " + to_string(tau) + " leaves the vertex set", tau);
        if (K.contains(tau))
            throw InvalidComplement("generator " + to_string(tau) + " is a face of K", tau);
        if (!seen.insert(tau).second)
            throw InvalidComplement("generator " + to_string(tau) + " repeated", tau);
    }
    for (VertexSet tau : missing_faces(K)) {
        if (!seen.contains(tau))
            throw InvalidComplement("missing face " + to_string(tau) + " absent from complement",
                                    tau);
    }
}

Complement Complement::minimal(const SimplicialComplex& K) {
    return Complement(Unchecked{}, K.vertex_count(), missing_faces(K));
}

Complement Complement::maximal(const SimplicialComplex& K) {
    return Complement(Unchecked{}, K.vertex_count(), all_nonfaces(K));
}

std::vector<std::size_t> Complement::generators_within(VertexSet J) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].is_subset_of(J)) out.push_back(i);
    }
    return out;
}

Complement make_complement(const SimplicialComplex& K, std::span<const VertexSet> extra) {
    std::vector<VertexSet> gens = missing_faces(K);
    std::unordered_set<VertexSet> seen(gens.begin(), gens.end());
    for (VertexSet tau : extra) {
        if (K.contains(tau))
            throw InvalidComplement("generator " + to_string(tau) + " is a face of K", tau);
        if (seen.insert(tau).second) gens.push_back(tau);
    }
    return Complement(K, std::move(gens));
}

}  // namespace srtor

#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "srtor/integer.hpp"
#include "srtor/simplicial_complex.hpp"

namespace oracle {

using srtor::BigInt;
using srtor::SimplicialComplex;
using srtor::VertexSet;
using DenseMatrix = std::vector<std::vector<BigInt>>;

// every subset of [m], scanned directly
inline std::vector<VertexSet> missing_faces(const SimplicialComplex& K) {
    std::vector<VertexSet> out;
    const int m = K.vertex_count();
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
        const VertexSet tau(s);
        if (K.contains(tau)) continue;
        bool minimal = true;
        for (int v : tau.labels())
            if (!K.contains(tau - VertexSet::from_labels({v}))) minimal = false;
        if (minimal) out.push_back(tau);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// fraction-free Gaussian elimination
inline std::size_t bareiss_rank(DenseMatrix a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

inline std::size_t rank_mod_p(DenseMatrix a, long p) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    std::vector<std::vector<long>> b(rows, std::vector<long>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) b[i][j] = static_cast<long>(((a[i][j] % p) + p) % p);
    auto inv = [p](long x) {
        long r = 1, e = p - 2;
        for (x %= p; e; e >>= 1, x = x * x % p)
            if (e & 1) r = r * x % p;
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t q = rank;
        while (q < rows && b[q][c] == 0) ++q;
        if (q == rows) continue;
        std::swap(b[q], b[rank]);
        const long s = inv(b[rank][c]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const long f = b[i][c] * s % p;
            for (std::size_t j = c; j < cols; ++j) b[i][j] = ((b[i][j] - f * b[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// augmented simplicial boundary maps built straight from the face list;
// result[k] is d_k for k = 0..dim+1 (faces of size k -> size k-1)
inline std::vector<DenseMatrix> simplicial_boundaries(const SimplicialComplex& K) {
    std::map<int, std::vector<VertexSet>> by_size;
    for (VertexSet f : K.faces()) by_size[f.size()].push_back(f);
    const int top = by_size.rbegin()->first;
    std::vector<DenseMatrix> out(static_cast<std::size_t>(top + 1));
    for (int s = 1; s <= top; ++s) {
        const auto& lo = by_size[s - 1];
        const auto& hi = by_size[s];
        DenseMatrix d(lo.size(), std::vector<BigInt>(hi.size(), 0));
        for (std::size_t j = 0; j < hi.size(); ++j) {
            const auto labels = hi[j].labels();
            for (std::size_t pos = 0; pos < labels.size(); ++pos) {
                const VertexSet face = hi[j] - VertexSet::from_labels({labels[pos]});
                const auto row = std::find(lo.begin(), lo.end(), face) - lo.begin();
                d[static_cast<std::size_t>(row)][j] = pos % 2 == 0 ? 1 : -1;
            }
        }
        out[static_cast<std::size_t>(s)] = std::move(d);
    }
    return out;
}

// reduced Betti numbers over Q (p = 0) or F_p, indexed from degree -1
inline std::vector<std::size_t> reduced_betti(const SimplicialComplex& K, long p = 0) {
    const auto d = simplicial_boundaries(K);
    std::map<int, std::size_t> count;
    for (VertexSet f : K.faces()) ++count[f.size()];
    auto rank_of = [&](std::size_t s) -> std::size_t {
        if (s == 0 || s >= d.size()) return 0;
        return p == 0 ? bareiss_rank(d[s]) : rank_mod_p(d[s], p);
    };
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < d.size(); ++s) out.push_back(count[static_cast<int>(s)] - rank_of(s) - rank_of(s + 1));
    return out;
}

inline SimplicialComplex random_complex(std::mt19937_64& rng, int m) {
    std::uniform_int_distribution<int> facet_count(1, 2 * m);
    std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << m) - 1);
    std::bernoulli_distribution keep(0.5);
    std::vector<VertexSet> facets;
    const int n = facet_count(rng);
    for (int i = 0; i < n; ++i) {
        std::uint64_t s = mask(rng);
        // thin out so that large faces are rare
        for (int v = 0; v < m; ++v)
            if (keep(rng) && keep(rng)) s &= ~(std::uint64_t{1} << v);
        facets.emplace_back(s);
    }
    return SimplicialComplex(m, std::move(facets));
}

}  // namespace oracle

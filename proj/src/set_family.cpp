#include "set_family.hpp"

#include <algorithm>
#include <bit>

namespace srtor::detail {

namespace {

BoundaryMatrix deletion_matrix(const std::vector<Generator>& lower, const std::vector<Generator>& upper) {
    std::vector<Eigen::Triplet<int>> entries;
    entries.reserve(upper.size() * 4);
    for (std::size_t col = 0; col < upper.size(); ++col) {
        const Generator cell = upper[col];
        int position = 0;
        for (Generator rest = cell; rest != 0; rest &= rest - 1, ++position) {
            const Generator face = cell & ~(rest & (~rest + 1));
            const auto it = std::lower_bound(lower.begin(), lower.end(), face);
            if (it == lower.end() || *it != face) continue;
            entries.emplace_back(static_cast<int>(it - lower.begin()), static_cast<int>(col),
                                 position % 2 == 0 ? 1 : -1);
        }
    }
    BoundaryMatrix d(static_cast<Eigen::Index>(lower.size()), static_cast<Eigen::Index>(upper.size()));
    d.setFromTriplets(entries.begin(), entries.end());
    return d;
}

/// Negates one entry of the highest boundary whose row is hit by a nonzero
/// column of the next boundary down, falling back to any entry at all.
void flip_one_sign(std::vector<BoundaryMatrix>& bds) {
    for (std::size_t k = bds.size(); k-- > 1;) {
        const BoundaryMatrix& below = bds[k - 1];
        BoundaryMatrix& d = bds[k];
        for (Eigen::Index j = 0; j < d.outerSize(); ++j) {
            for (BoundaryMatrix::InnerIterator it(d, j); it; ++it) {
                if (below.col(it.row()).nonZeros() != 0) {
                    it.valueRef() = -it.value();
                    return;
                }
            }
        }
    }
    for (auto& d : bds) {
        if (d.nonZeros() != 0) {
            d.valuePtr()[0] = -d.valuePtr()[0];
            return;
        }
    }
}

}  // namespace

FreeChainComplex family_chain_complex(const std::vector<std::vector<Generator>>& levels,
                                      int degree_shift, bool inject_sign_fault) {
    std::size_t first = levels.size();
    std::size_t last = 0;
    for (std::size_t s = 0; s < levels.size(); ++s) {
        if (levels[s].empty()) continue;
        first = std::min(first, s);
        last = s;
    }
    if (first == levels.size()) return FreeChainComplex(degree_shift, {}, {});

    std::vector<std::vector<Generator>> gens(levels.begin() + static_cast<std::ptrdiff_t>(first),
                                             levels.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    std::vector<BoundaryMatrix> bds;
    bds.reserve(gens.size());
    bds.emplace_back(0, static_cast<Eigen::Index>(gens.front().size()));
    for (std::size_t k = 1; k < gens.size(); ++k) bds.push_back(deletion_matrix(gens[k - 1], gens[k]));
    if (inject_sign_fault) flip_one_sign(bds);
    return FreeChainComplex(static_cast<int>(first) + degree_shift, std::move(gens), std::move(bds));
}

}  // namespace srtor::detail

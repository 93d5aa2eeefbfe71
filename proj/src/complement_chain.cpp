#include "srtor/complement_chain.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "set_family.hpp"
#include "srtor/errors.hpp"

namespace srtor {

namespace {

using Levels = std::vector<std::vector<Generator>>;

void sort_levels(Levels& levels) {
    for (auto& level : levels) std::sort(level.begin(), level.end());
}

/// Subsets of `sets` (as index masks) whose union is exactly `target`.
Levels covering_subsets(const std::vector<VertexSet>& sets, VertexSet target) {
    const std::size_t k = sets.size();
    Levels levels(k + 1);
    std::vector<VertexSet> suffix(k + 1);
    for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] | sets[i];

    auto visit = [&](auto&& self, std::size_t i, Generator mask, VertexSet cover) -> void {
        if ((cover | suffix[i]) != target) return;
        if (i == k) {
            levels[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
            return;
        }
        self(self, i + 1, mask, cover);
        self(self, i + 1, mask | (Generator{1} << i), cover | sets[i]);
    };
    visit(visit, 0, 0, VertexSet{});
    sort_levels(levels);
    return levels;
}

/// Subsets of `sets` whose union is not `forbidden`; downward closed.
Levels non_covering_subsets(const std::vector<VertexSet>& sets, VertexSet forbidden) {
    const std::size_t k = sets.size();
    Levels levels(k + 1);
    auto visit = [&](auto&& self, std::size_t i, Generator mask, VertexSet cover) -> void {
        if (cover == forbidden) return;
        if (i == k) {
            levels[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
            return;
        }
        self(self, i + 1, mask, cover);
        self(self, i + 1, mask | (Generator{1} << i), cover | sets[i]);
    };
    visit(visit, 0, 0, VertexSet{});
    sort_levels(levels);
    return levels;
}

void check_cap(VertexSet J, std::size_t count, const BuildOptions& options) {
    const std::size_t limit = std::min<std::size_t>(options.max_generators, 63);
    if (count > limit) throw SizeLimitExceeded(J, count, limit);
}

}  // namespace

void check_generator_cap(const Complement& P, std::span<const VertexSet> Js, const BuildOptions& options) {
    VertexSet worst;
    std::size_t most = 0;
    for (VertexSet J : Js) {
        const std::size_t count = P.generators_within(J).size();
        if (count > most) {
            most = count;
            worst = J;
        }
    }
    check_cap(worst, most, options);
}

FreeChainComplex build_complement_complex(const Complement& P, VertexSet J, const BuildOptions& options) {
    const auto within = P.generators_within(J);
    check_cap(J, within.size(), options);
    std::vector<VertexSet> sets;
    sets.reserve(within.size());
    for (std::size_t i : within) sets.push_back(P[i]);
    return detail::family_chain_complex(covering_subsets(sets, J), 0, options.inject_sign_fault);
}

FreeChainComplex build_full_exterior_complex(const Complement& P, const BuildOptions& options) {
    const std::size_t r = P.size();
    if (r == 0) throw std::invalid_argument("the full exterior complex needs at least one generator");
    check_cap(VertexSet::full(P.vertex_count()), r, options);
    Levels levels(r + 1);
    const Generator end = Generator{1} << r;
    for (Generator mask = 0; mask < end; ++mask)
        levels[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    return detail::family_chain_complex(levels, 0, options.inject_sign_fault);
}

FreeChainComplex build_nerve_complex(const Complement& P, const BuildOptions& options) {
    check_cap(VertexSet::full(P.vertex_count()), P.size(), options);
    const std::vector<VertexSet> sets(P.generators().begin(), P.generators().end());
    return detail::family_chain_complex(non_covering_subsets(sets, VertexSet::full(P.vertex_count())), -1,
                                        options.inject_sign_fault);
}

}  // namespace srtor

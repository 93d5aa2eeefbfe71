#include "srtor/chain_complex.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>

#include "column_reduction.hpp"
#include "srtor/errors.hpp"

namespace srtor {

FreeChainComplex::FreeChainComplex(int min_degree, std::vector<std::vector<Generator>> generators,
                                   std::vector<BoundaryMatrix> boundaries)
    : min_degree_(min_degree), generators_(std::move(generators)), boundaries_(std::move(boundaries)) {
    if (generators_.size() != boundaries_.size())
        throw std::invalid_argument("one boundary matrix per degree required");
    for (std::size_t k = 0; k < generators_.size(); ++k) {
        const auto& d = boundaries_[k];
        const auto below = k == 0 ? 0 : generators_[k - 1].size();
        if (static_cast<std::size_t>(d.cols()) != generators_[k].size() ||
            static_cast<std::size_t>(d.rows()) != below)
            throw std::invalid_argument("boundary matrix in degree " +
                                        std::to_string(min_degree_ + static_cast<int>(k)) +
                                        " has the wrong shape");
    }
}

std::size_t FreeChainComplex::rank(int n) const {
    return in_range(n) ? generators_[static_cast<std::size_t>(n - min_degree_)].size() : 0;
}

std::size_t FreeChainComplex::total_rank() const {
    std::size_t total = 0;
    for (const auto& g : generators_) total += g.size();
    return total;
}

const std::vector<Generator>& FreeChainComplex::generators(int n) const {
    static const std::vector<Generator> none;
    return in_range(n) ? generators_[static_cast<std::size_t>(n - min_degree_)] : none;
}

BoundaryMatrix FreeChainComplex::boundary(int n) const {
    if (in_range(n)) return boundaries_[static_cast<std::size_t>(n - min_degree_)];
    return BoundaryMatrix(static_cast<Eigen::Index>(rank(n - 1)), static_cast<Eigen::Index>(rank(n)));
}

bool FreeChainComplex::squares_to_zero() const {
    for (std::size_t k = 1; k < boundaries_.size(); ++k) {
        const BoundaryMatrix dd = (boundaries_[k - 1] * boundaries_[k]).pruned();
        if (dd.nonZeros() != 0) return false;
    }
    return true;
}

FreeChainComplex FreeChainComplex::dual() const {
    if (empty()) return FreeChainComplex(-min_degree_, {}, {});
    const std::size_t count = generators_.size();
    std::vector<std::vector<Generator>> gens(generators_.rbegin(), generators_.rend());
    std::vector<BoundaryMatrix> bds;
    bds.reserve(count);
    bds.emplace_back(0, static_cast<Eigen::Index>(gens.front().size()));
    for (std::size_t k = 1; k < count; ++k) {
        // New degree -n with n = max - k uses d_{n+1}^T.
        bds.emplace_back(boundaries_[count - k].transpose());
    }
    return FreeChainComplex(-max_degree(), std::move(gens), std::move(bds));
}

namespace {

struct BoundaryAnalysis {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;
    std::vector<std::uint32_t> unit_lows;
};

template <class Ring>
BoundaryAnalysis analyze_with(const Ring& ring, const BoundaryMatrix& d, const std::vector<char>& cleared,
                              bool want_torsion) {
    auto reduced = detail::reduce_boundary(ring, d, cleared);
    BoundaryAnalysis out;
    out.rank = reduced.rank;
    out.unit_lows = std::move(reduced.unit_lows);
    if constexpr (!Ring::is_field) {
        if (want_torsion && !reduced.all_unit_pivots)
            out.torsion = detail::torsion_of_reduced(ring, static_cast<std::size_t>(d.rows()), reduced.reduced);
    }
    return out;
}

BoundaryAnalysis analyze(const BoundaryMatrix& d, const Coefficients& k, const std::vector<char>& cleared) {
    if (k.kind() == Coefficients::Kind::PrimeField)
        return analyze_with(detail::PrimeFieldRing{k.characteristic()}, d, cleared, false);
    const bool want_torsion = k.kind() == Coefficients::Kind::Integers;
    try {
        return analyze_with(detail::CheckedInt64Ring{}, d, cleared, want_torsion);
    } catch (const detail::ArithmeticOverflow&) {
        return analyze_with(detail::BigIntRing{}, d, cleared, want_torsion);
    }
}

using Probe = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

Probe apply(const BoundaryMatrix& d, const Probe& v) {
    Probe out = Probe::Zero(d.rows());
    for (Eigen::Index j = 0; j < d.outerSize(); ++j)
        for (BoundaryMatrix::InnerIterator it(d, j); it; ++it) out[it.row()] += it.value() * v[j];
    return out;
}

// d_out * d_in == 0 tested on two random integer vectors; exact arithmetic,
// a nonzero composite survives a probe with probability below 2^-20.
bool composite_vanishes_on_probes(const BoundaryMatrix& d_out, const BoundaryMatrix& d_in) {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::int64_t> pick(1, std::int64_t{1} << 20);
    for (int round = 0; round < 2; ++round) {
        Probe v(d_in.cols());
        for (auto& x : v) x = pick(rng);
        if (!apply(d_out, apply(d_in, v)).isZero()) return false;
    }
    return true;
}

}  // namespace

std::vector<HomologyGroup> homology(const FreeChainComplex& c, const Coefficients& k) {
    if (c.empty()) return {};
    const int lo = c.min_degree();
    const int hi = c.max_degree();
    for (int n = lo + 1; n < hi; ++n) {
        if (!composite_vanishes_on_probes(c.boundary(n), c.boundary(n + 1)))
            throw NonComposable("d_" + std::to_string(n) + " * d_" + std::to_string(n + 1) + " is not zero");
    }
    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    // analysis[k] describes d_{lo+k}; d_lo maps to zero.
    std::vector<BoundaryAnalysis> analysis(count + 1);
    std::vector<char> cleared;
    for (int n = hi; n > lo; --n) {
        const BoundaryMatrix d = c.boundary(n);
        auto& slot = analysis[static_cast<std::size_t>(n - lo)];
        slot = analyze(d, k, cleared);
        cleared.assign(static_cast<std::size_t>(d.rows()), 0);
        for (std::uint32_t r : slot.unit_lows) cleared[r] = 1;
    }
    std::vector<HomologyGroup> out(count);
    for (int n = lo; n <= hi; ++n) {
        const auto idx = static_cast<std::size_t>(n - lo);
        HomologyGroup& h = out[idx];
        h.free_rank = c.rank(n) - analysis[idx].rank - analysis[idx + 1].rank;
        h.torsion = analysis[idx + 1].torsion;
    }
    return out;
}

HomologyGroup homology_at(const FreeChainComplex& c, int n, const Coefficients& k) {
    if (c.empty() || n < c.min_degree() || n > c.max_degree()) return {};
    return homology(c, k)[static_cast<std::size_t>(n - c.min_degree())];
}

HomologyGroup homology_of_pair(const BoundaryMatrix& d_in, const BoundaryMatrix& d_out,
                               const Coefficients& k) {
    if (d_out.cols() != d_in.rows())
        throw NonComposable("d_out has " + std::to_string(d_out.cols()) + " columns but d_in has " +
                            std::to_string(d_in.rows()) + " rows");
    const BoundaryMatrix composite = (d_out * d_in).pruned();
    if (composite.nonZeros() != 0) throw NonComposable("d_out * d_in is not zero");
    const auto in = analyze(d_in, k, {});
    const auto out = analyze(d_out, k, {});
    return HomologyGroup{static_cast<std::size_t>(d_out.cols()) - out.rank - in.rank, in.torsion};
}

std::size_t matrix_rank(const BoundaryMatrix& d, const Coefficients& k) {
    return analyze(d, k, {}).rank;
}

}  // namespace srtor

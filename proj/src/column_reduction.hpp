#pragma once

// Column reduction of boundary matrices with clearing, generic over the
// coefficient arithmetic. Internal to the library.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "srtor/chain_complex.hpp"
#include "srtor/integer.hpp"
#include "srtor/smith.hpp"

namespace srtor::detail {

struct ArithmeticOverflow {};

/// Z with int64 storage; throws ArithmeticOverflow instead of wrapping.
struct CheckedInt64Ring {
    using value_type = std::int64_t;
    static constexpr bool is_field = false;

    value_type from_int(int v) const { return v; }
    static value_type mul(value_type a, value_type b) {
        value_type r;
        if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow{};
        return r;
    }
    static value_type add(value_type a, value_type b) {
        value_type r;
        if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow{};
        return r;
    }
    static value_type neg(value_type a) { return mul(a, -1); }
    static bool is_unit(value_type a) { return a == 1 || a == -1; }
    static bool divides(value_type d, value_type a) { return a % d == 0; }
    static value_type div(value_type a, value_type d) { return a / d; }
    /// g = x*a + y*b with g > 0.
    static void ext_gcd(value_type a, value_type b, value_type& g, value_type& x, value_type& y) {
        value_type old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            const value_type q = old_r / r;
            old_r = add(old_r, neg(mul(q, r))); std::swap(old_r, r);
            old_s = add(old_s, neg(mul(q, s))); std::swap(old_s, s);
            old_t = add(old_t, neg(mul(q, t))); std::swap(old_t, t);
        }
        if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
        g = old_r; x = old_s; y = old_t;
    }
    static BigInt to_big(value_type a) { return BigInt(a); }
};

struct BigIntRing {
    using value_type = BigInt;
    static constexpr bool is_field = false;

    value_type from_int(int v) const { return BigInt(v); }
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static value_type add(const value_type& a, const value_type& b) { return a + b; }
    static value_type neg(const value_type& a) { return -a; }
    static bool is_unit(const value_type& a) { return a == 1 || a == -1; }
    static bool divides(const value_type& d, const value_type& a) { return a % d == 0; }
    static value_type div(const value_type& a, const value_type& d) { return a / d; }
    static void ext_gcd(const value_type& a, const value_type& b, value_type& g, value_type& x,
                        value_type& y) {
        value_type old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            const value_type q = old_r / r;
            old_r -= q * r; std::swap(old_r, r);
            old_s -= q * s; std::swap(old_s, s);
            old_t -= q * t; std::swap(old_t, t);
        }
        if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
        g = old_r; x = old_s; y = old_t;
    }
    static BigInt to_big(const value_type& a) { return a; }
};

/// F_p, p < 2^31.
struct PrimeFieldRing {
    using value_type = std::uint32_t;
    static constexpr bool is_field = true;

    std::uint32_t p;

    value_type from_int(int v) const {
        const std::int64_t r = static_cast<std::int64_t>(v) % static_cast<std::int64_t>(p);
        return static_cast<value_type>(r < 0 ? r + p : r);
    }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p);
    }
    value_type add(value_type a, value_type b) const {
        const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        return static_cast<value_type>(s >= p ? s - p : s);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type inverse(value_type a) const {
        // Fermat.
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<value_type>(result);
    }
};

template <class Ring>
using RingColumn = SparseColumn<typename Ring::value_type>;

template <class T>
bool is_zero_value(const T& v) {
    return v == T(0);
}

/// alpha * x + beta * y, dropping zeros.
template <class Ring>
RingColumn<Ring> combine(const Ring& ring, const typename Ring::value_type& alpha,
                         const RingColumn<Ring>& x, const typename Ring::value_type& beta,
                         const RingColumn<Ring>& y) {
    RingColumn<Ring> out;
    out.reserve(x.size() + y.size());
    auto a = x.begin();
    auto b = y.begin();
    while (a != x.end() || b != y.end()) {
        if (b == y.end() || (a != x.end() && a->row < b->row)) {
            auto v = ring.mul(alpha, a->value);
            if (!is_zero_value(v)) out.push_back({a->row, std::move(v)});
            ++a;
        } else if (a == x.end() || b->row < a->row) {
            auto v = ring.mul(beta, b->value);
            if (!is_zero_value(v)) out.push_back({b->row, std::move(v)});
            ++b;
        } else {
            auto v = ring.add(ring.mul(alpha, a->value), ring.mul(beta, b->value));
            if (!is_zero_value(v)) out.push_back({a->row, std::move(v)});
            ++a;
            ++b;
        }
    }
    return out;
}

template <class Ring>
struct ReducedBoundary {
    std::size_t rank = 0;
    /// Rows that are the lowest entry of a reduced column whose pivot is a
    /// unit; the matching columns of the next-lower boundary reduce to zero.
    std::vector<std::uint32_t> unit_lows;
    bool all_unit_pivots = true;
    /// Nonzero reduced columns.
    std::vector<RingColumn<Ring>> reduced;
};

/// Standard lowest-entry column reduction. Over Z only unimodular column
/// operations are used (exact quotients by unit pivots, or extended-gcd
/// 2x2 steps), so the reduced matrix has the same invariant factors as d.
/// Columns flagged in `cleared` are known to reduce to zero and are skipped.
template <class Ring>
ReducedBoundary<Ring> reduce_boundary(const Ring& ring, const BoundaryMatrix& d,
                                      const std::vector<char>& cleared) {
    using T = typename Ring::value_type;
    ReducedBoundary<Ring> out;
    std::vector<std::int32_t> slot_of_row(static_cast<std::size_t>(d.rows()), -1);
    auto& slots = out.reduced;

    for (Eigen::Index j = 0; j < d.cols(); ++j) {
        if (!cleared.empty() && cleared[static_cast<std::size_t>(j)]) continue;
        RingColumn<Ring> work;
        for (BoundaryMatrix::InnerIterator it(d, j); it; ++it) {
            T v = ring.from_int(it.value());
            if (!is_zero_value(v)) work.push_back({static_cast<std::uint32_t>(it.row()), std::move(v)});
        }
        while (!work.empty()) {
            const std::uint32_t low = work.back().row;
            const std::int32_t k = slot_of_row[low];
            if (k < 0) break;
            RingColumn<Ring>& pivot_col = slots[static_cast<std::size_t>(k)];
            const T pivot = pivot_col.back().value;
            const T a = work.back().value;
            if constexpr (Ring::is_field) {
                const T f = ring.mul(a, ring.inverse(pivot));
                work = combine(ring, T(1), work, ring.neg(f), pivot_col);
            } else {
                if (ring.is_unit(pivot)) {
                    work = combine(ring, T(1), work, ring.neg(ring.mul(a, pivot)), pivot_col);
                } else if (ring.divides(pivot, a)) {
                    work = combine(ring, T(1), work, ring.neg(ring.div(a, pivot)), pivot_col);
                } else {
                    T g, x, y;
                    ring.ext_gcd(pivot, a, g, x, y);
                    // [x  a/g; y  -pivot/g] has determinant -1.
                    RingColumn<Ring> new_pivot = combine(ring, x, pivot_col, y, work);
                    work = combine(ring, ring.div(a, g), pivot_col, ring.neg(ring.div(pivot, g)), work);
                    pivot_col = std::move(new_pivot);
                }
            }
        }
        if (!work.empty()) {
            slot_of_row[work.back().row] = static_cast<std::int32_t>(slots.size());
            slots.push_back(std::move(work));
        }
    }

    out.rank = slots.size();
    for (const auto& col : slots) {
        bool unit;
        if constexpr (Ring::is_field) {
            unit = true;
        } else {
            unit = ring.is_unit(col.back().value);
        }
        if (unit) {
            out.unit_lows.push_back(col.back().row);
        } else {
            out.all_unit_pivots = false;
        }
    }
    return out;
}

/// Invariant factors > 1 of the (already reduced) integer matrix.
template <class Ring>
std::vector<BigInt> torsion_of_reduced(const Ring& ring, std::size_t rows,
                                       const std::vector<RingColumn<Ring>>& reduced) {
    std::vector<SparseColumn<BigInt>> cols;
    cols.reserve(reduced.size());
    for (const auto& c : reduced) {
        SparseColumn<BigInt> bc;
        bc.reserve(c.size());
        for (const auto& e : c) bc.push_back({e.row, ring.to_big(e.value)});
        cols.push_back(std::move(bc));
    }
    return smith_normal_form(rows, std::move(cols)).torsion();
}

}  // namespace srtor::detail

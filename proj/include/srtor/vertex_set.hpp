#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace srtor {

/// Subset of [m] = {1, ..., m} stored as a bitmask; label v lives in bit v-1.
///
/// The ordering is the canonical one used everywhere output has to be
/// reproducible: first by cardinality, then by the numeric mask.
class VertexSet {
public:
    using Mask = std::uint64_t;
    static constexpr int kMaxVertices = 63;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(Mask bits) : bits_(bits) {}

    /// Builds a set from 1-based labels. Throws std::out_of_range for labels
    /// outside [1, kMaxVertices].
    static VertexSet from_labels(std::span<const int> labels) {
        Mask bits = 0;
        for (int v : labels) {
            if (v < 1 || v > kMaxVertices)
                throw std::out_of_range("vertex label " + std::to_string(v) + " out of range");
            bits |= Mask{1} << (v - 1);
        }
        return VertexSet(bits);
    }
    static VertexSet from_labels(std::initializer_list<int> labels) {
        return from_labels(std::span<const int>(labels.begin(), labels.size()));
    }

    /// [m]
    static constexpr VertexSet full(int m) {
        return VertexSet(m >= 64 ? ~Mask{0} : (Mask{1} << m) - 1);
    }

    constexpr Mask bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int label) const { return (bits_ >> (label - 1)) & 1U; }
    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    /// Largest label present, 0 for the empty set.
    constexpr int max_label() const { return 64 - std::countl_zero(bits_); }

    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Mask b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

    constexpr VertexSet complement_in(int m) const { return full(m) - *this; }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    Mask bits_ = 0;
};

/// "[1,3]"; the empty set renders as "[]".
inline std::string to_string(VertexSet s) {
    std::string out = "[";
    bool first = true;
    for (int v : s.labels()) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "]";
}

}  // namespace srtor

template <>
struct std::hash<srtor::VertexSet> {
    std::size_t operator()(srtor::VertexSet s) const noexcept {
        return std::hash<srtor::VertexSet::Mask>{}(s.bits());
    }
};

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "srtor/integer.hpp"

namespace srtor {

/// Diagonal of the Smith normal form: d_1 | d_2 | ... | d_r, all positive,
/// r = rank. Trailing zero diagonal entries are not listed.
struct SmithForm {
    std::vector<BigInt> invariant_factors;

    std::size_t rank() const { return invariant_factors.size(); }
    /// Invariant factors greater than one.
    std::vector<BigInt> torsion() const;
};

namespace detail {

template <class T>
struct SparseEntry {
    std::uint32_t row;
    T value;
};

/// Entries sorted by row, no explicit zeros.
template <class T>
using SparseColumn = std::vector<SparseEntry<T>>;

SmithForm smith_normal_form(std::size_t rows, std::vector<SparseColumn<BigInt>> columns);

}  // namespace detail

/// Invariant factors of an integer matrix.
///
/// Unit pivots are eliminated sparsely first (fewest-entries rows preferred);
/// what remains is reduced densely over BigInt, always pivoting on the entry of
/// minimal absolute value.
template <typename Derived>
SmithForm smith_normal_form(const Eigen::SparseMatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    const Eigen::SparseMatrix<Scalar, Eigen::ColMajor> cm = m.derived();
    std::vector<detail::SparseColumn<BigInt>> cols(static_cast<std::size_t>(cm.cols()));
    for (Eigen::Index j = 0; j < cm.outerSize(); ++j) {
        for (typename Eigen::SparseMatrix<Scalar, Eigen::ColMajor>::InnerIterator it(cm, j); it;
             ++it) {
            if (it.value() != Scalar(0))
                cols[j].push_back({static_cast<std::uint32_t>(it.row()), BigInt(it.value())});
        }
    }
    return detail::smith_normal_form(static_cast<std::size_t>(cm.rows()), std::move(cols));
}

template <typename Derived>
SmithForm smith_normal_form(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    std::vector<detail::SparseColumn<BigInt>> cols(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (m(i, j) != Scalar(0))
                cols[j].push_back({static_cast<std::uint32_t>(i), BigInt(m(i, j))});
        }
    }
    return detail::smith_normal_form(static_cast<std::size_t>(m.rows()), std::move(cols));
}

}  // namespace srtor

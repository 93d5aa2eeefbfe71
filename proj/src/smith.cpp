#include "srtor/smith.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace srtor {

std::vector<BigInt> SmithForm::torsion() const {
    std::vector<BigInt> out;
    for (const BigInt& d : invariant_factors) {
        if (d > 1) out.push_back(d);
    }
    return out;
}

namespace detail {

namespace {

using DenseBig = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

/// col_j -= factor * col_c, with row-occurrence bookkeeping.
void axpy(SparseColumn<BigInt>& target, const BigInt& factor, const SparseColumn<BigInt>& source,
          std::uint32_t target_id, std::vector<std::vector<std::uint32_t>>& row_cols,
          std::vector<std::size_t>& row_count) {
    SparseColumn<BigInt> merged;
    merged.reserve(target.size() + source.size());
    auto a = target.begin();
    auto b = source.begin();
    while (a != target.end() || b != source.end()) {
        if (b == source.end() || (a != target.end() && a->row < b->row)) {
            merged.push_back(std::move(*a++));
        } else if (a == target.end() || b->row < a->row) {
            merged.push_back({b->row, -factor * b->value});
            row_cols[b->row].push_back(target_id);
            ++row_count[b->row];
            ++b;
        } else {
            BigInt v = a->value - factor * b->value;
            if (v != 0) {
                merged.push_back({a->row, std::move(v)});
            } else {
                --row_count[a->row];
            }
            ++a;
            ++b;
        }
    }
    target = std::move(merged);
}

const BigInt* find_row(const SparseColumn<BigInt>& col, std::uint32_t row) {
    auto it = std::lower_bound(col.begin(), col.end(), row,
                               [](const SparseEntry<BigInt>& e, std::uint32_t r) { return e.row < r; });
    return (it != col.end() && it->row == row) ? &it->value : nullptr;
}

bool find_min_abs(const DenseBig& a, Eigen::Index from, Eigen::Index& pi, Eigen::Index& pj) {
    bool found = false;
    BigInt best;
    for (Eigen::Index j = from; j < a.cols(); ++j) {
        for (Eigen::Index i = from; i < a.rows(); ++i) {
            if (a(i, j) == 0) continue;
            BigInt v = abs(a(i, j));
            if (!found || v < best) {
                best = std::move(v);
                pi = i;
                pj = j;
                found = true;
                if (best == 1) return true;
            }
        }
    }
    return found;
}

/// Dense reduction by minimal-absolute-value pivots; returns |diagonal|.
std::vector<BigInt> dense_smith(DenseBig a) {
    std::vector<BigInt> diag;
    const Eigen::Index n = std::min(a.rows(), a.cols());
    for (Eigen::Index t = 0; t < n; ++t) {
        Eigen::Index pi = 0;
        Eigen::Index pj = 0;
        if (!find_min_abs(a, t, pi, pj)) break;
        a.row(t).swap(a.row(pi));
        a.col(t).swap(a.col(pj));
        while (true) {
            bool clean = true;
            for (Eigen::Index i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                const BigInt q = a(i, t) / a(t, t);
                for (Eigen::Index j = t; j < a.cols(); ++j) a(i, j) -= q * a(t, j);
                if (a(i, t) != 0) clean = false;
            }
            for (Eigen::Index j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                const BigInt q = a(t, j) / a(t, t);
                for (Eigen::Index i = t; i < a.rows(); ++i) a(i, j) -= q * a(i, t);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) {
                // Remainders are strictly smaller than the pivot; move the
                // smallest one in row t or column t onto the diagonal.
                Eigen::Index bi = t;
                Eigen::Index bj = t;
                BigInt best = abs(a(t, t));
                for (Eigen::Index i = t + 1; i < a.rows(); ++i) {
                    if (a(i, t) != 0 && abs(a(i, t)) < best) { best = abs(a(i, t)); bi = i; bj = t; }
                }
                for (Eigen::Index j = t + 1; j < a.cols(); ++j) {
                    if (a(t, j) != 0 && abs(a(t, j)) < best) { best = abs(a(t, j)); bi = t; bj = j; }
                }
                a.row(t).swap(a.row(bi));
                a.col(t).swap(a.col(bj));
                continue;
            }
            // Pivot must divide the rest of the block.
            Eigen::Index bad_row = -1;
            for (Eigen::Index j = t + 1; j < a.cols() && bad_row < 0; ++j) {
                for (Eigen::Index i = t + 1; i < a.rows(); ++i) {
                    if (a(i, j) % a(t, t) != 0) { bad_row = i; break; }
                }
            }
            if (bad_row < 0) break;
            for (Eigen::Index j = t; j < a.cols(); ++j) a(t, j) += a(bad_row, j);
        }
        diag.push_back(abs(a(t, t)));
    }
    return diag;
}

}  // namespace

SmithForm smith_normal_form(std::size_t rows, std::vector<SparseColumn<BigInt>> columns) {
    const std::size_t ncols = columns.size();
    std::vector<std::vector<std::uint32_t>> row_cols(rows);
    std::vector<std::size_t> row_count(rows, 0);
    for (std::uint32_t j = 0; j < ncols; ++j) {
        for (const auto& e : columns[j]) {
            row_cols[e.row].push_back(j);
            ++row_count[e.row];
        }
    }
    std::vector<char> alive(ncols, 1);
    std::size_t units = 0;

    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<std::uint32_t> order;
        for (std::uint32_t j = 0; j < ncols; ++j) {
            if (alive[j] && !columns[j].empty()) order.push_back(j);
        }
        std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return columns[a].size() < columns[b].size();
        });
        for (std::uint32_t c : order) {
            if (!alive[c] || columns[c].empty()) continue;
            const SparseEntry<BigInt>* pivot = nullptr;
            for (const auto& e : columns[c]) {
                if (is_unit(e.value) && (!pivot || row_count[e.row] < row_count[pivot->row]))
                    pivot = &e;
            }
            if (!pivot) continue;
            const std::uint32_t r = pivot->row;
            const BigInt u = pivot->value;
            std::vector<std::uint32_t> users = std::move(row_cols[r]);
            std::sort(users.begin(), users.end());
            users.erase(std::unique(users.begin(), users.end()), users.end());
            for (std::uint32_t j : users) {
                if (j == c || !alive[j]) continue;
                const BigInt* a = find_row(columns[j], r);
                if (!a) continue;
                const BigInt factor = *a * u;
                axpy(columns[j], factor, columns[c], j, row_cols, row_count);
            }
            for (const auto& e : columns[c]) --row_count[e.row];
            alive[c] = 0;
            columns[c].clear();
            ++units;
            progress = true;
        }
    }

    // Dense tail.
    std::vector<std::uint32_t> live_cols;
    std::vector<std::int64_t> row_map(rows, -1);
    std::int64_t live_rows = 0;
    for (std::uint32_t j = 0; j < ncols; ++j) {
        if (!alive[j] || columns[j].empty()) continue;
        live_cols.push_back(j);
        for (const auto& e : columns[j]) {
            if (row_map[e.row] < 0) row_map[e.row] = live_rows++;
        }
    }
    SmithForm out;
    out.invariant_factors.assign(units, BigInt(1));
    if (live_cols.empty()) return out;

    DenseBig dense = DenseBig::Constant(live_rows, static_cast<Eigen::Index>(live_cols.size()),
                                        BigInt(0));
    for (std::size_t k = 0; k < live_cols.size(); ++k) {
        for (const auto& e : columns[live_cols[k]])
            dense(row_map[e.row], static_cast<Eigen::Index>(k)) = e.value;
    }
    for (BigInt& d : dense_smith(std::move(dense))) out.invariant_factors.push_back(std::move(d));
    return out;
}

}  // namespace detail

}  // namespace srtor

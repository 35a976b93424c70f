#include "scx/matrix.hpp"

#include <algorithm>

#include "scx/errors.hpp"

namespace scx {
namespace {

bool entry_pos_less(const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
}

// Collects a dense accumulation buffer back into sorted sparse entries.
std::vector<MatrixEntry> collect_nonzero(const std::vector<long long>& dense,
                                         std::size_t rows, std::size_t cols) {
    std::vector<MatrixEntry> out;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            long long v = dense[r * cols + c];
            if (v != 0) {
                out.push_back({static_cast<int>(r), static_cast<int>(c), v});
            }
        }
    }
    return out;
}

} // namespace

long long LabeledSparseMatrix::at(int row, int col) const {
    MatrixEntry probe{row, col, 0};
    auto it = std::lower_bound(entries.begin(), entries.end(), probe, entry_pos_less);
    if (it != entries.end() && it->row == row && it->col == col) {
        return it->value;
    }
    return 0;
}

bool LabeledSparseMatrix::is_symmetric() const {
    if (row_labels != col_labels) {
        return false;
    }
    for (const MatrixEntry& e : entries) {
        if (at(e.col, e.row) != e.value) {
            return false;
        }
    }
    return true;
}

std::vector<double> LabeledSparseMatrix::to_dense() const {
    std::vector<double> dense(row_count() * col_count(), 0.0);
    for (const MatrixEntry& e : entries) {
        dense[static_cast<std::size_t>(e.row) * col_count() +
              static_cast<std::size_t>(e.col)] = static_cast<double>(e.value);
    }
    return dense;
}

LabeledSparseMatrix transpose(const LabeledSparseMatrix& m) {
    LabeledSparseMatrix t;
    t.row_labels = m.col_labels;
    t.col_labels = m.row_labels;
    t.entries.reserve(m.entries.size());
    for (const MatrixEntry& e : m.entries) {
        t.entries.push_back({e.col, e.row, e.value});
    }
    std::sort(t.entries.begin(), t.entries.end(), entry_pos_less);
    return t;
}

LabeledSparseMatrix multiply(const LabeledSparseMatrix& a, const LabeledSparseMatrix& b) {
    if (a.col_labels != b.row_labels) {
        throw validation_error("matrix product: inner labels differ");
    }
    std::size_t rows = a.row_count();
    std::size_t cols = b.col_count();

    std::vector<std::vector<std::pair<int, long long>>> b_rows(b.row_count());
    for (const MatrixEntry& e : b.entries) {
        b_rows[static_cast<std::size_t>(e.row)].emplace_back(e.col, e.value);
    }

    std::vector<long long> dense(rows * cols, 0);
    for (const MatrixEntry& e : a.entries) {
        for (const auto& [c, w] : b_rows[static_cast<std::size_t>(e.col)]) {
            dense[static_cast<std::size_t>(e.row) * cols + static_cast<std::size_t>(c)] +=
                e.value * w;
        }
    }

    LabeledSparseMatrix out;
    out.row_labels = a.row_labels;
    out.col_labels = b.col_labels;
    out.entries = collect_nonzero(dense, rows, cols);
    return out;
}

LabeledSparseMatrix add(const LabeledSparseMatrix& a, const LabeledSparseMatrix& b) {
    if (a.row_labels != b.row_labels || a.col_labels != b.col_labels) {
        throw validation_error("matrix sum: labels differ");
    }
    std::vector<long long> dense(a.row_count() * a.col_count(), 0);
    for (const MatrixEntry& e : a.entries) {
        dense[static_cast<std::size_t>(e.row) * a.col_count() +
              static_cast<std::size_t>(e.col)] += e.value;
    }
    for (const MatrixEntry& e : b.entries) {
        dense[static_cast<std::size_t>(e.row) * a.col_count() +
              static_cast<std::size_t>(e.col)] += e.value;
    }
    LabeledSparseMatrix out;
    out.row_labels = a.row_labels;
    out.col_labels = a.col_labels;
    out.entries = collect_nonzero(dense, a.row_count(), a.col_count());
    return out;
}

} // namespace scx

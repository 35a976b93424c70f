#pragma once

#include <cstddef>
#include <vector>

#include "scx/face.hpp"

namespace scx {

struct MatrixEntry {
    int row = 0;
    int col = 0;
    long long value = 0;

    bool operator==(const MatrixEntry&) const = default;
};

/// Sparse integer matrix whose rows and columns carry face labels.
/// Entries hold at most one value per cell, no explicit zeros, sorted by
/// (row, col).
struct LabeledSparseMatrix {
    std::vector<Face> row_labels;
    std::vector<Face> col_labels;
    std::vector<MatrixEntry> entries;

    std::size_t row_count() const { return row_labels.size(); }
    std::size_t col_count() const { return col_labels.size(); }
    bool is_zero() const { return entries.empty(); }

    /// Value at (row, col); absent cells are 0.
    long long at(int row, int col) const;
    bool is_symmetric() const;

    /// Row-major dense copy, row_count() x col_count().
    std::vector<double> to_dense() const;
};

/// Real coordinates over a face basis, one value per label.
struct FaceVector {
    std::vector<Face> labels;
    std::vector<double> values;
};

LabeledSparseMatrix transpose(const LabeledSparseMatrix& m);

/// a * b; requires a.col_labels == b.row_labels. Zero products are dropped.
LabeledSparseMatrix multiply(const LabeledSparseMatrix& a, const LabeledSparseMatrix& b);

/// a + b; requires identical label sets. Cells canceling to zero are dropped.
LabeledSparseMatrix add(const LabeledSparseMatrix& a, const LabeledSparseMatrix& b);

} // namespace scx

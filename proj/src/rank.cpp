#include "scx/rank.hpp"

#include <gmpxx.h>

#include <vector>

namespace scx {

int rank_exact(const LabeledSparseMatrix& m) {
    std::size_t rows = m.row_count();
    std::size_t cols = m.col_count();
    if (rows == 0 || cols == 0 || m.entries.empty()) {
        return 0;
    }
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols, 0));
    for (const MatrixEntry& e : m.entries) {
        a[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] =
            static_cast<long>(e.value);
    }

    // Bareiss: after eliminating below pivot k, every entry is a minor of
    // the original matrix, and division by the previous pivot is exact.
    mpz_class prev = 1;
    std::size_t pivot_row = 0;
    int rank = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t r = pivot_row;
        while (r < rows && a[r][col] == 0) {
            ++r;
        }
        if (r == rows) {
            continue;
        }
        std::swap(a[pivot_row], a[r]);
        for (std::size_t r2 = pivot_row + 1; r2 < rows; ++r2) {
            for (std::size_t c2 = col + 1; c2 < cols; ++c2) {
                a[r2][c2] = (a[pivot_row][col] * a[r2][c2] - a[r2][col] * a[pivot_row][c2]) / prev;
            }
            a[r2][col] = 0;
        }
        prev = a[pivot_row][col];
        ++pivot_row;
        ++rank;
    }
    return rank;
}

} // namespace scx

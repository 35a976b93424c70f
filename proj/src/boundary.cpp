#include "scx/boundary.hpp"

#include <algorithm>
#include <string>

namespace scx {
namespace {

LabeledSparseMatrix boundary_matrix(const Complex& k, int i, bool signed_entries) {
    if (i < 1 || i > k.dimension()) {
        throw validation_error("boundary dimension " + std::to_string(i) +
                               " outside [1.." + std::to_string(k.dimension()) + "]");
    }
    LabeledSparseMatrix m;
    m.row_labels = k.faces(i - 1);
    m.col_labels = k.faces(i);
    for (std::size_t c = 0; c < m.col_labels.size(); ++c) {
        const Face& face = m.col_labels[c];
        for (std::size_t j = 0; j < face.size(); ++j) {
            auto row = k.face_index(face.without_index(j));
            long long sign = (signed_entries && (j % 2 == 1)) ? -1 : 1;
            m.entries.push_back({*row, static_cast<int>(c), sign});
        }
    }
    std::sort(m.entries.begin(), m.entries.end(),
              [](const MatrixEntry& a, const MatrixEntry& b) {
                  return a.row != b.row ? a.row < b.row : a.col < b.col;
              });
    return m;
}

} // namespace

LabeledSparseMatrix signed_boundary(const Complex& k, int i) {
    return boundary_matrix(k, i, true);
}

LabeledSparseMatrix signless_boundary(const Complex& k, int i) {
    return boundary_matrix(k, i, false);
}

LabeledSparseMatrix q_up(const Complex& k, int i) {
    if (i < 0 || i >= k.dimension()) {
        throw validation_error("q_up dimension " + std::to_string(i) + " outside [0.." +
                               std::to_string(k.dimension() - 1) + "]");
    }
    LabeledSparseMatrix b = signless_boundary(k, i + 1);
    return multiply(b, transpose(b));
}

LabeledSparseMatrix q_down(const Complex& k, int i) {
    if (i < 1 || i > k.dimension()) {
        throw validation_error("q_down dimension " + std::to_string(i) + " outside [1.." +
                               std::to_string(k.dimension()) + "]");
    }
    LabeledSparseMatrix b = signless_boundary(k, i);
    return multiply(transpose(b), b);
}

LabeledSparseMatrix laplacian_signed(const Complex& k, int i, LaplacianKind kind) {
    bool has_up = i >= 0 && i < k.dimension();
    bool has_down = i >= 1 && i <= k.dimension();
    switch (kind) {
        case LaplacianKind::up: {
            if (!has_up) {
                throw validation_error("up Laplacian undefined at dimension " +
                                       std::to_string(i));
            }
            LabeledSparseMatrix b = signed_boundary(k, i + 1);
            return multiply(b, transpose(b));
        }
        case LaplacianKind::down: {
            if (!has_down) {
                throw validation_error("down Laplacian undefined at dimension " +
                                       std::to_string(i));
            }
            LabeledSparseMatrix b = signed_boundary(k, i);
            return multiply(transpose(b), b);
        }
        case LaplacianKind::full: {
            if (!has_up && !has_down) {
                throw validation_error("Laplacian undefined at dimension " + std::to_string(i));
            }
            if (!has_down) {
                return laplacian_signed(k, i, LaplacianKind::up);
            }
            if (!has_up) {
                return laplacian_signed(k, i, LaplacianKind::down);
            }
            return add(laplacian_signed(k, i, LaplacianKind::up),
                       laplacian_signed(k, i, LaplacianKind::down));
        }
    }
    throw validation_error("unknown Laplacian kind");
}

double quadratic_form(const Complex& k, int i, const FaceVector& f) {
    if (f.labels != k.faces(i)) {
        throw validation_error("quadratic form: vector labels do not match the " +
                               std::to_string(i) + "-face stratum");
    }
    if (f.values.size() != f.labels.size()) {
        throw validation_error("quadratic form: label/value length mismatch");
    }
    double total = 0.0;
    for (const Face& up : k.faces(i + 1)) {
        double boundary_sum = 0.0;
        for (std::size_t j = 0; j < up.size(); ++j) {
            auto idx = k.face_index(up.without_index(j));
            boundary_sum += f.values[static_cast<std::size_t>(*idx)];
        }
        total += boundary_sum * boundary_sum;
    }
    return total;
}

} // namespace scx

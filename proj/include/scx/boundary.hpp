#pragma once

#include "scx/complex.hpp"
#include "scx/matrix.hpp"

namespace scx {

enum class LaplacianKind { up, down, full };

/// Boundary matrix of dimension i: rows are the (i-1)-faces, columns the
/// i-faces; the column for [v_0 < ... < v_i] holds (-1)^j at the row whose
/// face omits v_j. Valid for 1 <= i <= dim(K).
LabeledSparseMatrix signed_boundary(const Complex& k, int i);

/// Same support as signed_boundary with every entry +1.
LabeledSparseMatrix signless_boundary(const Complex& k, int i);

/// Gram product of signless boundary rows one level up: the diagonal at F
/// is degree(F), an off-diagonal cell counts common (i+1)-superfaces
/// (0 or 1). Valid for 0 <= i < dim(K).
LabeledSparseMatrix q_up(const Complex& k, int i);

/// Gram product of signless boundary columns: diagonal constantly i+1, an
/// off-diagonal cell counts common (i-1)-subfaces. Valid for
/// 1 <= i <= dim(K).
LabeledSparseMatrix q_down(const Complex& k, int i);

/// Signed Laplacians: up is valid for i < dim(K), down for i >= 1, full is
/// the sum of whichever parts exist at i.
LabeledSparseMatrix laplacian_signed(const Complex& k, int i, LaplacianKind kind);

/// Sum over (i+1)-faces of the squared boundary sums of f; equals the
/// quadratic form of q_up(k, i). f must be labeled by exactly S_i(K).
double quadratic_form(const Complex& k, int i, const FaceVector& f);

} // namespace scx

#pragma once

#include "scx/matrix.hpp"

namespace scx {

/// Rank over the rationals by fraction-free (Bareiss) elimination on exact
/// big integers; no floating point, no modular reduction.
int rank_exact(const LabeledSparseMatrix& m);

} // namespace scx

#pragma once

#include "scx/complex.hpp"

namespace scx {

/// Lexicographically smallest facet list over all relabelings of [1..n];
/// identifies a complex up to vertex relabeling. Guarded to n <= 9 because
/// the search enumerates all n! permutations.
std::vector<Face> canonical_form(const Complex& k);

/// True when the two complexes differ only by a vertex relabeling.
/// Prechecks vertex count, dimension, facet count, facet sizes, and
/// per-vertex facet-degree multisets before the permutation search.
bool is_isomorphic(const Complex& a, const Complex& b);

} // namespace scx

#pragma once

#include <optional>

#include "scx/complex.hpp"

namespace scx {

/// For a pure r-dimensional complex: the first (r+2)-subset of [1..n] all
/// of whose (r+1)-subsets are facets, if one exists. This is the
/// boundary-of-a-simplex pattern the main radius bound excludes.
std::optional<Face> find_delta(const Complex& k);

/// Placement of the rhombic pattern inside a pure r-dimensional complex:
/// an (r+1)-vertex base plus two poles such that every pole-over-subset
/// facet of the pattern is a facet of k.
struct RhombicWitness {
    Face base;
    int pole_a = 0;
    int pole_b = 0;
};
std::optional<RhombicWitness> find_rhombic(const Complex& k);

/// Exact-extension-count check: every facet F and outside vertex u must
/// extend through exactly r boundary faces of F. When it holds, the
/// all-ones vector is dominant for the top-dimension Gram operator with
/// eigenvalue r*n - r*r + 1. On failure the first witness is recorded.
struct ConditionReport {
    bool satisfied = false;
    std::optional<Face> failing_face;
    std::optional<int> failing_vertex;
    std::optional<int> failing_count;
};
ConditionReport equality_condition(const Complex& k);

} // namespace scx

#pragma once

#include <vector>

#include "scx/complex.hpp"

namespace scx {

/// Exact Betti numbers beta_0 .. beta_dim over the rationals.
struct BettiVector {
    std::vector<long long> values;

    long long operator[](std::size_t i) const { return values[i]; }
    std::size_t size() const { return values.size(); }
    bool operator==(const BettiVector&) const = default;
};

/// beta_i = |S_i| - rank(boundary_i) - rank(boundary_{i+1}), with the
/// missing boundaries at the ends treated as rank 0. Vertices lying in no
/// facet each add 1 to beta_0.
BettiVector betti(const Complex& k);

/// beta_i > 0. Dimensions above dim(K) have no faces and report false.
bool has_hole(const Complex& k, int i);

/// For a pure complex of dimension r >= 1: beta_r = 1 and removing any
/// single facet drops beta_r to 0.
bool is_basic_hole(const Complex& k);

/// The three structural facts that hold for every basic hole:
/// (r-1)-path connectivity, minimum (r-1)-face degree 2, and
/// (r-1)-path connectivity after removing any one facet.
struct HoleStructure {
    bool path_connected = false;
    bool min_degree_two = false;
    bool connected_after_removals = false;

    bool all() const { return path_connected && min_degree_two && connected_after_removals; }
};
HoleStructure hole_structure(const Complex& k);

} // namespace scx

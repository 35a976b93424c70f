#pragma once

#include <random>

#include "scx/complex.hpp"

namespace scx {

/// Cone with apex n over all r-subsets of [1..n-1]: C(n-1, r) facets of
/// dimension r. Hole-free; its top signless radius is r*n - r*r + 1 exactly.
Complex tented_complex(int n, int r);

/// Suspension of the boundary of an r-simplex: poles r+2 and r+3 over all
/// r-subsets of [1..r+1], giving 2(r+1) facets on r+3 vertices. A sphere,
/// so one top-dimensional hole.
Complex rhombic_complex(int r);

/// All r-subsets of [1..n] as facets: a pure (r-1)-dimensional complex.
Complex complete_complex(int n, int r);

/// The 12-facet equality complex on 6 vertices: all 4-subsets of [6] except
/// {1,2,5,6}, {2,3,4,5}, {1,3,4,6}.
Complex k1_complex();

/// The 28-facet equality complex on 7 vertices: all 4-subsets of [7] except
/// {1,2,5,6}, {2,3,4,5}, {1,3,4,6}, {1,2,4,7}, {1,3,5,7}, {2,3,6,7},
/// {4,5,6,7}.
Complex k2_complex();

/// Pure r-dimensional complex keeping each candidate (r+1)-subset of [1..n]
/// independently with probability p; one uniformly chosen facet is forced
/// when the coin flips leave none. Draws raw engine words, so sequences
/// depend only on the seed.
Complex random_pure_complex(int n, int r, double p, std::mt19937_64& rng);

} // namespace scx

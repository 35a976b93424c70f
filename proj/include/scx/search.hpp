#pragma once

#include <string>
#include <vector>

#include "scx/complex.hpp"

namespace scx {

enum class SearchMode { exhaustive, backtracking };

SearchMode parse_search_mode(const std::string& s);
const char* search_mode_name(SearchMode mode);

struct SearchOutcome {
    /// One canonically labeled representative per isomorphism class, sorted
    /// by facet count then facet list. Every member satisfies the
    /// equality condition.
    std::vector<Complex> classes;
    long long labeled_solutions = 0;
    long long nodes_explored = 0;
    bool exhaustive = false;
    double wall_time_seconds = 0.0;
};

/// All isomorphism classes of nonempty pure r-dimensional complexes on
/// [1..n] in which every (facet, outside vertex) pair extends through
/// exactly r boundary faces. Exhaustive mode scans every subset of the
/// C(n, r+1) candidate facets and requires C(n, r+1) <= 20. Backtracking
/// mode runs depth-first include/exclude decisions with exact-count
/// constraint propagation under a wall-clock budget and reports honestly
/// whether the tree was finished.
SearchOutcome search_equality_complexes(int n, int r, SearchMode mode, double budget_seconds);

} // namespace scx

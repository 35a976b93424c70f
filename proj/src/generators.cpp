#include "scx/generators.hpp"

#include <algorithm>
#include <string>

namespace scx {
namespace {

void subsets_of_size(int lo, int hi, int k, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == k) {
        out.push_back(current);
        return;
    }
    int needed = k - static_cast<int>(current.size());
    for (int v = lo; v + needed - 1 <= hi; ++v) {
        current.push_back(v);
        subsets_of_size(v + 1, hi, k, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> all_subsets(int lo, int hi, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    subsets_of_size(lo, hi, k, current, out);
    return out;
}

} // namespace

Complex tented_complex(int n, int r) {
    if (r < 1 || n < r + 1) {
        throw validation_error("tented complex needs n >= r+1 >= 2, got n=" +
                               std::to_string(n) + " r=" + std::to_string(r));
    }
    std::vector<std::vector<int>> facets = all_subsets(1, n - 1, r);
    for (auto& f : facets) {
        f.push_back(n);
    }
    return Complex::from_facets(n, facets);
}

Complex rhombic_complex(int r) {
    if (r < 1) {
        throw validation_error("rhombic complex needs r >= 1, got " + std::to_string(r));
    }
    std::vector<std::vector<int>> facets;
    for (int pole : {r + 2, r + 3}) {
        for (auto base : all_subsets(1, r + 1, r)) {
            base.push_back(pole);
            facets.push_back(std::move(base));
        }
    }
    return Complex::from_facets(r + 3, facets);
}

Complex complete_complex(int n, int r) {
    if (r < 1 || n < r) {
        throw validation_error("complete complex needs n >= r >= 1, got n=" +
                               std::to_string(n) + " r=" + std::to_string(r));
    }
    return Complex::from_facets(n, all_subsets(1, n, r));
}

Complex k1_complex() {
    std::vector<std::vector<int>> removed = {{1, 2, 5, 6}, {2, 3, 4, 5}, {1, 3, 4, 6}};
    std::vector<std::vector<int>> facets;
    for (const auto& f : all_subsets(1, 6, 4)) {
        if (std::find(removed.begin(), removed.end(), f) == removed.end()) {
            facets.push_back(f);
        }
    }
    return Complex::from_facets(6, facets);
}

Complex k2_complex() {
    std::vector<std::vector<int>> removed = {{1, 2, 5, 6}, {2, 3, 4, 5}, {1, 3, 4, 6},
                                             {1, 2, 4, 7}, {1, 3, 5, 7}, {2, 3, 6, 7},
                                             {4, 5, 6, 7}};
    std::vector<std::vector<int>> facets;
    for (const auto& f : all_subsets(1, 7, 4)) {
        if (std::find(removed.begin(), removed.end(), f) == removed.end()) {
            facets.push_back(f);
        }
    }
    return Complex::from_facets(7, facets);
}

Complex random_pure_complex(int n, int r, double p, std::mt19937_64& rng) {
    if (r < 1 || n < r + 1) {
        throw validation_error("random complex needs n >= r+1 >= 2, got n=" +
                               std::to_string(n) + " r=" + std::to_string(r));
    }
    if (p < 0.0 || p > 1.0) {
        throw validation_error("facet probability must lie in [0,1]");
    }
    auto uniform01 = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    std::vector<std::vector<int>> candidates = all_subsets(1, n, r + 1);
    std::vector<std::vector<int>> facets;
    for (const auto& c : candidates) {
        if (uniform01() < p) {
            facets.push_back(c);
        }
    }
    if (facets.empty()) {
        facets.push_back(candidates[static_cast<std::size_t>(rng() % candidates.size())]);
    }
    return Complex::from_facets(n, facets);
}

} // namespace scx

#include "scx/detectors.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace scx {
namespace {

void require_pure(const Complex& k, const char* what) {
    if (!k.is_pure()) {
        throw validation_error(std::string(what) + " needs a pure complex");
    }
}

void enumerate_subsets(int lo, int hi, int k, std::vector<int>& current,
                       const std::function<bool(const std::vector<int>&)>& visit, bool& stop) {
    if (stop) {
        return;
    }
    if (static_cast<int>(current.size()) == k) {
        stop = visit(current);
        return;
    }
    int needed = k - static_cast<int>(current.size());
    for (int v = lo; v + needed - 1 <= hi && !stop; ++v) {
        current.push_back(v);
        enumerate_subsets(v + 1, hi, k, current, visit, stop);
        current.pop_back();
    }
}

// Visits k-subsets of [1..n] in lexicographic order until visit returns true.
void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> current;
    bool stop = false;
    enumerate_subsets(1, n, k, current, visit, stop);
}

} // namespace

std::optional<Face> find_delta(const Complex& k) {
    require_pure(k, "simplex-boundary detection");
    int r = k.dimension();
    std::optional<Face> witness;
    for_each_subset(k.vertex_count(), r + 2, [&](const std::vector<int>& verts) {
        for (std::size_t skip = 0; skip < verts.size(); ++skip) {
            std::vector<int> sub;
            sub.reserve(verts.size() - 1);
            for (std::size_t j = 0; j < verts.size(); ++j) {
                if (j != skip) {
                    sub.push_back(verts[j]);
                }
            }
            if (!k.has_face(Face::from_sorted(std::move(sub)))) {
                return false;
            }
        }
        witness = Face::from_sorted(verts);
        return true;
    });
    return witness;
}

std::optional<RhombicWitness> find_rhombic(const Complex& k) {
    require_pure(k, "rhombic detection");
    int r = k.dimension();
    int n = k.vertex_count();
    if (n < r + 3) {
        return std::nullopt;
    }
    std::optional<RhombicWitness> witness;
    for_each_subset(n, r + 1, [&](const std::vector<int>& base) {
        std::vector<int> outside;
        for (int v = 1; v <= n; ++v) {
            if (!std::binary_search(base.begin(), base.end(), v)) {
                outside.push_back(v);
            }
        }
        for (std::size_t i = 0; i < outside.size() && !witness; ++i) {
            for (std::size_t j = i + 1; j < outside.size() && !witness; ++j) {
                bool embeds = true;
                for (int pole : {outside[i], outside[j]}) {
                    for (std::size_t skip = 0; skip < base.size() && embeds; ++skip) {
                        std::vector<int> facet;
                        facet.reserve(base.size());
                        for (std::size_t b = 0; b < base.size(); ++b) {
                            if (b != skip) {
                                facet.push_back(base[b]);
                            }
                        }
                        facet.push_back(pole);
                        if (!k.has_face(Face(std::move(facet)))) {
                            embeds = false;
                        }
                    }
                    if (!embeds) {
                        break;
                    }
                }
                if (embeds) {
                    witness = RhombicWitness{Face::from_sorted(base), outside[i], outside[j]};
                }
            }
        }
        return witness.has_value();
    });
    return witness;
}

ConditionReport equality_condition(const Complex& k) {
    require_pure(k, "equality-condition check");
    int r = k.dimension();
    ConditionReport report;
    for (const Face& f : k.facets()) {
        for (int u = 1; u <= k.vertex_count(); ++u) {
            if (f.contains_vertex(u)) {
                continue;
            }
            int count = static_cast<int>(k.down_neighbors_via(f, u).size());
            if (count != r) {
                report.satisfied = false;
                report.failing_face = f;
                report.failing_vertex = u;
                report.failing_count = count;
                return report;
            }
        }
    }
    report.satisfied = true;
    return report;
}

} // namespace scx

#include "scx/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace scx {
namespace {

// perm[v-1] is the new label of vertex v.
std::vector<Face> relabel_sorted(const std::vector<Face>& facets, const std::vector<int>& perm) {
    std::vector<Face> out;
    out.reserve(facets.size());
    for (const Face& f : facets) {
        std::vector<int> verts;
        verts.reserve(f.size());
        for (int v : f.vertices()) {
            verts.push_back(perm[static_cast<std::size_t>(v) - 1]);
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(Face::from_sorted(std::move(verts)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> sorted_vertex_degrees(const Complex& k) {
    std::vector<int> deg(static_cast<std::size_t>(k.vertex_count()), 0);
    for (const Face& f : k.facets()) {
        for (int v : f.vertices()) {
            ++deg[static_cast<std::size_t>(v) - 1];
        }
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

std::vector<int> sorted_facet_sizes(const Complex& k) {
    std::vector<int> sizes;
    sizes.reserve(k.facet_count());
    for (const Face& f : k.facets()) {
        sizes.push_back(static_cast<int>(f.size()));
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

} // namespace

std::vector<Face> canonical_form(const Complex& k) {
    if (k.vertex_count() > 9) {
        throw validation_error("canonical form supports at most 9 vertices, got " +
                               std::to_string(k.vertex_count()));
    }
    std::vector<int> perm(static_cast<std::size_t>(k.vertex_count()));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Face> best = relabel_sorted(k.facets(), perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<Face> candidate = relabel_sorted(k.facets(), perm);
        if (candidate < best) {
            best = std::move(candidate);
        }
    }
    return best;
}

bool is_isomorphic(const Complex& a, const Complex& b) {
    if (a.vertex_count() != b.vertex_count() || a.dimension() != b.dimension() ||
        a.facet_count() != b.facet_count()) {
        return false;
    }
    if (sorted_facet_sizes(a) != sorted_facet_sizes(b)) {
        return false;
    }
    if (sorted_vertex_degrees(a) != sorted_vertex_degrees(b)) {
        return false;
    }
    return canonical_form(a) == canonical_form(b);
}

} // namespace scx

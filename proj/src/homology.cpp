#include "scx/homology.hpp"

#include <string>

#include "scx/boundary.hpp"
#include "scx/rank.hpp"

namespace scx {
namespace {

long long betti_at(const Complex& k, int i) {
    if (i > k.dimension()) {
        return 0;
    }
    return betti(k).values[static_cast<std::size_t>(i)];
}

void require_pure_positive_dimension(const Complex& k, const char* what) {
    if (!k.is_pure()) {
        throw validation_error(std::string(what) + " needs a pure complex");
    }
    if (k.dimension() < 1) {
        throw validation_error(std::string(what) + " needs dimension at least 1");
    }
}

} // namespace

BettiVector betti(const Complex& k) {
    int dim = k.dimension();
    std::vector<int> ranks(static_cast<std::size_t>(dim) + 2, 0);
    for (int i = 1; i <= dim; ++i) {
        ranks[static_cast<std::size_t>(i)] = rank_exact(signed_boundary(k, i));
    }
    BettiVector b;
    b.values.resize(static_cast<std::size_t>(dim) + 1);
    for (int i = 0; i <= dim; ++i) {
        b.values[static_cast<std::size_t>(i)] =
            static_cast<long long>(k.faces(i).size()) - ranks[static_cast<std::size_t>(i)] -
            ranks[static_cast<std::size_t>(i) + 1];
    }
    b.values[0] += k.isolated_vertex_count();
    return b;
}

bool has_hole(const Complex& k, int i) {
    if (i < 0 || i > k.dimension()) {
        return false;
    }
    return betti_at(k, i) > 0;
}

bool is_basic_hole(const Complex& k) {
    require_pure_positive_dimension(k, "basic-hole certification");
    int r = k.dimension();
    if (betti_at(k, r) != 1) {
        return false;
    }
    for (const Face& f : k.facets()) {
        if (betti_at(k.without_top_face(f), r) != 0) {
            return false;
        }
    }
    return true;
}

HoleStructure hole_structure(const Complex& k) {
    require_pure_positive_dimension(k, "hole structure");
    int r = k.dimension();
    HoleStructure h;
    h.path_connected = k.is_path_connected(r - 1);
    h.min_degree_two = true;
    for (const Face& f : k.faces(r - 1)) {
        if (k.degree(f) < 2) {
            h.min_degree_two = false;
            break;
        }
    }
    h.connected_after_removals = true;
    for (const Face& f : k.facets()) {
        if (!k.without_top_face(f).is_path_connected(r - 1)) {
            h.connected_after_removals = false;
            break;
        }
    }
    return h;
}

} // namespace scx

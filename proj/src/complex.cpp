#include "scx/complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace scx {
namespace {

constexpr std::size_t kMaxFacetVertices = 16;

// Disjoint-set forest with path halving; unite reports whether two
// components actually merged.
class UnionFind {
  public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[b] = a;
        return true;
    }

  private:
    std::vector<std::size_t> parent_;
};

int shared_vertex_count(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

std::vector<std::vector<int>> all_subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    current.reserve(static_cast<std::size_t>(k));
    auto recurse = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == k) {
            out.push_back(current);
            return;
        }
        int needed = k - static_cast<int>(current.size());
        for (int v = next; v + needed - 1 <= n; ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 1);
    return out;
}

} // namespace

Complex Complex::from_facets(int n, const std::vector<std::vector<int>>& raw) {
    std::vector<Face> facets;
    facets.reserve(raw.size());
    for (const auto& verts : raw) {
        facets.emplace_back(verts);
    }
    return from_facets(n, std::move(facets));
}

Complex Complex::from_facets(int n, std::vector<Face> facets) {
    if (n < 1) {
        throw validation_error("vertex count must be positive, got " + std::to_string(n));
    }
    if (facets.empty()) {
        throw validation_error("a complex needs at least one facet");
    }
    for (const Face& f : facets) {
        if (f.size() > kMaxFacetVertices) {
            throw validation_error("facet " + f.to_string() + " has " +
                                   std::to_string(f.size()) +
                                   " vertices; the supported maximum is 16");
        }
        if (f.vertices().back() > n) {
            throw validation_error("facet " + f.to_string() +
                                   " uses a vertex above the declared count " +
                                   std::to_string(n));
        }
    }

    std::sort(facets.begin(), facets.end());
    std::size_t before = facets.size();
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    bool normalized = facets.size() != before;

    std::vector<Face> kept;
    kept.reserve(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < facets.size() && !dominated; ++j) {
            if (j != i && facets[i].size() < facets[j].size() &&
                facets[i].subset_of(facets[j])) {
                dominated = true;
            }
        }
        if (dominated) {
            normalized = true;
        } else {
            kept.push_back(facets[i]);
        }
    }

    Complex c;
    c.n_ = n;
    c.normalized_ = normalized;
    c.facets_ = std::move(kept);
    c.dim_ = -1;
    for (const Face& f : c.facets_) {
        c.dim_ = std::max(c.dim_, f.dimension());
    }
    c.pure_ = std::all_of(c.facets_.begin(), c.facets_.end(),
                          [&](const Face& f) { return f.dimension() == c.dim_; });
    c.build_strata();
    return c;
}

void Complex::build_strata() {
    strata_.assign(static_cast<std::size_t>(dim_) + 1, {});
    for (const Face& f : facets_) {
        const auto& verts = f.vertices();
        unsigned full = (verts.size() == 32u) ? ~0u : ((1u << verts.size()) - 1u);
        for (unsigned mask = 1; mask <= full; ++mask) {
            std::vector<int> sub;
            sub.reserve(static_cast<std::size_t>(std::popcount(mask)));
            for (std::size_t b = 0; b < verts.size(); ++b) {
                if (mask & (1u << b)) {
                    sub.push_back(verts[b]);
                }
            }
            auto& stratum = strata_[sub.size() - 1];
            stratum.push_back(Face::from_sorted(std::move(sub)));
        }
    }
    for (auto& stratum : strata_) {
        std::sort(stratum.begin(), stratum.end());
        stratum.erase(std::unique(stratum.begin(), stratum.end()), stratum.end());
    }
}

const std::vector<Face>& Complex::faces(int i) const {
    static const std::vector<Face> empty;
    if (i < 0 || i > dim_) {
        return empty;
    }
    return strata_[static_cast<std::size_t>(i)];
}

std::optional<int> Complex::face_index(const Face& f) const {
    int d = f.dimension();
    if (d > dim_) {
        return std::nullopt;
    }
    const auto& stratum = strata_[static_cast<std::size_t>(d)];
    auto it = std::lower_bound(stratum.begin(), stratum.end(), f);
    if (it == stratum.end() || *it != f) {
        return std::nullopt;
    }
    return static_cast<int>(it - stratum.begin());
}

int Complex::degree(const Face& f) const {
    if (!has_face(f)) {
        throw validation_error("degree of " + f.to_string() + ": not a face");
    }
    int count = 0;
    for (int v = 1; v <= n_; ++v) {
        if (!f.contains_vertex(v) && has_face(f.with_vertex(v))) {
            ++count;
        }
    }
    return count;
}

std::vector<Face> Complex::up_neighbors(const Face& f) const {
    if (!has_face(f)) {
        throw validation_error("up_neighbors of " + f.to_string() + ": not a face");
    }
    std::vector<Face> out;
    for (int v = 1; v <= n_; ++v) {
        if (f.contains_vertex(v)) {
            continue;
        }
        Face up = f.with_vertex(v);
        if (!has_face(up)) {
            continue;
        }
        for (std::size_t x = 0; x < f.size(); ++x) {
            out.push_back(f.without_index(x).with_vertex(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Face> Complex::down_neighbors(const Face& f) const {
    if (!has_face(f)) {
        throw validation_error("down_neighbors of " + f.to_string() + ": not a face");
    }
    std::vector<Face> out;
    for (int u = 1; u <= n_; ++u) {
        if (f.contains_vertex(u)) {
            continue;
        }
        for (std::size_t x = 0; x < f.size(); ++x) {
            Face g = f.without_index(x).with_vertex(u);
            if (has_face(g)) {
                out.push_back(std::move(g));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Face> Complex::down_neighbors_via(const Face& f, int u) const {
    if (!has_face(f)) {
        throw validation_error("down_neighbors_via of " + f.to_string() + ": not a face");
    }
    if (f.contains_vertex(u)) {
        throw validation_error("down_neighbors_via: vertex " + std::to_string(u) +
                               " lies in " + f.to_string());
    }
    if (u < 1 || u > n_) {
        throw validation_error("down_neighbors_via: vertex " + std::to_string(u) +
                               " is outside the vertex set");
    }
    std::vector<Face> out;
    for (std::size_t x = 0; x < f.size(); ++x) {
        Face g = f.without_index(x).with_vertex(u);
        if (has_face(g)) {
            out.push_back(std::move(g));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

IncidenceGraph Complex::incidence_graph(int i) const {
    if (i < 0 || i >= dimension()) {
        throw validation_error("incidence graph dimension " + std::to_string(i) + " out of range");
    }
    IncidenceGraph g;
    g.left = faces(i);
    g.right = faces(i + 1);
    for (std::size_t ri = 0; ri < g.right.size(); ++ri) {
        for (const Face& b : g.right[ri].boundary()) {
            auto li = face_index(b);
            g.edges.emplace_back(*li, static_cast<int>(ri));
        }
    }
    return g;
}

bool Complex::is_path_connected(int i) const {
    const auto& left = faces(i);
    if (left.size() <= 1) {
        return true;
    }
    UnionFind uf(left.size());
    std::size_t components = left.size();
    for (const Face& up : faces(i + 1)) {
        auto boundary = up.boundary();
        auto first = face_index(boundary.front());
        for (std::size_t j = 1; j < boundary.size(); ++j) {
            auto other = face_index(boundary[j]);
            if (uf.unite(static_cast<std::size_t>(*first), static_cast<std::size_t>(*other))) {
                --components;
            }
        }
    }
    return components == 1;
}

int Complex::isolated_vertex_count() const {
    std::vector<char> covered(static_cast<std::size_t>(n_) + 1, 0);
    for (const Face& f : facets_) {
        for (int v : f.vertices()) {
            covered[static_cast<std::size_t>(v)] = 1;
        }
    }
    int count = 0;
    for (int v = 1; v <= n_; ++v) {
        if (!covered[static_cast<std::size_t>(v)]) {
            ++count;
        }
    }
    return count;
}

Complex Complex::with_facet(const Face& f) const {
    std::vector<Face> fs = facets_;
    fs.push_back(f);
    return from_facets(n_, std::move(fs));
}

Complex Complex::without_top_face(const Face& f) const {
    auto it = std::find(facets_.begin(), facets_.end(), f);
    if (it == facets_.end()) {
        throw validation_error("cannot remove " + f.to_string() +
                               ": not an inclusion-maximal face");
    }
    std::vector<Face> fs;
    fs.reserve(facets_.size() - 1 + f.size());
    for (const Face& g : facets_) {
        if (g != f) {
            fs.push_back(g);
        }
    }
    for (Face& b : f.boundary()) {
        fs.push_back(std::move(b));
    }
    if (fs.empty()) {
        throw validation_error("removing " + f.to_string() + " leaves an empty complex");
    }
    return from_facets(n_, std::move(fs));
}

Complex complete_and_connect(const Complex& k) {
    int r = k.dimension();
    if (!k.is_pure() || r < 1) {
        throw validation_error("completion needs a pure complex of dimension at least 1");
    }
    int n = k.vertex_count();

    auto subs = all_subsets_of_size(n, r);
    auto index_of = [&](const std::vector<int>& verts) {
        auto it = std::lower_bound(subs.begin(), subs.end(), verts);
        return static_cast<std::size_t>(it - subs.begin());
    };

    UnionFind uf(subs.size());
    std::size_t components = subs.size();
    auto unite_within = [&](const Face& facet) {
        auto boundary = facet.boundary();
        std::size_t first = index_of(boundary.front().vertices());
        for (std::size_t j = 1; j < boundary.size(); ++j) {
            if (uf.unite(first, index_of(boundary[j].vertices()))) {
                --components;
            }
        }
    };

    for (const Face& f : k.facets()) {
        unite_within(f);
    }

    std::vector<Face> facets = k.facets();
    // The lexicographically smallest bridgeable pair only moves forward as
    // components merge, so one monotone cursor sweep finds every bridge.
    std::size_t ai = 0;
    std::size_t bi = 1;
    while (components > 1) {
        bool bridged = false;
        while (ai + 1 < subs.size()) {
            if (bi >= subs.size()) {
                ++ai;
                bi = ai + 1;
                continue;
            }
            if (shared_vertex_count(subs[ai], subs[bi]) == r - 1 &&
                uf.find(ai) != uf.find(bi)) {
                std::vector<int> merged;
                std::set_union(subs[ai].begin(), subs[ai].end(),
                               subs[bi].begin(), subs[bi].end(),
                               std::back_inserter(merged));
                Face bridge = Face::from_sorted(std::move(merged));
                facets.push_back(bridge);
                unite_within(bridge);
                ++bi;
                bridged = true;
                break;
            }
            ++bi;
        }
        if (!bridged) {
            throw std::logic_error("completion ran out of bridgeable pairs");
        }
    }

    return Complex::from_facets(n, std::move(facets));
}

} // namespace scx

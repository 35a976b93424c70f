#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "scx/face.hpp"

namespace scx {

/// Bipartite containment graph between two consecutive face strata:
/// an edge (l, r) means left[l] is a boundary face of right[r].
struct IncidenceGraph {
    std::vector<Face> left;                 // dimension i
    std::vector<Face> right;                // dimension i+1
    std::vector<std::pair<int, int>> edges; // (left index, right index)
};

/// An abstract simplicial complex on vertices 1..n, stored by its facets
/// (the inclusion-maximal faces). All face strata are derived from the
/// facets at construction, so instances are immutable and safe to share
/// across threads. Vertices not covered by any facet are allowed.
class Complex {
  public:
    /// Validates and normalizes raw facet input: sorts vertices, drops
    /// duplicate facets and facets contained in other facets. Throws
    /// validation_error for an empty list, an empty facet, or a vertex
    /// outside [1..n]. Facets are capped at 16 vertices.
    static Complex from_facets(int n, const std::vector<std::vector<int>>& raw);
    static Complex from_facets(int n, std::vector<Face> facets);

    int vertex_count() const { return n_; }
    int dimension() const { return dim_; }
    bool is_pure() const { return pure_; }
    /// True when normalization dropped a duplicate or dominated facet.
    bool was_normalized() const { return normalized_; }

    /// Facets in lexicographic order.
    const std::vector<Face>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }

    /// The i-dimensional faces in lexicographic order. Out-of-range i
    /// (negative or above the dimension) yields an empty stratum.
    const std::vector<Face>& faces(int i) const;

    /// Index of F within the stratum of its dimension, if it is a face.
    std::optional<int> face_index(const Face& f) const;
    bool has_face(const Face& f) const { return face_index(f).has_value(); }

    /// Number of (i+1)-faces containing the i-face F. Throws if F is not a face.
    int degree(const Face& f) const;

    /// Faces of the same dimension sharing a superface one dimension up.
    std::vector<Face> up_neighbors(const Face& f) const;
    /// Faces of the same dimension sharing a subface one dimension down.
    std::vector<Face> down_neighbors(const Face& f) const;
    /// For a top face F and outside vertex u: the faces G ∪ {u} of dim(F)
    /// with G a boundary face of F. Throws if u lies in F or F is not a face.
    std::vector<Face> down_neighbors_via(const Face& f, int u) const;

    IncidenceGraph incidence_graph(int i) const;

    /// Reachability in the incidence graph between dimensions i and i+1:
    /// true iff all i-faces fall in one connected component (an i-face in
    /// no (i+1)-face is its own component). Strata with at most one i-face
    /// are vacuously connected.
    bool is_path_connected(int i) const;

    /// Vertices of [1..n] not covered by any facet.
    int isolated_vertex_count() const;

    /// New complex with one extra facet (re-normalized).
    Complex with_facet(const Face& f) const;
    /// New complex with the top face F deleted; proper subsets of F that are
    /// no longer under any facet become facets themselves.
    Complex without_top_face(const Face& f) const;

    bool operator==(const Complex& other) const {
        return n_ == other.n_ && facets_ == other.facets_;
    }

  private:
    Complex() = default;
    void build_strata();

    int n_ = 0;
    int dim_ = -1;
    bool pure_ = true;
    bool normalized_ = false;
    std::vector<Face> facets_;
    std::vector<std::vector<Face>> strata_; // strata_[i] = faces of dimension i
};

/// Extends a pure r-dimensional complex (r >= 1) to one on the same vertex
/// set that contains the original as a subcomplex, has every r-subset of
/// [1..n] as an (r-1)-face, and is (r-1)-path connected, by repeatedly
/// joining two r-subsets in different components that share an (r-1)-subset
/// (the lexicographically smallest such pair) into a new r-face. Does not
/// create top-dimensional holes beyond those already present.
Complex complete_and_connect(const Complex& k);

} // namespace scx

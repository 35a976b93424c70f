#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "scx/errors.hpp"

namespace scx {

/// A face of an abstract simplicial complex: a nonempty, strictly increasing
/// list of 1-based vertex ids. A face with k vertices has dimension k-1.
/// The ascending vertex order doubles as the positive orientation.
class Face {
  public:
    Face() = default;

    /// Normalizing constructor: sorts and removes repeated vertices.
    /// Throws validation_error on an empty list or a nonpositive vertex.
    explicit Face(std::vector<int> verts);

    /// Builds from a list that is already strictly increasing (unchecked hot path).
    static Face from_sorted(std::vector<int> verts);

    int dimension() const { return static_cast<int>(verts_.size()) - 1; }
    std::size_t size() const { return verts_.size(); }
    const std::vector<int>& vertices() const { return verts_; }
    int operator[](std::size_t i) const { return verts_[i]; }

    bool contains_vertex(int v) const;
    /// Subset test: every vertex of this face lies in `other`.
    bool subset_of(const Face& other) const;

    /// The faces obtained by omitting one vertex, in omission order
    /// (omit verts_[0] first). Empty for a single vertex.
    std::vector<Face> boundary() const;

    /// This face with vertex u added; throws if u is already present.
    Face with_vertex(int u) const;
    /// This face with verts_[j] removed.
    Face without_index(std::size_t j) const;

    std::string to_string() const; // "{1,2,4}"

    auto operator<=>(const Face&) const = default;

  private:
    std::vector<int> verts_;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : f.vertices()) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace scx

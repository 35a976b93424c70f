#include "scx/face.hpp"

#include <algorithm>

namespace scx {

Face::Face(std::vector<int> verts) : verts_(std::move(verts)) {
    if (verts_.empty()) {
        throw validation_error("face must have at least one vertex");
    }
    for (int v : verts_) {
        if (v <= 0) {
            throw validation_error("vertex ids must be positive, got " + std::to_string(v));
        }
    }
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
}

Face Face::from_sorted(std::vector<int> verts) {
    Face f;
    f.verts_ = std::move(verts);
    return f;
}

bool Face::contains_vertex(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Face::subset_of(const Face& other) const {
    return std::includes(other.verts_.begin(), other.verts_.end(), verts_.begin(), verts_.end());
}

std::vector<Face> Face::boundary() const {
    std::vector<Face> out;
    if (verts_.size() < 2) {
        return out;
    }
    out.reserve(verts_.size());
    for (std::size_t j = 0; j < verts_.size(); ++j) {
        out.push_back(without_index(j));
    }
    return out;
}

Face Face::with_vertex(int u) const {
    if (contains_vertex(u)) {
        throw validation_error("vertex " + std::to_string(u) + " already in face " + to_string());
    }
    std::vector<int> verts = verts_;
    verts.insert(std::upper_bound(verts.begin(), verts.end(), u), u);
    return Face::from_sorted(std::move(verts));
}

Face Face::without_index(std::size_t j) const {
    std::vector<int> verts;
    verts.reserve(verts_.size() - 1);
    for (std::size_t k = 0; k < verts_.size(); ++k) {
        if (k != j) {
            verts.push_back(verts_[k]);
        }
    }
    return Face::from_sorted(std::move(verts));
}

std::string Face::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += std::to_string(verts_[i]);
    }
    s += '}';
    return s;
}

} // namespace scx

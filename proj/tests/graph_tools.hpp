#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

namespace testutil {

// Largest eigenvalue of a small dense symmetric matrix by cyclic Jacobi.
inline double dense_symmetric_max_eigenvalue(std::array<std::array<double, 7>, 7>& a, int n) {
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                off += a[p][q] * a[p][q];
            }
        }
        if (off < 1e-22) {
            break;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-14) {
                    continue;
                }
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p];
                    double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k];
                    double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    double best = a[0][0];
    for (int i = 1; i < n; ++i) {
        best = std::max(best, a[i][i]);
    }
    return best;
}

// Connected, two-colorable, covering all n vertices, with every cross pair
// adjacent: exactly the spanning complete bipartite graphs.
inline bool is_spanning_complete_bipartite(const std::array<std::uint8_t, 7>& adj, int n,
                                           int edges) {
    for (int v = 0; v < n; ++v) {
        if (adj[v] == 0) {
            return false;
        }
    }
    std::array<int, 7> color{};
    color.fill(-1);
    std::array<int, 7> queue{};
    int head = 0, tail = 0;
    queue[tail++] = 0;
    color[0] = 0;
    int seen = 1;
    while (head < tail) {
        int v = queue[head++];
        for (int u = 0; u < n; ++u) {
            if (!(adj[v] & (1u << u))) {
                continue;
            }
            if (color[u] == -1) {
                color[u] = 1 - color[v];
                queue[tail++] = u;
                ++seen;
            } else if (color[u] == color[v]) {
                return false;
            }
        }
    }
    if (seen != n) {
        return false;
    }
    int a = 0;
    for (int v = 0; v < n; ++v) {
        a += (color[v] == 0);
    }
    return edges == a * (n - a);
}

// Scans every graph on n <= 7 labeled vertices. Returns true when, among
// the triangle-free ones, the set with signless Laplacian radius equal to
// n is exactly the spanning complete bipartite graphs; reports how many
// witnesses were seen.
inline bool triangle_free_radius_classification(int n, long long& bipartite_count) {
    int m = n * (n - 1) / 2;
    std::array<std::pair<int, int>, 21> edge_list{};
    int idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            edge_list[idx++] = {i, j};
        }
    }
    long long mismatches = 0;
    bipartite_count = 0;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::array<std::uint8_t, 7> adj{};
        int edges = 0;
        for (int e = 0; e < m; ++e) {
            if (mask & (1u << e)) {
                auto [i, j] = edge_list[static_cast<std::size_t>(e)];
                adj[i] |= static_cast<std::uint8_t>(1u << j);
                adj[j] |= static_cast<std::uint8_t>(1u << i);
                ++edges;
            }
        }
        bool triangle_free = true;
        for (int e = 0; e < m && triangle_free; ++e) {
            if (mask & (1u << e)) {
                auto [i, j] = edge_list[static_cast<std::size_t>(e)];
                triangle_free = (adj[i] & adj[j]) == 0;
            }
        }
        if (!triangle_free) {
            continue;
        }
        std::array<std::array<double, 7>, 7> q{};
        for (int v = 0; v < n; ++v) {
            int deg = 0;
            for (int u = 0; u < n; ++u) {
                if (adj[v] & (1u << u)) {
                    ++deg;
                    if (u > v) {
                        q[v][u] = 1.0;
                        q[u][v] = 1.0;
                    }
                }
            }
            q[v][v] = deg;
        }
        double radius = dense_symmetric_max_eigenvalue(q, n);
        bool hits_n = std::abs(radius - n) < 1e-6;
        bool bipartite = is_spanning_complete_bipartite(adj, n, edges);
        bipartite_count += bipartite;
        mismatches += (hits_n != bipartite);
    }
    return mismatches == 0;
}

} // namespace testutil

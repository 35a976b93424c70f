#include "doctest.h"

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "scx/canonical.hpp"
#include "scx/complex.hpp"
#include "scx/generators.hpp"
#include "scx/homology.hpp"
#include "scx/io.hpp"

using namespace scx;

TEST_CASE("face normalization and accessors") {
    Face f({4, 1, 2, 4});
    CHECK(f.vertices() == std::vector<int>{1, 2, 4});
    CHECK(f.dimension() == 2);
    CHECK(f.contains_vertex(4));
    CHECK(!f.contains_vertex(3));
    CHECK(f.to_string() == "{1,2,4}");
    CHECK_THROWS_AS(Face(std::vector<int>{}), validation_error);
    CHECK_THROWS_AS(Face({0, 1}), validation_error);
}

TEST_CASE("face boundary follows omission order") {
    Face f({1, 2, 3});
    auto b = f.boundary();
    REQUIRE(b.size() == 3);
    CHECK(b[0] == Face({2, 3}));
    CHECK(b[1] == Face({1, 3}));
    CHECK(b[2] == Face({1, 2}));
    CHECK(Face({5}).boundary().empty());
}

TEST_CASE("face subset and vertex edits") {
    Face f({1, 3, 5});
    CHECK(f.subset_of(Face({1, 2, 3, 5})));
    CHECK(!f.subset_of(Face({1, 3, 4})));
    CHECK(f.with_vertex(2) == Face({1, 2, 3, 5}));
    CHECK_THROWS_AS(f.with_vertex(3), validation_error);
    CHECK(f.without_index(1) == Face({1, 5}));
}

TEST_CASE("from_facets validates and normalizes") {
    Complex t = Complex::from_facets(4, {{1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(t.is_pure());
    CHECK(t.dimension() == 2);
    CHECK(t.facet_count() == 3);
    CHECK(!t.was_normalized());

    Complex mixed = Complex::from_facets(4, {{1, 2}, {1, 3, 4}});
    CHECK(!mixed.is_pure());

    CHECK_THROWS_AS(Complex::from_facets(3, {{1, 2, 5}}), validation_error);
    CHECK_THROWS_AS(Complex::from_facets(3, std::vector<std::vector<int>>{}), validation_error);
    CHECK_THROWS_AS(Complex::from_facets(0, std::vector<std::vector<int>>{{1}}), validation_error);

    Complex dominated = Complex::from_facets(4, {{1, 2}, {1, 2, 3}});
    CHECK(dominated.was_normalized());
    CHECK(dominated.facet_count() == 1);

    Complex duplicate = Complex::from_facets(4, {{1, 2, 3}, {3, 2, 1}});
    CHECK(duplicate.was_normalized());
    CHECK(duplicate.facet_count() == 1);
}

TEST_CASE("strata enumeration") {
    Complex t6 = tented_complex(6, 3);
    CHECK(t6.faces(3).size() == 10);
    CHECK(t6.faces(2).size() == 20);
    CHECK(t6.faces(1).size() == 15);
    CHECK(t6.faces(0).size() == 6);
    CHECK(t6.faces(4).empty());
    CHECK(t6.faces(-1).empty());

    CHECK(k1_complex().faces(3).size() == 12);

    Complex t4 = Complex::from_facets(4, {{1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(t4.faces(1).size() == 6);
}

TEST_CASE("degree") {
    Complex t6 = tented_complex(6, 3);
    CHECK(t6.degree(Face({1, 2, 6})) == 3);
    CHECK(t6.degree(Face({1, 2, 3})) == 1);
    CHECK_THROWS_AS(t6.degree(Face({1, 2, 7})), validation_error);

    Complex edge = Complex::from_facets(2, {{1, 2}});
    CHECK(edge.degree(Face({1})) == 1);
}

TEST_CASE("degree sum identity") {
    Complex complexes[] = {tented_complex(6, 3), k1_complex(), rhombic_complex(2)};
    for (const Complex& k : complexes) {
        for (int i = 0; i < k.dimension(); ++i) {
            long long total = 0;
            for (const Face& f : k.faces(i)) {
                total += k.degree(f);
            }
            CHECK(total == static_cast<long long>((i + 2) * k.faces(i + 1).size()));
        }
    }
}

TEST_CASE("up and down neighbors") {
    Complex tri = Complex::from_facets(3, {{1, 2, 3}});
    auto up = tri.up_neighbors(Face({1, 2}));
    REQUIRE(up.size() == 2);
    CHECK(up[0] == Face({1, 3}));
    CHECK(up[1] == Face({2, 3}));

    // Every 4-set of [6] shares a 3-subset with C(4,3)*(6-4) = 8 other
    // 4-sets, not with all 14 of them.
    Complex full = complete_complex(6, 4);
    CHECK(full.down_neighbors(Face({1, 2, 3, 4})).size() == 8);
    CHECK(oracle::count_down_neighbors(full, Face({1, 2, 3, 4})) == 8);

    // In the tented complex every facet contains the apex, so a facet has
    // 3 down neighbors per outside vertex u (u in {4,5}), 6 in total.
    Complex t6 = tented_complex(6, 3);
    CHECK(t6.down_neighbors(Face({1, 2, 3, 6})).size() == 6);
    CHECK(oracle::count_down_neighbors(t6, Face({1, 2, 3, 6})) == 6);
}

TEST_CASE("neighbor counts match the brute-force oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Complex k = random_pure_complex(6, 2, 0.6, rng);
        for (const Face& f : k.faces(k.dimension())) {
            CHECK(static_cast<int>(k.down_neighbors(f).size()) ==
                  oracle::count_down_neighbors(k, f));
        }
        for (const Face& f : k.faces(k.dimension() - 1)) {
            CHECK(static_cast<int>(k.up_neighbors(f).size()) == oracle::count_up_neighbors(k, f));
        }
    }
}

TEST_CASE("down_neighbors_via") {
    Complex t6 = tented_complex(6, 3);
    auto via = t6.down_neighbors_via(Face({1, 2, 3, 6}), 4);
    REQUIRE(via.size() == 3);
    CHECK(via[0] == Face({1, 2, 4, 6}));
    CHECK(via[1] == Face({1, 3, 4, 6}));
    CHECK(via[2] == Face({2, 3, 4, 6}));

    CHECK(complete_complex(6, 4).down_neighbors_via(Face({1, 2, 3, 4}), 5).size() == 4);
    CHECK(k1_complex().down_neighbors_via(Face({1, 2, 3, 4}), 5).size() == 3);

    CHECK_THROWS_AS(t6.down_neighbors_via(Face({1, 2, 3, 6}), 6), validation_error);
    CHECK_THROWS_AS(t6.down_neighbors_via(Face({1, 2, 3, 6}), 7), validation_error);
}

TEST_CASE("down neighbor partition identity") {
    Complex complexes[] = {tented_complex(6, 3), k1_complex(), rhombic_complex(3)};
    for (const Complex& k : complexes) {
        for (const Face& f : k.facets()) {
            std::size_t total = 0;
            for (int u = 1; u <= k.vertex_count(); ++u) {
                if (!f.contains_vertex(u)) {
                    total += k.down_neighbors_via(f, u).size();
                }
            }
            CHECK(total == k.down_neighbors(f).size());
        }
    }
}

TEST_CASE("incidence graph") {
    Complex tri = Complex::from_facets(3, {{1, 2, 3}});
    IncidenceGraph g = tri.incidence_graph(0);
    CHECK(g.left.size() == 3);
    CHECK(g.right.size() == 3);
    CHECK(g.edges.size() == 6);

    Complex t6 = tented_complex(6, 3);
    IncidenceGraph b2 = t6.incidence_graph(2);
    CHECK(b2.left.size() == 20);
    CHECK(b2.right.size() == 10);
    CHECK(b2.edges.size() == 40);

    CHECK_THROWS_AS(t6.incidence_graph(3), validation_error);
    CHECK_THROWS_AS(t6.incidence_graph(-1), validation_error);

    // Every (i+1)-face has exactly i+2 down-edges.
    for (int i = 0; i < t6.dimension(); ++i) {
        IncidenceGraph b = t6.incidence_graph(i);
        std::vector<int> down(b.right.size(), 0);
        for (auto [l, r] : b.edges) {
            (void)l;
            ++down[static_cast<std::size_t>(r)];
        }
        for (int d : down) {
            CHECK(d == i + 2);
        }
    }
}

TEST_CASE("path connectivity") {
    CHECK(tented_complex(6, 3).is_path_connected(2));
    CHECK(k2_complex().is_path_connected(2));

    Complex two_spheres = Complex::from_facets(
        8, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {5, 6, 7}, {5, 6, 8}, {5, 7, 8}, {6, 7, 8}});
    CHECK(!two_spheres.is_path_connected(1));
    CHECK(!two_spheres.is_path_connected(0));

    // Two triangles sharing only a vertex: 0-connected but not 1-connected.
    Complex bowtie = Complex::from_facets(5, {{1, 2, 3}, {3, 4, 5}});
    CHECK(bowtie.is_path_connected(0));
    CHECK(!bowtie.is_path_connected(1));

    Complex single = Complex::from_facets(3, {{1, 2, 3}});
    CHECK(single.is_path_connected(0));
    CHECK(single.is_path_connected(1));
}

TEST_CASE("isolated vertices") {
    Complex k = Complex::from_facets(5, {{1, 2}});
    CHECK(k.isolated_vertex_count() == 3);
    CHECK(tented_complex(6, 3).isolated_vertex_count() == 0);
}

TEST_CASE("with_facet and without_top_face") {
    Complex tri = Complex::from_facets(4, {{1, 2, 3}});
    Complex more = tri.with_facet(Face({2, 3, 4}));
    CHECK(more.facet_count() == 2);
    CHECK(tri.facet_count() == 1);

    Complex sphere = complete_complex(4, 3);
    Complex cut = sphere.without_top_face(Face({2, 3, 4}));
    CHECK(cut.facet_count() == 3);
    CHECK(cut.has_face(Face({3, 4})));
    CHECK(!cut.has_face(Face({2, 3, 4})));
    CHECK_THROWS_AS(sphere.without_top_face(Face({1, 2})), validation_error);

    // Deleting the only facet of a one-facet complex is rejected rather
    // than producing an empty complex.
    Complex edge = Complex::from_facets(2, {{1, 2}});
    Complex vertices_only = edge.without_top_face(Face({1, 2}));
    CHECK(vertices_only.facet_count() == 2);
    CHECK(vertices_only.dimension() == 0);
}

TEST_CASE("complete_and_connect bridges components without new top holes") {
    // Two disjoint tetrahedron boundaries on 8 vertices.
    Complex two = Complex::from_facets(
        8, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {5, 6, 7}, {5, 6, 8}, {5, 7, 8}, {6, 7, 8}});
    CHECK(betti(two)[2] == 2);
    Complex joined = complete_and_connect(two);
    CHECK(joined.is_path_connected(1));
    CHECK(joined.faces(1).size() == 28);
    CHECK(betti(joined)[2] == 2);
    for (const Face& f : two.facets()) {
        CHECK(joined.has_face(f));
    }

    Complex t6 = tented_complex(6, 3);
    CHECK(complete_and_connect(t6) == t6);

    Complex lone = Complex::from_facets(5, {{1, 2, 3}});
    Complex spread = complete_and_connect(lone);
    CHECK(spread.faces(1).size() == 10);
    CHECK(spread.is_path_connected(1));
    CHECK(betti(spread)[2] == 0);

    CHECK_THROWS_AS(complete_and_connect(Complex::from_facets(4, {{1, 2}, {1, 3, 4}})),
                    validation_error);
}

TEST_CASE("canonical form and isomorphism") {
    Complex t6 = tented_complex(6, 3);

    // Relabel so the apex becomes vertex 1 (swap 1 <-> 6).
    std::vector<std::vector<int>> relabeled;
    for (const Face& f : t6.facets()) {
        std::vector<int> g;
        for (int v : f.vertices()) {
            g.push_back(v == 6 ? 1 : (v == 1 ? 6 : v));
        }
        relabeled.push_back(g);
    }
    Complex t6_apex1 = Complex::from_facets(6, relabeled);
    CHECK(is_isomorphic(t6, t6_apex1));
    CHECK(canonical_form(t6) == canonical_form(t6_apex1));

    CHECK(!is_isomorphic(t6, k1_complex()));

    std::mt19937_64 rng(11);
    std::vector<int> perm{1, 2, 3, 4, 5, 6};
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<int>> shuffled;
        Complex base = k1_complex();
        for (const Face& f : base.facets()) {
            std::vector<int> g;
            for (int v : f.vertices()) {
                g.push_back(perm[static_cast<std::size_t>(v - 1)]);
            }
            shuffled.push_back(g);
        }
        Complex permuted = Complex::from_facets(6, shuffled);
        CHECK(is_isomorphic(k1_complex(), permuted));
        CHECK(canonical_form(permuted) == canonical_form(k1_complex()));
    }

    CHECK_THROWS_AS(canonical_form(complete_complex(10, 3)), validation_error);
}

TEST_CASE("facet text round-trip") {
    Complex k1 = k1_complex();
    std::string text = to_facet_text(k1);
    std::istringstream in(text);
    Complex back = read_complex_text(in, "mem");
    CHECK(back == k1);
}

TEST_CASE("facet structured round-trip") {
    Complex k2 = k2_complex();
    std::string blob = to_facet_structured(k2);
    std::istringstream in(blob);
    Complex back = read_complex_structured(in, "mem");
    CHECK(back == k2);
}

TEST_CASE("text parse errors carry line numbers") {
    {
        std::istringstream in("3\n1 2 5\n");
        CHECK_THROWS_WITH_AS(read_complex_text(in, "f"), "f:2: vertex 5 outside 1..3",
                             validation_error);
    }
    {
        std::istringstream in("abc\n");
        CHECK_THROWS_AS(read_complex_text(in, "f"), validation_error);
    }
    {
        std::istringstream in("4\n1 x\n");
        CHECK_THROWS_AS(read_complex_text(in, "f"), validation_error);
    }
    {
        std::istringstream in("4\n");
        CHECK_THROWS_AS(read_complex_text(in, "f"), validation_error);
    }
}

TEST_CASE("structured parse errors") {
    {
        std::istringstream in("{\"n\": 3}");
        CHECK_THROWS_AS(read_complex_structured(in, "f"), validation_error);
    }
    {
        std::istringstream in("{\"n\": 3, \"facets\": [[1, 2, 9]]}");
        CHECK_THROWS_AS(read_complex_structured(in, "f"), validation_error);
    }
    {
        std::istringstream in("not json");
        CHECK_THROWS_AS(read_complex_structured(in, "f"), validation_error);
    }
}

TEST_CASE("format parsing") {
    CHECK(parse_facet_format("text") == FacetFormat::text);
    CHECK(parse_facet_format("structured") == FacetFormat::structured);
    CHECK(parse_facet_format("auto") == FacetFormat::auto_detect);
    CHECK_THROWS_AS(parse_facet_format("yaml"), validation_error);
}

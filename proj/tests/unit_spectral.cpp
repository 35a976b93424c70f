#include "doctest.h"

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "scx/boundary.hpp"
#include "scx/bounds.hpp"
#include "scx/detectors.hpp"
#include "scx/generators.hpp"
#include "scx/homology.hpp"
#include "scx/kernels.hpp"
#include "scx/spectral.hpp"

using namespace scx;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::vector<double> v(n);
    for (double& x : v) {
        x = coord(rng);
    }
    return v;
}

} // namespace

TEST_CASE("kernel backends agree with the scalar reference") {
    using namespace scx::kernels;
    std::mt19937_64 rng(23);
    Backend best = best_supported_backend();
    INFO("best backend: ", backend_name(best));

    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 17u, 64u, 133u}) {
        auto x = random_vector(rng, n);
        auto y = random_vector(rng, n);

        double d_scalar = detail::dot_scalar(x.data(), y.data(), n);
        set_backend(best);
        double d_best = dot(x.data(), y.data(), n);
        CHECK(std::abs(d_scalar - d_best) <= 1e-12 * std::max(1.0, std::abs(d_scalar)));

        auto y1 = y;
        auto y2 = y;
        detail::axpy_scalar(1.75, x.data(), y1.data(), n);
        axpy(1.75, x.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-13));
        }

        auto x1 = x;
        auto x2 = x;
        detail::scale_scalar(0.37, x1.data(), n);
        scale(0.37, x2.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(x1[i] == doctest::Approx(x2[i]).epsilon(1e-13));
        }

        std::size_t rows = (n % 5) + 1;
        auto m = random_vector(rng, rows * n);
        std::vector<double> out1(rows), out2(rows);
        detail::matvec_scalar(m.data(), rows, n, x.data(), out1.data());
        matvec(m.data(), rows, n, x.data(), out2.data());
        for (std::size_t i = 0; i < rows; ++i) {
            CHECK(std::abs(out1[i] - out2[i]) <= 1e-12 * std::max(1.0, std::abs(out1[i])));
        }
    }
    set_backend(best);
}

TEST_CASE("kernel backend selection") {
    using namespace scx::kernels;
    CHECK(backend_supported(Backend::scalar));
    CHECK(parse_backend("scalar") == Backend::scalar);
    CHECK(parse_backend("avx2") == Backend::avx2);
    CHECK(parse_backend("neon") == Backend::neon);
    CHECK_THROWS_AS(parse_backend("sse9"), validation_error);

    Backend previous = active_backend();
    set_backend(Backend::scalar);
    CHECK(active_backend() == Backend::scalar);
    if (!backend_supported(Backend::avx2)) {
        CHECK_THROWS_AS(set_backend(Backend::avx2), validation_error);
    }
    if (!backend_supported(Backend::neon)) {
        CHECK_THROWS_AS(set_backend(Backend::neon), validation_error);
    }
    set_backend(previous);
}

TEST_CASE("spectral radius basics") {
    Complex edge = Complex::from_facets(2, {{1, 2}});
    SpectralResult r = spectral_radius(q_up(edge, 0));
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-10));

    double norm = 0.0;
    for (double v : r.vector.values) {
        norm += v * v;
    }
    CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-12));

    LabeledSparseMatrix asym;
    asym.row_labels = {Face({1}), Face({2})};
    asym.col_labels = {Face({1}), Face({2})};
    asym.entries = {{0, 1, 1}};
    CHECK_THROWS_AS(spectral_radius(asym), validation_error);
}

TEST_CASE("reference spectral radii") {
    CHECK(q_spectral_radius(tented_complex(6, 3), 2).value == doctest::Approx(10.0).epsilon(1e-8));
    CHECK(q_spectral_radius(tented_complex(7, 3), 2).value == doctest::Approx(13.0).epsilon(1e-8));
    CHECK(q_spectral_radius(k1_complex(), 2).value == doctest::Approx(10.0).epsilon(1e-8));
    CHECK(q_spectral_radius(k2_complex(), 2).value == doctest::Approx(13.0).epsilon(1e-8));

    Complex k2v = Complex::from_facets(2, {{1, 2}});
    CHECK(q_spectral_radius(k2v, 0).value == doctest::Approx(2.0));
}

TEST_CASE("tented radius closed form") {
    CHECK(tented_radius_exact(6, 3) == 10);
    CHECK(tented_radius_exact(7, 3) == 13);
    CHECK(tented_radius_exact(4, 1) == 4);
    CHECK_THROWS_AS(tented_radius_exact(3, 3), validation_error);

    // Star graph: the numeric radius of the 4-vertex star agrees.
    Complex star = tented_complex(4, 1);
    CHECK(q_spectral_radius(star, 0).value == doctest::Approx(4.0).epsilon(1e-8));

    for (int r = 1; r <= 4; ++r) {
        for (int n = r + 1; n <= 9; ++n) {
            Complex t = tented_complex(n, r);
            double measured = q_spectral_radius(t, r - 1).value;
            CHECK(measured ==
                  doctest::Approx(static_cast<double>(tented_radius_exact(n, r))).epsilon(1e-8));
        }
    }
}

TEST_CASE("power iteration matches dense Jacobi eigenvalues") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        int r = 1 + static_cast<int>(rng() % 3);
        Complex k = random_pure_complex(6, r, 0.6, rng);
        for (int i = 0; i < k.dimension(); ++i) {
            LabeledSparseMatrix q = q_up(k, i);
            SpectralResult pr = spectral_radius(q);
            auto eigs = jacobi_eigenvalues(q);
            REQUIRE(!eigs.empty());
            CHECK(pr.converged);
            CHECK(pr.value == doctest::Approx(eigs.back()).epsilon(1e-8));
        }
    }
}

TEST_CASE("up and down spectra share the top radius") {
    std::mt19937_64 rng(31);
    int tested = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + static_cast<int>(rng() % 3);
        Complex k = random_pure_complex(7, r, 0.5, rng);
        double up = q_spectral_radius(k, r - 1).value;
        double down = spectral_radius(q_down(k, r)).value;
        CHECK(std::abs(up - down) <= 1e-8 * std::max(1.0, std::abs(up)));
        ++tested;
    }
    CHECK(tested >= 50);
}

TEST_CASE("Rayleigh quotients stay below the radius") {
    std::mt19937_64 rng(37);
    Complex k1 = k1_complex();
    LabeledSparseMatrix q = q_up(k1, 2);
    double radius = spectral_radius(q).value;
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> f(q.row_count());
        double norm2 = 0.0;
        for (double& x : f) {
            x = coord(rng);
            norm2 += x * x;
        }
        double quad = 0.0;
        for (const auto& e : q.entries) {
            quad += static_cast<double>(e.value) * f[static_cast<std::size_t>(e.row)] *
                    f[static_cast<std::size_t>(e.col)];
        }
        CHECK(quad / norm2 <= radius + 1e-9);
    }
}

TEST_CASE("Perron vector positivity on connected complexes") {
    Complex connected[] = {tented_complex(6, 3), k1_complex(), rhombic_complex(2)};
    for (const Complex& k : connected) {
        int top = k.dimension() - 1;
        SpectralResult res = q_spectral_radius(k, top);
        REQUIRE(res.converged);
        for (double v : res.vector.values) {
            CHECK(v > 0.0);
        }
    }
}

TEST_CASE("eigenpair satisfies the entrywise identity") {
    // For an eigenpair (lambda, f) of q_up(K, i) and every (i+1)-face FF:
    // lambda * f(dFF) = (i+2) * f(dFF) + sum over down-neighbor faces FF'
    // of f(dFF'), where f(dFF) sums f over the boundary of FF.
    Complex complexes[] = {tented_complex(6, 3), k1_complex()};
    for (const Complex& k : complexes) {
        int i = k.dimension() - 1;
        SpectralResult res = q_spectral_radius(k, i);
        REQUIRE(res.converged);
        auto value_at = [&](const Face& f) {
            return res.vector.values[static_cast<std::size_t>(*k.face_index(f))];
        };
        auto boundary_sum = [&](const Face& ff) {
            double s = 0.0;
            for (const Face& b : ff.boundary()) {
                s += value_at(b);
            }
            return s;
        };
        for (const Face& ff : k.faces(i + 1)) {
            double lhs = res.value * boundary_sum(ff);
            double rhs = (i + 2) * boundary_sum(ff);
            for (const Face& nb : k.down_neighbors(ff)) {
                rhs += boundary_sum(nb);
            }
            CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("radius strictly grows when adding a facet to a connected complex") {
    std::mt19937_64 rng(41);
    int tested = 0;
    for (int trial = 0; trial < 400 && tested < 50; ++trial) {
        int r = 1 + static_cast<int>(rng() % 2);
        Complex k = random_pure_complex(6, r, 0.5, rng);
        if (!k.is_path_connected(r - 1)) {
            continue;
        }
        Complex larger = k;
        bool found = false;
        Complex pool = complete_complex(k.vertex_count(), r + 1);
        for (const Face& candidate : pool.facets()) {
            if (!k.has_face(candidate)) {
                larger = k.with_facet(candidate);
                found = true;
                break;
            }
        }
        if (!found || !larger.is_path_connected(r - 1)) {
            continue;
        }
        double before = q_spectral_radius(k, r - 1).value;
        double after = q_spectral_radius(larger, r - 1).value;
        CHECK(after - before > 1e-9);
        ++tested;
    }
    CHECK(tested >= 50);
}

TEST_CASE("exact-extension condition forces constant row sums") {
    // When the condition holds, the all-ones vector is an eigenvector of
    // the down operator at the top dimension with integer eigenvalue
    // r*n - r*r + 1: every row of q_down sums to it exactly.
    Complex witnesses[] = {tented_complex(6, 3), tented_complex(7, 3), k1_complex(), k2_complex()};
    for (const Complex& k : witnesses) {
        REQUIRE(equality_condition(k).satisfied);
        int r = k.dimension();
        long long expect = tented_radius_exact(k.vertex_count(), r);
        LabeledSparseMatrix q = q_down(k, r);
        std::vector<long long> row_sums(q.row_count(), 0);
        for (const auto& e : q.entries) {
            row_sums[static_cast<std::size_t>(e.row)] += e.value;
        }
        for (long long s : row_sums) {
            CHECK(s == expect);
        }
    }
}

TEST_CASE("nullity matches betti through the Hodge identity") {
    Complex sphere = complete_complex(4, 3);
    CHECK(numeric_nullity(laplacian_signed(sphere, 2, LaplacianKind::full)) == 1);

    Complex tree = Complex::from_facets(4, {{1, 2}, {2, 3}, {2, 4}});
    CHECK(numeric_nullity(laplacian_signed(tree, 1, LaplacianKind::full)) == 0);

    CHECK(numeric_nullity(laplacian_signed(k1_complex(), 3, LaplacianKind::full)) == 2);

    std::mt19937_64 rng(43);
    int tested = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + static_cast<int>(rng() % 2);
        Complex k = random_pure_complex(6, r, 0.5, rng);
        BettiVector b = betti(k);
        for (int i = 1; i <= k.dimension(); ++i) {
            LabeledSparseMatrix l = laplacian_signed(k, i, LaplacianKind::full);
            CHECK(numeric_nullity(l) == b[static_cast<std::size_t>(i)]);
        }
        ++tested;
    }
    CHECK(tested >= 50);
}

TEST_CASE("integer snap") {
    CHECK(integer_snap(10.0 + 5e-7).has_value());
    CHECK(*integer_snap(10.0 + 5e-7) == 10);
    CHECK(!integer_snap(10.1).has_value());
    CHECK(*integer_snap(-3.0000002) == -3);
}

TEST_CASE("radius bounds") {
    BoundReport main6 = radius_bound_delta_free(6, 3);
    CHECK(main6.value == Rational(10));
    CHECK(radius_bound_delta_free(7, 3).value == Rational(13));
    CHECK(radius_bound_delta_free(2, 1).value == Rational(2));

    BoundReport attained = radius_bound_delta_free(k1_complex());
    REQUIRE(attained.achieved.has_value());
    CHECK(attained.equality);

    BoundReport betti6 = radius_bound_with_betti(6, 3, 2);
    CHECK(betti6.value == Rational(12));
    CHECK(!betti6.out_of_hypothesis);

    BoundReport betti7 = radius_bound_with_betti(7, 3, 8);
    CHECK(betti7.value == Rational(21));
    CHECK(betti7.out_of_hypothesis); // t = 8 > n - r - 1 = 3

    BoundReport betti0 = radius_bound_with_betti(6, 3, 0);
    CHECK(betti0.value == radius_bound_delta_free(6, 3).value);
    CHECK(betti0.out_of_hypothesis);

    BoundReport measured = radius_bound_with_betti(k2_complex());
    CHECK(measured.value == Rational(21));
    CHECK(measured.out_of_hypothesis);
    REQUIRE(measured.achieved.has_value());
    CHECK(*measured.achieved == doctest::Approx(13.0).epsilon(1e-8));
}

TEST_CASE("face count bound") {
    BoundReport tri = face_count_bound(Complex::from_facets(3, {{1, 2, 3}}), 1);
    CHECK(tri.value == Rational(1));
    CHECK(tri.equality); // 1 facet meets the cap exactly

    BoundReport k1 = face_count_bound(k1_complex(), 2);
    CHECK(k1.value == Rational(25, 2));
    REQUIRE(k1.achieved.has_value());
    CHECK(*k1.achieved == doctest::Approx(12.0));

    BoundReport k2 = face_count_bound(k2_complex(), 2);
    CHECK(k2.value == Rational(455, 16));

    // The tented complex carries all 20 possible 2-faces, so the cap applies:
    // radius 10 gives 10 * 20 / 16 = 25/2 against 10 facets.
    BoundReport tented = face_count_bound(tented_complex(6, 3), 2);
    CHECK(tented.value == Rational(25, 2));
    REQUIRE(tented.achieved.has_value());
    CHECK(*tented.achieved == doctest::Approx(10.0));

    // Missing i-faces violate the precondition: one tetrahedron on five
    // vertices has 4 of the 10 possible 2-faces.
    CHECK_THROWS_AS(face_count_bound(Complex::from_facets(5, {{1, 2, 3, 4}}), 2),
                    validation_error);
}

TEST_CASE("Turan upper bounds") {
    CHECK(turan_upper_ratio(6, 4) == Rational(75, 4));
    CHECK(turan_upper_ratio(7, 4) == Rational(455, 12));
    CHECK(turan_upper_direct(6, 4) == Rational(25, 2));
    CHECK(turan_upper_direct(7, 4) == Rational(455, 16));
    CHECK_THROWS_AS(turan_upper_direct(4, 4), validation_error);

    for (int r = 3; r <= 29; ++r) {
        for (int n = r + 1; n <= 30; ++n) {
            CHECK(turan_upper_direct(n, r) <= turan_upper_ratio(n, r));
        }
    }

    // Density convergence: at n = 10^4, r = 3 the ratio-form bound divided
    // by C(n, r) is within 1/100 of (r-1)/r, checked in exact arithmetic.
    Rational density = turan_upper_ratio(10000, 3) / Rational(binomial(10000, 3));
    Rational gap = density - Rational(2, 3);
    Rational bound(1, 100);
    CHECK(abs(gap) <= bound);
}

TEST_CASE("Turan conjecture values") {
    CHECK(turan_conjecture_value(6) == 14);
    CHECK(turan_conjecture_value(7) == 23);
    CHECK(turan_conjecture_value(5) == 7);
    CHECK_THROWS_AS(turan_conjecture_value(2), validation_error);
}

#include "scx/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "scx/homology.hpp"
#include "scx/spectral.hpp"

namespace scx {
namespace {

void fill_achieved(BoundReport& report, double achieved) {
    report.achieved = achieved;
    report.equality = std::abs(achieved - report.value.to_double()) < 1e-6;
}

double measured_top_radius(const Complex& k) {
    return q_spectral_radius(k, k.dimension() - 1).value;
}

void require_pure_r(const Complex& k, const char* what) {
    if (!k.is_pure() || k.dimension() < 1) {
        throw validation_error(std::string(what) +
                               " needs a pure complex of dimension at least 1");
    }
}

} // namespace

BoundReport radius_bound_delta_free(int n, int r) {
    if (r < 1 || n < r + 1) {
        throw validation_error("radius bound needs n >= r+1 >= 2");
    }
    BoundReport report;
    report.name = "radius_delta_free";
    report.value = Rational(static_cast<long long>(r) * n - static_cast<long long>(r) * r + 1);
    return report;
}

BoundReport radius_bound_delta_free(const Complex& k) {
    require_pure_r(k, "radius bound");
    BoundReport report = radius_bound_delta_free(k.vertex_count(), k.dimension());
    fill_achieved(report, measured_top_radius(k));
    return report;
}

BoundReport radius_bound_with_betti(int n, int r, long long t) {
    if (r < 1 || n < r + 1) {
        throw validation_error("radius bound needs n >= r+1 >= 2");
    }
    BoundReport report;
    report.name = "radius_with_betti";
    report.value =
        Rational(static_cast<long long>(r) * n - static_cast<long long>(r) * r + t + 1);
    report.out_of_hypothesis = t < 1 || t > static_cast<long long>(n) - r - 1;
    return report;
}

BoundReport radius_bound_with_betti(const Complex& k) {
    require_pure_r(k, "radius bound");
    long long t = betti(k).values[static_cast<std::size_t>(k.dimension())];
    BoundReport report = radius_bound_with_betti(k.vertex_count(), k.dimension(), t);
    fill_achieved(report, measured_top_radius(k));
    return report;
}

BoundReport face_count_bound(const Complex& k, int i) {
    if (!k.is_pure() || k.dimension() != i + 1) {
        throw validation_error("facet-count bound needs a pure complex of dimension " +
                               std::to_string(i + 1));
    }
    long long full_stratum = binomial(k.vertex_count(), i + 1);
    if (static_cast<long long>(k.faces(i).size()) != full_stratum) {
        throw validation_error("facet-count bound needs all " + std::to_string(full_stratum) +
                               " possible " + std::to_string(i) + "-faces present");
    }
    double radius = q_spectral_radius(k, i).value;
    long long denom = static_cast<long long>(i + 2) * (i + 2);

    BoundReport report;
    report.name = "face_count";
    if (auto snapped = integer_snap(radius)) {
        report.value = Rational(*snapped) * Rational(full_stratum, denom);
    } else {
        // No integer radius to substitute; carry a dyadic approximation of
        // the measured value through the exact part of the formula.
        long long scaled = static_cast<long long>(std::llround(radius * 1048576.0));
        report.value = Rational(scaled, 1048576) * Rational(full_stratum, denom);
    }
    double cap = radius * static_cast<double>(full_stratum) / static_cast<double>(denom);
    double facets = static_cast<double>(k.facet_count());
    if (facets > cap + 1e-9) {
        throw std::logic_error("facet count exceeds the spectral cap: " +
                               std::to_string(facets) + " > " + std::to_string(cap));
    }
    fill_achieved(report, facets);
    return report;
}

Rational turan_upper_ratio(int n, int r) {
    if (r < 2 || n <= r) {
        throw validation_error("ratio bound needs n > r >= 2");
    }
    Rational prefix(static_cast<long long>(r - 1) * (n - r + 1) + 1,
                    static_cast<long long>(r) * (n - r));
    return prefix * Rational(binomial(n, r));
}

Rational turan_upper_direct(int n, int r) {
    if (r < 2 || n <= r) {
        throw validation_error("direct bound needs n > r >= 2");
    }
    Rational prefix(static_cast<long long>(r - 1) * (n - r + 1) + 1,
                    static_cast<long long>(r) * r);
    return prefix * Rational(binomial(n, r - 1));
}

long long turan_conjecture_value(int n) {
    if (n < 3) {
        throw validation_error("conjecture value needs n >= 3");
    }
    long long t = n / 3;
    switch (n % 3) {
        case 0:
            return t * t * (5 * t - 3) / 2;
        case 1:
            return t * (5 * t * t + 2 * t - 1) / 2;
        default:
            return t * (t + 1) * (5 * t + 2) / 2;
    }
}

} // namespace scx

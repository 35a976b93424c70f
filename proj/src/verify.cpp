#include "scx/verify.hpp"

#include <cmath>
#include <sstream>

#include "scx/boundary.hpp"
#include "scx/bounds.hpp"
#include "scx/detectors.hpp"
#include "scx/generators.hpp"
#include "scx/homology.hpp"
#include "scx/spectral.hpp"

namespace scx {
namespace {

constexpr double kRadiusTol = 1e-8;

void check_radius(VerificationReport& report, const std::string& label, const Complex& k,
                  long long expected) {
    SpectralResult res = q_spectral_radius(k, k.dimension() - 1);
    std::ostringstream detail;
    detail << "top spectral radius " << res.value << ", expected " << expected;
    report.checks.push_back({label + "_radius",
                             res.converged && std::abs(res.value - static_cast<double>(expected)) <= kRadiusTol,
                             detail.str()});
}

void check_facets(VerificationReport& report, const std::string& label, const Complex& k,
                  std::size_t expected) {
    std::ostringstream detail;
    detail << k.facet_count() << " facets, expected " << expected;
    report.checks.push_back({label + "_facets", k.facet_count() == expected, detail.str()});
}

void check_top_betti(VerificationReport& report, const std::string& label, const Complex& k,
                     long long expected) {
    BettiVector b = betti(k);
    long long top = b[static_cast<std::size_t>(k.dimension())];
    std::ostringstream detail;
    detail << "top homology rank " << top << ", expected " << expected;
    report.checks.push_back({label + "_top_betti", top == expected, detail.str()});
}

void check_condition_no_delta(VerificationReport& report, const std::string& label,
                              const Complex& k) {
    bool cond = equality_condition(k).satisfied;
    bool no_delta = !find_delta(k).has_value();
    std::ostringstream detail;
    detail << "exact-extension condition " << (cond ? "holds" : "fails") << ", full boundary "
           << (no_delta ? "absent" : "present");
    report.checks.push_back({label + "_condition", cond && no_delta, detail.str()});
}

void check_face_ceiling(VerificationReport& report, const std::string& label, const Complex& k,
                        int n, int r, const std::string& expected_value, long long expected_floor) {
    Rational bound = turan_upper_direct(n, r);
    std::string value = bound.to_string();
    long long floor_value = bound.floor();
    bool ok = value == expected_value && floor_value == expected_floor &&
              static_cast<long long>(k.facet_count()) == expected_floor;
    std::ostringstream detail;
    detail << "ceiling " << value << ", floor " << floor_value << ", facets " << k.facet_count();
    report.checks.push_back({label + "_face_ceiling", ok, detail.str()});
}

} // namespace

VerificationReport verify_known_cases() {
    VerificationReport report;

    Complex t6 = tented_complex(6, 3);
    Complex t7 = tented_complex(7, 3);
    Complex k1 = k1_complex();
    Complex k2 = k2_complex();

    check_radius(report, "tented_6", t6, 10);
    check_radius(report, "tented_7", t7, 13);
    check_radius(report, "k1", k1, 10);
    check_radius(report, "k2", k2, 13);

    check_facets(report, "tented_6", t6, 10);
    check_facets(report, "tented_7", t7, 20);
    check_facets(report, "k1", k1, 12);
    check_facets(report, "k2", k2, 28);

    check_top_betti(report, "tented_6", t6, 0);
    check_top_betti(report, "tented_7", t7, 0);
    check_top_betti(report, "k1", k1, 2);
    check_top_betti(report, "k2", k2, 8);

    check_condition_no_delta(report, "k1", k1);
    check_condition_no_delta(report, "k2", k2);

    check_face_ceiling(report, "k1", k1, 6, 4, "25/2", 12);
    check_face_ceiling(report, "k2", k2, 7, 4, "455/16", 28);

    return report;
}

} // namespace scx

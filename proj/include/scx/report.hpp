#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scx/bounds.hpp"
#include "scx/complex.hpp"
#include "scx/detectors.hpp"
#include "scx/homology.hpp"

namespace scx {

struct RadiusLine {
    int dimension = 0;
    double value = 0.0;
    double residual = 0.0;
    long long iterations = 0;
    bool converged = false;
    std::optional<long long> integer_value;
};

struct DetectorSection {
    bool checked = false;
    std::optional<Face> delta;
    std::optional<RhombicWitness> rhombic;
    std::optional<ConditionReport> condition;
    std::optional<bool> basic_hole;
};

/// Everything the analyze command reports for one complex. Numeric fields
/// carry residuals or exact-rational strings; serialization is deterministic.
struct AnalysisReport {
    int n = 0;
    int dimension = 0;
    bool pure = false;
    bool normalized_input = false;
    std::size_t facet_count = 0;
    int isolated_vertices = 0;
    double tolerance = 0.0;
    std::vector<std::size_t> stratum_sizes;
    std::vector<bool> path_connected;
    BettiVector betti;
    std::vector<RadiusLine> radii;
    std::vector<BoundReport> bounds;
    DetectorSection detectors;
};

AnalysisReport analyze_complex(const Complex& k, double tol);

std::string report_to_text(const AnalysisReport& report);

/// Stable structured rendering: same input and tolerance give byte-identical
/// output. Carries schema_version "1".
std::string report_to_json(const AnalysisReport& report);

} // namespace scx

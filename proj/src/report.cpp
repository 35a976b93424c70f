#include "scx/report.hpp"

#include <sstream>

#include "json.hpp"
#include "scx/boundary.hpp"
#include "scx/rational.hpp"
#include "scx/spectral.hpp"

namespace scx {
namespace {

using nlohmann::ordered_json;

std::string face_str(const Face& f) {
    return f.to_string();
}

ordered_json bound_to_json(const BoundReport& b) {
    ordered_json out;
    out["name"] = b.name;
    out["value"] = b.value.to_string();
    out["value_approx"] = b.value.to_double();
    if (b.achieved.has_value()) {
        out["achieved"] = *b.achieved;
    } else {
        out["achieved"] = nullptr;
    }
    out["equality"] = b.equality;
    out["out_of_hypothesis"] = b.out_of_hypothesis;
    return out;
}

} // namespace

AnalysisReport analyze_complex(const Complex& k, double tol) {
    AnalysisReport report;
    report.n = k.vertex_count();
    report.dimension = k.dimension();
    report.pure = k.is_pure();
    report.normalized_input = k.was_normalized();
    report.facet_count = k.facet_count();
    report.isolated_vertices = k.isolated_vertex_count();
    report.tolerance = tol;

    for (int i = 0; i <= k.dimension(); ++i) {
        report.stratum_sizes.push_back(k.faces(i).size());
    }
    for (int i = 0; i < k.dimension(); ++i) {
        report.path_connected.push_back(k.is_path_connected(i));
    }
    report.betti = betti(k);

    for (int i = 0; i < k.dimension(); ++i) {
        SpectralResult res = spectral_radius(q_up(k, i), tol, kDefaultSpectralMaxIter);
        RadiusLine line;
        line.dimension = i;
        line.value = res.value;
        line.residual = res.residual;
        line.iterations = res.iterations;
        line.converged = res.converged;
        line.integer_value = integer_snap(res.value);
        report.radii.push_back(line);
    }

    int r = k.dimension();
    if (k.is_pure() && r >= 1) {
        report.bounds.push_back(radius_bound_delta_free(k));
        report.bounds.push_back(radius_bound_with_betti(k));
        long long full = binomial(report.n, r);
        if (static_cast<long long>(k.faces(r - 1).size()) == full) {
            report.bounds.push_back(face_count_bound(k, r - 1));
        }
    }

    if (k.is_pure() && r >= 1) {
        report.detectors.checked = true;
        report.detectors.delta = find_delta(k);
        report.detectors.rhombic = find_rhombic(k);
        report.detectors.condition = equality_condition(k);
        report.detectors.basic_hole = is_basic_hole(k);
    }

    return report;
}

std::string report_to_text(const AnalysisReport& report) {
    std::ostringstream out;
    out << "complex: n=" << report.n << " dim=" << report.dimension
        << (report.pure ? " pure" : " non-pure") << " facets=" << report.facet_count;
    if (report.isolated_vertices > 0) {
        out << " isolated=" << report.isolated_vertices;
    }
    if (report.normalized_input) {
        out << " (input normalized)";
    }
    out << "\n";

    out << "strata:";
    for (std::size_t i = 0; i < report.stratum_sizes.size(); ++i) {
        out << " |S_" << i << "|=" << report.stratum_sizes[i];
    }
    out << "\n";

    if (!report.path_connected.empty()) {
        out << "path-connected:";
        for (std::size_t i = 0; i < report.path_connected.size(); ++i) {
            out << " " << i << ":" << (report.path_connected[i] ? "yes" : "no");
        }
        out << "\n";
    }

    out << "betti:";
    for (std::size_t i = 0; i < report.betti.size(); ++i) {
        out << " b_" << i << "=" << report.betti[i];
    }
    out << "\n";

    for (const RadiusLine& line : report.radii) {
        out << "radius q_" << line.dimension << " = " << line.value;
        if (line.integer_value.has_value()) {
            out << " (integer " << *line.integer_value << ")";
        }
        out << "  residual=" << line.residual << " iterations=" << line.iterations
            << (line.converged ? "" : " NOT CONVERGED") << "\n";
    }

    for (const BoundReport& b : report.bounds) {
        out << "bound " << b.name << " = " << b.value.to_string();
        if (b.achieved.has_value()) {
            out << "  achieved=" << *b.achieved << (b.equality ? " (equality)" : "");
        }
        if (b.out_of_hypothesis) {
            out << "  [outside stated hypothesis]";
        }
        out << "\n";
    }

    if (report.detectors.checked) {
        const auto& d = report.detectors;
        out << "full-boundary pattern: "
            << (d.delta.has_value() ? "found " + face_str(*d.delta) : "absent") << "\n";
        if (d.rhombic.has_value()) {
            out << "double-apex sphere: found base " << face_str(d.rhombic->base) << " poles "
                << d.rhombic->pole_a << "," << d.rhombic->pole_b << "\n";
        } else {
            out << "double-apex sphere: absent\n";
        }
        if (d.condition.has_value()) {
            if (d.condition->satisfied) {
                out << "exact-extension condition: holds\n";
            } else {
                out << "exact-extension condition: fails at facet "
                    << face_str(*d.condition->failing_face) << " vertex "
                    << *d.condition->failing_vertex << " (count " << *d.condition->failing_count
                    << ")\n";
            }
        }
        if (d.basic_hole.has_value()) {
            out << "basic hole: " << (*d.basic_hole ? "yes" : "no") << "\n";
        }
    }
    return out.str();
}

std::string report_to_json(const AnalysisReport& report) {
    ordered_json doc;
    doc["schema_version"] = "1";
    doc["n"] = report.n;
    doc["dimension"] = report.dimension;
    doc["pure"] = report.pure;
    doc["normalized_input"] = report.normalized_input;
    doc["facet_count"] = report.facet_count;
    doc["isolated_vertices"] = report.isolated_vertices;
    doc["tolerance"] = report.tolerance;
    doc["stratum_sizes"] = report.stratum_sizes;
    doc["path_connected"] = report.path_connected;
    doc["betti"] = report.betti.values;

    auto radii = ordered_json::array();
    for (const RadiusLine& line : report.radii) {
        ordered_json entry;
        entry["dimension"] = line.dimension;
        entry["value"] = line.value;
        entry["residual"] = line.residual;
        entry["iterations"] = line.iterations;
        entry["converged"] = line.converged;
        if (line.integer_value.has_value()) {
            entry["integer_value"] = *line.integer_value;
        } else {
            entry["integer_value"] = nullptr;
        }
        radii.push_back(std::move(entry));
    }
    doc["radii"] = std::move(radii);

    auto bounds = ordered_json::array();
    for (const BoundReport& b : report.bounds) {
        bounds.push_back(bound_to_json(b));
    }
    doc["bounds"] = std::move(bounds);

    ordered_json det;
    det["checked"] = report.detectors.checked;
    if (report.detectors.checked) {
        const auto& d = report.detectors;
        det["delta"] = d.delta.has_value() ? ordered_json(d.delta->vertices()) : ordered_json(nullptr);
        if (d.rhombic.has_value()) {
            ordered_json w;
            w["base"] = d.rhombic->base.vertices();
            w["pole_a"] = d.rhombic->pole_a;
            w["pole_b"] = d.rhombic->pole_b;
            det["rhombic"] = std::move(w);
        } else {
            det["rhombic"] = nullptr;
        }
        if (d.condition.has_value()) {
            ordered_json c;
            c["satisfied"] = d.condition->satisfied;
            if (!d.condition->satisfied) {
                c["failing_face"] = d.condition->failing_face->vertices();
                c["failing_vertex"] = *d.condition->failing_vertex;
                c["failing_count"] = *d.condition->failing_count;
            }
            det["condition"] = std::move(c);
        } else {
            det["condition"] = nullptr;
        }
        det["basic_hole"] =
            d.basic_hole.has_value() ? ordered_json(*d.basic_hole) : ordered_json(nullptr);
    }
    doc["detectors"] = std::move(det);

    return doc.dump(2) + "\n";
}

} // namespace scx

#pragma once

#include <optional>
#include <string>

#include "scx/complex.hpp"
#include "scx/rational.hpp"

namespace scx {

struct BoundReport {
    std::string name;
    Rational value;
    std::optional<double> achieved;   // the measured quantity the bound caps
    bool equality = false;            // |achieved - value| < 1e-6
    bool out_of_hypothesis = false;   // parameters outside the stated range
};

/// Radius cap r*n - r*r + 1 for pure r-dimensional complexes on n vertices
/// that avoid the simplex-boundary pattern. The complex overload fills the
/// measured top radius.
BoundReport radius_bound_delta_free(int n, int r);
BoundReport radius_bound_delta_free(const Complex& k);

/// Radius cap r*n - r*r + t + 1 for top Betti number t; the stated
/// hypothesis is 1 <= t <= n-r-1 and values outside it are flagged, not
/// rejected. The complex overload measures t = beta_r.
BoundReport radius_bound_with_betti(int n, int r, long long t);
BoundReport radius_bound_with_betti(const Complex& k);

/// Facet-count cap radius * C(n, i+1) / (i+2)^2 for a pure
/// (i+1)-dimensional complex containing every possible i-face. The measured
/// radius is integer-snapped into an exact rational when possible; the cap
/// is asserted against the actual facet count.
BoundReport face_count_bound(const Complex& k, int i);

/// ((r-1)(n-r+1)+1) / (r(n-r)) * C(n, r): cap on the number of r-sets in a
/// simplex-boundary-free r-uniform family, in ratio form.
Rational turan_upper_ratio(int n, int r);

/// ((r-1)(n-r+1)+1) * C(n, r-1) / r^2: the sharper cap obtained by chaining
/// the radius bound with the facet-count cap.
Rational turan_upper_direct(int n, int r);

/// Conjectured exact maximum size of a 3-uniform family on n vertices with
/// no complete 4-vertex pattern, by the classical piecewise formula in
/// n mod 3.
long long turan_conjecture_value(int n);

} // namespace scx

#pragma once

/// Curve export (CSV and SVG) and the deterministic number formatting shared
/// by the table writers.  Output is locale-independent with LF line endings.

#include <ostream>
#include <string>

#include "cusp/domain.hpp"

namespace cusp::io {

/// Fixed-point decimal with the given precision (no locale).
std::string fixed(double v, int decimals);

/// CSV columns t,x,y over a closed parameter sweep from -pi to pi inclusive
/// (samples+1 rows), 10-digit fixed precision.
void curve_csv(const geom::EpicycloidDomain& d, int samples, std::ostream& os);

/// Minimal SVG: one polyline path of the boundary plus one marker per cusp,
/// viewBox [-0.1, -1.1, 2.2, 2.2].
void curve_svg(const geom::EpicycloidDomain& d, int samples, std::ostream& os);

}  // namespace cusp::io

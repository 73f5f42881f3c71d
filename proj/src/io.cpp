#include "cusp/io.hpp"

#include <cmath>
#include <cstdio>

namespace cusp::io {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

void curve_csv(const geom::EpicycloidDomain& d, int samples, std::ostream& os) {
    os << "t,x,y\n";
    for (int j = 0; j <= samples; ++j) {
        const double t = -kPi + 2.0 * kPi * j / samples;
        const auto b = d.boundary(t);
        os << fixed(b.t, 10) << "," << fixed(b.x, 10) << "," << fixed(b.y, 10) << "\n";
    }
}

void curve_svg(const geom::EpicycloidDomain& d, int samples, std::ostream& os) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-0.1 -1.1 2.2 2.2\">\n";
    os << "  <path fill=\"none\" stroke=\"black\" stroke-width=\"0.005\" d=\"";
    for (int j = 0; j <= samples; ++j) {
        const double t = -kPi + 2.0 * kPi * j / samples;
        const auto b = d.boundary(t);
        os << (j == 0 ? "M" : " L") << fixed(b.x, 6) << " " << fixed(-b.y, 6);
    }
    os << " Z\"/>\n";
    for (double tk : d.cusps().angles) {
        const auto b = d.boundary(tk);
        os << "  <circle cx=\"" << fixed(b.x, 6) << "\" cy=\"" << fixed(-b.y, 6)
           << "\" r=\"0.015\" fill=\"red\"/>\n";
    }
    os << "</svg>\n";
}

}  // namespace cusp::io

#include "cpzeros/domain.hpp"

#include <cmath>

namespace cpzeros {

DomainSpec DomainSpec::disk(Complex c, double r) {
    if (r <= 0.0) throw ValidationError("disk: radius must be positive");
    return {Kind::euclidean_disk, c, 0.0, r};
}

DomainSpec DomainSpec::cap(Complex c, double geodesic_radius) {
    if (geodesic_radius <= 0.0) throw ValidationError("cap: radius must be positive");
    return {Kind::fs_cap, c, 0.0, geodesic_radius};
}

DomainSpec DomainSpec::annulus_at(Complex c, double r_in, double r_out) {
    if (r_in <= 0.0 || r_out <= r_in) throw ValidationError("annulus: need 0 < r_in < r_out");
    return {Kind::annulus, c, r_in, r_out};
}

DomainSpec DomainSpec::complement_of_disk(Complex c, double r) {
    if (r <= 0.0) throw ValidationError("complement: radius must be positive");
    return {Kind::complement, c, 0.0, r};
}

DomainSpec DomainSpec::whole() { return {Kind::fs_cap, Complex{0.0, 0.0}, 0.0, 10.0}; }

bool DomainSpec::contains(Complex z) const {
    switch (kind) {
        case Kind::euclidean_disk:
            return std::abs(z - center) < r_outer;
        case Kind::fs_cap:
            return fs_distance(ChartPoint::c1(z), ChartPoint::c1(center)) < r_outer;
        case Kind::annulus: {
            const double d = std::abs(z - center);
            return d > r_inner && d < r_outer;
        }
        case Kind::complement:
            return std::abs(z - center) > r_outer;
    }
    return false;
}

bool DomainSpec::contains_infinity() const {
    switch (kind) {
        case Kind::euclidean_disk:
        case Kind::annulus:
            return false;
        case Kind::complement:
            return true;
        case Kind::fs_cap:
            return fs_distance(ChartPoint::infinity(), ChartPoint::c1(center)) < r_outer;
    }
    return false;
}

namespace {

// Geodesic radius of the metric cap equal to disk(c, R): diametrical points
// along the real geodesic through |c| sit at arctan(|c|+-R).
double cap_radius_of_disk(double c_abs, double R) {
    return 0.5 * (std::atan(c_abs + R) - std::atan(c_abs - R));
}

double cap_area(double rho) {
    if (rho >= 0.5 * kPi) return kPi;
    const double s = std::sin(rho);
    return kPi * s * s;
}

}  // namespace

double DomainSpec::fs_area() const {
    switch (kind) {
        case Kind::euclidean_disk:
            return cap_area(cap_radius_of_disk(std::abs(center), r_outer));
        case Kind::fs_cap:
            return cap_area(r_outer);
        case Kind::annulus:
            return cap_area(cap_radius_of_disk(std::abs(center), r_outer)) -
                   cap_area(cap_radius_of_disk(std::abs(center), r_inner));
        case Kind::complement:
            return kPi - cap_area(cap_radius_of_disk(std::abs(center), r_outer));
    }
    return 0.0;
}

DomainSpec DomainSpec::as_euclidean_disk() const {
    if (kind == Kind::euclidean_disk) return *this;
    if (kind != Kind::fs_cap) throw ValidationError("as_euclidean_disk: disk or cap only");
    if (contains_infinity()) throw ValidationError("as_euclidean_disk: cap contains infinity");
    // Rotate the center onto the positive real axis, convert, rotate back.
    const double c_abs = std::abs(center);
    const double a1 = std::atan(c_abs) - r_outer;
    const double a2 = std::atan(c_abs) + r_outer;
    const double lo = std::tan(a1), hi = std::tan(a2);
    const Complex phase = c_abs > 0.0 ? center / c_abs : Complex{1.0, 0.0};
    return disk(phase * (0.5 * (lo + hi)), 0.5 * (hi - lo));
}

}  // namespace cpzeros

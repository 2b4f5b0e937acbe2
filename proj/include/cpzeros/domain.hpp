#pragma once

// Regions of CP^1 (and chart-0 regions of CP^m) used for zero counting, hole
// events and test-function supports.  Membership is a strict interior test;
// the boundary carries zero measure for every supported kind.

#include "cpzeros/geometry.hpp"

namespace cpzeros {

struct DomainSpec {
    enum class Kind { euclidean_disk, fs_cap, annulus, complement };

    Kind kind = Kind::euclidean_disk;
    Complex center{0.0, 0.0};
    double r_inner = 0.0;  // annulus only
    double r_outer = 0.0;  // disk/annulus/complement radius; fs_cap geodesic radius

    static DomainSpec disk(Complex c, double r);
    static DomainSpec cap(Complex c, double geodesic_radius);
    static DomainSpec annulus_at(Complex c, double r_in, double r_out);
    static DomainSpec complement_of_disk(Complex c, double r);
    static DomainSpec whole();  // cap of radius > pi/2

    bool contains(Complex z) const;  // chart-0 coordinate
    bool contains_infinity() const;

    // FS area for m=1 (closed form: every Euclidean disk is a metric cap of
    // area pi sin^2 rho).
    double fs_area() const;

    // Euclidean disk with the same point set as this domain (caps convert via
    // the diametrical points on the geodesic through the center).  Throws for
    // caps containing infinity and for non-disk kinds.
    DomainSpec as_euclidean_disk() const;
};

}  // namespace cpzeros

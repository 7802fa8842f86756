#pragma once

#include <vector>

#include "levilab/holonomy.hpp"

namespace levilab {

/// A side pairing of the fundamental polygon. The map sends side `side`
/// onto side `partner` with the endpoint swap map(v_side) = v_{partner+1}.
struct SidePairing {
    int side;
    int partner;
    Moebius map;       // domain pairing (canonical Fuchsian generator)
    int generator;     // index into the holonomy generator list
};

/// Fundamental 4g-gon of the base Fuchsian group, carrying both the domain
/// pairings (which move points) and the holonomy rep (which moves fiber
/// values). For the identity rep the two coincide.
struct FundamentalPolygon {
    std::vector<Complex> vertices;   // 4g vertices, counterclockwise
    std::vector<SidePairing> pairings;
    HolonomyRep base;                // canonical Fuchsian generators
    HolonomyRep rep;                 // value holonomy (same word length)
    int genus = 0;
};

// interior angle at vertex k, measured between the two geodesic sides
double interior_angle(const FundamentalPolygon& poly, int k);

// point at hyperbolic arc-length fraction s in [0,1] along the geodesic
// from p to q
Complex geodesic_point(Complex p, Complex q, double s);

// Regular 4g-gon whose domain side pairings are the canonical Fuchsian
// generators; `rep` rides along as the value holonomy.
FundamentalPolygon build_polygon(int genus, const HolonomyRep& rep);

} // namespace levilab

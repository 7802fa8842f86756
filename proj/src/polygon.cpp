#include "levilab/polygon.hpp"

#include <cmath>
#include <numbers>

namespace levilab {

Complex geodesic_point(Complex p, Complex q, double s) {
    Moebius t = Moebius::translation_to(p).inverse(); // p -> 0
    Complex u = t.apply(q);
    double d = 2.0 * std::atanh(std::abs(u));
    Complex dir = u / std::abs(u);
    return t.inverse().apply(dir * std::tanh(0.5 * s * d));
}

double interior_angle(const FundamentalPolygon& poly, int k) {
    int n = (int)poly.vertices.size();
    Complex v = poly.vertices[k];
    Complex prev = poly.vertices[(k + n - 1) % n];
    Complex next = poly.vertices[(k + 1) % n];
    Moebius t = Moebius::translation_to(v).inverse();
    double ang = std::arg(t.apply(prev)) - std::arg(t.apply(next));
    ang = std::fmod(ang, 2.0 * std::numbers::pi);
    if (ang < 0) ang += 2.0 * std::numbers::pi;
    return ang;
}

FundamentalPolygon build_polygon(int genus, const HolonomyRep& rep) {
    if (genus < 2) throw Error("build_polygon: genus >= 2 required");
    if ((int)rep.generators.size() != 2 * genus)
        throw Error("build_polygon: rep has wrong generator count");
    if (relation_residual(rep) > 1e-9)
        throw RelationViolated("build_polygon: holonomy relation residual too large");

    FundamentalPolygon poly;
    poly.genus = genus;
    poly.rep = rep;
    poly.base = (genus == 2) ? genus2_generators()
                             : throw Error("build_polygon: only genus 2 is constructed");

    const int n = 4 * genus;
    double R = regular_polygon_circumradius(genus);
    poly.vertices.resize(n);
    for (int k = 0; k < n; k++)
        poly.vertices[k] = std::polar(R, 2.0 * std::numbers::pi * k / n);

    // a_i maps S_{4i+2} -> S_{4i}, b_i maps S_{4i+1} -> S_{4i+3}
    for (int i = 0; i < genus; i++) {
        poly.pairings.push_back({4 * i + 2, 4 * i, poly.base.generators[2 * i], 2 * i});
        poly.pairings.push_back({4 * i + 1, 4 * i + 3, poly.base.generators[2 * i + 1], 2 * i + 1});
    }

    // pairing consistency: each map must send its side's endpoints onto the
    // partner side's endpoints (swapped)
    for (const SidePairing& sp : poly.pairings) {
        Complex vm = poly.vertices[sp.side];
        Complex vm1 = poly.vertices[(sp.side + 1) % n];
        Complex vn = poly.vertices[sp.partner];
        Complex vn1 = poly.vertices[(sp.partner + 1) % n];
        double err = std::abs(sp.map.apply(vm) - vn1) + std::abs(sp.map.apply(vm1) - vn);
        if (err > 1e-10)
            throw PairingMismatch("build_polygon: side endpoints do not match partner");
    }
    return poly;
}

} // namespace levilab

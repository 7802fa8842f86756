#pragma once

#include <complex>
#include <vector>

#include "levilab/errors.hpp"

namespace levilab {

using Complex = std::complex<double>;

/// Disc automorphism z -> (a z + b) / (conj(b) z + conj(a)), |a|^2 - |b|^2 = 1.
///
/// Storing only (a, b) keeps the matrix in the pseudo-unitary normal form of
/// Aut(D); renormalizing after every product stops determinant drift over
/// long composition chains.
struct Moebius {
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};

    Moebius() = default;
    Moebius(Complex a_, Complex b_) : a(a_), b(b_) {}

    static Moebius identity() { return {}; }

    // rotation about 0 by angle theta
    static Moebius rotation(double theta);

    // maps 0 to w, the "hyperbolic translation" picking up no rotation at 0
    static Moebius translation_to(Complex w);

    // elliptic rotation by theta about the interior point w
    static Moebius elliptic_about(Complex w, double theta);

    // hyperbolic translation along the real axis (-1, +1), length ell > 0
    static Moebius real_axis_hyperbolic(double ell);

    Complex apply(Complex z) const;
    Complex deriv(Complex z) const; // complex derivative 1/(conj(b) z + conj(a))^2
    Moebius inverse() const { return {std::conj(a), -b}; }
    double trace() const { return 2.0 * a.real(); } // real for this normal form
    double det_defect() const; // |a|^2 - |b|^2 - 1
    Moebius normalized() const;
    bool is_identity(double tol = 1e-12) const;
};

Moebius compose(const Moebius& m1, const Moebius& m2);
inline Moebius operator*(const Moebius& m1, const Moebius& m2) { return compose(m1, m2); }

// operator norm of the matrix difference, exact for this matrix shape:
// ||[[p,q],[conj q, conj p]]||_op = |p| + |q|
double op_distance(const Moebius& m1, const Moebius& m2);
double distance_to_pm_identity(const Moebius& m);

enum class ElementTag { Elliptic, Parabolic, Hyperbolic, Identity };

struct ElementClass {
    ElementTag tag;
    double trace;
};

const char* to_string(ElementTag t);

// trace trichotomy with tolerance band eps_cls around |tr| = 2
ElementClass classify_element(const Moebius& m, double eps_cls = 1e-9);

// translation length of a hyperbolic element, 2 arccosh(|tr|/2)
double translation_length(const Moebius& m);

struct Geodesic {
    Complex endpoint_plus;  // attracting end, on the unit circle
    Complex endpoint_minus; // repelling end
};

Geodesic axis_of(const Moebius& m);

// hyperbolic element with the given axis and translation length
Moebius hyperbolic_along(const Geodesic& g, double length);

// the unique automorphism with g(p1) = q1, g(p2) = q2
// (requires equal pairwise hyperbolic distances)
Moebius moebius_between(Complex p1, Complex p2, Complex q1, Complex q2);

// hyperbolic distance in the curvature -1 Poincare metric
double hyperbolic_distance(Complex z, Complex w);

} // namespace levilab

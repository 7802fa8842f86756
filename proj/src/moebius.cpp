#include "levilab/moebius.hpp"

#include <cmath>

namespace levilab {

Moebius Moebius::rotation(double theta) {
    return {std::polar(1.0, theta / 2.0), 0.0};
}

Moebius Moebius::translation_to(Complex w) {
    double n = std::norm(w);
    if (n >= 1.0) throw Error("translation_to: point outside open disc");
    double s = std::sqrt(1.0 - n);
    return {1.0 / s, w / s};
}

Moebius Moebius::elliptic_about(Complex w, double theta) {
    Moebius t = translation_to(w);
    return compose(t, compose(rotation(theta), t.inverse()));
}

Moebius Moebius::real_axis_hyperbolic(double ell) {
    return {std::cosh(ell / 2.0), std::sinh(ell / 2.0)};
}

Complex Moebius::apply(Complex z) const {
    if (std::abs(z) > 1.0 + 1e-9)
        throw Error("Moebius::apply: point outside the closed disc");
    return (a * z + b) / (std::conj(b) * z + std::conj(a));
}

Complex Moebius::deriv(Complex z) const {
    Complex d = std::conj(b) * z + std::conj(a);
    return 1.0 / (d * d);
}

double Moebius::det_defect() const {
    return std::norm(a) - std::norm(b) - 1.0;
}

Moebius Moebius::normalized() const {
    double d = std::norm(a) - std::norm(b);
    if (!(d > 0.0)) throw Error("Moebius: non disc-preserving matrix (|a| <= |b|)");
    double s = std::sqrt(d);
    return {a / s, b / s};
}

bool Moebius::is_identity(double tol) const {
    return distance_to_pm_identity(*this) < tol;
}

Moebius compose(const Moebius& m1, const Moebius& m2) {
    Moebius p{m1.a * m2.a + m1.b * std::conj(m2.b),
              m1.a * m2.b + m1.b * std::conj(m2.a)};
    return p.normalized();
}

double op_distance(const Moebius& m1, const Moebius& m2) {
    return std::abs(m1.a - m2.a) + std::abs(m1.b - m2.b);
}

double distance_to_pm_identity(const Moebius& m) {
    double d1 = std::abs(m.a - 1.0) + std::abs(m.b);
    double d2 = std::abs(m.a + 1.0) + std::abs(m.b);
    return std::min(d1, d2);
}

const char* to_string(ElementTag t) {
    switch (t) {
        case ElementTag::Elliptic: return "elliptic";
        case ElementTag::Parabolic: return "parabolic";
        case ElementTag::Hyperbolic: return "hyperbolic";
        case ElementTag::Identity: return "identity";
    }
    return "?";
}

ElementClass classify_element(const Moebius& m, double eps_cls) {
    double tr = m.trace();
    if (distance_to_pm_identity(m) < eps_cls) return {ElementTag::Identity, tr};
    double t = std::abs(tr);
    if (t < 2.0 - eps_cls) return {ElementTag::Elliptic, tr};
    if (t <= 2.0 + eps_cls) return {ElementTag::Parabolic, tr};
    return {ElementTag::Hyperbolic, tr};
}

double translation_length(const Moebius& m) {
    double t = std::abs(m.trace()) / 2.0;
    if (t <= 1.0) throw NonHyperbolicElement("translation_length: |tr| <= 2");
    return 2.0 * std::acosh(t);
}

Geodesic axis_of(const Moebius& m) {
    if (classify_element(m).tag != ElementTag::Hyperbolic)
        throw NonHyperbolicElement("axis_of: element is not hyperbolic");
    // fixed points of conj(b) z^2 + (conj(a) - a) z - b = 0, both on |z| = 1
    double im = m.a.imag();
    double disc = std::norm(m.b) - im * im; // > 0 for hyperbolic elements
    double s = std::sqrt(std::max(disc, 0.0));
    Complex cb = std::conj(m.b);
    Complex p1 = (Complex(0.0, im) + s) / cb;
    Complex p2 = (Complex(0.0, im) - s) / cb;
    // attracting fixed point has |derivative| < 1
    double d1 = std::abs(m.deriv(p1 / std::abs(p1)));
    Complex plus = (d1 < 1.0) ? p1 : p2;
    Complex minus = (d1 < 1.0) ? p2 : p1;
    return {plus / std::abs(plus), minus / std::abs(minus)};
}

Moebius hyperbolic_along(const Geodesic& g, double length) {
    Complex p = g.endpoint_plus / std::abs(g.endpoint_plus);
    Complex q = g.endpoint_minus / std::abs(g.endpoint_minus);
    if (std::abs(p - q) < 1e-12) throw DegenerateGeodesic("hyperbolic_along: equal endpoints");
    if (!(length > 0.0)) throw Error("hyperbolic_along: length must be positive");
    // T in Aut(D) with T(+1) = p, T(-1) = q; symmetric choice r1 = r2
    double alpha = std::arg(p) / 2.0;
    double beta = (std::arg(q) + std::acos(-1.0)) / 2.0;
    double c = std::cos(alpha - beta);
    if (c < 0.0) { beta += std::acos(-1.0); c = std::cos(alpha - beta); }
    double r = 1.0 / std::sqrt(c);
    Complex ea = std::polar(r, alpha), eb = std::polar(r, beta);
    Moebius t{(ea + eb) / 2.0, (ea - eb) / 2.0};
    t = t.normalized();
    return compose(t, compose(Moebius::real_axis_hyperbolic(length), t.inverse()));
}

Moebius moebius_between(Complex p1, Complex p2, Complex q1, Complex q2) {
    Moebius m = Moebius::translation_to(p1).inverse();
    Moebius n = Moebius::translation_to(q1).inverse();
    Complex u = m.apply(p2);
    Complex w = n.apply(q2);
    if (std::abs(std::abs(u) - std::abs(w)) > 1e-9)
        throw Error("moebius_between: incompatible point pairs (unequal distances)");
    Moebius r = Moebius::rotation(std::arg(w) - std::arg(u));
    return compose(n.inverse(), compose(r, m));
}

double hyperbolic_distance(Complex z, Complex w) {
    double t = std::abs((z - w) / (1.0 - std::conj(w) * z));
    return 2.0 * std::atanh(t);
}

} // namespace levilab

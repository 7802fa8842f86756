#include "levilab/holonomy.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace levilab {

const char* to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::I: return "I";
        case CaseLabel::II: return "II";
        case CaseLabel::III: return "III";
        case CaseLabel::IV: return "IV";
        case CaseLabel::V: return "V";
    }
    return "?";
}

std::optional<CaseLabel> case_from_string(const std::string& s) {
    if (s == "I") return CaseLabel::I;
    if (s == "II") return CaseLabel::II;
    if (s == "III") return CaseLabel::III;
    if (s == "IV") return CaseLabel::IV;
    if (s == "V") return CaseLabel::V;
    return std::nullopt;
}

double relation_residual(const HolonomyRep& rep) {
    if (rep.genus < 1 || (int)rep.generators.size() != 2 * rep.genus)
        throw Error("relation_residual: rep needs 2*genus generators");
    Moebius p = Moebius::identity();
    for (int i = 0; i < rep.genus; i++) {
        const Moebius& a = rep.generators[2 * i];
        const Moebius& b = rep.generators[2 * i + 1];
        p = p * a * b * a.inverse() * b.inverse();
    }
    return distance_to_pm_identity(p);
}

double regular_polygon_circumradius(int genus, double tol) {
    if (genus < 2) throw Error("regular_polygon_circumradius: genus >= 2 required");
    const double pi = std::numbers::pi;
    int n = 4 * genus;
    double lambda = pi / n;          // half the central angle per side
    double target = 2.0 * pi / n;    // interior vertex angle of the 4g-gon
    // interior angle at hyperbolic circumradius r: 2 atan(1/(cosh r tan(lambda)))
    auto angle = [&](double r) { return 2.0 * std::atan(1.0 / (std::cosh(r) * std::tan(lambda))); };
    double lo = 1e-9, hi = 20.0; // angle(lo) ~ pi - 2 lambda > target > angle(hi) ~ 0
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (angle(mid) > target) lo = mid; else hi = mid;
    }
    double r = 0.5 * (lo + hi);
    return std::tanh(r / 2.0); // Euclidean circumradius
}

namespace {

// side-pairing element mapping side m onto side n of the regular 4g-gon,
// with the endpoint swap g(v_m) = v_{n+1}, g(v_{m+1}) = v_n
Moebius pair_sides(const std::vector<Complex>& v, int m, int n) {
    int N = (int)v.size();
    return moebius_between(v[m % N], v[(m + 1) % N], v[(n + 1) % N], v[n % N]);
}

} // namespace

HolonomyRep genus2_generators() {
    const double pi = std::numbers::pi;
    const int genus = 2, n = 8;
    double R = regular_polygon_circumradius(genus);
    std::vector<Complex> v(n);
    for (int k = 0; k < n; k++) v[k] = std::polar(R, 2.0 * pi * k / n);

    // standard a b a^-1 b^-1 side labels: a_i pairs S_{4i+2} -> S_{4i},
    // b_i pairs S_{4i+1} -> S_{4i+3}
    HolonomyRep rep;
    rep.genus = genus;
    rep.case_label = CaseLabel::II;
    for (int i = 0; i < genus; i++) {
        rep.generators.push_back(pair_sides(v, 4 * i + 2, 4 * i));
        rep.generators.push_back(pair_sides(v, 4 * i + 1, 4 * i + 3));
    }
    return rep;
}

HolonomyRep fn_twist(const HolonomyRep& rep, double t) {
    if (rep.genus != 2 || rep.generators.size() != 4)
        throw Error("fn_twist: genus-2 rep required");
    if (relation_residual(rep) > 1e-10)
        throw RelationViolated("fn_twist: input rep violates the surface relation");
    if (t == 0.0) return rep;

    const Moebius& a1 = rep.generators[0];
    const Moebius& b1 = rep.generators[1];
    Moebius c = a1 * b1 * a1.inverse() * b1.inverse();
    if (classify_element(c).tag != ElementTag::Hyperbolic)
        throw CommutatorNotHyperbolic("fn_twist: [a1,b1] is not hyperbolic");

    Geodesic axis = axis_of(c);
    Moebius g = (t > 0) ? hyperbolic_along(axis, t)
                        : hyperbolic_along(axis, -t).inverse();
    HolonomyRep out = rep;
    out.generators[2] = g * rep.generators[2] * g.inverse();
    out.generators[3] = g * rep.generators[3] * g.inverse();
    out.case_label = CaseLabel::I;
    out.twist = t;
    return out;
}

HolonomyRep example_holonomy(CaseLabel c, const HolonomyParams& params) {
    HolonomyRep rep;
    switch (c) {
        case CaseLabel::I: {
            if (params.twist == 0.0)
                throw Error("example_holonomy: case I requires nonzero twist");
            rep = fn_twist(genus2_generators(), params.twist);
            break;
        }
        case CaseLabel::II: {
            rep = genus2_generators();
            break;
        }
        case CaseLabel::III: {
            double ell = params.lengths.empty() ? 2.0 : params.lengths[0];
            if (!(ell > 0)) throw Error("example_holonomy: case III needs a positive length");
            Moebius H = Moebius::real_axis_hyperbolic(ell);
            Moebius sigma = Moebius::rotation(std::numbers::pi); // order two, reverses the axis
            rep.generators = {H, sigma, H.inverse(), sigma};
            rep.genus = 2;
            rep.case_label = CaseLabel::III;
            break;
        }
        case CaseLabel::IV: {
            std::vector<double> ls = params.lengths;
            if (ls.empty()) ls = {1.0, 1.5, -1.0, -1.5};
            if (ls.size() != 4)
                throw Error("example_holonomy: case IV needs 4 translation lengths");
            rep.genus = 2;
            for (double l : ls) {
                if (l == 0.0) throw Error("example_holonomy: case IV lengths must be nonzero");
                Moebius m = Moebius::real_axis_hyperbolic(std::abs(l));
                rep.generators.push_back(l > 0 ? m : m.inverse());
            }
            rep.case_label = CaseLabel::IV;
            break;
        }
        case CaseLabel::V: {
            std::vector<double> as = params.angles;
            if (as.empty()) as = {0.7, 1.3, 2.1, 0.4};
            if (as.size() != 4)
                throw Error("example_holonomy: case V needs 4 rotation angles");
            rep.genus = 2;
            for (double a : as) rep.generators.push_back(Moebius::rotation(a));
            rep.case_label = CaseLabel::V;
            break;
        }
    }
    return rep;
}

std::string serialize_holonomy(const HolonomyRep& rep) {
    std::ostringstream os;
    os << "levilab holonomy v1\n";
    os << "case " << (rep.case_label ? to_string(*rep.case_label) : "-") << "\n";
    os << "genus " << rep.genus << "\n";
    char buf[128];
    std::snprintf(buf, sizeof buf, "twist %.17g\n", rep.twist);
    os << buf;
    os << "generators " << rep.generators.size() << "\n";
    for (const Moebius& m : rep.generators) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g\n",
                      m.a.real(), m.a.imag(), m.b.real(), m.b.imag());
        os << buf;
    }
    return os.str();
}

HolonomyRep parse_holonomy(const std::string& text) {
    std::istringstream is(text);
    std::string line, word;
    std::getline(is, line);
    if (line != "levilab holonomy v1")
        throw FieldVersionMismatch("parse_holonomy: bad header '" + line + "'");
    HolonomyRep rep;
    std::string caselbl;
    is >> word >> caselbl;
    if (word != "case") throw Error("parse_holonomy: expected 'case'");
    if (caselbl != "-") {
        auto c = case_from_string(caselbl);
        if (!c) throw Error("parse_holonomy: bad case label " + caselbl);
        rep.case_label = c;
    }
    is >> word >> rep.genus;
    if (word != "genus") throw Error("parse_holonomy: expected 'genus'");
    is >> word >> rep.twist;
    if (word != "twist") throw Error("parse_holonomy: expected 'twist'");
    std::size_t ngen = 0;
    is >> word >> ngen;
    if (word != "generators") throw Error("parse_holonomy: expected 'generators'");
    for (std::size_t i = 0; i < ngen; i++) {
        double ar, ai, br, bi;
        if (!(is >> ar >> ai >> br >> bi))
            throw Error("parse_holonomy: truncated generator list");
        rep.generators.push_back({Complex(ar, ai), Complex(br, bi)});
    }
    return rep;
}

} // namespace levilab

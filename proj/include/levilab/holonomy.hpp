#pragma once

#include <optional>
#include <string>
#include <vector>

#include "levilab/moebius.hpp"

namespace levilab {

enum class CaseLabel { I, II, III, IV, V };

const char* to_string(CaseLabel c);
std::optional<CaseLabel> case_from_string(const std::string& s);

/// Images of the standard surface-group generators a1, b1, ..., ag, bg
/// under a holonomy homomorphism into Aut(D).
struct HolonomyRep {
    std::vector<Moebius> generators;
    int genus = 0;
    std::optional<CaseLabel> case_label;
    double twist = 0.0; // deformation parameter used to build the rep, if any
};

// min over sign of the operator-norm distance of prod_i [a_i, b_i] to +-I
double relation_residual(const HolonomyRep& rep);

// Fuchsian genus-2 group pairing sides of the regular hyperbolic octagon
// with vertex angle pi/4; all generators hyperbolic.
HolonomyRep genus2_generators();

// Euclidean circumradius of the regular 4g-gon with vertex angle 2pi/(4g),
// solved from the angle equation by bisection.
double regular_polygon_circumradius(int genus, double tol = 1e-14);

// Fenchel-Nielsen twist by t along the axis of the commutator [a1, b1]:
// (a1, b1, g a2 g^-1, g b2 g^-1) with g the hyperbolic of length |t| on
// that axis. Exact no-op at t = 0.
HolonomyRep fn_twist(const HolonomyRep& rep, double t);

struct HolonomyParams {
    double twist = 0.0;                 // case I
    std::vector<double> lengths;        // cases III (one) and IV (four)
    std::vector<double> angles;         // case V (four)
};

HolonomyRep example_holonomy(CaseLabel c, const HolonomyParams& params);

// structured text record: case label, genus, twist, generators as
// (Re a, Im a, Re b, Im b) rows
std::string serialize_holonomy(const HolonomyRep& rep);
HolonomyRep parse_holonomy(const std::string& text);

} // namespace levilab

#pragma once

#include <stdexcept>
#include <string>

namespace levilab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonHyperbolicElement : Error { using Error::Error; };
struct CommutatorNotHyperbolic : Error { using Error::Error; };
struct DegenerateGeodesic : Error { using Error::Error; };
struct RelationViolated : Error { using Error::Error; };
struct PairingMismatch : Error { using Error::Error; };
struct DegenerateTriangle : Error { using Error::Error; };
struct RankDeficientStencil : Error { using Error::Error; };
struct NonConvergence : Error {
    NonConvergence(const std::string& msg, long iters, double res)
        : Error(msg), iterations(iters), residual(res) {}
    long iterations;
    double residual;
};
struct BlowUp : Error { using Error::Error; };
struct ZeroOnContour : Error { using Error::Error; };
struct EmptyV : Error { using Error::Error; };
struct NoFeasibleC : Error { using Error::Error; };
struct MeshHashMismatch : Error { using Error::Error; };
struct FieldVersionMismatch : Error { using Error::Error; };
struct ConfigError : Error {
    ConfigError(const std::string& kind, int line, const std::string& msg)
        : Error(kind + (line > 0 ? " (line " + std::to_string(line) + "): " : ": ") + msg),
          kind(kind), line(line) {}
    std::string kind; // "unknown_key" | "type_mismatch" | "constraint"
    int line;
};

} // namespace levilab

#pragma once

#include <vector>

#include "levilab/mesh.hpp"

namespace levilab {

/// One sample feeding a node's derivative functionals. The sample value is
/// chain(h[src]) where src is always an unknown (non-dependent) node; the
/// chain composes at most one boundary transport with one dependency
/// resolution, tracked by link indices so it can be rebound to a new
/// holonomy without rebuilding geometry.
struct StencilSample {
    int src;            // source node (an unknown)
    Complex pos;        // sample position (ghost positions differ from nodes[src])
    Complex wz, wzb, wzzb;
    Moebius chain;
    bool ident;
    int outer_link;     // -1 or link index, applied with outer_sign
    int outer_sign;     // +1: val, -1: val^{-1}
    int inner_link;     // -1 or link index (dependency of the sampled node)
};

struct NodeStencil {
    int offset = 0;
    int count = 0;
    bool pure_interior = false; // all chains are identity
};

/// Per-node linear functionals for d/dz, d/dzbar and the mixed second
/// derivative, exact on quadratic polynomials in (z, zbar).
struct StencilTable {
    std::vector<NodeStencil> per_node;
    std::vector<StencilSample> samples;
};

StencilTable build_stencils(const TriMesh& mesh);

// refresh chains after bind_value_rep(mesh, rep)
void rebind_stencils(StencilTable& table, const TriMesh& mesh);

struct Jet2 {
    Complex hz, hzb, hzzb;
};

// apply one node's functionals to per-node values (dependents already filled)
Jet2 apply_stencil(const StencilTable& table, int node, const std::vector<Complex>& values);

} // namespace levilab

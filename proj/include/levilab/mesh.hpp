#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "levilab/polygon.hpp"

namespace levilab {

/// Identification of a dependent boundary node with its orbit representative.
/// Positions satisfy pos(dep) = dom(pos(rep)); fiber values satisfy
/// h(dep) = val(h(rep)) where val is `word` evaluated in the value holonomy.
struct BoundaryLink {
    int dep;
    int rep;
    Moebius dom;
    Moebius val;
    std::vector<int> word; // letters +-(k+1) for generator k / its inverse
    int generator;         // primary generator index for export, -1 for vertex words
};

struct TriMesh {
    std::vector<Complex> nodes;
    std::vector<std::array<int, 3>> triangles; // positively oriented
    std::vector<bool> interior;
    std::vector<BoundaryLink> links;
    std::vector<int> link_of;    // node -> index into links, -1 if none (node is its own rep)
    std::vector<int> unknown_of; // node -> unknown slot, -1 for dependent nodes
    std::vector<int> unknown_nodes; // unknown slot -> node
    double h_mesh = 0.0;         // max Euclidean edge length
    int resolution = 0;
    FundamentalPolygon polygon;

    int num_unknowns() const { return (int)unknown_nodes.size(); }
    bool is_dependent(int node) const { return link_of[node] >= 0; }
};

// evaluate a link word in a generator list
Moebius word_moebius(const std::vector<int>& word, const std::vector<Moebius>& gens);

// swap the value maps of all links to a different holonomy (same word structure)
void bind_value_rep(TriMesh& mesh, const HolonomyRep& rep);

// Quasi-uniform triangulation of the fundamental polygon. Boundary nodes are
// placed at uniform hyperbolic arc length along each geodesic side, so paired
// sides carry node-for-node matched points under the pairing maps.
TriMesh triangulate(const FundamentalPolygon& poly, int resolution);

// node adjacency from triangles (1-ring)
std::vector<std::vector<int>> node_adjacency(const TriMesh& mesh);

// V - E + F of the identified (closed-surface) mesh
int euler_characteristic(const TriMesh& mesh);

// FNV-1a over node positions, triangles and link topology
std::uint64_t mesh_hash(const TriMesh& mesh);

// CSV export: nodes, triangles, links
std::string mesh_nodes_csv(const TriMesh& mesh);
std::string mesh_triangles_csv(const TriMesh& mesh);
std::string mesh_links_csv(const TriMesh& mesh);

} // namespace levilab

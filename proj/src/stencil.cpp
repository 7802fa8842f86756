#include "levilab/stencil.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace levilab {

namespace {

struct Candidate {
    int src;
    Complex pos;
    Moebius chain;
    bool ident;
    int outer_link, outer_sign, inner_link;
};

// resolve a mesh node to (unknown source, dependency chain)
Candidate resolve(const TriMesh& mesh, int node) {
    Candidate c;
    c.pos = mesh.nodes[node];
    c.outer_link = -1;
    c.outer_sign = +1;
    if (mesh.is_dependent(node)) {
        const BoundaryLink& l = mesh.links[mesh.link_of[node]];
        c.src = l.rep;
        c.chain = l.val;
        c.ident = false;
        c.inner_link = mesh.link_of[node];
    } else {
        c.src = node;
        c.chain = Moebius::identity();
        c.ident = true;
        c.inner_link = -1;
    }
    return c;
}

void two_ring(const std::vector<std::vector<int>>& adj, int node, std::vector<int>& out) {
    out.clear();
    for (int u : adj[node]) out.push_back(u);
    std::size_t first = out.size();
    for (std::size_t i = 0; i < first; i++)
        for (int v : adj[out[i]])
            if (v != node) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    out.erase(std::remove(out.begin(), out.end(), node), out.end());
}

} // namespace

StencilTable build_stencils(const TriMesh& mesh) {
    const auto adj = node_adjacency(mesh);
    const int N = (int)mesh.nodes.size();

    // links grouped by representative (a vertex representative can carry several)
    std::vector<std::vector<int>> links_of_rep(N);
    for (int li = 0; li < (int)mesh.links.size(); li++)
        links_of_rep[mesh.links[li].rep].push_back(li);

    StencilTable table;
    table.per_node.resize(N);

    std::vector<int> ring, ring2;
    std::vector<Candidate> cand;

    for (int x = 0; x < N; x++) {
        cand.clear();
        Candidate self;
        self.src = mesh.is_dependent(x) ? mesh.links[mesh.link_of[x]].rep : x;
        self.pos = mesh.nodes[x];
        if (mesh.is_dependent(x)) {
            self.chain = mesh.links[mesh.link_of[x]].val;
            self.ident = false;
            self.inner_link = mesh.link_of[x];
        } else {
            self.chain = Moebius::identity();
            self.ident = true;
            self.inner_link = -1;
        }
        self.outer_link = -1;
        self.outer_sign = +1;
        cand.push_back(self);

        two_ring(adj, x, ring);
        for (int w : ring) cand.push_back(resolve(mesh, w));

        // ghost samples through boundary identifications
        if (!mesh.interior[x]) {
            if (mesh.is_dependent(x)) {
                const int li = mesh.link_of[x];
                const BoundaryLink& l = mesh.links[li];
                two_ring(adj, l.rep, ring2);
                for (int w : ring2) {
                    if (w == x) continue;
                    Candidate g = resolve(mesh, w);
                    g.pos = l.dom.apply(mesh.nodes[w]);
                    g.chain = l.val * g.chain;
                    g.ident = false;
                    g.outer_link = li;
                    g.outer_sign = +1;
                    cand.push_back(g);
                }
            } else {
                for (int li : links_of_rep[x]) {
                    const BoundaryLink& l = mesh.links[li];
                    Moebius dom_inv = l.dom.inverse();
                    Moebius val_inv = l.val.inverse();
                    two_ring(adj, l.dep, ring2);
                    for (int w : ring2) {
                        if (w == x) continue;
                        Candidate g = resolve(mesh, w);
                        g.pos = dom_inv.apply(mesh.nodes[w]);
                        g.chain = val_inv * g.chain;
                        g.ident = false;
                        g.outer_link = li;
                        g.outer_sign = -1;
                        cand.push_back(g);
                    }
                }
            }
        }

        // drop duplicate positions (transported partner nodes land on
        // existing samples; values agree by equivariance)
        std::vector<Candidate> kept;
        for (const Candidate& c : cand) {
            bool dup = false;
            for (const Candidate& k : kept)
                if (std::abs(k.pos - c.pos) < 1e-11) { dup = true; break; }
            if (!dup) kept.push_back(c);
        }
        if ((int)kept.size() < 6)
            throw RankDeficientStencil("build_stencils: fewer than 6 samples at a node");

        // least squares on {1, u, ub, u^2, u ub, ub^2}, scaled by the
        // neighborhood radius for conditioning
        const int m = (int)kept.size();
        double hloc = 0.0;
        for (const Candidate& c : kept) hloc = std::max(hloc, std::abs(c.pos - mesh.nodes[x]));
        Eigen::MatrixXcd A(m, 6);
        for (int s = 0; s < m; s++) {
            Complex u = (kept[s].pos - mesh.nodes[x]) / hloc;
            Complex ub = std::conj(u);
            A(s, 0) = 1.0;
            A(s, 1) = u;
            A(s, 2) = ub;
            A(s, 3) = u * u;
            A(s, 4) = u * ub;
            A(s, 5) = ub * ub;
        }
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(A);
        if (cod.rank() < 6)
            throw RankDeficientStencil("build_stencils: degenerate neighborhood");
        Eigen::MatrixXcd P = cod.pseudoInverse(); // 6 x m

        NodeStencil& ns = table.per_node[x];
        ns.offset = (int)table.samples.size();
        ns.count = m;
        ns.pure_interior = true;
        for (int s = 0; s < m; s++) {
            StencilSample out;
            out.src = kept[s].src;
            out.pos = kept[s].pos;
            out.chain = kept[s].chain;
            out.ident = kept[s].ident;
            out.outer_link = kept[s].outer_link;
            out.outer_sign = kept[s].outer_sign;
            out.inner_link = kept[s].inner_link;
            out.wz = P(1, s) / hloc;
            out.wzb = P(2, s) / hloc;
            out.wzzb = P(4, s) / (hloc * hloc);
            if (!out.ident) ns.pure_interior = false;
            table.samples.push_back(out);
        }
    }
    return table;
}

void rebind_stencils(StencilTable& table, const TriMesh& mesh) {
    for (StencilSample& s : table.samples) {
        if (s.outer_link < 0 && s.inner_link < 0) continue;
        Moebius c = Moebius::identity();
        if (s.outer_link >= 0) {
            const Moebius& v = mesh.links[s.outer_link].val;
            c = (s.outer_sign > 0) ? v : v.inverse();
        }
        if (s.inner_link >= 0) c = c * mesh.links[s.inner_link].val;
        s.chain = c;
        s.ident = false;
    }
}

Jet2 apply_stencil(const StencilTable& table, int node, const std::vector<Complex>& values) {
    const NodeStencil& ns = table.per_node[node];
    Complex hz = 0, hzb = 0, hzzb = 0;
    for (int i = ns.offset; i < ns.offset + ns.count; i++) {
        const StencilSample& s = table.samples[i];
        Complex v = s.ident ? values[s.src] : s.chain.apply(values[s.src]);
        hz += s.wz * v;
        hzb += s.wzb * v;
        hzzb += s.wzzb * v;
    }
    return {hz, hzb, hzzb};
}

} // namespace levilab

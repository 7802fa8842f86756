#include "levilab/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <queue>
#include <sstream>

#include "levilab/hash.hpp"

namespace levilab {

Moebius word_moebius(const std::vector<int>& word, const std::vector<Moebius>& gens) {
    Moebius m = Moebius::identity();
    for (int letter : word) {
        int k = std::abs(letter) - 1;
        m = m * (letter > 0 ? gens[k] : gens[k].inverse());
    }
    return m;
}

void bind_value_rep(TriMesh& mesh, const HolonomyRep& rep) {
    if (rep.generators.size() != mesh.polygon.base.generators.size())
        throw Error("bind_value_rep: generator count mismatch");
    mesh.polygon.rep = rep;
    for (BoundaryLink& l : mesh.links)
        l.val = word_moebius(l.word, rep.generators);
}

namespace {

std::vector<int> invert_word(const std::vector<int>& w) {
    std::vector<int> out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

} // namespace

TriMesh triangulate(const FundamentalPolygon& poly, int resolution) {
    const int n = resolution;
    if (n < 2) throw Error("triangulate: resolution >= 2 required");
    const int ns = (int)poly.vertices.size(); // number of sides/sectors

    TriMesh mesh;
    mesh.polygon = poly;
    mesh.resolution = n;

    // ray nodes (shared between adjacent sectors) and per-sector interiors
    std::vector<std::vector<int>> ray(ns, std::vector<int>(n + 1, -1));
    auto add_node = [&](Complex p) {
        mesh.nodes.push_back(p);
        return (int)mesh.nodes.size() - 1;
    };
    int center = add_node({0.0, 0.0});
    for (int k = 0; k < ns; k++) {
        ray[k][0] = center;
        for (int i = 1; i <= n; i++)
            ray[k][i] = add_node((double)i / n * poly.vertices[k]);
    }

    // node (k, i, j) = (i/n) * q_k(j/i), q_k = geodesic from v_k to v_{k+1}
    std::vector<std::vector<std::vector<int>>> idx(ns);
    for (int k = 0; k < ns; k++) {
        Complex vk = poly.vertices[k];
        Complex vk1 = poly.vertices[(k + 1) % ns];
        idx[k].resize(n + 1);
        for (int i = 0; i <= n; i++) {
            idx[k][i].resize(i + 1);
            idx[k][i][0] = ray[k][i];
            if (i > 0) idx[k][i][i] = ray[(k + 1) % ns][i];
            for (int j = 1; j < i; j++)
                idx[k][i][j] = add_node((double)i / n * geodesic_point(vk, vk1, (double)j / i));
        }
    }

    for (int k = 0; k < ns; k++) {
        for (int i = 1; i <= n; i++) {
            for (int j = 0; j < i; j++)
                mesh.triangles.push_back({idx[k][i][j], idx[k][i][j + 1], idx[k][i - 1][j]});
            for (int j = 0; j + 1 < i; j++)
                mesh.triangles.push_back({idx[k][i][j + 1], idx[k][i - 1][j + 1], idx[k][i - 1][j]});
        }
    }

    // orientation and degeneracy: Im(conj(q-p)(r-p)) is twice the signed area
    for (const auto& t : mesh.triangles) {
        Complex p = mesh.nodes[t[0]], q = mesh.nodes[t[1]], r = mesh.nodes[t[2]];
        double cross = (std::conj(q - p) * (r - p)).imag();
        if (cross <= 0.0) throw DegenerateTriangle("triangulate: non-positive triangle");
    }

    mesh.h_mesh = 0.0;
    for (const auto& t : mesh.triangles)
        for (int e = 0; e < 3; e++)
            mesh.h_mesh = std::max(mesh.h_mesh, std::abs(mesh.nodes[t[e]] - mesh.nodes[t[(e + 1) % 3]]));

    mesh.interior.assign(mesh.nodes.size(), true);
    for (int k = 0; k < ns; k++)
        for (int j = 0; j <= n; j++)
            mesh.interior[idx[k][n][j]] = false;

    mesh.link_of.assign(mesh.nodes.size(), -1);
    auto add_link = [&](int dep, int rep, Moebius dom, const std::vector<int>& word) {
        BoundaryLink l;
        l.dep = dep;
        l.rep = rep;
        l.dom = dom;
        l.word = word;
        l.val = word_moebius(word, poly.rep.generators);
        l.generator = (word.size() == 1) ? std::abs(word[0]) - 1 : -1;
        if (std::abs(mesh.nodes[dep] - dom.apply(mesh.nodes[rep])) > mesh.h_mesh / 10.0)
            throw PairingMismatch("triangulate: link position residual too large");
        mesh.link_of[dep] = (int)mesh.links.size();
        mesh.links.push_back(std::move(l));
    };

    // side-interior identifications: pairing g maps side m onto side n with
    // g(q_m(s)) = q_n(1-s); dependents live on side m
    for (const SidePairing& sp : poly.pairings) {
        int m = sp.side, nn = sp.partner;
        std::vector<int> word = {-(sp.generator + 1)}; // pos(dep) = g^{-1}(pos(rep))
        Moebius dom = sp.map.inverse();
        for (int j = 1; j < n; j++) {
            int dep = idx[m][n][j];
            int rep = idx[nn][n][n - j];
            add_link(dep, rep, dom, word);
        }
    }

    // vertex orbit: BFS over the corner identifications induced by pairings,
    // all corners collapse to vertex 0
    {
        struct Edge { int to; std::vector<int> word; Moebius map; };
        std::vector<std::vector<Edge>> adj(ns);
        for (const SidePairing& sp : poly.pairings) {
            int m = sp.side, nn = sp.partner;
            std::vector<int> w = {sp.generator + 1};
            // g(v_m) = v_{n+1}, g(v_{m+1}) = v_n
            adj[m].push_back({(nn + 1) % ns, w, sp.map});
            adj[(m + 1) % ns].push_back({nn, w, sp.map});
            adj[(nn + 1) % ns].push_back({m, invert_word(w), sp.map.inverse()});
            adj[nn].push_back({(m + 1) % ns, invert_word(w), sp.map.inverse()});
        }
        // to_zero[k]: map with to_zero[k](v_k) = v_0
        std::vector<bool> seen(ns, false);
        std::vector<Moebius> to_zero(ns);
        std::vector<std::vector<int>> word_to_zero(ns);
        std::queue<int> bfs;
        seen[0] = true;
        bfs.push(0);
        while (!bfs.empty()) {
            int x = bfs.front();
            bfs.pop();
            for (const Edge& e : adj[x]) {
                if (seen[e.to]) continue;
                // e.map(v_{e.to}) = ... need map v_{e.to} -> v_x -> v_0:
                // edges are stored as x -> to with map(v_x) = v_to, so invert
                seen[e.to] = true;
                to_zero[e.to] = to_zero[x] * e.map.inverse();
                word_to_zero[e.to] = word_to_zero[x];
                for (int l : invert_word(e.word)) word_to_zero[e.to].push_back(l);
                bfs.push(e.to);
            }
        }
        for (int k = 0; k < ns; k++)
            if (!seen[k]) throw PairingMismatch("triangulate: polygon corners not a single orbit");
        for (int k = 1; k < ns; k++) {
            // pos(v_k) = to_zero[k]^{-1}(v_0)
            add_link(ray[k][n], ray[0][n], to_zero[k].inverse(), invert_word(word_to_zero[k]));
        }
    }

    mesh.unknown_of.assign(mesh.nodes.size(), -1);
    for (int i = 0; i < (int)mesh.nodes.size(); i++) {
        if (mesh.link_of[i] < 0) {
            mesh.unknown_of[i] = (int)mesh.unknown_nodes.size();
            mesh.unknown_nodes.push_back(i);
        }
    }
    return mesh;
}

std::vector<std::vector<int>> node_adjacency(const TriMesh& mesh) {
    std::vector<std::vector<int>> adj(mesh.nodes.size());
    for (const auto& t : mesh.triangles)
        for (int e = 0; e < 3; e++) {
            int u = t[e], v = t[(e + 1) % 3];
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    for (auto& v : adj) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return adj;
}

int euler_characteristic(const TriMesh& mesh) {
    int V = mesh.num_unknowns();
    std::map<std::pair<int, int>, int> edge_count;
    for (const auto& t : mesh.triangles)
        for (int e = 0; e < 3; e++) {
            int u = t[e], v = t[(e + 1) % 3];
            edge_count[{std::min(u, v), std::max(u, v)}]++;
        }
    int shared = 0, bnd = 0;
    for (auto& [k, c] : edge_count) (c == 2 ? shared : bnd)++;
    int E = shared + bnd / 2;
    int F = (int)mesh.triangles.size();
    return V - E + F;
}

std::uint64_t mesh_hash(const TriMesh& mesh) {
    Fnv1a h;
    h.add(mesh.resolution);
    for (const Complex& z : mesh.nodes) {
        h.add(z.real());
        h.add(z.imag());
    }
    for (const auto& t : mesh.triangles)
        for (int i : t) h.add(i);
    for (const BoundaryLink& l : mesh.links) {
        h.add(l.dep);
        h.add(l.rep);
        for (int w : l.word) h.add(w);
    }
    return h.value();
}

std::string mesh_nodes_csv(const TriMesh& mesh) {
    std::ostringstream os;
    os << "index,re_z,im_z,interior\n";
    char buf[128];
    for (int i = 0; i < (int)mesh.nodes.size(); i++) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%d\n", i, mesh.nodes[i].real(),
                      mesh.nodes[i].imag(), mesh.interior[i] ? 1 : 0);
        os << buf;
    }
    return os.str();
}

std::string mesh_triangles_csv(const TriMesh& mesh) {
    std::ostringstream os;
    os << "n0,n1,n2\n";
    for (const auto& t : mesh.triangles)
        os << t[0] << ',' << t[1] << ',' << t[2] << '\n';
    return os.str();
}

std::string mesh_links_csv(const TriMesh& mesh) {
    std::ostringstream os;
    os << "node,partner,generator\n";
    for (const BoundaryLink& l : mesh.links)
        os << l.dep << ',' << l.rep << ',' << l.generator << '\n';
    return os.str();
}

} // namespace levilab

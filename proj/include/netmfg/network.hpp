#pragma once
// Metric-network data model: vertices, parametrized edges with diffusion
// coefficients and Kirchhoff weights. Immutable after construction.

#include <algorithm>
#include <memory>
#include <vector>

#include "netmfg/common.hpp"

namespace netmfg {

struct EdgeSpec {
    int from = 0;
    int to = 0;
    double length = 1.0;
    double mu = 1.0;
    double gamma_from = 1.0;
    double gamma_to = 1.0;
};

struct NetworkSpec {
    std::vector<EdgeSpec> edges;
};

// A point on the network as an (edge, abscissa) pair, y in [0, length].
struct PointOnNetwork {
    int edge = 0;
    double y = 0.0;
};

class Network {
  public:
    // Edge parametrized from v0 (y=0) to v1 (y=length), v0 <= v1.
    struct Edge {
        int v0, v1;
        double length;
        double mu;
        double gamma0, gamma1;  // Kirchhoff weights at the v0 / v1 ends
    };

    // One incidence of an edge at a vertex; end==0 means the vertex sits at
    // y=0, end==1 at y=length. Loop edges appear twice in a vertex's list.
    struct HalfEdge {
        int edge;
        int end;
    };

    static constexpr double kWeightTol = 1e-12;

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int a) const { return edges_[a]; }
    const std::vector<HalfEdge>& incident(int vertex) const { return incidence_[vertex]; }

    double gamma(const HalfEdge& h) const {
        const Edge& e = edges_[h.edge];
        return h.end == 0 ? e.gamma0 : e.gamma1;
    }
    int vertex_of(const HalfEdge& h) const {
        const Edge& e = edges_[h.edge];
        return h.end == 0 ? e.v0 : e.v1;
    }
    // Incidence sign n_{i,alpha}: +1 when the vertex is the y=length end.
    static int incidence_sign(const HalfEdge& h) { return h.end == 1 ? 1 : -1; }

    bool is_loop(int a) const { return edges_[a].v0 == edges_[a].v1; }

    double total_length() const {
        double s = 0;
        for (const Edge& e : edges_) s += e.length;
        return s;
    }

    double kirchhoff_weight_sum(int vertex) const {
        double s = 0;
        for (const HalfEdge& h : incidence_[vertex]) s += gamma(h) * edges_[h.edge].mu;
        return s;
    }

    // Canonical point for a vertex: lowest incident edge index, abscissa 0 or length.
    PointOnNetwork vertex_point(int vertex) const {
        const HalfEdge& h = incidence_[vertex].front();
        return {h.edge, h.end == 0 ? 0.0 : edges_[h.edge].length};
    }

    // If p lies at a vertex (within tol), reports which one.
    bool at_vertex(const PointOnNetwork& p, int* vertex, double tol = 1e-12) const {
        const Edge& e = edges_[p.edge];
        if (p.y <= tol) {
            *vertex = e.v0;
            return true;
        }
        if (p.y >= e.length - tol) {
            *vertex = e.v1;
            return true;
        }
        return false;
    }

    PointOnNetwork canonical(const PointOnNetwork& p) const {
        int v;
        if (at_vertex(p, &v)) return vertex_point(v);
        return p;
    }

    friend std::shared_ptr<const Network> make_network(const NetworkSpec& spec);

  private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<HalfEdge>> incidence_;
};

inline std::shared_ptr<const Network> make_network(const NetworkSpec& spec) {
    if (spec.edges.empty()) throw Error("network spec has no edges");
    auto net = std::make_shared<Network>();
    int nv = 0;
    for (const EdgeSpec& es : spec.edges) {
        if (es.from < 0 || es.to < 0) throw Error("negative vertex index");
        if (!(es.length > 0)) throw Error("edge length must be positive");
        if (!(es.mu > 0)) throw Error("edge mu must be positive");
        if (!(es.gamma_from > 0) || !(es.gamma_to > 0))
            throw Error("Kirchhoff weights must be positive");
        Network::Edge e;
        // Store with the v0 <= v1 parametrization convention.
        if (es.from <= es.to) {
            e = {es.from, es.to, es.length, es.mu, es.gamma_from, es.gamma_to};
        } else {
            e = {es.to, es.from, es.length, es.mu, es.gamma_to, es.gamma_from};
        }
        net->edges_.push_back(e);
        nv = std::max(nv, std::max(es.from, es.to) + 1);
    }
    net->vertex_count_ = nv;
    net->incidence_.assign(nv, {});
    for (int a = 0; a < net->edge_count(); ++a) {
        const Network::Edge& e = net->edges_[a];
        net->incidence_[e.v0].push_back({a, 0});
        net->incidence_[e.v1].push_back({a, 1});
    }
    // (H1): sum of gamma*mu over incident half-edges equals 1 at every vertex.
    // Violations are errors, never silently renormalized.
    for (int i = 0; i < nv; ++i) {
        const double s = net->kirchhoff_weight_sum(i);
        if (std::abs(s - 1.0) > Network::kWeightTol)
            throw KirchhoffWeightSumViolation(i, s);
    }
    // Connectivity over vertices through edges.
    std::vector<char> seen(nv, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const Network::HalfEdge& h : net->incidence_[v]) {
            const Network::Edge& e = net->edges_[h.edge];
            const int w = (v == e.v0) ? e.v1 : e.v0;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    if (std::count(seen.begin(), seen.end(), char(1)) != nv)
        throw DisconnectedGraph("network graph is not connected");
    return net;
}

}  // namespace netmfg

#pragma once
// Geodesic distance on the network. Vertex-to-vertex distances are
// precomputed by Dijkstra; point-to-point distances combine them with the
// within-edge offsets, including the direct same-edge path.

#include <limits>
#include <memory>
#include <queue>
#include <vector>

#include "netmfg/common.hpp"
#include "netmfg/grid_function.hpp"
#include "netmfg/network.hpp"

namespace netmfg {

class Geodesic {
  public:
    explicit Geodesic(std::shared_ptr<const Network> net) : net_(std::move(net)) {
        const int nv = net_->vertex_count();
        vd_.assign(nv, std::vector<double>(nv, std::numeric_limits<double>::infinity()));
        for (int s = 0; s < nv; ++s) dijkstra(s, vd_[s]);
    }

    const Network& network() const { return *net_; }
    std::shared_ptr<const Network> network_ptr() const { return net_; }

    double vertex_distance(int i, int j) const { return vd_[i][j]; }

    double distance(const PointOnNetwork& a, const PointOnNetwork& b) const {
        const Network::Edge& ea = net_->edge(a.edge);
        const Network::Edge& eb = net_->edge(b.edge);
        double best = std::numeric_limits<double>::infinity();
        if (a.edge == b.edge) best = std::abs(a.y - b.y);
        const double a_end[2] = {a.y, ea.length - a.y};
        const double b_end[2] = {b.y, eb.length - b.y};
        const int a_v[2] = {ea.v0, ea.v1};
        const int b_v[2] = {eb.v0, eb.v1};
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) {
                const double d = a_end[p] + vd_[a_v[p]][b_v[q]] + b_end[q];
                if (d < best) best = d;
            }
        return best;
    }

  private:
    void dijkstra(int source, std::vector<double>& dist) const {
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
        dist[source] = 0;
        pq.push({0.0, source});
        while (!pq.empty()) {
            auto [d, v] = pq.top();
            pq.pop();
            if (d > dist[v]) continue;
            for (const Network::HalfEdge& h : net_->incident(v)) {
                const Network::Edge& e = net_->edge(h.edge);
                const int w = (h.end == 0) ? e.v1 : e.v0;
                const double nd = d + e.length;
                if (nd < dist[w]) {
                    dist[w] = nd;
                    pq.push({nd, w});
                }
            }
        }
    }

    std::shared_ptr<const Network> net_;
    std::vector<std::vector<double>> vd_;
};

// Distance matrix between all dofs of a layout (grid nodes with vertices
// merged), used as the transport ground cost and by kernel smoothers.
inline std::vector<std::vector<double>> node_distance_matrix(const Geodesic& geo,
                                                             const DofLayout& layout) {
    const int n = layout.total;
    std::vector<PointOnNetwork> pts(n);
    for (int d = 0; d < n; ++d) pts[d] = layout.point_of_dof(d);
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m[i][j] = m[j][i] = geo.distance(pts[i], pts[j]);
    return m;
}

}  // namespace netmfg

#pragma once
// Per-edge uniform sample grids, grid functions and discrete calculus:
// trapezoid integral, nodal derivatives, outward derivatives at vertices,
// C^m norms and Holder seminorms.

#include <cmath>
#include <functional>
#include <memory>
#include <vector>

#include "netmfg/common.hpp"
#include "netmfg/network.hpp"

namespace netmfg {

struct Grid {
    std::shared_ptr<const Network> net;
    std::vector<int> n;     // intervals per edge, >= 2
    std::vector<double> h;  // length / n

    static Grid uniform(std::shared_ptr<const Network> net, double h_max) {
        if (!(h_max > 0)) throw Error("h_max must be positive");
        Grid g;
        g.net = std::move(net);
        for (int a = 0; a < g.net->edge_count(); ++a) {
            const double len = g.net->edge(a).length;
            const int n = std::max(2, static_cast<int>(std::ceil(len / h_max - 1e-12)));
            g.n.push_back(n);
            g.h.push_back(len / n);
        }
        return g;
    }

    static Grid per_edge(std::shared_ptr<const Network> net, std::vector<int> n) {
        Grid g;
        g.net = std::move(net);
        if (static_cast<int>(n.size()) != g.net->edge_count())
            throw Error("per-edge node counts do not match edge count");
        for (int a = 0; a < g.net->edge_count(); ++a) {
            if (n[a] < 2) throw Error("per-edge interval count must be >= 2");
            g.h.push_back(g.net->edge(a).length / n[a]);
        }
        g.n = std::move(n);
        return g;
    }

    int nodes(int edge) const { return n[edge] + 1; }
    double abscissa(int edge, int j) const { return j * h[edge]; }
    int edge_count() const { return net->edge_count(); }
};

inline bool same_grid(const Grid& a, const Grid& b) {
    return a.net == b.net && a.n == b.n;
}

// Unknown layout shared by the solvers: interior nodes edge by edge, then one
// degree of freedom per vertex.
struct DofLayout {
    Grid grid;
    std::vector<int> edge_offset;  // interior block start per edge
    int interior_count = 0;
    int total = 0;

    explicit DofLayout(Grid g) : grid(std::move(g)) {
        int off = 0;
        for (int a = 0; a < grid.edge_count(); ++a) {
            edge_offset.push_back(off);
            off += grid.n[a] - 1;
        }
        interior_count = off;
        total = off + grid.net->vertex_count();
    }

    int index_interior(int edge, int j) const { return edge_offset[edge] + (j - 1); }
    int index_vertex(int vertex) const { return interior_count + vertex; }

    // Dof backing grid node (edge, j); endpoints map to vertex dofs.
    int dof_of_node(int edge, int j) const {
        const Network::Edge& e = grid.net->edge(edge);
        if (j == 0) return index_vertex(e.v0);
        if (j == grid.n[edge]) return index_vertex(e.v1);
        return index_interior(edge, j);
    }

    PointOnNetwork point_of_dof(int dof) const {
        if (dof >= interior_count) return grid.net->vertex_point(dof - interior_count);
        int edge = 0;
        while (edge + 1 < grid.edge_count() && edge_offset[edge + 1] <= dof) ++edge;
        const int j = dof - edge_offset[edge] + 1;
        return {edge, grid.abscissa(edge, j)};
    }

    // Trapezoid quadrature weight of each dof (vertex dofs collect the
    // half-cells of every incidence).
    std::vector<double> quadrature_weights() const {
        std::vector<double> w(total, 0.0);
        for (int a = 0; a < grid.edge_count(); ++a) {
            for (int j = 1; j < grid.n[a]; ++j) w[index_interior(a, j)] = grid.h[a];
            const Network::Edge& e = grid.net->edge(a);
            w[index_vertex(e.v0)] += 0.5 * grid.h[a];
            w[index_vertex(e.v1)] += 0.5 * grid.h[a];
        }
        return w;
    }
};

enum class Continuity { continuous, piecewise };

class GridFunction {
  public:
    GridFunction() = default;
    GridFunction(Grid grid, Continuity cls)
        : grid_(std::move(grid)), cls_(cls) {
        v_.resize(grid_.edge_count());
        for (int a = 0; a < grid_.edge_count(); ++a) v_[a].assign(grid_.nodes(a), 0.0);
    }

    static GridFunction constant(const Grid& grid, double c,
                                 Continuity cls = Continuity::continuous) {
        GridFunction f(grid, cls);
        for (auto& edge : f.v_)
            for (double& x : edge) x = c;
        return f;
    }

    // Sample fn(edge, y) at every grid node.
    static GridFunction sample(const Grid& grid,
                               const std::function<double(int, double)>& fn,
                               Continuity cls = Continuity::continuous) {
        GridFunction f(grid, cls);
        for (int a = 0; a < grid.edge_count(); ++a)
            for (int j = 0; j <= grid.n[a]; ++j)
                f.v_[a][j] = fn(a, grid.abscissa(a, j));
        return f;
    }

    const Grid& grid() const { return grid_; }
    Continuity continuity() const { return cls_; }
    void set_continuity(Continuity c) { cls_ = c; }

    double operator()(int edge, int j) const { return v_[edge][j]; }
    double& at(int edge, int j) { return v_[edge][j]; }
    const std::vector<double>& values(int edge) const { return v_[edge]; }

    // Linear interpolation along the edge.
    double eval(const PointOnNetwork& p) const {
        const double h = grid_.h[p.edge];
        const int n = grid_.n[p.edge];
        double t = p.y / h;
        int j = static_cast<int>(std::floor(t));
        j = std::max(0, std::min(n - 1, j));
        t -= j;
        return (1 - t) * v_[p.edge][j] + t * v_[p.edge][j + 1];
    }

    // Endpoint sample of an edge at a given incidence.
    double trace(const Network::HalfEdge& h) const {
        return h.end == 0 ? v_[h.edge].front() : v_[h.edge].back();
    }
    double& trace_ref(const Network::HalfEdge& h) {
        return h.end == 0 ? v_[h.edge].front() : v_[h.edge].back();
    }

    // Largest disagreement of incident endpoint samples over all vertices.
    double max_vertex_mismatch() const {
        const Network& net = *grid_.net;
        double worst = 0;
        for (int i = 0; i < net.vertex_count(); ++i) {
            const auto& inc = net.incident(i);
            for (std::size_t k = 1; k < inc.size(); ++k)
                worst = std::max(worst, std::abs(trace(inc[k]) - trace(inc[0])));
        }
        return worst;
    }

    // Vertex value for continuous-class functions.
    double vertex_value(int vertex) const {
        return trace(grid_.net->incident(vertex).front());
    }

    GridFunction& operator+=(const GridFunction& o) { return axpy(1.0, o); }
    GridFunction& operator-=(const GridFunction& o) { return axpy(-1.0, o); }
    GridFunction& operator*=(double s) {
        for (auto& edge : v_)
            for (double& x : edge) x *= s;
        return *this;
    }
    GridFunction& axpy(double s, const GridFunction& o) {
        for (int a = 0; a < grid_.edge_count(); ++a)
            for (std::size_t j = 0; j < v_[a].size(); ++j) v_[a][j] += s * o.v_[a][j];
        return *this;
    }

    friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
    friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
    friend GridFunction operator*(double s, GridFunction a) { return a *= s; }

  private:
    Grid grid_;
    Continuity cls_ = Continuity::continuous;
    std::vector<std::vector<double>> v_;
};

inline double integrate(const GridFunction& v) {
    double s = 0;
    const Grid& g = v.grid();
    for (int a = 0; a < g.edge_count(); ++a) {
        const auto& vals = v.values(a);
        double e = 0.5 * (vals.front() + vals.back());
        for (int j = 1; j < g.n[a]; ++j) e += vals[j];
        s += e * g.h[a];
    }
    return s;
}

inline double mean_value(const GridFunction& v) {
    return integrate(v) / v.grid().net->total_length();
}

inline GridFunction center(const GridFunction& v) {
    GridFunction out = v;
    const double m = mean_value(v);
    out.axpy(-m, GridFunction::constant(v.grid(), 1.0, v.continuity()));
    return out;
}

inline double sup_norm(const GridFunction& v) {
    double s = 0;
    for (int a = 0; a < v.grid().edge_count(); ++a)
        for (double x : v.values(a)) s = std::max(s, std::abs(x));
    return s;
}

// Nodal first derivative per edge: centered in the interior, second-order
// one-sided at the endpoints. Result is piecewise class.
inline GridFunction nodal_derivative(const GridFunction& v) {
    const Grid& g = v.grid();
    GridFunction d(g, Continuity::piecewise);
    for (int a = 0; a < g.edge_count(); ++a) {
        const auto& u = v.values(a);
        const double h = g.h[a];
        const int n = g.n[a];
        for (int j = 1; j < n; ++j) d.at(a, j) = (u[j + 1] - u[j - 1]) / (2 * h);
        d.at(a, 0) = (-3 * u[0] + 4 * u[1] - u[2]) / (2 * h);
        d.at(a, n) = (3 * u[n] - 4 * u[n - 1] + u[n - 2]) / (2 * h);
    }
    return d;
}

// Nodal second derivative per edge; endpoints use a one-sided stencil when
// enough nodes exist, otherwise copy the nearest interior value.
inline GridFunction nodal_second_derivative(const GridFunction& v) {
    const Grid& g = v.grid();
    GridFunction d(g, Continuity::piecewise);
    for (int a = 0; a < g.edge_count(); ++a) {
        const auto& u = v.values(a);
        const double h2 = g.h[a] * g.h[a];
        const int n = g.n[a];
        for (int j = 1; j < n; ++j) d.at(a, j) = (u[j - 1] - 2 * u[j] + u[j + 1]) / h2;
        if (n >= 3) {
            d.at(a, 0) = (2 * u[0] - 5 * u[1] + 4 * u[2] - u[3]) / h2;
            d.at(a, n) = (2 * u[n] - 5 * u[n - 1] + 4 * u[n - 2] - u[n - 3]) / h2;
        } else {
            d.at(a, 0) = d.at(a, 1);
            d.at(a, n) = d.at(a, 1);
        }
    }
    return d;
}

enum class DerivativeStencil { two_point, three_point };

// Outward derivative at the vertex sitting at the given incidence, per the
// limit definition: (v(0)-v(h))/h at the y=0 end, (v(l)-v(l-h))/h at y=l.
inline double outward_derivative(const GridFunction& v, const Network::HalfEdge& he,
                                 DerivativeStencil st = DerivativeStencil::two_point) {
    const Grid& g = v.grid();
    const auto& u = v.values(he.edge);
    const double h = g.h[he.edge];
    const int n = g.n[he.edge];
    if (he.end == 0) {
        if (st == DerivativeStencil::two_point) return (u[0] - u[1]) / h;
        return (3 * u[0] - 4 * u[1] + u[2]) / (2 * h);
    }
    if (st == DerivativeStencil::two_point) return (u[n] - u[n - 1]) / h;
    return (3 * u[n] - 4 * u[n - 1] + u[n - 2]) / (2 * h);
}

inline double outward_derivative(const GridFunction& v, int vertex, int edge,
                                 DerivativeStencil st = DerivativeStencil::two_point) {
    const Network& net = *v.grid().net;
    if (net.is_loop(edge) && net.edge(edge).v0 == vertex)
        throw EdgeNotIncident(
            "loop edge has two incidences at this vertex; use the HalfEdge overload");
    for (const Network::HalfEdge& he : net.incident(vertex))
        if (he.edge == edge) return outward_derivative(v, he, st);
    throw EdgeNotIncident("edge " + std::to_string(edge) + " is not incident to vertex " +
                          std::to_string(vertex));
}

// Discrete Kirchhoff residual sum gamma*mu*outward_derivative at a vertex.
inline double kirchhoff_residual(const GridFunction& v, int vertex,
                                 DerivativeStencil st = DerivativeStencil::two_point) {
    const Network& net = *v.grid().net;
    double s = 0;
    for (const Network::HalfEdge& he : net.incident(vertex))
        s += net.gamma(he) * net.edge(he.edge).mu * outward_derivative(v, he, st);
    return s;
}

inline double max_kirchhoff_residual(const GridFunction& v,
                                     DerivativeStencil st = DerivativeStencil::two_point) {
    double s = 0;
    for (int i = 0; i < v.grid().net->vertex_count(); ++i)
        s = std::max(s, std::abs(kirchhoff_residual(v, i, st)));
    return s;
}

// Per-edge Holder seminorm of the samples: max over node pairs of
// |w(y)-w(z)| / |y-z|^sigma, maximized over edges.
inline double holder_seminorm(const GridFunction& w, double sigma) {
    if (!(sigma > 0) || sigma > 1) throw Error("holder exponent must be in (0,1]");
    const Grid& g = w.grid();
    double s = 0;
    for (int a = 0; a < g.edge_count(); ++a) {
        const auto& u = w.values(a);
        const int n = g.n[a];
        for (int j = 0; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                const double dy = (k - j) * g.h[a];
                s = std::max(s, std::abs(u[k] - u[j]) / std::pow(dy, sigma));
            }
    }
    return s;
}

struct NormReport {
    double sup_norm = 0;        // max over all nodes of |v|
    double c1_norm = 0;         // sum over edges of sup|v_a| + sup|dv_a|
    double c2_norm = 0;         // sum over edges of sup|v_a| + sup|dv_a| + sup|d2v_a|
    double holder_seminorm = 0; // max over edges of [d2 v_a]_sigma
    double sigma = 1.0;
};

inline NormReport norms(const GridFunction& v, double sigma = 1.0) {
    const Grid& g = v.grid();
    const GridFunction d1 = nodal_derivative(v);
    const GridFunction d2 = nodal_second_derivative(v);
    NormReport r;
    r.sigma = sigma;
    for (int a = 0; a < g.edge_count(); ++a) {
        double s0 = 0, s1 = 0, s2 = 0;
        for (int j = 0; j <= g.n[a]; ++j) {
            s0 = std::max(s0, std::abs(v(a, j)));
            s1 = std::max(s1, std::abs(d1(a, j)));
            s2 = std::max(s2, std::abs(d2(a, j)));
        }
        r.sup_norm = std::max(r.sup_norm, s0);
        r.c1_norm += s0 + s1;
        r.c2_norm += s0 + s1 + s2;
    }
    r.holder_seminorm = holder_seminorm(d2, sigma);
    return r;
}

}  // namespace netmfg

#pragma once
// Shared error types and small numeric helpers.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace netmfg {

// Base class for all netmfg errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DisconnectedGraph : Error {
    using Error::Error;
};

struct KirchhoffWeightSumViolation : Error {
    int vertex;
    double sum;
    KirchhoffWeightSumViolation(int vertex_, double sum_)
        : Error("Kirchhoff weight sum at vertex " + std::to_string(vertex_) +
                " is " + std::to_string(sum_) + ", expected 1"),
          vertex(vertex_), sum(sum_) {}
};

struct EdgeNotIncident : Error {
    using Error::Error;
};

struct NonMonotoneScheme : Error {
    double required_h;
    NonMonotoneScheme(double required_h_, const std::string& what_)
        : Error(what_), required_h(required_h_) {}
};

struct LinearSolveFailure : Error {
    using Error::Error;
};

struct ModesDisagree : Error {
    double rho_direct;
    double rho_vanishing;
    ModesDisagree(double rd, double rv)
        : Error("ergodic modes disagree: direct rho=" + std::to_string(rd) +
                ", vanishing-discount rho=" + std::to_string(rv)),
          rho_direct(rd), rho_vanishing(rv) {}
};

struct NonConservativeAssembly : Error {
    using Error::Error;
};

struct InfeasibleTransport : Error {
    using Error::Error;
};

struct NotLipschitz : Error {
    using Error::Error;
};

struct InvalidEpsilon : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    std::vector<double> residual_history;
    NoConvergence(std::string what_, std::vector<double> history)
        : Error(std::move(what_)), residual_history(std::move(history)) {}
};

struct ConfigParse : Error {
    using Error::Error;
};

// Least-squares line fit y = slope*x + intercept.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) throw Error("fit_line needs >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double d = n * sxx - sx * sx;
    if (std::abs(d) < 1e-300) throw Error("fit_line: degenerate abscissae");
    LineFit f;
    f.slope = (n * sxy - sx * sy) / d;
    f.intercept = (sy - f.slope * sx) / n;
    return f;
}

// Fit of log(y) vs log(x); y values must be positive.
inline LineFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> lx, ly;
    lx.reserve(x.size());
    ly.reserve(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0) || !(y[i] > 0)) continue;
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
    }
    return fit_line(lx, ly);
}

using Rng = std::mt19937_64;

}  // namespace netmfg

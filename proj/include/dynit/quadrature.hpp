#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace dynit {

struct QuadResult {
    double value = 0.0;
    double abs_err = 0.0;   // accumulated error estimate
    int intervals = 0;      // subintervals in the final partition
};

class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string& what, double a, double b)
        : std::runtime_error(what + " on subinterval [" + std::to_string(a) + ", " +
                             std::to_string(b) + "]"),
          lo(a), hi(b) {}
    double lo, hi;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes on [0,1] (abscissa, Gauss weight, Kronrod weight).
inline constexpr double kGk715[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0,               0.204432940075298},
    {0.586087235467691, 0.0,               0.169004726639267},
    {0.864864423359769, 0.0,               0.104790010322250},
    {0.991455371120813, 0.0,               0.022935322010529},
};

template <class F>
void gk715(const F& f, double a, double b, double& k15, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double y0 = f(c);
    double g7 = kGk715[0][1] * y0;
    k15 = kGk715[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * kGk715[i][0];
        const double yi = f(c + dx) + f(c - dx);
        g7 += kGk715[i][1] * yi;
        k15 += kGk715[i][2] * yi;
    }
    g7 *= h;
    k15 *= h;
    const double d = std::fabs(k15 - g7);
    // QUADPACK-style sharpened estimate for smooth integrands, never above d.
    err = (d > 0.0) ? std::min(d, std::pow(200.0 * d, 1.5)) : 0.0;
}

struct Piece {
    double err, a, b, val;
    bool operator<(const Piece& o) const { return err < o.err; }
};

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over consecutive
// intervals given by breakpoints: the piece with the largest error estimate
// is bisected until the accumulated estimate drops below abs_tol (plus
// rel_tol * |integral| if given).  Seeding with several breakpoints guards
// against integrands whose support the 15-point rule would miss entirely.
template <class F>
QuadResult integrate_adaptive(const F& f, const std::vector<double>& breakpoints, double abs_tol,
                              double rel_tol = 0.0, int max_intervals = 4000) {
    if (breakpoints.size() < 2)
        throw std::invalid_argument("integrate_adaptive: need at least two breakpoints");
    std::priority_queue<detail::Piece> pieces;
    double total = 0.0, total_err = 0.0;
    double k15, err;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        detail::gk715(f, breakpoints[i], breakpoints[i + 1], k15, err);
        pieces.push({err, breakpoints[i], breakpoints[i + 1], k15});
        total += k15;
        total_err += err;
    }
    while (total_err > std::max(abs_tol, rel_tol * std::fabs(total))) {
        if (static_cast<int>(pieces.size()) >= max_intervals) {
            const auto worst = pieces.top();
            throw QuadratureError("quadrature failed to converge (err=" +
                                      std::to_string(total_err) + ")",
                                  worst.a, worst.b);
        }
        const auto worst = pieces.top();
        pieces.pop();
        total -= worst.val;
        total_err -= worst.err;
        const double m = 0.5 * (worst.a + worst.b);
        if (!(worst.a < m && m < worst.b))
            throw QuadratureError("quadrature interval vanished without converging", worst.a,
                                  worst.b);
        for (const auto& [lo, hi] : {std::pair{worst.a, m}, std::pair{m, worst.b}}) {
            detail::gk715(f, lo, hi, k15, err);
            pieces.push({err, lo, hi, k15});
            total += k15;
            total_err += err;
        }
    }
    return {total, total_err, static_cast<int>(pieces.size())};
}

template <class F>
QuadResult integrate_adaptive(const F& f, double a, double b, double abs_tol,
                              double rel_tol = 0.0, int max_intervals = 4000) {
    return integrate_adaptive(f, std::vector<double>{a, b}, abs_tol, rel_tol, max_intervals);
}

// Integral of f over [0, inf) through the compactifying map x = u/(1-u),
// dx = du/(1-u)^2.  Gauss-Kronrod nodes are interior, so f is never evaluated
// at the (possibly only limiting) endpoints.  The seed partition is dense
// toward u = 0 so that integrands concentrated on very small x scales still
// register in the first pass.
template <class F>
QuadResult integrate_semi_infinite(const F& f, double abs_tol, double rel_tol = 0.0,
                                   int max_intervals = 4000) {
    auto g = [&f](double u) {
        const double s = 1.0 - u;
        return f(u / s) / (s * s);
    };
    static const std::vector<double> seed = {0.0,  1e-12, 1e-9, 1e-7, 1e-5, 1e-3,
                                             0.05, 0.2,   0.5,  0.8,  1.0};
    return integrate_adaptive(g, seed, abs_tol, rel_tol, max_intervals);
}

}  // namespace dynit

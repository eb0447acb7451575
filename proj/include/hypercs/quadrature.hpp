#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "hypercs/errors.hpp"
#include "hypercs/log.hpp"

namespace hypercs {

// Gauss-Kronrod 7-15 pair.  Each row: abscissa on [0,1] half-interval,
// Gauss-7 weight (zero on Kronrod-only nodes), Kronrod-15 weight.
struct GK15Node {
    double x, gauss_w, kronrod_w;
};

inline constexpr GK15Node kGK15[8] = {
    {0.991455371120813, 0.000000000000000, 0.022935322010529},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.864864423359769, 0.000000000000000, 0.104790010322250},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.586087235467691, 0.000000000000000, 0.169004726639267},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.207784955007898, 0.000000000000000, 0.204432940075298},
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
};

/// One Gauss-Kronrod panel on [a,b]; returns {value, error estimate}.
template <class F>
std::pair<double, double> gk15_panel(F&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double gauss = 0.0, kronrod = 0.0;
    for (const auto& node : kGK15) {
        const double dx = half * node.x;
        double fsum = f(mid + dx);
        if (node.x != 0.0) fsum += f(mid - dx);
        gauss += node.gauss_w * fsum;
        kronrod += node.kronrod_w * fsum;
    }
    gauss *= half;
    kronrod *= half;
    // Standard conservative estimate for the embedded pair.
    const double err = std::pow(200.0 * std::fabs(kronrod - gauss), 1.5);
    return {kronrod, err};
}

/// Adaptive bisection on a finite interval.  Stops once the summed error
/// estimate satisfies either tolerance; throws ConvergenceError when the
/// panel budget runs out first.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-10,
                          double abs_tol = 0.0, int max_panels = 4000) {
    struct Seg {
        double a, b, value, error;
    };
    auto [v0, e0] = gk15_panel(f, a, b);
    std::vector<Seg> segs{{a, b, v0, e0}};
    int panels = 1;
    while (panels < max_panels) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            err += segs[i].error;
            if (segs[i].error > segs[worst].error) worst = i;
        }
        if (err <= rel_tol * std::fabs(total) || err <= abs_tol) return total;
        Seg s = segs[worst];
        const double m = 0.5 * (s.a + s.b);
        if (m <= s.a || m >= s.b) return total;  // interval is at double resolution
        auto [vl, el] = gk15_panel(f, s.a, m);
        auto [vr, er] = gk15_panel(f, m, s.b);
        segs[worst] = {s.a, m, vl, el};
        segs.push_back({m, s.b, vr, er});
        ++panels;
    }
    throw ConvergenceError("adaptive quadrature exhausted its panel budget");
}

/// Integral over [a, inf) by geometric segment doubling: panels [a, a+w],
/// [a+w, a+3w], ... with w doubling, each handled adaptively.  Stops after
/// two consecutive segments contribute negligibly; this copes with
/// sub-exponential tails (e.g. exp(-2 sqrt(x))) that defeat a single
/// log substitution.
template <class F>
double integrate_semi_infinite(F&& f, double a, double rel_tol = 1e-10,
                               int max_segments = 64) {
    double total = 0.0;
    double left = a;
    double width = a > 1.0 ? a : 1.0;
    int quiet = 0;
    for (int seg = 0; seg < max_segments; ++seg) {
        const double piece = integrate_adaptive(f, left, left + width, 0.5 * rel_tol, 1e-300);
        total += piece;
        left += width;
        width *= 2.0;
        if (std::fabs(piece) <= 0.25 * rel_tol * std::fabs(total) + 1e-300) {
            if (++quiet >= 2) return total;
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("semi-infinite quadrature tail did not die off");
}

}  // namespace hypercs

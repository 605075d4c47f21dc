#include "symcap/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace symcap {

namespace {

struct Vertex {
    Eigen::VectorXd x;
    double f;
};

SimplexResult run_once(const std::function<double(const Eigen::VectorXd&)>& f,
                       const Eigen::VectorXd& x0, double step, int max_evals,
                       double improvement_tol, int patience) {
    const int n = static_cast<int>(x0.size());
    int evals = 0;
    auto eval = [&](const Eigen::VectorXd& x) {
        ++evals;
        double v = f(x);
        return std::isfinite(v) ? v : 1e100;
    };

    std::vector<Vertex> simplex;
    simplex.push_back({x0, eval(x0)});
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd x = x0;
        x(i) += step;
        simplex.push_back({x, eval(x)});
    }
    auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
    std::sort(simplex.begin(), simplex.end(), by_value);

    double last_best = simplex[0].f;
    int stale = 0;
    bool converged = false;

    while (evals < max_evals) {
        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < n; ++i) centroid += simplex[i].x;
        centroid /= n;
        const Vertex& worst = simplex[n];

        Eigen::VectorXd xr = centroid + (centroid - worst.x);
        double fr = eval(xr);
        if (fr < simplex[0].f) {
            Eigen::VectorXd xe = centroid + 2.0 * (centroid - worst.x);
            double fe = eval(xe);
            simplex[n] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
        } else if (fr < simplex[n - 1].f) {
            simplex[n] = {xr, fr};
        } else {
            Eigen::VectorXd xc = fr < worst.f ? centroid + 0.5 * (xr - centroid)
                                              : centroid + 0.5 * (worst.x - centroid);
            double fc = eval(xc);
            if (fc < std::min(fr, worst.f)) {
                simplex[n] = {xc, fc};
            } else {
                for (int i = 1; i <= n; ++i) {
                    simplex[i].x = simplex[0].x + 0.5 * (simplex[i].x - simplex[0].x);
                    simplex[i].f = eval(simplex[i].x);
                }
            }
        }
        std::sort(simplex.begin(), simplex.end(), by_value);

        if (last_best - simplex[0].f < improvement_tol) {
            if (++stale >= patience) {
                converged = true;
                break;
            }
        } else {
            stale = 0;
            last_best = simplex[0].f;
        }
    }
    return {simplex[0].x, simplex[0].f, evals, converged};
}

}  // namespace

SimplexResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                          const Eigen::VectorXd& x0, const SimplexOptions& opts) {
    SimplexResult best;
    best.x = x0;
    best.value = std::numeric_limits<double>::infinity();
    double step = opts.initial_step;
    Eigen::VectorXd start = x0;
    int budget = opts.max_evaluations;
    for (int r = 0; r <= opts.restarts && budget > 0; ++r) {
        SimplexResult res = run_once(f, start, step, budget, opts.improvement_tol, opts.patience);
        budget -= res.evaluations;
        best.evaluations += res.evaluations;
        if (res.value < best.value) {
            best.value = res.value;
            best.x = res.x;
        }
        best.converged = res.converged;
        start = best.x;
        step *= 0.1;  // shrink the restart simplex around the incumbent
    }
    return best;
}

}  // namespace symcap

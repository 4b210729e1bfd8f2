// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

namespace starsec {

/// Gauss-Laguerre rule: integrates f against the weight e^{-z} on (0, inf)
/// as sum_l weights[l] * f(nodes[l]). Nodes are strictly increasing and
/// positive; weights are strictly positive and sum to 1.
struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline constexpr int kDefaultLaguerreOrder = 300;
inline constexpr int kMaxLaguerreOrder = 2000;

// Gamma function via the Lanczos approximation (g = 7, 9 coefficients).
double gamma_fn(double x);
double ln_gamma(double x);

// Regularized lower incomplete gamma P(a, x); used for Gamma goodness-of-fit.
double gamma_p(double a, double x);

/// Modified Bessel function of the first kind I_p(x), integer order p >= 0.
/// Power series for x <= 15, asymptotic expansion above; x in [0, 100] is
/// accurate to at least 10 significant digits.
double bessel_i(int order, double x);

/// Exponentially scaled variant e^{-x} I_p(x); stays in range for large x.
double bessel_i_scaled(int order, double x);

/// Trigonometric moment of a zero-mean von Mises distribution:
/// I_p(kappa) / I_0(kappa). Overflow-safe for kappa well beyond 500.
double trig_moment(int p, double kappa);

/// Nodes and weights of the order-L Gauss-Laguerre rule via the
/// Golub-Welsch symmetric-tridiagonal eigenvalue problem, with Newton
/// polishing of the nodes. Weights whose true value falls below the
/// smallest positive double are clamped to it so the rule stays strictly
/// positive; their contribution is far below every tolerance used here.
QuadratureRule laguerre_rule(int order);

/// sum_l W_l f(Z_l). Throws if f is non-finite at a node, naming the node.
double integrate_exp_weighted(const std::function<double(double)>& f,
                              const QuadratureRule& rule);

struct AdaptiveResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

/// Adaptive Gauss-Kronrod (G7/K15) evaluation of int_0^inf f(z) e^{-z} dz
/// on the transformed interval u = e^{-z}. Independent of the Laguerre
/// path; used as a validation cross-check.
AdaptiveResult integrate_exp_weighted_adaptive(
    const std::function<double(double)>& f, double abs_tol = 1e-10);

}  // namespace starsec

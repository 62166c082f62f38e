#include "qwalk/srg.hpp"

#include <algorithm>

#include <cmath>
#include <stdexcept>

namespace qwalk {

std::optional<SrgParams> detect_srg(const Graph& g) {
    const int n = g.size();
    if (n < 2) return std::nullopt;

    Eigen::MatrixXi a = g.adjacency_int();
    Eigen::VectorXi deg = a.rowwise().sum();
    const int k = deg(0);
    for (int i = 1; i < n; ++i)
        if (deg(i) != k) return std::nullopt;

    Eigen::MatrixXi a2 = a * a;

    int lambda = -1, mu = -1;
    for (int i = 0; i < n && (lambda < 0 || mu < 0); ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a(i, j)) {
                if (lambda < 0) lambda = a2(i, j);
            } else {
                if (mu < 0) mu = a2(i, j);
            }
        }
    }
    // Needs both an adjacent and a non-adjacent pair for (lambda, mu) to be defined.
    if (lambda < 0 || mu < 0) return std::nullopt;

    // A^2 == (k-mu)I + mu*J + (lambda-mu)A, exact over integers
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int expected = mu + (i == j ? k - mu : 0) + (lambda - mu) * a(i, j);
            if (a2(i, j) != expected) return std::nullopt;
        }
    }
    return SrgParams{n, k, lambda, mu};
}

std::pair<double, double> srg_restricted_eigenvalues(const SrgParams& p) {
    const double d = static_cast<double>(p.lambda - p.mu) * (p.lambda - p.mu) +
                     4.0 * (p.k - p.mu);
    if (d < 0) throw std::invalid_argument("srg_spectrum: infeasible parameters (complex roots)");
    const double s = std::sqrt(d);
    return {0.5 * ((p.lambda - p.mu) + s), 0.5 * ((p.lambda - p.mu) - s)};
}

std::vector<std::pair<double, int>> srg_spectrum(const SrgParams& p) {
    auto [theta, tau] = srg_restricted_eigenvalues(p);
    if (theta == tau) throw std::invalid_argument("srg_spectrum: degenerate restricted eigenvalues");
    // trace(A) = 0 fixes the split of the n-1 restricted eigenvalues
    const double m_theta_real = (-p.k - (p.n - 1) * tau) / (theta - tau);
    const int m_theta = static_cast<int>(std::lround(m_theta_real));
    const int m_tau = p.n - 1 - m_theta;
    if (m_theta < 0 || m_tau < 0 ||
        std::abs(m_theta_real - m_theta) > 1e-6)
        throw std::invalid_argument("srg_spectrum: infeasible parameters (non-integral multiplicity)");

    std::vector<std::pair<double, int>> out;
    out.emplace_back(tau, m_tau);
    out.emplace_back(theta, m_theta);
    out.emplace_back(static_cast<double>(p.k), 1);
    std::sort(out.begin(), out.end());
    return out;
}

AlgebraCoeffs power_coefficients(const SrgParams& p, int m) {
    if (m < 0) throw std::invalid_argument("power_coefficients: m must be >= 0");
    // A^{m+1} = alpha*A + beta*k*J + gamma*((k-mu)I + mu*J + (lambda-mu)A)
    double alpha = 1.0, beta = 0.0, gamma = 0.0;
    for (int i = 0; i < m; ++i) {
        const double a = gamma * (p.k - p.mu);
        const double b = beta * p.k + gamma * p.mu;
        const double c = alpha + gamma * (p.lambda - p.mu);
        alpha = a;
        beta = b;
        gamma = c;
    }
    return {alpha, beta, gamma};
}

AlgebraCoeffs exp_coefficients(const SrgParams& p, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("exp_coefficients: t must be finite");
    auto [theta, tau] = srg_restricted_eigenvalues(p);
    const std::complex<double> i_t(0.0, t);
    const std::complex<double> ek = std::exp(i_t * static_cast<double>(p.k));
    const std::complex<double> eth = std::exp(i_t * theta);
    const std::complex<double> eta = std::exp(i_t * tau);

    // e^{itx} on the three eigenspaces: x = k carries J -> N, the restricted
    // eigenspaces kill J. Solve for (alpha, beta, gamma).
    std::complex<double> gamma;
    if (std::abs(theta - tau) < 1e-12) {
        gamma = i_t * eth;  // eigenprojector limit
    } else {
        gamma = (eth - eta) / (theta - tau);
    }
    const std::complex<double> alpha = eth - gamma * theta;
    const std::complex<double> beta =
        (ek - alpha - gamma * static_cast<double>(p.k)) / static_cast<double>(p.n);
    return {alpha, beta, gamma};
}

SumRules sum_rules(const SrgParams& p) {
    const long long n = p.n, k = p.k, l = p.lambda, m = p.mu;
    SumRules s;
    s.sum_a = k * n;
    s.sum_a2 = n * (k - m) + k * n * (l - m) + n * n * m;
    s.sum_a3 = n * (k * k + k * (m * (n + m - 2) + l * l - 2 * l * m + l) +
                    (n - 1) * m * (l - m));
    s.trace_a3 = k * n * l;
    s.trace_a4 = k * n * (m * (k - l - 1) + k + l * l);
    return s;
}

}  // namespace qwalk

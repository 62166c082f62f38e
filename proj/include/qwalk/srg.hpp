#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk {

/// Family parameters (N, k, lambda, mu) of a strongly regular graph.
struct SrgParams {
    int n = 0;
    int k = 0;
    int lambda = 0;
    int mu = 0;

    bool operator==(const SrgParams&) const = default;
};

/// Coefficients of M = alpha*I + beta*J + gamma*A in the three-dimensional
/// {I, J, A} algebra of an SRG family.
struct AlgebraCoeffs {
    std::complex<double> alpha{};
    std::complex<double> beta{};
    std::complex<double> gamma{};
};

// Exact integer test of k-regularity plus A^2 = (k-mu)I + mu*J + (lambda-mu)A.
std::optional<SrgParams> detect_srg(const Graph& g);

// (eigenvalue, multiplicity) pairs of A, ascending by eigenvalue.
std::vector<std::pair<double, int>> srg_spectrum(const SrgParams& p);

// The two roots of x^2 - (lambda-mu)x - (k-mu) = 0, descending (theta >= tau).
std::pair<double, double> srg_restricted_eigenvalues(const SrgParams& p);

AlgebraCoeffs power_coefficients(const SrgParams& p, int m);
AlgebraCoeffs exp_coefficients(const SrgParams& p, double t);

/// Moment sums over the adjacency matrix, all exact integers for an SRG.
struct SumRules {
    long long sum_a;       // sum_ij A_ij
    long long sum_a2;      // sum_ij (A^2)_ij
    long long sum_a3;      // sum_ij (A^3)_ij
    long long trace_a3;    // sum_i (A^3)_ii
    long long trace_a4;    // sum_i (A^4)_ii
};

SumRules sum_rules(const SrgParams& p);

}  // namespace qwalk

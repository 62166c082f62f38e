#pragma once

#include <complex>
#include <vector>

#include "qwalk/hamiltonian.hpp"

namespace qwalk {

struct EvolutionOperator {
    Eigen::MatrixXcd u;
    double t = 0.0;
    WalkKind kind = WalkKind::Single;
    double interaction_u = 0.0;
    int n = 0;  // vertex count of the source graph
};

struct SpectrumReport {
    std::vector<std::pair<double, int>> levels;  // (energy, degeneracy), ascending
    double grouping_tol = 1e-9;
};

// U = e^{-itH} via real-symmetric eigendecomposition.
EvolutionOperator evolve(const Hamiltonian& h, double t);

SpectrumReport spectrum(const Hamiltonian& h, double tol = 1e-9);

// All matrix elements of U over its basis, row-major.
std::vector<std::complex<double>> green_functions(const EvolutionOperator& u);

}  // namespace qwalk

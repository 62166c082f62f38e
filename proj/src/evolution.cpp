#include "qwalk/evolution.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qwalk {

EvolutionOperator evolve(const Hamiltonian& h, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("evolve: t must be finite");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("evolve: eigensolver failed (dim " +
                                 std::to_string(h.matrix.rows()) + ")");
    const Eigen::VectorXd& eps = solver.eigenvalues();
    const Eigen::MatrixXd& v = solver.eigenvectors();

    Eigen::VectorXcd phases(eps.size());
    for (Eigen::Index i = 0; i < eps.size(); ++i)
        phases(i) = std::exp(std::complex<double>(0.0, -t * eps(i)));

    EvolutionOperator u;
    u.u = v.cast<std::complex<double>>() * phases.asDiagonal() *
          v.transpose().cast<std::complex<double>>();
    u.t = t;
    u.kind = h.kind;
    u.interaction_u = h.interaction_u;
    u.n = h.n;
    return u;
}

SpectrumReport spectrum(const Hamiltonian& h, double tol) {
    if (tol <= 0) throw std::invalid_argument("spectrum: tol must be positive");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("spectrum: eigensolver failed");
    const Eigen::VectorXd& eps = solver.eigenvalues();  // ascending

    SpectrumReport rep;
    rep.grouping_tol = tol;
    double level = 0.0;
    long count = 0;
    double level_sum = 0.0;
    for (Eigen::Index i = 0; i < eps.size(); ++i) {
        if (count > 0 && std::abs(eps(i) - level) <= tol * std::max(1.0, std::abs(level))) {
            level_sum += eps(i);
            ++count;
        } else {
            if (count > 0)
                rep.levels.emplace_back(level_sum / count, static_cast<int>(count));
            level = eps(i);
            level_sum = eps(i);
            count = 1;
        }
    }
    if (count > 0) rep.levels.emplace_back(level_sum / count, static_cast<int>(count));
    return rep;
}

std::vector<std::complex<double>> green_functions(const EvolutionOperator& u) {
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<size_t>(u.u.rows()) * u.u.cols());
    for (Eigen::Index r = 0; r < u.u.rows(); ++r)
        for (Eigen::Index c = 0; c < u.u.cols(); ++c)
            out.push_back(u.u(r, c));
    return out;
}

}  // namespace qwalk

#include "qwalk/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qwalk {

namespace {

struct ProductOps {
    Eigen::MatrixXd sym;  // 1/2 (I + S)
    Eigen::MatrixXd b;
    Eigen::MatrixXd r;
};

ProductOps make_ops(const Graph& g) {
    auto base = product_space_ops(g);
    const int d = base.swap.rows();
    ProductOps ops;
    ops.sym = 0.5 * (Eigen::MatrixXd::Identity(d, d) + base.swap);
    ops.b = std::move(base.kron_sum);
    ops.r = std::move(base.occupancy);
    return ops;
}

}  // namespace

std::vector<ExpansionTerm> expansion_terms(const Graph& g, double u,
                                           bool include_distinguishing_pair) {
    if (!std::isfinite(u)) throw std::invalid_argument("expansion_terms: u must be finite");
    const ProductOps ops = make_ops(g);
    const Eigen::MatrixXd& b = ops.b;
    const Eigen::MatrixXd& r = ops.r;
    const int d = b.rows();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);

    const Eigen::MatrixXd b2 = b * b;
    const Eigen::MatrixXd b3 = b2 * b;
    const Eigen::MatrixXd b4 = b2 * b2;

    std::vector<ExpansionTerm> terms;
    auto push = [&](int order, const Eigen::MatrixXd& poly) {
        terms.push_back({order, ops.sym * poly, u});
    };

    push(0, id);
    push(1, u * r - b);
    push(2, u * u * r + b2 - u * r * b - u * b * r);
    // RBR-containing monomials vanish for a simple graph
    push(3, u * u * u * r + u * b2 * r - u * u * b * r - u * u * r * b - b3 +
               u * r * b2 + u * b * r * b);
    Eigen::MatrixXd fourth =
        std::pow(u, 4) * r + u * u * b2 * r - std::pow(u, 3) * b * r - u * b3 * r +
        u * u * r * b2 * r - std::pow(u, 3) * r * b + u * u * b * r * b +
        u * u * r * b2 + b4 - u * r * b3;
    if (include_distinguishing_pair) fourth += -u * b2 * r * b - u * b * r * b2;
    push(4, fourth);
    return terms;
}

Eigen::MatrixXd distinguishing_op4(const Graph& g, double u) {
    const ProductOps ops = make_ops(g);
    const Eigen::MatrixXd b2 = ops.b * ops.b;
    return ops.sym * (u * (ops.b * ops.r * b2 + b2 * ops.r * ops.b));
}

Eigen::MatrixXd distinguishing_op6(const Graph& g) {
    const ProductOps ops = make_ops(g);
    const Eigen::MatrixXd b2 = ops.b * ops.b;
    return ops.sym * (b2 * ops.r * (b2 * ops.b));
}

std::vector<double> product_space_certificate(const Eigen::MatrixXcd& m, int n) {
    const auto basis = TwoParticleBasis::make(Statistics::Boson, n);
    const Eigen::MatrixXcd projected = project_to_pair_basis(m, basis);
    std::vector<double> mags;
    mags.reserve(static_cast<size_t>(projected.rows()) * projected.cols());
    for (Eigen::Index r = 0; r < projected.rows(); ++r)
        for (Eigen::Index c = 0; c < projected.cols(); ++c)
            mags.push_back(std::abs(projected(r, c)));
    std::sort(mags.begin(), mags.end());
    return mags;
}

std::vector<double> product_space_certificate(const Eigen::MatrixXd& m, int n) {
    return product_space_certificate(Eigen::MatrixXcd(m.cast<std::complex<double>>()), n);
}

std::vector<double> per_order_delta(const Graph& g1, const Graph& g2, double u, double t,
                                    int max_order, bool include_distinguishing_pair) {
    if (g1.size() != g2.size())
        throw std::invalid_argument("per_order_delta: graphs must have the same size");
    if (max_order < 0 || max_order > 4)
        throw std::invalid_argument("per_order_delta: max_order must be in 0..4");

    const auto terms1 = expansion_terms(g1, u, include_distinguishing_pair);
    const auto terms2 = expansion_terms(g2, u, include_distinguishing_pair);
    const int d = terms1[0].matrix.rows();

    std::vector<double> deltas;
    Eigen::MatrixXcd acc1 = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd acc2 = Eigen::MatrixXcd::Zero(d, d);
    std::complex<double> coeff(1.0, 0.0);
    for (int order = 0; order <= max_order; ++order) {
        if (order > 0) coeff *= std::complex<double>(0.0, -t) / static_cast<double>(order);
        acc1 += coeff * terms1[order].matrix;
        acc2 += coeff * terms2[order].matrix;
        const auto c1 = product_space_certificate(acc1, g1.size());
        const auto c2 = product_space_certificate(acc2, g2.size());
        double delta = 0.0;
        for (size_t i = 0; i < c1.size(); ++i) delta += std::abs(c1[i] - c2[i]);
        deltas.push_back(delta);
    }
    return deltas;
}

}  // namespace qwalk

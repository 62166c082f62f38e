#include "qwalk/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace qwalk {

std::string to_string(WalkKind k) {
    switch (k) {
        case WalkKind::Single: return "single";
        case WalkKind::Boson: return "boson";
        case WalkKind::Hardcore: return "hardcore";
        case WalkKind::Fermion: return "fermion";
    }
    return "?";
}

WalkKind walk_kind_from_string(const std::string& s) {
    if (s == "single") return WalkKind::Single;
    if (s == "boson") return WalkKind::Boson;
    if (s == "hardcore") return WalkKind::Hardcore;
    if (s == "fermion") return WalkKind::Fermion;
    throw std::invalid_argument("unknown walk kind '" + s + "'");
}

TwoParticleBasis TwoParticleBasis::make(Statistics s, int n) {
    TwoParticleBasis b;
    b.statistics = s;
    b.n = n;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (i == j && s != Statistics::Boson) continue;
            b.states.emplace_back(i, j);
        }
    }
    return b;
}

int TwoParticleBasis::index(int i, int j) const {
    if (j < i) std::swap(i, j);
    // lexicographic (i, j) with i <= j; doubles present only for bosons
    const bool doubles = statistics == Statistics::Boson;
    int idx = 0;
    for (int r = 0; r < i; ++r) idx += n - r - (doubles ? 0 : 1);
    idx += j - i - (doubles ? 0 : 1);
    if (idx < 0 || idx >= dim() || states[idx] != std::pair<int, int>{i, j})
        throw std::out_of_range("TwoParticleBasis: invalid pair state");
    return idx;
}

Hamiltonian h_single(const Graph& g) {
    Hamiltonian h;
    h.matrix = -g.adjacency();
    h.kind = WalkKind::Single;
    h.n = g.size();
    return h;
}

namespace {

// The four-term hopping sum shared by all bosonic matrix-element cases.
double boson_hop(const Graph& g, int i, int j, int k, int l) {
    double v = 0.0;
    if (i == k && g.edge(j, l)) v += 1.0;
    if (j == l && g.edge(i, k)) v += 1.0;
    if (i == l && g.edge(j, k)) v += 1.0;
    if (j == k && g.edge(i, l)) v += 1.0;
    return v;
}

}  // namespace

Hamiltonian h_two_boson(const Graph& g, double u) {
    if (!std::isfinite(u)) throw std::invalid_argument("h_two_boson: u must be finite");
    const int n = g.size();
    Hamiltonian h;
    h.kind = WalkKind::Boson;
    h.interaction_u = u;
    h.n = n;
    h.basis = TwoParticleBasis::make(Statistics::Boson, n);
    const int d = h.basis.dim();
    h.matrix = Eigen::MatrixXd::Zero(d, d);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int r = 0; r < d; ++r) {
        auto [i, j] = h.basis.states[r];
        for (int c = 0; c < d; ++c) {
            auto [k, l] = h.basis.states[c];
            if (i != j && k != l) {
                h.matrix(r, c) = -boson_hop(g, i, j, k, l);
            } else if (i == j && k == l) {
                h.matrix(r, c) = (i == k) ? u : 0.0;
            } else {
                h.matrix(r, c) = -inv_sqrt2 * boson_hop(g, i, j, k, l);
            }
        }
    }
    return h;
}

Hamiltonian h_two_hardcore(const Graph& g) {
    const int n = g.size();
    if (n < 2) throw std::invalid_argument("h_two_hardcore: need n >= 2");
    Hamiltonian h;
    h.kind = WalkKind::Hardcore;
    h.n = n;
    h.basis = TwoParticleBasis::make(Statistics::HardcoreBoson, n);
    const int d = h.basis.dim();
    h.matrix = Eigen::MatrixXd::Zero(d, d);
    for (int r = 0; r < d; ++r) {
        auto [i, j] = h.basis.states[r];
        for (int c = 0; c < d; ++c) {
            auto [k, l] = h.basis.states[c];
            h.matrix(r, c) = -boson_hop(g, i, j, k, l);
        }
    }
    return h;
}

Hamiltonian h_two_fermion(const Graph& g) {
    const int n = g.size();
    if (n < 2) throw std::invalid_argument("h_two_fermion: need n >= 2");
    Hamiltonian h;
    h.kind = WalkKind::Fermion;
    h.n = n;
    h.basis = TwoParticleBasis::make(Statistics::Fermion, n);
    const int d = h.basis.dim();
    h.matrix = Eigen::MatrixXd::Zero(d, d);
    for (int r = 0; r < d; ++r) {
        auto [i, j] = h.basis.states[r];
        for (int c = 0; c < d; ++c) {
            auto [k, l] = h.basis.states[c];
            double v = 0.0;
            if (j == l && g.edge(i, k)) v += 1.0;
            if (i == k && g.edge(j, l)) v += 1.0;
            if (j == k && g.edge(i, l)) v -= 1.0;
            if (i == l && g.edge(j, k)) v -= 1.0;
            h.matrix(r, c) = v;
        }
    }
    return h;
}

SwapAndOccupancy product_space_ops(const Graph& g) {
    const int n = g.size();
    const int d = n * n;
    SwapAndOccupancy ops;
    ops.swap = Eigen::MatrixXd::Zero(d, d);
    ops.occupancy = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            ops.swap(i * n + j, j * n + i) = 1.0;
        }
        ops.occupancy(i * n + i, i * n + i) = 1.0;
    }
    const Eigen::MatrixXd a = g.adjacency();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    ops.kron_sum = Eigen::kroneckerProduct(a, id) + Eigen::kroneckerProduct(id, a);
    return ops;
}

Eigen::MatrixXd operator_form_boson(const Graph& g, double u) {
    if (!std::isfinite(u)) throw std::invalid_argument("operator_form_boson: u must be finite");
    auto ops = product_space_ops(g);
    const int d = ops.swap.rows();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
    return -0.5 * (id + ops.swap) * ops.kron_sum + u * ops.occupancy;
}

Eigen::MatrixXd operator_form_fermion(const Graph& g) {
    auto ops = product_space_ops(g);
    const int d = ops.swap.rows();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
    return 0.5 * (id - ops.swap) * ops.kron_sum;
}

Eigen::MatrixXd basis_embedding(const TwoParticleBasis& basis) {
    const int n = basis.n;
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n * n, basis.dim());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const double sign = basis.statistics == Statistics::Fermion ? -1.0 : 1.0;
    for (int c = 0; c < basis.dim(); ++c) {
        auto [i, j] = basis.states[c];
        if (i == j) {
            v(i * n + i, c) = 1.0;
        } else {
            v(i * n + j, c) = inv_sqrt2;
            v(j * n + i, c) = sign * inv_sqrt2;
        }
    }
    return v;
}

Eigen::MatrixXd project_to_pair_basis(const Eigen::MatrixXd& m, const TwoParticleBasis& basis) {
    const Eigen::MatrixXd v = basis_embedding(basis);
    return v.transpose() * m * v;
}

Eigen::MatrixXcd project_to_pair_basis(const Eigen::MatrixXcd& m, const TwoParticleBasis& basis) {
    const Eigen::MatrixXd v = basis_embedding(basis);
    return v.transpose() * m * v;
}

}  // namespace qwalk

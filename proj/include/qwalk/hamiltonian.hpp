#pragma once

#include <string>
#include <vector>

#include "qwalk/graph.hpp"

namespace qwalk {

enum class Statistics { Boson, HardcoreBoson, Fermion };

enum class WalkKind { Single, Boson, Hardcore, Fermion };

std::string to_string(WalkKind k);
WalkKind walk_kind_from_string(const std::string& s);

/// Ordered pair-state basis for two identical particles on N vertices.
/// Bosons use i <= j (doubles included), hard-core bosons and fermions i < j.
/// Ordering is lexicographic, which fixes the fermion sign gauge.
struct TwoParticleBasis {
    Statistics statistics;
    int n = 0;
    std::vector<std::pair<int, int>> states;

    static TwoParticleBasis make(Statistics s, int n);

    int dim() const { return static_cast<int>(states.size()); }
    int index(int i, int j) const;  // unordered lookup
};

struct Hamiltonian {
    Eigen::MatrixXd matrix;
    WalkKind kind = WalkKind::Single;
    double interaction_u = 0.0;  // meaningful for Boson only
    int n = 0;                   // vertex count of the source graph
    TwoParticleBasis basis;      // empty for single-particle
};

Hamiltonian h_single(const Graph& g);
Hamiltonian h_two_boson(const Graph& g, double u);
Hamiltonian h_two_hardcore(const Graph& g);
Hamiltonian h_two_fermion(const Graph& g);

/// Operators on the N^2-dimensional two-particle product space.
struct SwapAndOccupancy {
    Eigen::MatrixXd swap;       // S = sum |ij><ji|
    Eigen::MatrixXd occupancy;  // R = sum |ii><ii|
    Eigen::MatrixXd kron_sum;   // B = A (+) A = A x I + I x A
};

SwapAndOccupancy product_space_ops(const Graph& g);

// H = -1/2 (I+S)(A (+) A) + u R
Eigen::MatrixXd operator_form_boson(const Graph& g, double u);
// H = +1/2 (I-S)(A (+) A)
Eigen::MatrixXd operator_form_fermion(const Graph& g);

/// Columns are the normalized (anti)symmetrized basis vectors in the product space.
Eigen::MatrixXd basis_embedding(const TwoParticleBasis& basis);

Eigen::MatrixXd project_to_pair_basis(const Eigen::MatrixXd& m, const TwoParticleBasis& basis);
Eigen::MatrixXcd project_to_pair_basis(const Eigen::MatrixXcd& m, const TwoParticleBasis& basis);

}  // namespace qwalk

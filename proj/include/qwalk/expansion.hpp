#pragma once

#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/hamiltonian.hpp"

namespace qwalk {

/// Exact power-series terms of the interacting two-boson evolution on the
/// N^2-dimensional product space: term n is 1/2 (I+S) H^n written out as the
/// operator polynomial in B = A (+) A, R and u.
struct ExpansionTerm {
    int order = 0;
    Eigen::MatrixXd matrix;
    double interaction_u = 0.0;
};

// Orders 0..4. include_distinguishing_pair=false drops the u(BRB^2 + B^2RB)
// monomial pair from the fourth-order term.
std::vector<ExpansionTerm> expansion_terms(const Graph& g, double u,
                                           bool include_distinguishing_pair = true);

// u * (B R B^2 + B^2 R B), symmetrizer applied.
Eigen::MatrixXd distinguishing_op4(const Graph& g, double u);
// B^2 R B^3, symmetrizer applied.
Eigen::MatrixXd distinguishing_op6(const Graph& g);

// Delta between the two graphs' magnitude certificates of the series truncated
// at each order 0..max_order, certificates taken over the symmetrized pair basis.
std::vector<double> per_order_delta(const Graph& g1, const Graph& g2, double u, double t,
                                    int max_order,
                                    bool include_distinguishing_pair = true);

// Sorted magnitude list of a product-space operator over the boson pair basis.
std::vector<double> product_space_certificate(const Eigen::MatrixXcd& m, int n);
std::vector<double> product_space_certificate(const Eigen::MatrixXd& m, int n);

}  // namespace qwalk

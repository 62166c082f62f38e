#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "qwalk/srg.hpp"

namespace qwalk {

/// Symmetry class of a Green's-function matrix element: a = number of
/// distinct basis indices among (iL, jL, iR, jR), b = number of indices
/// shared between the left and right pair.
struct ElementClass {
    int distinct = 0;
    int shared = 0;

    bool operator==(const ElementClass&) const = default;
};

ElementClass classify(int il, int jl, int ir, int jr);

/// Element value as coefficients over the monomials
/// {alpha^2, beta^2, gamma^2, alpha*beta, alpha*gamma, beta*gamma}.
using MonomialVector = std::array<double, 6>;

std::complex<double> evaluate_monomials(const MonomialVector& m, const AlgebraCoeffs& c);
std::string monomials_to_string(const MonomialVector& m);

struct TableRow {
    ElementClass cls;
    MonomialVector value;   // for fermions the magnitude of this value applies
    long long count = 0;
};

struct CountTable {
    std::vector<TableRow> rows;
    SrgParams family;
    long long grand_total = 0;
    std::vector<std::pair<ElementClass, long long>> subtotals;
};

CountTable boson_table(const SrgParams& p);
CountTable fermion_table(const SrgParams& p);

// Closed-form counts of the two leading (4,0) boson values, via the sum rules.
long long count_40a(const SrgParams& p);
long long count_40b(const SrgParams& p);

struct RowCheck {
    TableRow row;
    std::complex<double> expected_value{};
    long long observed = 0;
    bool ok = false;
};

struct Reconciliation {
    SrgParams family;
    double t = 0.0;
    std::vector<RowCheck> boson_rows;
    std::vector<RowCheck> fermion_rows;
    bool boson_ok = false;
    bool fermion_ok = false;
    bool all_ok = false;
    bool t_unsuitable = false;  // two symbolic rows collide within 10x tolerance
};

// Histogram the numerically evolved u=0 boson (and fermion) Green's functions
// and reconcile them value-for-value and count-for-count against the tables.
Reconciliation verify_tables(const Graph& g, double t, double tol = 1e-9);

}  // namespace qwalk

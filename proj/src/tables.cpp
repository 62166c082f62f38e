#include "qwalk/tables.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qwalk/evolution.hpp"

namespace qwalk {

ElementClass classify(int il, int jl, int ir, int jr) {
    std::map<int, int> left, right, all;
    ++left[il];
    ++left[jl];
    ++right[ir];
    ++right[jr];
    ++all[il];
    ++all[jl];
    ++all[ir];
    ++all[jr];
    int shared = 0;
    for (const auto& [v, c] : left) {
        auto it = right.find(v);
        if (it != right.end()) shared += std::min(c, it->second);
    }
    return {static_cast<int>(all.size()), shared};
}

std::complex<double> evaluate_monomials(const MonomialVector& m, const AlgebraCoeffs& c) {
    return m[0] * c.alpha * c.alpha + m[1] * c.beta * c.beta + m[2] * c.gamma * c.gamma +
           m[3] * c.alpha * c.beta + m[4] * c.alpha * c.gamma + m[5] * c.beta * c.gamma;
}

std::string monomials_to_string(const MonomialVector& m) {
    static const char* names[] = {"a^2", "b^2", "g^2", "ab", "ag", "bg"};
    std::ostringstream ss;
    bool first = true;
    for (int i = 0; i < 6; ++i) {
        if (m[i] == 0.0) continue;
        if (!first) ss << (m[i] > 0 ? " + " : " - ");
        else if (m[i] < 0) ss << "-";
        const double mag = std::abs(m[i]);
        if (mag != 1.0) ss << mag << "*";
        ss << names[i];
        first = false;
    }
    if (first) ss << "0";
    return ss.str();
}

namespace {

long long exact_div(long long num, long long den) {
    if (den == 0 || num % den != 0)
        throw std::invalid_argument("count table: non-integral closed-form count");
    return num / den;
}

constexpr double kSqrt2 = 1.4142135623730951;

}  // namespace

CountTable boson_table(const SrgParams& p) {
    const long long n = p.n, k = p.k, l = p.lambda, m = p.mu;
    if (k <= 0 || n <= k) throw std::invalid_argument("boson_table: infeasible parameters");
    const double s = kSqrt2;  // the 2/sqrt(2) factor on mixed double/pair elements

    CountTable t;
    t.family = p;
    auto row = [&t](int a, int b, MonomialVector v, long long count) {
        t.rows.push_back({{a, b}, v, count});
    };

    // (4,0)
    row(4, 0, {0, 2, 2, 0, 0, 4},
        exact_div(n * (k * k * (m + 1) + k * (l * l - l * (m + 2) + m - 1) - 2 * (n - 1) * m), 4));
    row(4, 0, {0, 2, 1, 0, 0, 3}, n * m * (n - k - 1) * (k + l - m));
    row(4, 0, {0, 2, 1, 0, 0, 2},
        exact_div(n * (n - k - 1) * (k * k * k - 2 * k * k * m + (n - 1) * m * m), 2 * k));
    row(4, 0, {0, 2, 0, 0, 0, 2},
        exact_div(n * (n - k - 1) * (k * k * k - k * k * (2 * m + 1) + (n - 1) * m * m), k));
    row(4, 0, {0, 2, 0, 0, 0, 1},
        exact_div(n * (k - n + 1) * (k - m) * (k * (2 * k - n + 2) - n * m + m), k));
    // all-hops-absent value is 2*beta^2
    row(4, 0, {0, 2, 0, 0, 0, 0},
        exact_div(n * (n - k - 1) *
                      (k * (-3 * k * n + k * (3 * k + 8) + n * n - 5 * n + 6) -
                       2 * k * (k + 1) * m + (n - 1) * m * m),
                  4 * k));

    // (3,0)
    row(3, 0, {0, s, s, 0, 0, 2 * s}, k * n * (k - l - 1) + k * n * l);
    row(3, 0, {0, s, 0, 0, 0, s}, 2 * k * n * (n - k - 1));
    row(3, 0, {0, s, 0, 0, 0, 0}, n * (k - n + 1) * (k - n + 2));

    // (3,1)
    row(3, 1, {0, 2, 1, 1, 1, 3}, k * n * l);
    row(3, 1, {0, 2, 1, 1, 0, 2}, n * (n - 1 - k) * m);
    row(3, 1, {0, 2, 0, 1, 1, 2}, 2 * n * (n - 1 - k) * m);
    row(3, 1, {0, 2, 0, 1, 1, 1}, k * n * (n + l - 2 * k));
    row(3, 1, {0, 2, 0, 1, 0, 1}, 2 * k * n * (n + l - 2 * k));
    row(3, 1, {0, 2, 0, 1, 0, 0}, n * (1 + k - n) * (2 + 2 * k - n - m));

    // (2,0)
    row(2, 0, {0, 1, 1, 0, 0, 2}, k * n);
    row(2, 0, {0, 1, 0, 0, 0, 0}, n * (n - k - 1));

    // (2,1)
    row(2, 1, {0, s, 0, s, s, s}, 2 * k * n);
    row(2, 1, {0, s, 0, s, 0, 0}, 2 * n * (n - k - 1));

    // (2,2)
    row(2, 2, {1, 2, 1, 2, 0, 2}, exact_div(k * n, 2));
    row(2, 2, {1, 2, 0, 2, 0, 0}, exact_div(n * (n - k - 1), 2));

    // (1,2)
    row(1, 2, {1, 1, 0, 2, 0, 0}, n);

    t.subtotals = {
        {{4, 0}, exact_div(n * (n - 1) * (n - 2) * (n - 3), 4)},
        {{3, 0}, n * (n - 1) * (n - 2)},
        {{3, 1}, n * (n - 1) * (n - 2)},
        {{2, 0}, n * (n - 1)},
        {{2, 1}, 2 * n * (n - 1)},
        {{2, 2}, exact_div(n * (n - 1), 2)},
        {{1, 2}, n},
    };
    t.grand_total = exact_div(n * n * (n + 1) * (n + 1), 4);

    for (const auto& [cls, sub] : t.subtotals) {
        long long acc = 0;
        for (const auto& r : t.rows)
            if (r.cls == cls) acc += r.count;
        if (acc != sub)
            throw std::logic_error("boson_table: class subtotal mismatch");
    }
    return t;
}

CountTable fermion_table(const SrgParams& p) {
    const long long n = p.n, k = p.k, l = p.lambda, m = p.mu;
    if (k <= 0 || n <= k) throw std::invalid_argument("fermion_table: infeasible parameters");

    CountTable t;
    t.family = p;
    auto row = [&t](int a, int b, MonomialVector v, long long count) {
        t.rows.push_back({{a, b}, v, count});
    };

    // (4,0)
    row(4, 0, {0, 0, 0, 0, 0, 0},
        exact_div(n * (-6 * k * k * k * k + 2 * k * k * k * (5 * n + 6 * m - 7) -
                       4 * k * k * (n - 1) * (n + 3 * m - 2) +
                       k * (n - 1) * ((n - 5) * n - 6 * m * m + 6) +
                       6 * (n - 1) * (n - 1) * m * m),
                  4 * k));
    row(4, 0, {0, 0, 1, 0, 0, 1}, n * m * (n - k - 1) * (k + l - m));
    // count carries a 1/(2k) factor; the class subtotal forces it
    row(4, 0, {0, 0, 1, 0, 0, 2},
        exact_div(n * (n - k - 1) * (k * k * k - 2 * k * k * m + (n - 1) * m * m), 2 * k));
    row(4, 0, {0, 0, 0, 0, 0, 1},
        exact_div(n * (k - n + 1) * (k - m) * (k * (2 * k - n + 2) - n * m + m), k));

    // (3,1)
    row(3, 1, {0, 0, -1, 1, 1, -1}, k * n * l);
    row(3, 1, {0, 0, -1, 1, 0, -2}, n * (n - 1 - k) * m);
    row(3, 1, {0, 0, 0, 1, 1, 0}, 2 * n * (n - 1 - k) * m);
    row(3, 1, {0, 0, 0, 1, 1, 1}, k * n * (n + l - 2 * k));
    row(3, 1, {0, 0, 0, 1, 0, -1}, 2 * k * n * (n + l - 2 * k));
    row(3, 1, {0, 0, 0, 1, 0, 0}, n * (1 + k - n) * (2 + 2 * k - n - m));

    // (2,2)
    row(2, 2, {1, 0, -1, 2, 0, -2}, exact_div(k * n, 2));
    row(2, 2, {1, 0, 0, 2, 0, 0}, exact_div(n * (n - k - 1), 2));

    t.subtotals = {
        {{4, 0}, exact_div(n * (n - 1) * (n - 2) * (n - 3), 4)},
        {{3, 1}, n * (n - 1) * (n - 2)},
        {{2, 2}, exact_div(n * (n - 1), 2)},
    };
    t.grand_total = exact_div(n * n * (n - 1) * (n - 1), 4);

    for (const auto& [cls, sub] : t.subtotals) {
        long long acc = 0;
        for (const auto& r : t.rows)
            if (r.cls == cls) acc += r.count;
        if (acc != sub)
            throw std::logic_error("fermion_table: class subtotal mismatch");
    }
    return t;
}

long long count_40a(const SrgParams& p) {
    const SumRules s = sum_rules(p);
    return exact_div(s.trace_a4 - 2 * s.sum_a2 + s.sum_a, 4);
}

long long count_40b(const SrgParams& p) {
    const SumRules s = sum_rules(p);
    return s.sum_a3 - s.trace_a3 - s.trace_a4;
}

namespace {

// Histogram matrix elements against table rows. For fermions matching is on
// magnitudes (sign gauge); for bosons on complex values.
std::vector<RowCheck> reconcile(const CountTable& table, const AlgebraCoeffs& coeffs,
                                const Eigen::MatrixXcd& u,
                                const std::vector<std::pair<int, int>>& states,
                                bool magnitudes, double tol, bool& collision,
                                long long& unmatched) {
    std::vector<RowCheck> checks;
    checks.reserve(table.rows.size());
    for (const auto& r : table.rows)
        checks.push_back({r, evaluate_monomials(r.value, coeffs), 0, false});

    // collision detection: two rows of the same class too close at this t
    for (size_t a = 0; a < checks.size(); ++a) {
        for (size_t b = a + 1; b < checks.size(); ++b) {
            if (!(checks[a].row.cls == checks[b].row.cls)) continue;
            const double d = magnitudes ? std::abs(std::abs(checks[a].expected_value) -
                                                   std::abs(checks[b].expected_value))
                                        : std::abs(checks[a].expected_value -
                                                   checks[b].expected_value);
            if (d < 10 * tol) collision = true;
        }
    }

    const int dim = static_cast<int>(states.size());
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            const ElementClass cls =
                classify(states[r].first, states[r].second, states[c].first, states[c].second);
            const std::complex<double> v = u(r, c);
            int best = -1;
            double best_d = tol;
            for (size_t idx = 0; idx < checks.size(); ++idx) {
                if (!(checks[idx].row.cls == cls)) continue;
                const double d = magnitudes
                                     ? std::abs(std::abs(v) - std::abs(checks[idx].expected_value))
                                     : std::abs(v - checks[idx].expected_value);
                if (d < best_d) {
                    best_d = d;
                    best = static_cast<int>(idx);
                }
            }
            if (best >= 0)
                ++checks[best].observed;
            else
                ++unmatched;
        }
    }

    for (auto& c : checks) c.ok = (c.observed == c.row.count);
    return checks;
}

}  // namespace

Reconciliation verify_tables(const Graph& g, double t, double tol) {
    const auto params = detect_srg(g);
    if (!params)
        throw std::invalid_argument("verify_tables: graph is not strongly regular");

    Reconciliation rec;
    rec.family = *params;
    rec.t = t;
    const AlgebraCoeffs coeffs = exp_coefficients(*params, t);

    long long unmatched_b = 0, unmatched_f = 0;

    {
        const Hamiltonian h = h_two_boson(g, 0.0);
        const EvolutionOperator u = evolve(h, t);
        rec.boson_rows = reconcile(boson_table(*params), coeffs, u.u, h.basis.states,
                                   /*magnitudes=*/false, tol, rec.t_unsuitable, unmatched_b);
    }
    {
        const Hamiltonian h = h_two_fermion(g);
        const EvolutionOperator u = evolve(h, t);
        rec.fermion_rows = reconcile(fermion_table(*params), coeffs, u.u, h.basis.states,
                                     /*magnitudes=*/true, tol, rec.t_unsuitable, unmatched_f);
    }

    rec.boson_ok = unmatched_b == 0 &&
                   std::all_of(rec.boson_rows.begin(), rec.boson_rows.end(),
                               [](const RowCheck& c) { return c.ok; });
    rec.fermion_ok = unmatched_f == 0 &&
                     std::all_of(rec.fermion_rows.begin(), rec.fermion_rows.end(),
                                 [](const RowCheck& c) { return c.ok; });
    rec.all_ok = rec.boson_ok && rec.fermion_ok;
    return rec;
}

}  // namespace qwalk

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qwalk/tables.hpp"

using namespace qwalk;

namespace {

// Brute-force quadruple-loop oracle for n_{(4,0)a}: pairs (i<j), (k<l) with
// all four hops present.
long long brute_40a(const Graph& g) {
    const int n = g.size();
    long long count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l)
                    if (g.edge(j, l) && g.edge(i, l) && g.edge(j, k) && g.edge(i, k)) ++count;
    return count;
}

// n_{(4,0)b}: exactly one of the four hops absent (including the i != k guard).
long long brute_40b(const Graph& g) {
    const int n = g.size();
    long long count = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    if (i == k || i == l || j == k || j == l) continue;  // (4,0) only
                    int hops = (g.edge(i, k) ? 1 : 0) + (g.edge(j, l) ? 1 : 0) +
                               (g.edge(i, l) ? 1 : 0) + (g.edge(j, k) ? 1 : 0);
                    if (hops == 3) ++count;
                }
    return count;
}

long long class_subtotal(const CountTable& t, ElementClass cls) {
    long long acc = 0;
    for (const auto& r : t.rows)
        if (r.cls == cls) acc += r.count;
    return acc;
}

}  // namespace

TEST_CASE("classify") {
    CHECK(classify(3, 4, 2, 4) == ElementClass{3, 1});
    CHECK(classify(1, 1, 1, 1) == ElementClass{1, 2});
    CHECK(classify(1, 2, 3, 4) == ElementClass{4, 0});
    CHECK(classify(1, 2, 1, 2) == ElementClass{2, 2});
    CHECK(classify(1, 1, 2, 2) == ElementClass{2, 0});
    CHECK(classify(1, 1, 1, 2) == ElementClass{2, 1});
    CHECK(classify(1, 1, 2, 3) == ElementClass{3, 0});
}

TEST_CASE("boson table for (16,6,2,2)") {
    CountTable t = boson_table(SrgParams{16, 6, 2, 2});
    CHECK(t.rows.size() == 22);
    // leading (4,0) row: 2b^2 + 2g^2 + 4bg occurs 120 times
    CHECK(t.rows[0].value == MonomialVector{0, 2, 2, 0, 0, 4});
    CHECK(t.rows[0].count == 120);
    CHECK(class_subtotal(t, {4, 0}) == 10920);
    CHECK(class_subtotal(t, {3, 0}) == 3360);
    CHECK(class_subtotal(t, {3, 1}) == 3360);
    CHECK(class_subtotal(t, {2, 0}) == 240);
    CHECK(class_subtotal(t, {2, 1}) == 480);
    CHECK(class_subtotal(t, {2, 2}) == 120);
    CHECK(class_subtotal(t, {1, 2}) == 16);
    CHECK(t.grand_total == 18496);
    long long acc = 0;
    for (const auto& r : t.rows) acc += r.count;
    CHECK(acc == t.grand_total);
}

TEST_CASE("fermion table for (16,6,2,2)") {
    CountTable t = fermion_table(SrgParams{16, 6, 2, 2});
    CHECK(t.rows.size() == 12);
    CHECK(class_subtotal(t, {4, 0}) == 10920);
    CHECK(class_subtotal(t, {3, 1}) == 3360);
    CHECK(class_subtotal(t, {2, 2}) == 120);
    CHECK(t.grand_total == 14400);
    long long acc = 0;
    for (const auto& r : t.rows) acc += r.count;
    CHECK(acc == t.grand_total);
}

TEST_CASE("tables are family functions, not graph functions") {
    CountTable rook_b = boson_table(*detect_srg(rook_4x4()));
    CountTable shri_b = boson_table(*detect_srg(shrikhande()));
    REQUIRE(rook_b.rows.size() == shri_b.rows.size());
    for (size_t i = 0; i < rook_b.rows.size(); ++i) {
        CHECK(rook_b.rows[i].value == shri_b.rows[i].value);
        CHECK(rook_b.rows[i].count == shri_b.rows[i].count);
    }
}

TEST_CASE("closed-form quadruple counts against brute force") {
    for (const Graph& g : {rook_4x4(), shrikhande(), paley(13), paley(17)}) {
        auto p = detect_srg(g);
        REQUIRE(p.has_value());
        CHECK(count_40a(*p) == brute_40a(g));
        CHECK(count_40b(*p) == brute_40b(g));
    }
    SrgParams p{16, 6, 2, 2};
    CHECK(count_40a(p) == 120);
    CHECK(count_40b(p) == 1728);
}

TEST_CASE("verify_tables reconciles both (16,6,2,2) members") {
    Reconciliation rook = verify_tables(rook_4x4(), 1.0);
    CHECK(rook.all_ok);
    CHECK_FALSE(rook.t_unsuitable);
    Reconciliation shri = verify_tables(shrikhande(), 1.0);
    CHECK(shri.all_ok);

    REQUIRE(rook.boson_rows.size() == shri.boson_rows.size());
    for (size_t i = 0; i < rook.boson_rows.size(); ++i) {
        CHECK(rook.boson_rows[i].row.count == shri.boson_rows[i].row.count);
        CHECK(rook.boson_rows[i].observed == shri.boson_rows[i].observed);
    }
}

TEST_CASE("verify_tables on paley(13)") {
    // Families with lambda - mu = -1 have theta + tau = -1, which makes
    // |theta e^{it theta} - tau e^{it tau}| symmetric under theta <-> tau:
    // two fermion magnitudes coincide for every t. The boson side (matched by
    // complex value) is unaffected; the fermion side must flag the collision
    // and the colliding rows' counts must still merge consistently.
    Reconciliation rec = verify_tables(paley(13), 1.0);
    CHECK(rec.boson_ok);
    CHECK(rec.t_unsuitable);

    std::vector<bool> used(rec.fermion_rows.size(), false);
    for (size_t i = 0; i < rec.fermion_rows.size(); ++i) {
        if (used[i]) continue;
        long long expect = 0, observed = 0;
        for (size_t j = i; j < rec.fermion_rows.size(); ++j) {
            if (used[j]) continue;
            if (rec.fermion_rows[j].row.cls == rec.fermion_rows[i].row.cls &&
                std::abs(std::abs(rec.fermion_rows[j].expected_value) -
                         std::abs(rec.fermion_rows[i].expected_value)) < 1e-9) {
                expect += rec.fermion_rows[j].row.count;
                observed += rec.fermion_rows[j].observed;
                used[j] = true;
            }
        }
        CHECK(expect == observed);
    }
}

TEST_CASE("verify_tables at t=0 degenerates to the identity histogram") {
    // alpha=1, beta=gamma=0: many rows collide, so t=0 must be flagged
    Reconciliation rec = verify_tables(paley(13), 0.0);
    CHECK(rec.t_unsuitable);
    // the identity pattern itself: dim diagonal ones, rest zeros
    long long ones = 0, zeros = 0;
    for (const auto& c : rec.boson_rows) {
        if (std::abs(c.expected_value - std::complex<double>(1.0)) < 1e-12)
            ones += c.observed;
        else if (std::abs(c.expected_value) < 1e-12)
            zeros += c.observed;
    }
    const long long dim = 13 * 14 / 2;
    CHECK(ones == dim);
    CHECK(ones + zeros == dim * dim);
}

TEST_CASE("verify_tables rejects non-SRG input") {
    CHECK_THROWS_AS(verify_tables(path_graph(4), 1.0), std::invalid_argument);
}

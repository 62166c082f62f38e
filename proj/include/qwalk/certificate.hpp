#pragma once

#include <string>
#include <vector>

#include "qwalk/evolution.hpp"

namespace qwalk {

/// Sorted list of Green's-function magnitudes; the comparable fingerprint.
struct GfCertificate {
    std::vector<double> magnitudes;  // ascending
    WalkKind kind = WalkKind::Single;
    double t = 0.0;
    double interaction_u = 0.0;
    int n = 0;
};

GfCertificate certificate(const EvolutionOperator& u);

// Full pipeline for one graph. multi_time concatenates t in {0.7, 1.0, 1.3}
// scaled by t (guards against accidental coincidences at a single time).
GfCertificate certificate_for(const Graph& g, WalkKind kind, double t, double u,
                              bool multi_time = false);

// L1 distance of the sorted lists; throws on length/meta mismatch.
double delta(const GfCertificate& a, const GfCertificate& b);

double default_threshold(size_t certificate_length);

struct ComparisonResult {
    double delta = 0.0;
    double threshold = 0.0;
    bool distinguished = false;
    std::string a_id, b_id;
    bool size_mismatch = false;  // trivially non-isomorphic, no evolution run
};

// threshold < 0 selects the default 1e-8 * certificate length.
ComparisonResult compare(const Graph& g1, const Graph& g2, WalkKind kind, double t,
                         double u, double threshold = -1.0, bool multi_time = false);

struct PairResult {
    int i = 0, j = 0;
    double delta = 0.0;
    bool distinguished = false;
    bool size_mismatch = false;
};

struct BatchReport {
    double min_delta = 0.0;
    int argmin_i = -1, argmin_j = -1;
    std::vector<PairResult> pairs;  // ordered by (i, j)
};

// All C(m,2) comparisons; deterministic for any worker count. Graphs with
// mixed vertex counts are compared within n-classes, cross-class pairs are
// reported as size mismatches.
BatchReport batch_min_delta(const std::vector<Graph>& graphs, WalkKind kind, double t,
                            double u, double threshold = -1.0, int workers = 0,
                            bool multi_time = false);

}  // namespace qwalk

#include "qwalk/certificate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace qwalk {

namespace {

Hamiltonian build_walk(const Graph& g, WalkKind kind, double u) {
    switch (kind) {
        case WalkKind::Single: return h_single(g);
        case WalkKind::Boson: return h_two_boson(g, u);
        case WalkKind::Hardcore: return h_two_hardcore(g);
        case WalkKind::Fermion: return h_two_fermion(g);
    }
    throw std::invalid_argument("build_walk: unknown walk kind");
}

}  // namespace

GfCertificate certificate(const EvolutionOperator& u) {
    GfCertificate c;
    c.kind = u.kind;
    c.t = u.t;
    c.interaction_u = u.interaction_u;
    c.n = u.n;
    c.magnitudes.reserve(static_cast<size_t>(u.u.rows()) * u.u.cols());
    for (Eigen::Index r = 0; r < u.u.rows(); ++r)
        for (Eigen::Index col = 0; col < u.u.cols(); ++col)
            c.magnitudes.push_back(std::abs(u.u(r, col)));
    std::sort(c.magnitudes.begin(), c.magnitudes.end());
    return c;
}

GfCertificate certificate_for(const Graph& g, WalkKind kind, double t, double u,
                              bool multi_time) {
    const Hamiltonian h = build_walk(g, kind, u);
    if (!multi_time) return certificate(evolve(h, t));

    GfCertificate out;
    for (double scale : {0.7, 1.0, 1.3}) {
        GfCertificate c = certificate(evolve(h, scale * t));
        out.magnitudes.insert(out.magnitudes.end(), c.magnitudes.begin(),
                              c.magnitudes.end());
    }
    // the concatenation is sorted per-block; a global sort keeps delta a metric
    std::sort(out.magnitudes.begin(), out.magnitudes.end());
    out.kind = kind;
    out.t = t;
    out.interaction_u = (kind == WalkKind::Boson) ? u : 0.0;
    out.n = g.size();
    return out;
}

double delta(const GfCertificate& a, const GfCertificate& b) {
    if (a.magnitudes.size() != b.magnitudes.size() || a.kind != b.kind ||
        a.t != b.t || a.interaction_u != b.interaction_u || a.n != b.n)
        throw std::invalid_argument("delta: certificates are not comparable");
    double d = 0.0;
    for (size_t i = 0; i < a.magnitudes.size(); ++i)
        d += std::abs(a.magnitudes[i] - b.magnitudes[i]);
    return d;
}

double default_threshold(size_t certificate_length) {
    return 1e-8 * static_cast<double>(certificate_length);
}

ComparisonResult compare(const Graph& g1, const Graph& g2, WalkKind kind, double t,
                         double u, double threshold, bool multi_time) {
    ComparisonResult r;
    if (g1.size() != g2.size()) {
        r.delta = std::numeric_limits<double>::infinity();
        r.threshold = threshold < 0 ? 0.0 : threshold;
        r.distinguished = true;
        r.size_mismatch = true;
        return r;
    }
    const GfCertificate a = certificate_for(g1, kind, t, u, multi_time);
    const GfCertificate b = certificate_for(g2, kind, t, u, multi_time);
    r.delta = delta(a, b);
    r.threshold = threshold < 0 ? default_threshold(a.magnitudes.size()) : threshold;
    r.distinguished = r.delta > r.threshold;
    return r;
}

BatchReport batch_min_delta(const std::vector<Graph>& graphs, WalkKind kind, double t,
                            double u, double threshold, int workers, bool multi_time) {
    const int m = static_cast<int>(graphs.size());
    if (m < 2) throw std::invalid_argument("batch_min_delta: need at least 2 graphs");
    if (workers <= 0)
        workers = std::max(1u, std::thread::hardware_concurrency());

    // Certificates once per graph, shared read-only among all pairings.
    std::vector<GfCertificate> certs(m);
    {
        std::atomic<int> next{0};
        auto work = [&] {
            for (int i = next.fetch_add(1); i < m; i = next.fetch_add(1))
                certs[i] = certificate_for(graphs[i], kind, t, u, multi_time);
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < std::min(workers, m); ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    std::vector<PairResult> pairs;
    pairs.reserve(static_cast<size_t>(m) * (m - 1) / 2);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            pairs.push_back({i, j, 0.0, false, graphs[i].size() != graphs[j].size()});

    {
        std::atomic<size_t> next{0};
        auto work = [&] {
            for (size_t p = next.fetch_add(1); p < pairs.size(); p = next.fetch_add(1)) {
                PairResult& pr = pairs[p];
                if (pr.size_mismatch) {
                    pr.delta = std::numeric_limits<double>::infinity();
                    pr.distinguished = true;
                    continue;
                }
                pr.delta = delta(certs[pr.i], certs[pr.j]);
                const double th = threshold < 0
                                      ? default_threshold(certs[pr.i].magnitudes.size())
                                      : threshold;
                pr.distinguished = pr.delta > th;
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    BatchReport rep;
    rep.min_delta = std::numeric_limits<double>::infinity();
    // sequential min over the (i, j)-ordered table: ties break to the lowest pair
    for (const PairResult& pr : pairs) {
        if (pr.delta < rep.min_delta) {
            rep.min_delta = pr.delta;
            rep.argmin_i = pr.i;
            rep.argmin_j = pr.j;
        }
    }
    rep.pairs = std::move(pairs);
    return rep;
}

}  // namespace qwalk

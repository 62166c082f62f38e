#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qwalk {

/// Simple undirected graph with a symmetric, zero-diagonal adjacency matrix.
class Graph {
public:
    explicit Graph(int n);

    int size() const { return n_; }

    bool edge(int i, int j) const {
        check_index(i);
        check_index(j);
        return adj_[static_cast<size_t>(i) * n_ + j] != 0;
    }

    void set_edge(int i, int j, bool present = true);

    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;

    Eigen::MatrixXd adjacency() const;
    Eigen::MatrixXi adjacency_int() const;

    bool operator==(const Graph&) const = default;

private:
    void check_index(int i) const;

    int n_;
    std::vector<uint8_t> adj_;  // row-major, kept symmetric
};

// graph6 codec (bit-exact; single-byte header for n <= 62, long form up to 258047)
Graph parse_graph6(const std::string& bytes);
std::string encode_graph6(const Graph& g);

// Newline-delimited multi-graph catalog files.
std::vector<Graph> parse_graph6_lines(const std::string& text);

Graph relabel(const Graph& g, const std::vector<int>& perm);

// Built-in constructors
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph rook_4x4();
Graph shrikhande();
Graph paley(int q);  // prime q = 1 (mod 4)

// name in {cycle, path, rook4x4, shrikhande, paley}; param used by cycle/path/paley
Graph build_named(const std::string& name, int param = -1);

}  // namespace qwalk

#include "qwalk/graph.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qwalk {

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
    adj_.assign(static_cast<size_t>(n) * n, 0);
}

void Graph::check_index(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("Graph: vertex index out of range");
}

void Graph::set_edge(int i, int j, bool present) {
    check_index(i);
    check_index(j);
    if (i == j) throw std::invalid_argument("Graph: self-loops not allowed");
    uint8_t v = present ? 1 : 0;
    adj_[static_cast<size_t>(i) * n_ + j] = v;
    adj_[static_cast<size_t>(j) * n_ + i] = v;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (edge(i, j)) out.emplace_back(i, j);
    return out;
}

int Graph::edge_count() const { return static_cast<int>(edges().size()); }

Eigen::MatrixXd Graph::adjacency() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (adj_[static_cast<size_t>(i) * n_ + j]) a(i, j) = 1.0;
    return a;
}

Eigen::MatrixXi Graph::adjacency_int() const {
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (adj_[static_cast<size_t>(i) * n_ + j]) a(i, j) = 1;
    return a;
}

namespace {

void check_printable(unsigned char c) {
    if (c < 63 || c > 126)
        throw std::invalid_argument("graph6: malformed input (byte outside 63..126)");
}

}  // namespace

Graph parse_graph6(const std::string& bytes) {
    if (bytes.empty()) throw std::invalid_argument("graph6: empty input");
    for (unsigned char c : bytes) check_printable(c);

    size_t pos = 0;
    long n;
    if (static_cast<unsigned char>(bytes[0]) == 126) {
        // long form: '~' then three sextets (n <= 258047); '~~' form not supported
        if (bytes.size() < 4 || static_cast<unsigned char>(bytes[1]) == 126)
            throw std::invalid_argument("graph6: unsupported or truncated header");
        n = 0;
        for (int i = 1; i <= 3; ++i)
            n = (n << 6) | (static_cast<unsigned char>(bytes[i]) - 63);
        pos = 4;
    } else {
        n = static_cast<unsigned char>(bytes[0]) - 63;
        pos = 1;
    }
    if (n < 1) throw std::invalid_argument("graph6: vertex count must be >= 1");

    long nbits = n * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(bytes.size()) - static_cast<long>(pos) < nbytes)
        throw std::invalid_argument("graph6: truncated input");

    Graph g(static_cast<int>(n));
    long bit = 0;
    // upper-triangle bits in column order: (0,1),(0,2),(1,2),(0,3),...
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned char c = static_cast<unsigned char>(bytes[pos + bit / 6]) - 63;
            if ((c >> (5 - bit % 6)) & 1) g.set_edge(i, j);
        }
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    int n = g.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph6: vertex count too large to encode");
    }

    long nbits = static_cast<long>(n) * (n - 1) / 2;
    long nbytes = (nbits + 5) / 6;
    std::string body(static_cast<size_t>(nbytes), 0);
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.edge(i, j)) body[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
        }
    }
    for (char& c : body) c = static_cast<char>(c + 63);
    out += body;
    return out;
}

std::vector<Graph> parse_graph6_lines(const std::string& text) {
    std::vector<Graph> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    int n = g.size();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<char> seen(n, 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p])
            throw std::invalid_argument("relabel: not a bijection on 0..n-1");
        seen[p] = 1;
    }
    Graph h(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.edge(i, j)) h.set_edge(perm[i], perm[j]);
    return h;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.set_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1);
    return g;
}

Graph rook_4x4() {
    // vertices (a,b) in {0..3}^2, adjacent iff same row or same column
    Graph g(16);
    for (int v = 0; v < 16; ++v) {
        for (int w = v + 1; w < 16; ++w) {
            if (v / 4 == w / 4 || v % 4 == w % 4) g.set_edge(v, w);
        }
    }
    return g;
}

Graph shrikhande() {
    // Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}
    Graph g(16);
    const int dx[] = {1, 3, 0, 0, 1, 3};
    const int dy[] = {0, 0, 1, 3, 1, 3};
    for (int v = 0; v < 16; ++v) {
        int a = v / 4, b = v % 4;
        for (int d = 0; d < 6; ++d) {
            int w = ((a + dx[d]) % 4) * 4 + (b + dy[d]) % 4;
            if (w != v) g.set_edge(v, w);
        }
    }
    return g;
}

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

Graph paley(int q) {
    if (!is_prime(q) || q % 4 != 1)
        throw std::invalid_argument("paley: modulus must be a prime = 1 (mod 4)");
    std::vector<char> residue(q, 0);
    for (int x = 1; x < q; ++x) residue[static_cast<long>(x) * x % q] = 1;
    Graph g(q);
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (residue[(j - i) % q]) g.set_edge(i, j);
    return g;
}

Graph build_named(const std::string& name, int param) {
    if (name == "rook4x4") return rook_4x4();
    if (name == "shrikhande") return shrikhande();
    if (name == "cycle") return cycle_graph(param);
    if (name == "path") return path_graph(param);
    if (name == "paley") return paley(param);
    throw std::invalid_argument("build_named: unknown constructor '" + name + "'");
}

}  // namespace qwalk

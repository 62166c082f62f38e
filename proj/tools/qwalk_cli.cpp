// qwalk: graph-walk certificates from the command line.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalk/certificate.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/expansion.hpp"
#include "qwalk/srg.hpp"
#include "qwalk/tables.hpp"

using json = nlohmann::ordered_json;
using namespace qwalk;

namespace {

constexpr const char* kVersion = "1.0.0";

// exit codes: 0 ok, 1 distinguishable pair found, 2 input error
constexpr int kExitOk = 0;
constexpr int kExitDistinguished = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string graph_hash(const Graph& g) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(encode_graph6(g))));
    return buf;
}

// A path is either a file of newline-delimited graph6 lines or a pseudo-path
// like "builtin:shrikhande" or "builtin:paley:13".
std::vector<Graph> load_graphs(const std::string& path) {
    if (path.rfind("builtin:", 0) == 0) {
        std::string rest = path.substr(8);
        std::string name = rest;
        int param = -1;
        if (auto colon = rest.find(':'); colon != std::string::npos) {
            name = rest.substr(0, colon);
            try {
                param = std::stoi(rest.substr(colon + 1));
            } catch (const std::exception&) {
                throw InputError("bad builtin parameter in '" + path + "'");
            }
        }
        try {
            return {build_named(name, param)};
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        auto graphs = parse_graph6_lines(buf.str());
        if (graphs.empty()) throw InputError("no graphs in '" + path + "'");
        return graphs;
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError("while reading '" + path + "': " + e.what());
    }
}

Graph load_one(const std::string& path) {
    auto graphs = load_graphs(path);
    if (graphs.size() != 1)
        throw InputError("'" + path + "' holds " + std::to_string(graphs.size()) +
                         " graphs, expected exactly one");
    return graphs.front();
}

struct Output {
    std::string format = "json";  // json or csv
    std::string path;             // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw InputError("cannot write '" + path + "'");
        out << text;
        if (!text.empty() && text.back() != '\n') out << '\n';
    }
};

json run_header(const std::string& command, const json& config,
                const std::vector<Graph>& graphs) {
    json hashes = json::array();
    for (const auto& g : graphs) hashes.push_back(graph_hash(g));
    return {{"tool", "qwalk"},
            {"version", kVersion},
            {"command", command},
            {"config", config},
            {"graph_hashes", hashes}};
}

std::string csv_preamble(const json& header) {
    std::string out;
    out += "# tool=qwalk version=" + std::string(kVersion) +
           " command=" + header["command"].get<std::string>() + "\n";
    out += "# config=" + header["config"].dump() + "\n";
    out += "# graph_hashes=" + header["graph_hashes"].dump() + "\n";
    return out;
}

Hamiltonian make_hamiltonian(const Graph& g, WalkKind kind, double u) {
    switch (kind) {
        case WalkKind::Single: return h_single(g);
        case WalkKind::Boson: return h_two_boson(g, u);
        case WalkKind::Hardcore: return h_two_hardcore(g);
        case WalkKind::Fermion: return h_two_fermion(g);
    }
    throw InputError("unknown walk kind");
}

json comparison_json(const ComparisonResult& r) {
    return {{"delta", r.delta},
            {"threshold", r.threshold},
            {"distinguished", r.distinguished},
            {"size_mismatch", r.size_mismatch},
            {"a", r.a_id},
            {"b", r.b_id}};
}

int cmd_parse(const std::string& path, const Output& out) {
    auto graphs = load_graphs(path);
    json header = run_header("parse", {{"input", path}}, graphs);
    json items = json::array();
    for (size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        items.push_back({{"index", i},
                         {"vertices", g.size()},
                         {"edges", g.edge_count()},
                         {"graph6", encode_graph6(g)},
                         {"hash", graph_hash(g)}});
    }
    if (out.format == "csv") {
        std::string text = csv_preamble(header);
        text += "index,vertices,edges,graph6,hash\n";
        for (const auto& it : items)
            text += std::to_string(it["index"].get<size_t>()) + "," +
                    std::to_string(it["vertices"].get<int>()) + "," +
                    std::to_string(it["edges"].get<int>()) + "," +
                    it["graph6"].get<std::string>() + "," +
                    it["hash"].get<std::string>() + "\n";
        out.write(text);
    } else {
        header["graphs"] = items;
        out.write(header.dump(2));
    }
    return kExitOk;
}

int cmd_check_srg(const std::string& path, const Output& out) {
    auto graphs = load_graphs(path);
    json header = run_header("check-srg", {{"input", path}}, graphs);
    json items = json::array();
    for (size_t i = 0; i < graphs.size(); ++i) {
        auto p = detect_srg(graphs[i]);
        json item = {{"index", i}, {"strongly_regular", p.has_value()}};
        if (p) {
            item["params"] = {{"n", p->n}, {"k", p->k}, {"lambda", p->lambda}, {"mu", p->mu}};
        }
        items.push_back(item);
    }
    header["graphs"] = items;
    out.write(header.dump(2));
    return kExitOk;
}

int cmd_spectrum(const std::string& path, WalkKind kind, double u, const Output& out) {
    auto graphs = load_graphs(path);
    json header = run_header(
        "spectrum", {{"input", path}, {"kind", to_string(kind)}, {"interaction", u}},
        graphs);
    json items = json::array();
    for (size_t i = 0; i < graphs.size(); ++i) {
        SpectrumReport rep = spectrum(make_hamiltonian(graphs[i], kind, u));
        json levels = json::array();
        for (auto& [e, d] : rep.levels)
            levels.push_back({{"energy", e}, {"degeneracy", d}});
        items.push_back(
            {{"index", i}, {"grouping_tol", rep.grouping_tol}, {"levels", levels}});
    }
    header["graphs"] = items;
    out.write(header.dump(2));
    return kExitOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b, WalkKind kind,
                double t, double u, double threshold, bool multi_time,
                const Output& out) {
    Graph a = load_one(path_a);
    Graph b = load_one(path_b);
    ComparisonResult r = compare(a, b, kind, t, u, threshold, multi_time);
    r.a_id = path_a;
    r.b_id = path_b;
    json header = run_header("compare",
                             {{"a", path_a},
                              {"b", path_b},
                              {"kind", to_string(kind)},
                              {"time", t},
                              {"interaction", u},
                              {"threshold", threshold},
                              {"multi_time", multi_time}},
                             {a, b});
    header["result"] = comparison_json(r);
    out.write(header.dump(2));
    return r.distinguished ? kExitDistinguished : kExitOk;
}

int cmd_batch(const std::string& path, WalkKind kind, double t, double u,
              double threshold, int workers, bool multi_time, const Output& out) {
    auto graphs = load_graphs(path);
    BatchReport rep = batch_min_delta(graphs, kind, t, u, threshold, workers, multi_time);
    json header = run_header("batch",
                             {{"input", path},
                              {"kind", to_string(kind)},
                              {"time", t},
                              {"interaction", u},
                              {"threshold", threshold},
                              {"workers", workers},
                              {"multi_time", multi_time}},
                             graphs);
    if (out.format == "csv") {
        std::string text = csv_preamble(header);
        text += "# min_delta=" + json(rep.min_delta).dump() +
                " argmin_i=" + std::to_string(rep.argmin_i) +
                " argmin_j=" + std::to_string(rep.argmin_j) + "\n";
        text += "i,j,delta,distinguished,size_mismatch\n";
        for (const auto& p : rep.pairs)
            text += std::to_string(p.i) + "," + std::to_string(p.j) + "," +
                    json(p.delta).dump() + "," + (p.distinguished ? "1" : "0") + "," +
                    (p.size_mismatch ? "1" : "0") + "\n";
        out.write(text);
    } else {
        json pairs = json::array();
        for (const auto& p : rep.pairs)
            pairs.push_back({{"i", p.i},
                             {"j", p.j},
                             {"delta", p.delta},
                             {"distinguished", p.distinguished},
                             {"size_mismatch", p.size_mismatch}});
        header["summary"] = {{"graphs", graphs.size()},
                             {"pairs", rep.pairs.size()},
                             {"min_delta", rep.min_delta},
                             {"argmin_i", rep.argmin_i},
                             {"argmin_j", rep.argmin_j}};
        header["pairs"] = pairs;
        out.write(header.dump(2));
    }
    for (const auto& p : rep.pairs)
        if (p.distinguished) return kExitDistinguished;
    return kExitOk;
}

int cmd_tables(const std::string& path, double t, const Output& out) {
    auto graphs = load_graphs(path);
    json header = run_header("tables", {{"input", path}, {"time", t}}, graphs);
    json items = json::array();
    for (size_t i = 0; i < graphs.size(); ++i) {
        Reconciliation rec;
        try {
            rec = verify_tables(graphs[i], t);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        auto rows = [](const std::vector<RowCheck>& checks) {
            json arr = json::array();
            for (const auto& c : checks)
                arr.push_back({{"class",
                                {{"distinct", c.row.cls.distinct},
                                 {"shared", c.row.cls.shared}}},
                               {"value", monomials_to_string(c.row.value)},
                               {"expected_count", c.row.count},
                               {"observed_count", c.observed},
                               {"ok", c.ok}});
            return arr;
        };
        items.push_back({{"index", i},
                         {"family",
                          {{"n", rec.family.n},
                           {"k", rec.family.k},
                           {"lambda", rec.family.lambda},
                           {"mu", rec.family.mu}}},
                         {"time", rec.t},
                         {"boson_ok", rec.boson_ok},
                         {"fermion_ok", rec.fermion_ok},
                         {"all_ok", rec.all_ok},
                         {"t_unsuitable", rec.t_unsuitable},
                         {"boson_rows", rows(rec.boson_rows)},
                         {"fermion_rows", rows(rec.fermion_rows)}});
    }
    header["graphs"] = items;
    out.write(header.dump(2));
    return kExitOk;
}

int cmd_expand(const std::string& path_a, const std::string& path_b, double u, double t,
               int max_order, const Output& out) {
    Graph a = load_one(path_a);
    Graph b = load_one(path_b);
    if (a.size() != b.size())
        throw InputError("expand needs graphs of equal order");
    auto deltas = per_order_delta(a, b, u, t, max_order);
    json header = run_header("expand",
                             {{"a", path_a},
                              {"b", path_b},
                              {"interaction", u},
                              {"time", t},
                              {"max_order", max_order}},
                             {a, b});
    if (out.format == "json") {
        json arr = json::array();
        for (size_t m = 0; m < deltas.size(); ++m)
            arr.push_back({{"order", m}, {"delta", deltas[m]}});
        header["orders"] = arr;
        out.write(header.dump(2));
    } else {
        std::string text = csv_preamble(header);
        text += "order,delta\n";
        for (size_t m = 0; m < deltas.size(); ++m)
            text += std::to_string(m) + "," + json(deltas[m]).dump() + "\n";
        out.write(text);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-walk Green's-function certificates for graph comparison"};
    app.require_subcommand(1);

    std::string kind_name = "hardcore";
    double t = 1.0;
    double u = 0.0;
    double threshold = -1.0;
    int workers = 0;
    bool multi_time = false;
    int max_order = 4;
    Output out;

    auto add_common = [&](CLI::App* sub, bool with_kind = true) {
        if (with_kind)
            sub->add_option("--kind", kind_name, "single, boson, hardcore or fermion")
                ->check(CLI::IsMember({"single", "boson", "hardcore", "fermion"}));
        sub->add_option("--format", out.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", out.path, "output file (default stdout)");
    };

    std::string input, input_b;

    auto* parse_cmd = app.add_subcommand("parse", "summarize graphs in a graph6 file");
    parse_cmd->add_option("file", input)->required();
    add_common(parse_cmd, false);

    auto* srg_cmd = app.add_subcommand("check-srg", "detect strong regularity per graph");
    srg_cmd->add_option("file", input)->required();
    add_common(srg_cmd, false);

    auto* spec_cmd = app.add_subcommand("spectrum", "energy levels and degeneracies");
    spec_cmd->add_option("file", input)->required();
    spec_cmd->add_option("--interaction", u, "on-site energy (boson walk)");
    add_common(spec_cmd);

    auto* cmp_cmd = app.add_subcommand("compare", "certificate distance of two graphs");
    cmp_cmd->add_option("a", input)->required();
    cmp_cmd->add_option("b", input_b)->required();
    cmp_cmd->add_option("--time", t, "evolution time");
    cmp_cmd->add_option("--interaction", u, "on-site energy (boson walk)");
    cmp_cmd->add_option("--threshold", threshold, "decision threshold (default 1e-8 per element)");
    cmp_cmd->add_flag("--multi-time", multi_time, "concatenate three evolution times");
    add_common(cmp_cmd);

    auto* batch_cmd = app.add_subcommand("batch", "all-pairs comparison of a catalog");
    batch_cmd->add_option("file", input)->required();
    batch_cmd->add_option("--time", t, "evolution time");
    batch_cmd->add_option("--interaction", u, "on-site energy (boson walk)");
    batch_cmd->add_option("--threshold", threshold, "decision threshold");
    batch_cmd->add_option("--workers", workers, "thread count (default: hardware)");
    batch_cmd->add_flag("--multi-time", multi_time, "concatenate three evolution times");
    add_common(batch_cmd);

    auto* tab_cmd = app.add_subcommand(
        "tables", "reconcile closed-form element tables against evolved matrices");
    tab_cmd->add_option("file", input)->required();
    tab_cmd->add_option("--time", t, "evolution time");
    add_common(tab_cmd, false);

    double expand_u = 50.0;
    double expand_t = 0.01;
    auto* exp_cmd =
        app.add_subcommand("expand", "per-order short-time certificate distances");
    exp_cmd->add_option("a", input)->required();
    exp_cmd->add_option("b", input_b)->required();
    exp_cmd->add_option("--interaction", expand_u, "on-site energy");
    exp_cmd->add_option("--time", expand_t, "evolution time");
    exp_cmd->add_option("--max-order", max_order, "highest series order")
        ->check(CLI::Range(0, 4));
    add_common(exp_cmd, false);

    CLI11_PARSE(app, argc, argv);

    try {
        WalkKind kind = walk_kind_from_string(kind_name);
        if (parse_cmd->parsed()) return cmd_parse(input, out);
        if (srg_cmd->parsed()) return cmd_check_srg(input, out);
        if (spec_cmd->parsed()) return cmd_spectrum(input, kind, u, out);
        if (cmp_cmd->parsed())
            return cmd_compare(input, input_b, kind, t, u, threshold, multi_time, out);
        if (batch_cmd->parsed())
            return cmd_batch(input, kind, t, u, threshold, workers, multi_time, out);
        if (tab_cmd->parsed()) return cmd_tables(input, t, out);
        if (exp_cmd->parsed())
            return cmd_expand(input, input_b, expand_u, expand_t, max_order, out);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}

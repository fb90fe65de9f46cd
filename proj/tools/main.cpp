#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hunters/classes.hpp"
#include "hunters/generators.hpp"
#include "hunters/kernel.hpp"
#include "hunters/solver.hpp"
#include "hunters/tree.hpp"

using namespace hunters;
namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path.string() + "'");
    out << text;
}

fs::path out_dir(const std::string& dir) {
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) throw UsageError("cannot create '" + dir + "'");
    return p;
}

VertexSet start_set(const Graph& g, const std::string& text) {
    if (text == "all") return g.all();
    if (text == "red" || text == "white") {
        auto bip = bipartition(g);
        if (!bip) throw BadParameters("--start " + text + " needs a bipartite graph");
        return text == "red" ? bip->red : bip->white;
    }
    VertexSet w(g.n());
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item.empty()) throw UsageError("bad --start value '" + text + "'");
        if (v < 0 || v >= g.n()) throw BadParameters("start vertex " + item + " out of range");
        w.set(v);
    }
    if (w.none()) throw UsageError("empty --start list");
    return w;
}

std::map<std::string, int> parse_params(const std::string& text) {
    std::map<std::string, int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("bad --params entry '" + item + "'");
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item.substr(eq + 1), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() - eq - 1) throw UsageError("bad --params entry '" + item + "'");
        out[item.substr(0, eq)] = value;
    }
    return out;
}

int param(const std::map<std::string, int>& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw UsageError("missing parameter '" + key + "'");
    return it->second;
}

std::string detect_class(const Graph& g) {
    if (is_tree(g)) return "tree";
    if (recognize_split(g)) return "split";
    if (recognize_cograph(g)) return "cograph";
    if (is_connected(g) && recognize_interval(g)) return "interval";
    throw BadParameters("graph is not a tree, split graph, cograph or interval graph");
}

struct Options {
    std::string graph, strategy, start = "all", mode = "h", cls = "auto", family, params, out;
    int k = 0;
    std::uint64_t seed = 0;
};

int run_compute(const Options& o, CLI::App* sub) {
    Graph g = parse_graph(read_file(o.graph));
    VertexSet w = start_set(g, o.start);
    Mode mode = o.mode == "mh" ? Mode::mh : Mode::h;
    if (sub->count("--k")) {
        if (o.k < 1) throw BadParameters("--k must be at least 1");
        Decision d = mode == Mode::h ? decide_h(g, w, o.k) : decide_mh(g, w, o.k);
        std::cout << o.mode << "<=" << o.k << " " << (d.yes ? "yes" : "no") << "\n";
        if (d.yes && !o.strategy.empty()) write_file(o.strategy, format_strategy(*d.strategy));
        return 0;
    }
    SolveResult r = mode == Mode::h ? hunter_number(g, w) : monotone_hunter_number(g, w);
    std::cout << o.mode << "=" << r.value << "\n";
    if (!o.strategy.empty()) write_file(o.strategy, format_strategy(r.strategy));
    if (!o.out.empty()) write_file(out_dir(o.out) / "strategy.s", format_strategy(r.strategy));
    return 0;
}

int run_verify(const Options& o) {
    Graph g = parse_graph(read_file(o.graph));
    Strategy s = parse_strategy(read_file(o.strategy));
    VertexSet w = start_set(g, o.start);
    validate_strategy(g, s);
    Trace t = trace(g, w, s);
    auto mono = check_monotone(g, w, s);
    bool win = t.winning();
    std::cout << "winning=" << (win ? "true" : "false") << " parsimonious=" << (is_parsimonious(g, w, s) ? "true" : "false")
              << " monotone=" << (mono.monotone ? "true" : "false") << "\n";
    std::cout << "hunters=" << s.hunters_used() << " rounds=" << s.length();
    if (win) std::cout << " effective=" << t.effective_length();
    std::cout << "\n";
    if (mono.violation)
        std::cout << "violation vertex=" << mono.violation->vertex << " cleared=" << mono.violation->cleared_round
                  << " recontaminated=" << mono.violation->recontaminated_round << "\n";
    if (!win) {
        auto walk = escape_witness(g, w, s);
        std::cout << "escape";
        for (int v : *walk) std::cout << " " << v;
        std::cout << "\n";
    }
    if (!o.out.empty()) write_file(out_dir(o.out) / "trace.txt", format_trace(t));
    return 0;
}

int run_kernelize(const Options& o) {
    Graph g = parse_graph(read_file(o.graph));
    if (o.k < 1) throw BadParameters("--k must be at least 1");
    KernelResult r = kernelize(g, o.k, vertex_cover(g, CoverMode::approx2));
    std::cout << "t=" << r.t << " k=" << r.k << " bound=" << r.size_bound << "\n";
    if (r.trivially_yes) {
        std::cout << "trivially_yes\n";
        return 0;
    }
    std::cout << "removed=" << r.removed << "\n";
    std::cout << "graph\n" << format_graph(r.reduced) << "map\n" << format_kernel_map(r);
    if (!o.out.empty()) {
        auto dir = out_dir(o.out);
        write_file(dir / "kernel.g", format_graph(r.reduced));
        write_file(dir / "kernel.map", format_kernel_map(r));
    }
    return 0;
}

FamilyInstance build_family(const Options& o, CLI::App* sub) {
    auto p = parse_params(o.params);
    if (o.family == "spider") return gen_spider(param(p, "k"), param(p, "q"));
    if (o.family == "T") return gen_T(param(p, "i"), param(p, "q"));
    if (o.family == "ternary") {
        FamilyInstance f;
        int n = param(p, "n");
        f.graph = gen_ternary(n);
        f.meta = {{"family", "ternary"}, {"n", std::to_string(n)}, {"vertices", std::to_string(f.graph.n())}};
        return f;
    }
    if (o.family == "splitmatch") return gen_split_matching(param(p, "a"));
    if (o.family == "cographgap") return gen_cograph_gap(param(p, "a"));
    if (o.family == "subdivision") return subdivide_for_two_hunters(parse_graph(read_file(o.graph)));
    // Random instances.
    if (!sub->count("--seed")) throw UsageError("random families need an explicit --seed");
    static const std::map<std::string, RandomKind> kinds{
        {"random-tree", RandomKind::tree},           {"random-split", RandomKind::split},
        {"random-cograph", RandomKind::cograph},     {"random-connected", RandomKind::connected},
        {"random-interval", RandomKind::interval},   {"random-bipartite", RandomKind::bipartite}};
    FamilyInstance f;
    int n = param(p, "n");
    f.graph = random_instance(kinds.at(o.family), n, o.seed);
    f.meta = {{"family", o.family}, {"n", std::to_string(n)}, {"seed", std::to_string(o.seed)}};
    return f;
}

int run_generate(const Options& o, CLI::App* sub) {
    FamilyInstance f = build_family(o, sub);
    if (o.out.empty()) {
        std::cout << format_graph(f.graph);
        return 0;
    }
    auto dir = out_dir(o.out);
    write_file(dir / "graph.g", format_graph(f.graph));
    std::string meta = format_meta(f);
    if (f.strategy) {
        write_file(dir / "strategy.s", format_strategy(*f.strategy));
        meta += std::string("start=") + (f.start_set ? "red" : "all") + "\n";
    }
    write_file(dir / "meta.txt", meta);
    std::cout << "vertices=" << f.graph.n() << " edges=" << f.graph.m();
    if (f.strategy) std::cout << " rounds=" << f.strategy->length() << " hunters=" << f.strategy->hunters_used();
    std::cout << "\n";
    return 0;
}

int run_compare(const Options& o) {
    Graph g = parse_graph(read_file(o.graph));
    require_connected(g);
    std::string cls = o.cls == "auto" ? detect_class(g) : o.cls;
    auto mh = monotone_hunter_number(g, g.all());
    bool match = true;
    std::ostringstream line;
    if (cls == "split") {
        auto sp = recognize_split(g);
        if (!sp) throw BadParameters("graph is not split");
        auto h = hunter_number(g, g.all());
        int sh = split_h(g, *sp).value, smh = split_mh(g, *sp).value;
        match = sh == h.value && smh == mh.value;
        if (match)
            line << "MATCH h=" << h.value << " mh=" << mh.value;
        else
            line << "MISMATCH split_h=" << sh << " h=" << h.value << " split_mh=" << smh << " mh=" << mh.value;
        if (!match) line << "\n" << format_strategy(sh != h.value ? h.strategy : mh.strategy);
    } else {
        int value = 0;
        Strategy witness = mh.strategy;
        if (cls == "tree") {
            if (!is_tree(g)) throw BadParameters("graph is not a tree");
            value = tree_mh(g);
            witness = tree_monotone_strategy(g);
        } else if (cls == "cograph") {
            auto t = recognize_cograph(g);
            if (!t) throw BadParameters("graph is not a cograph");
            value = cograph_mh(*t);
        } else if (cls == "interval") {
            value = interval_mh(g);
        }
        match = value == mh.value;
        if (match)
            line << "MATCH mh=" << mh.value;
        else
            line << "MISMATCH " << cls << "=" << value << " exact=" << mh.value << "\n" << format_strategy(witness);
    }
    std::cout << line.str() << "\n";
    return match ? 0 : 1;
}

int run_pathwidth(const Options& o) {
    Graph g = parse_graph(read_file(o.graph));
    auto r = pathwidth_exact(g);
    std::cout << "pw=" << r.width << "\n";
    if (!o.out.empty()) {
        std::ostringstream bags;
        bags << "bags " << r.decomposition.bags.size() << "\n";
        for (const auto& b : r.decomposition.bags) {
            auto m = members(b);
            for (std::size_t i = 0; i < m.size(); ++i) bags << (i ? " " : "") << m[i];
            bags << "\n";
        }
        write_file(out_dir(o.out) / "decomposition.txt", bags.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hunters and rabbit game solver"};
    app.require_subcommand(1);
    Options o;
    auto graph_opt = [&](CLI::App* s, bool required) {
        auto* opt = s->add_option("--graph", o.graph, "graph file");
        if (required) opt->required();
    };

    auto* compute = app.add_subcommand("compute", "hunter number or monotone hunter number");
    graph_opt(compute, true);
    compute->add_option("--mode", o.mode, "h or mh")->check(CLI::IsMember({"h", "mh"}));
    compute->add_option("--start", o.start, "all, red, white or a comma-separated id list");
    compute->add_option("--k", o.k, "decide whether k hunters suffice");
    compute->add_option("--strategy", o.strategy, "write the witness strategy here");
    compute->add_option("--out", o.out, "output directory");

    auto* verify = app.add_subcommand("verify", "check a strategy");
    graph_opt(verify, true);
    verify->add_option("--strategy", o.strategy, "strategy file")->required();
    verify->add_option("--start", o.start, "all, red, white or a comma-separated id list");
    verify->add_option("--out", o.out, "output directory for the trace");

    auto* kern = app.add_subcommand("kernelize", "vertex cover kernel");
    graph_opt(kern, true);
    kern->add_option("--k", o.k, "number of hunters")->required();
    kern->add_option("--out", o.out, "output directory");

    auto* gen = app.add_subcommand("generate", "build a graph family");
    gen->add_option("--family", o.family, "family name")
        ->required()
        ->check(CLI::IsMember({"spider", "T", "ternary", "splitmatch", "cographgap", "subdivision", "random-tree",
                               "random-split", "random-cograph", "random-connected", "random-interval",
                               "random-bipartite"}));
    gen->add_option("--params", o.params, "parameters, e.g. i=2,q=6");
    gen->add_option("--seed", o.seed, "seed for random families");
    gen->add_option("--graph", o.graph, "input tree for the subdivision family");
    gen->add_option("--out", o.out, "output directory");

    auto* cmp = app.add_subcommand("compare", "class solver against the exact solver");
    graph_opt(cmp, true);
    cmp->add_option("--class", o.cls, "graph class")
        ->check(CLI::IsMember({"split", "interval", "cograph", "tree", "auto"}));

    auto* pw = app.add_subcommand("pathwidth", "exact pathwidth");
    graph_opt(pw, true);
    pw->add_option("--out", o.out, "output directory for the decomposition");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute) return run_compute(o, compute);
        if (*verify) return run_verify(o);
        if (*kern) return run_kernelize(o);
        if (*gen) return run_generate(o, gen);
        if (*cmp) return run_compare(o);
        if (*pw) return run_pathwidth(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

// Command-line surface: generators, the bound decision procedure with its
// certificates, homomorphism search, edge-colouring, and the verdict-table
// reproduction runner. Exit codes: 0 = YES/found/ok, 1 = NO/none, 2 = error
// or indeterminate.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "girthbound/bound_check.hpp"
#include "girthbound/distance.hpp"
#include "girthbound/edge_colour.hpp"
#include "girthbound/families.hpp"
#include "girthbound/reproduce.hpp"
#include "girthbound/sp.hpp"

using namespace girthbound;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

long long default_budget() {
    if (const char* env = std::getenv("GIRTHBOUND_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultHomBudget;
}

Graph load_graph(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

void store(const std::string& path, const std::string& payload) {
    if (path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << payload;
}

RotationSystem load_rotation(const std::string& path) {
    if (path == "-") return read_rotation(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_rotation(in);
}

int cmd_gen(const std::string& family, const std::vector<int>& params,
            const std::string& out) {
    std::ostringstream buf;
    write_graph(buf, make_family(family, params));
    store(out, buf.str());
    return kExitYes;
}

int cmd_oddgirth(const std::string& path) {
    int og = odd_girth(load_graph(path));
    if (og == kInfiniteDistance)
        std::cout << "INF\n";
    else
        std::cout << og << "\n";
    return kExitYes;
}

int cmd_issp(const std::string& path) {
    return is_k4_minor_free(load_graph(path)) ? kExitYes : kExitNo;
}

int cmd_triples(int k) {
    for (const auto& t : enumerate_k_good(k))
        std::cout << t.p << " " << t.q << " " << t.r << "\n";
    return kExitYes;
}

int cmd_check(const std::string& path, int k, const std::string& cert_out,
              const std::string& witness_out, int cap) {
    Graph b = load_graph(path);
    BoundVerdict v = check_bound(b, k);
    if (!cert_out.empty()) {
        std::ostringstream buf;
        if (v.yes)
            write_certificate(buf, {v.certificate, v.residual});
        else
            write_no_verdict(buf, v);
        store(cert_out, buf.str());
    }
    if (!v.yes && !witness_out.empty()) {
        auto witness = no_certificate(b, k, v, cap);
        if (!witness.has_value()) {
            std::cerr << "no-witness: vertex cap " << cap << " exceeded\n";
        } else {
            std::ostringstream buf;
            write_graph(buf, *witness);
            store(witness_out, buf.str());
        }
    }
    std::cout << (v.yes ? "YES" : "NO") << "\n";
    return v.yes ? kExitYes : kExitNo;
}

Certificate load_certificate(const std::string& path) {
    if (path == "-") return read_certificate(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_certificate(in);
}

int cmd_verifycert(const std::string& graph_path, const std::string& cert_path) {
    Graph b = load_graph(graph_path);
    Certificate cert = load_certificate(cert_path);
    bool ok = verify_certificate(b, cert.pdg, cert.pdg.k);
    std::cout << (ok ? "VALID" : "INVALID") << "\n";
    return ok ? kExitYes : kExitNo;
}

int cmd_hom(const std::string& g_path, const std::string& h_path, bool injective,
            long long budget) {
    Graph g = load_graph(g_path);
    Graph h = load_graph(h_path);
    auto r = hom_search(g, h, injective, budget);
    if (r.status == SearchStatus::budget_exceeded) {
        std::cout << "BUDGET_EXCEEDED\n";
        return kExitError;
    }
    if (r.status == SearchStatus::none) {
        std::cout << "NONE\n";
        return kExitNo;
    }
    write_homomorphism(std::cout, r.hom, h.n());
    return kExitYes;
}

int cmd_maphom(const std::string& g_path, const std::string& b_path,
               const std::string& cert_path) {
    Graph g = load_graph(g_path);
    Graph b = load_graph(b_path);
    Certificate cert = load_certificate(cert_path);
    auto hom = hom_via_certificate(g, b, cert.pdg, cert.pdg.k);
    write_homomorphism(std::cout, hom, b.n());
    return kExitYes;
}

int cmd_randsp(int k, int n, std::uint64_t seed, const std::string& out) {
    std::ostringstream buf;
    write_graph(buf, random_sp_instance(k, n, seed));
    store(out, buf.str());
    return kExitYes;
}

int cmd_lint(const std::string& path, int k) {
    auto report = minimality_lint(load_graph(path), k);
    for (const auto& v : report.violations) {
        switch (v.rule) {
            case LintRule::degree2_not_on_6cycle:
                std::cout << "lemma-6cycle: degree-2 vertex " << v.vertices[0]
                          << " lies on no 6-cycle\n";
                break;
            case LintRule::adjacent_degree2_pair:
                std::cout << "lemma-independent: adjacent degree-2 vertices " << v.vertices[0]
                          << " " << v.vertices[1] << "\n";
                break;
            case LintRule::crowded_6cycle: {
                std::cout << "lemma-crowding: 6-cycle";
                for (int x : v.vertices) std::cout << " " << x;
                std::cout << " carries misplaced degree-2 vertices\n";
                break;
            }
        }
    }
    if (report.clean()) std::cout << "clean\n";
    return report.clean() ? kExitYes : kExitNo;
}

int cmd_edgecolour_pc(int k) {
    Graph pc = projective_cube(k);
    write_colouring(std::cout, pc, cayley_edge_labels(k));
    return kExitYes;
}

int cmd_edgecolour_induced(const std::string& g_path, const std::string& emb_path) {
    Graph g = load_graph(g_path);
    int n_h = 0;
    Homomorphism emb;
    if (emb_path == "-") {
        emb = read_homomorphism(std::cin, &n_h);
    } else {
        std::ifstream in(emb_path);
        if (!in) throw std::runtime_error("cannot open " + emb_path);
        emb = read_homomorphism(in, &n_h);
    }
    int k = 0;
    while ((1 << (2 * (k + 1))) <= n_h) ++k;
    if (k == 0 || (1 << (2 * k)) != n_h)
        throw std::runtime_error("embedding target is not a projective cube");
    write_colouring(std::cout, g, induced_colouring(g, k, emb));
    return kExitYes;
}

int cmd_edgecolour_superproper(const std::string& g_path, const std::string& rot_path,
                               const std::vector<std::string>& pair_args,
                               long long budget) {
    Graph g = load_graph(g_path);
    RotationSystem rot = load_rotation(rot_path);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& arg : pair_args) {
        auto comma = arg.find(',');
        if (comma == std::string::npos) throw std::runtime_error("bad colour pair: " + arg);
        pairs.emplace_back(std::stoi(arg.substr(0, comma)), std::stoi(arg.substr(comma + 1)));
    }
    auto r = super_proper_search(g, rot, pairs, budget);
    if (r.status == ColouringStatus::budget_exceeded) {
        std::cout << "BUDGET_EXCEEDED\n";
        return kExitError;
    }
    if (r.status == ColouringStatus::unsat) {
        std::cout << "UNSAT\n";
        return kExitNo;
    }
    write_colouring(std::cout, g, r.colouring);
    return kExitYes;
}

int cmd_reproduce(const std::string& level) {
    auto report = run_reproduce(level == "quick", &std::cout);
    std::cout << (report.pass() ? "ALL PASS" : "MISMATCHES PRESENT") << " (" << report.rows.size()
              << " cases)\n";
    return report.pass() ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds of odd-girth 2k+1 for K4-minor-free graphs: decision "
                 "procedure, certificates, generators, edge-colourings"};
    app.require_subcommand(1);
    long long budget = default_budget();

    std::string family, file = "-", out = "-";
    std::vector<int> params;
    auto* gen = app.add_subcommand("gen", "emit a family graph");
    gen->add_option("family", family)->required();
    gen->add_option("params", params);
    gen->add_option("-o,--out", out);

    auto* oddg = app.add_subcommand("oddgirth", "print the odd-girth or INF");
    oddg->add_option("file", file);

    auto* issp = app.add_subcommand("issp", "exit 0 iff the graph is K4-minor-free");
    issp->add_option("file", file);

    int k = 0;
    auto* triples = app.add_subcommand("triples", "print all k-good triples");
    triples->add_option("k", k)->required();

    std::string cert_out, witness_out;
    int cap = 10000;
    auto* check = app.add_subcommand("check", "decide whether the graph bounds the class");
    check->add_option("file", file);
    check->add_option("--k", k)->required();
    check->add_option("--cert", cert_out);
    check->add_option("--no-witness", witness_out);
    check->add_option("--cap", cap);

    std::string graph_path, cert_path, h_path;
    auto* verify = app.add_subcommand("verifycert", "exit 0 iff the certificate verifies");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("cert", cert_path)->required();

    bool injective = false;
    auto* hom = app.add_subcommand("hom", "search for a homomorphism G -> H");
    hom->add_option("G", graph_path)->required();
    hom->add_option("H", h_path)->required();
    hom->add_flag("--injective", injective);
    hom->add_option("--budget", budget);

    auto* maphom = app.add_subcommand("maphom", "construct a homomorphism from a certificate");
    maphom->add_option("G", graph_path)->required();
    maphom->add_option("B", h_path)->required();
    maphom->add_option("cert", cert_path)->required();

    int n = 0;
    std::uint64_t seed = 0;
    auto* randsp = app.add_subcommand("randsp", "random K4-minor-free instance");
    randsp->add_option("--k", k)->required();
    randsp->add_option("--n", n)->required();
    randsp->add_option("--seed", seed)->required();
    randsp->add_option("-o,--out", out);

    auto* lint = app.add_subcommand("lint", "structural conditions for minimal bounds");
    lint->add_option("file", file);
    lint->add_option("--k", k)->required();

    auto* ec = app.add_subcommand("edgecolour", "edge-colouring operations");
    ec->require_subcommand(1);
    auto* ec_pc = ec->add_subcommand("pc", "canonical colouring of PC(2k)");
    ec_pc->add_option("--k", k)->required();
    std::string emb_path, rot_path;
    auto* ec_ind = ec->add_subcommand("induced", "pull back the PC colouring");
    ec_ind->add_option("G", graph_path)->required();
    ec_ind->add_option("embedding", emb_path)->required();
    std::vector<std::string> pair_args;
    auto* ec_sp = ec->add_subcommand("superproper", "rotation-constrained 5-edge-colouring");
    ec_sp->add_option("G", graph_path)->required();
    ec_sp->add_option("rot", rot_path)->required();
    ec_sp->add_option("--pairs", pair_args)->expected(0, 2);
    ec_sp->add_option("--budget", budget);

    std::string level = "quick";
    auto* rep = app.add_subcommand("reproduce", "re-run the verdict table");
    rep->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return cmd_gen(family, params, out);
        if (oddg->parsed()) return cmd_oddgirth(file);
        if (issp->parsed()) return cmd_issp(file);
        if (triples->parsed()) return cmd_triples(k);
        if (check->parsed()) return cmd_check(file, k, cert_out, witness_out, cap);
        if (verify->parsed()) return cmd_verifycert(graph_path, cert_path);
        if (hom->parsed()) return cmd_hom(graph_path, h_path, injective, budget);
        if (maphom->parsed()) return cmd_maphom(graph_path, h_path, cert_path);
        if (randsp->parsed()) return cmd_randsp(k, n, seed, out);
        if (lint->parsed()) return cmd_lint(file, k);
        if (ec->parsed()) {
            if (ec_pc->parsed()) return cmd_edgecolour_pc(k);
            if (ec_ind->parsed()) return cmd_edgecolour_induced(graph_path, emb_path);
            if (ec_sp->parsed())
                return cmd_edgecolour_superproper(graph_path, rot_path, pair_args, budget);
        }
        if (rep->parsed()) return cmd_reproduce(level);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

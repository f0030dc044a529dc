// tatforge command line: constructs the closed-form labelings, verifies
// labeling files, runs the exact search, composes chains, sweeps families,
// exports DOT, and probes trees.
//
// Exit codes: 0 = verified/constructed totally antimagic, 1 = a finding
// (a property failed, or the search settled/bailed without a labeling),
// 2 = usage or input error.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "tatforge/tatforge.hpp"

namespace fs = std::filesystem;
using namespace tatforge;

namespace {

constexpr int kWitnessDisplayCap = 20;

std::int64_t default_budget() {
    if (const char* env = std::getenv("TATFORGE_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0)
            throw invalid_parameter_error("TATFORGE_BUDGET must be a positive integer");
        return v;
    }
    return SearchOptions{}.node_budget;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string verdict_line(const VerificationReport& rep) {
    if (rep.is_tat) return "verdict: TAT";
    std::string s = "verdict:";
    if (!rep.is_eat) {
        s += " EAT FAIL";
        for (const Witness& w : rep.witnesses)
            if (w.property == Property::Eat) {
                s += " (" + w.element_a + "," + w.element_b + ")";
                break;
            }
    }
    if (!rep.is_vat) {
        s += " VAT FAIL";
        for (const Witness& w : rep.witnesses)
            if (w.property == Property::Vat) {
                s += " (" + w.element_a + "," + w.element_b + ")";
                break;
            }
    }
    return s;
}

void print_report(std::ostream& os, const VerificationReport& rep) {
    os << "bijective: " << yesno(rep.is_bijective_total) << "  super: " << yesno(rep.is_super)
       << "\n";
    os << "EAT: " << yesno(rep.is_eat) << "  VAT: " << yesno(rep.is_vat)
       << "  TAT: " << yesno(rep.is_tat) << "\n";
    os << "sharp-ordered: " << yesno(rep.sharp_ordered) << "\n";
    if (rep.weak_ordered)
        os << "weak-ordered: " << yesno(*rep.weak_ordered) << "\n";
    if (!rep.witnesses.empty()) {
        int shown = std::min<int>(kWitnessDisplayCap, static_cast<int>(rep.witnesses.size()));
        os << "witnesses (" << shown << " shown, " << rep.witnesses.size() << " total):\n";
        for (int i = 0; i < shown; ++i) {
            const Witness& w = rep.witnesses[i];
            os << "  " << to_string(w.property) << ": (" << w.element_a << ", " << w.element_b
               << ") " << w.weight << "\n";
        }
    }
}

LoadedLabeling load_labeling_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(0, "", "cannot open '" + path + "'");
    return read_labeling(in);
}

void save_labeling_file(const std::string& path, const Graph& g, const TotalLabeling& L) {
    std::ofstream out(path);
    if (!out) throw parse_error(0, "", "cannot write '" + path + "'");
    write_labeling(out, g, L);
}

Partition singleton_partition(const Graph& g) {
    Partition parts;
    for (VertexId v : g.vertices()) parts.push_back({v});
    return parts;
}

// --partition u,v|singletons|none
std::optional<Partition> resolve_partition(const std::string& spec, const Graph& g,
                                           bool& suppress_canonical) {
    suppress_canonical = false;
    if (spec.empty()) return std::nullopt;
    if (spec == "u,v") {
        auto p = canonical_partition(g);
        if (!p) throw invalid_parameter_error("graph has no u/v vertex classes");
        return p;
    }
    if (spec == "singletons") return singleton_partition(g);
    if (spec == "none") {
        suppress_canonical = true;
        return std::nullopt;
    }
    throw invalid_parameter_error("--partition must be u,v | singletons | none");
}

struct SweepRow {
    std::string family;
    int n;
    int m; // 0 = none
    VerificationReport rep;
    std::string repairs;
};

std::string sweep_csv_line(const SweepRow& r) {
    std::ostringstream os;
    os << r.family << ',' << r.n << ',';
    if (r.m > 0) os << r.m;
    os << ',' << yesno(r.rep.is_super) << ',' << yesno(r.rep.is_eat) << ',' << yesno(r.rep.is_vat)
       << ',' << yesno(r.rep.is_tat) << ','
       << (r.rep.weak_ordered ? yesno(*r.rep.weak_ordered) : std::string())
       << ',' << r.repairs;
    return os.str();
}

// ---------------------------------------------------------------- generate

int run_generate(const std::string& family, int n, int m, std::string out_path) {
    SchemeResult sr = [&] {
        if (family == "ladder") return ladder_labeling(n);
        if (family == "prism") return prism_labeling(n);
        if (family == "petersen") return petersen_labeling(n, m);
        throw invalid_parameter_error("generate supports ladder | prism | petersen");
    }();

    std::cout << "family " << family << " n=" << n;
    if (family == "petersen") std::cout << " m=" << m;
    std::cout << ": p=" << sr.graph.vertex_count() << " q=" << sr.graph.edge_count() << "\n";
    std::cout << "repairs applied:";
    for (const auto& r : sr.repairs_applied) std::cout << ' ' << r;
    std::cout << "\n";

    VerificationReport rep = full_report(sr.graph, sr.labeling);
    print_report(std::cout, rep);
    std::cout << verdict_line(rep) << "\n";

    if (out_path.empty()) {
        out_path = family + "-" + std::to_string(n);
        if (family == "petersen") out_path += "-" + std::to_string(m);
        out_path += ".json";
    }
    save_labeling_file(out_path, sr.graph, sr.labeling);
    std::cout << "wrote " << out_path << "\n";
    return rep.is_tat ? 0 : 1;
}

// ------------------------------------------------------------------ verify

int run_verify(const std::string& path, const std::string& partition_spec,
               const std::string& report_path) {
    LoadedLabeling ll = load_labeling_file(path);
    bool suppress = false;
    std::optional<Partition> parts = resolve_partition(partition_spec, ll.graph, suppress);
    VerificationReport rep = full_report(ll.graph, ll.labeling, parts, !suppress);
    print_report(std::cout, rep);
    std::cout << verdict_line(rep) << "\n";
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw parse_error(0, "", "cannot write '" + report_path + "'");
        write_report(out, rep);
    }
    return rep.is_tat ? 0 : 1;
}

// ------------------------------------------------------------------ search

int run_search(const std::string& family, int n, int m, const std::string& edges_path,
               bool super, bool no_bijective, std::int64_t budget, int workers,
               const std::string& order, const std::string& out_path) {
    Graph g = [&]() -> Graph {
        if (!edges_path.empty()) {
            std::ifstream in(edges_path);
            if (!in) throw parse_error(0, "", "cannot open '" + edges_path + "'");
            return read_edge_list(in);
        }
        if (family == "ladder") return build_ladder(n);
        if (family == "prism") return build_prism(n);
        if (family == "petersen") return build_petersen(n, m);
        if (family == "path") return build_path(n);
        if (family == "cycle") return build_cycle(n);
        throw invalid_parameter_error("search needs --family or --edges");
    }();

    SearchOptions opts;
    opts.require_super = super;
    opts.require_bijective = !no_bijective;
    opts.node_budget = budget;
    opts.workers = workers;
    if (order == "input") opts.element_order = ElementOrder::InputOrder;
    else if (order != "degree") throw invalid_parameter_error("--order must be degree | input");

    SearchOutcome out = find_tat(g, opts);
    std::cout << "status: " << to_string(out.status) << "\n";
    std::cout << "nodes_visited: " << out.nodes_visited << "\n";
    if (out.status == SearchStatus::Found) {
        VerificationReport rep = full_report(g, *out.labeling);
        print_report(std::cout, rep);
        if (!out_path.empty()) {
            save_labeling_file(out_path, g, *out.labeling);
            std::cout << "wrote " << out_path << "\n";
        }
        return 0;
    }
    return 1;
}

// ------------------------------------------------------------------- chain

int run_chain(const std::vector<std::string>& block_paths, const std::string& manifest_path,
              const std::string& paths_spec, const std::string& out_path) {
    std::vector<ChainBlock> blocks;
    if (!paths_spec.empty()) {
        std::vector<int> lengths;
        std::stringstream ss(paths_spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                lengths.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw invalid_parameter_error("--paths expects a comma list of integers");
            }
        }
        for (int len : lengths) blocks.push_back(path_block(len));
    } else {
        std::vector<std::string> files = block_paths;
        if (!manifest_path.empty()) {
            std::ifstream in(manifest_path);
            if (!in) throw parse_error(0, "", "cannot open '" + manifest_path + "'");
            fs::path base = fs::path(manifest_path).parent_path();
            for (const std::string& rel : read_manifest(in))
                files.push_back((base / rel).string());
        }
        if (files.empty())
            throw invalid_parameter_error("chain needs block files, --manifest, or --paths");
        for (const std::string& f : files) {
            LoadedLabeling ll = load_labeling_file(f);
            blocks.push_back({std::move(ll.graph), std::move(ll.labeling)});
        }
    }

    ChainResult res = chain_compose(blocks);
    std::cout << "blocks: " << blocks.size() << "  vertices: " << res.graph.vertex_count()
              << "  edges: " << res.graph.edge_count() << "\n";
    for (std::size_t i = 1; i < blocks.size(); ++i)
        std::cout << "block " << i + 1 << ": vertex offset " << res.vertex_offsets[i]
                  << ", edge offset " << res.edge_offsets[i] << "\n";
    std::cout << "cut vertices:";
    for (VertexId v : res.cut_vertices) std::cout << ' ' << to_string(v);
    std::cout << "\n";

    VerificationReport rep = full_report(res.graph, res.labeling);
    print_report(std::cout, rep);
    std::cout << verdict_line(rep) << "\n";
    if (!out_path.empty()) {
        save_labeling_file(out_path, res.graph, res.labeling);
        std::cout << "wrote " << out_path << "\n";
    }
    return rep.is_tat ? 0 : 1;
}

// ------------------------------------------------------------------- sweep

int run_sweep(const std::string& family, int lo, int hi, const std::string& m_policy,
              int workers, const std::string& out_path) {
    if (family != "ladder" && family != "prism" && family != "petersen")
        throw invalid_parameter_error("sweep supports ladder | prism | petersen");

    std::vector<std::pair<int, int>> params; // (n, m); m = 0 for non-petersen
    for (int n = lo; n <= hi; ++n) {
        if (family == "petersen") {
            if (m_policy == "all") {
                for (int m = 1; m <= (n - 1) / 2; ++m) params.emplace_back(n, m);
            } else {
                int m = 0;
                try {
                    m = std::stoi(m_policy);
                } catch (const std::exception&) {
                    throw invalid_parameter_error("--m must be 'all' or an integer");
                }
                if (m >= 1 && m <= (n - 1) / 2) params.emplace_back(n, m);
            }
        } else {
            params.emplace_back(n, 0);
        }
    }

    std::vector<std::string> lines(params.size());
    std::vector<char> tat(params.size(), 1);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < params.size(); i = next.fetch_add(1)) {
            auto [n, m] = params[i];
            SchemeResult sr = family == "ladder" ? ladder_labeling(n)
                              : family == "prism" ? prism_labeling(n)
                                                  : petersen_labeling(n, m);
            SweepRow row{family, n, m, full_report(sr.graph, sr.labeling),
                         sr.repairs_applied.empty() ? "" : sr.repairs_applied.front()};
            lines[i] = sweep_csv_line(row);
            tat[i] = row.rep.is_tat ? 1 : 0;
        }
    };
    int nthreads = std::max(1, std::min<int>(workers, static_cast<int>(params.size())));
    if (nthreads <= 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < nthreads; ++t) threads.emplace_back(work);
        for (auto& t : threads) t.join();
    }

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw parse_error(0, "", "cannot write '" + out_path + "'");
        os = &file;
    }
    *os << "family,n,m,super,eat,vat,tat,weak_ordered,repairs\n";
    for (const auto& line : lines) *os << line << "\n";

    bool all_tat = std::all_of(tat.begin(), tat.end(), [](char c) { return c != 0; });
    return all_tat ? 0 : 1;
}

// -------------------------------------------------------------- export-dot

int run_export_dot(const std::string& path, const std::string& out_path) {
    std::ifstream in(path);
    if (!in) throw parse_error(0, "", "cannot open '" + path + "'");
    // labeling files are JSON objects; everything else is edge-list text
    char first = 0;
    in >> std::ws;
    first = static_cast<char>(in.peek());
    in.seekg(0);

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw parse_error(0, "", "cannot write '" + out_path + "'");
        os = &file;
    }
    if (first == '{') {
        LoadedLabeling ll = read_labeling(in);
        write_dot(*os, ll.graph, &ll.labeling);
    } else {
        Graph g = read_edge_list(in);
        write_dot(*os, g);
    }
    return 0;
}

// ------------------------------------------------------------------- trees

int run_trees(int max_n, bool super, std::int64_t budget, const std::string& out_path) {
    SearchOptions opts;
    opts.require_super = super;
    opts.node_budget = budget;
    std::vector<HarnessRow> rows = conjecture_harness(max_n, opts);

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw parse_error(0, "", "cannot write '" + out_path + "'");
        os = &file;
    }
    write_harness_csv(*os, rows);

    bool all_found = true;
    for (const auto& r : rows) all_found = all_found && r.status == SearchStatus::Found;
    std::cerr << rows.size() << " trees, all Found: " << yesno(all_found) << "\n";
    return all_found ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for totally antimagic total labelings"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "construct a closed-form labeling");
    std::string gen_family, gen_out;
    int gen_n = 0, gen_m = 1;
    gen->add_option("family", gen_family, "ladder | prism | petersen")->required();
    gen->add_option("n", gen_n, "family size parameter")->required();
    gen->add_option("m", gen_m, "petersen step (default 1)");
    gen->add_option("--out", gen_out, "output labeling file");

    // verify
    auto* ver = app.add_subcommand("verify", "verify a labeling file");
    std::string ver_file, ver_partition, ver_out;
    ver->add_option("file", ver_file, "labeling file")->required();
    ver->add_option("--partition", ver_partition, "u,v | singletons | none");
    ver->add_option("--out", ver_out, "write JSON report here");

    // search
    auto* sea = app.add_subcommand("search", "exact search for a TAT labeling");
    std::string sea_family, sea_edges, sea_order = "degree", sea_out;
    int sea_n = 0, sea_m = 1, sea_workers = 1;
    std::int64_t sea_budget = 0;
    bool sea_super = false, sea_nobij = false;
    sea->add_option("--family", sea_family, "ladder | prism | petersen | path | cycle");
    sea->add_option("--n", sea_n, "family size parameter");
    sea->add_option("--m", sea_m, "petersen step");
    sea->add_option("--edges", sea_edges, "edge-list text file");
    sea->add_flag("--super", sea_super, "require a super labeling");
    sea->add_flag("--no-bijective", sea_nobij, "allow repeated labels from {1..p+q}");
    sea->add_option("--budget", sea_budget, "decision-node budget");
    sea->add_option("--workers", sea_workers, "parallel workers");
    sea->add_option("--order", sea_order, "degree | input");
    sea->add_option("--out", sea_out, "write found labeling here");

    // chain
    auto* cha = app.add_subcommand("chain", "concatenate labeled blocks");
    std::vector<std::string> cha_blocks;
    std::string cha_manifest, cha_paths, cha_out;
    cha->add_option("blocks", cha_blocks, "block labeling files, in order");
    cha->add_option("--manifest", cha_manifest, "file listing block labeling files");
    cha->add_option("--paths", cha_paths, "comma list of path lengths, e.g. 3,3");
    cha->add_option("--out", cha_out, "output labeling file");

    // sweep
    auto* swe = app.add_subcommand("sweep", "verify a family across a parameter range");
    std::string swe_family, swe_m = "all", swe_out;
    int swe_lo = 0, swe_hi = -1, swe_workers = 1;
    swe->add_option("family", swe_family, "ladder | prism | petersen")->required();
    swe->add_option("lo", swe_lo, "smallest n")->required();
    swe->add_option("hi", swe_hi, "largest n")->required();
    swe->add_option("--m", swe_m, "petersen step policy: all or an integer");
    swe->add_option("--workers", swe_workers, "parallel workers");
    swe->add_option("--out", swe_out, "write CSV here (default stdout)");

    // export-dot
    auto* dot = app.add_subcommand("export-dot", "emit DOT for a labeling or edge-list file");
    std::string dot_file, dot_out;
    dot->add_option("file", dot_file, "labeling JSON or edge-list text")->required();
    dot->add_option("--out", dot_out, "write DOT here (default stdout)");

    // trees
    auto* tre = app.add_subcommand("trees", "search every tree up to max_n vertices");
    int tre_max_n = 0;
    bool tre_super = false;
    std::int64_t tre_budget = 0;
    std::string tre_out;
    tre->add_option("max_n", tre_max_n, "largest tree order (<= 8)")->required();
    tre->add_flag("--super", tre_super, "require super labelings");
    tre->add_option("--budget", tre_budget, "decision-node budget");
    tre->add_option("--out", tre_out, "write CSV here (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) return run_generate(gen_family, gen_n, gen_m, gen_out);
        if (*ver) return run_verify(ver_file, ver_partition, ver_out);
        if (*sea)
            return run_search(sea_family, sea_n, sea_m, sea_edges, sea_super, sea_nobij,
                              sea_budget > 0 ? sea_budget : default_budget(), sea_workers,
                              sea_order, sea_out);
        if (*cha) return run_chain(cha_blocks, cha_manifest, cha_paths, cha_out);
        if (*swe) return run_sweep(swe_family, swe_lo, swe_hi, swe_m, swe_workers, swe_out);
        if (*dot) return run_export_dot(dot_file, dot_out);
        if (*tre)
            return run_trees(tre_max_n, tre_super, tre_budget > 0 ? tre_budget : default_budget(),
                             tre_out);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const invalid_parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const not_found_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const incomplete_labeling_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

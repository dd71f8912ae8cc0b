#include "hexaf/cli.hpp"

#include <array>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hexaf/generators.hpp"
#include "hexaf/invariants.hpp"
#include "hexaf/json_io.hpp"
#include "hexaf/theorems.hpp"

namespace hexaf {

namespace {

int parse_int_arg(const std::string& s) {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw ValidationError("not an integer: '" + s + "'");
    return v;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(parse_int_arg(s.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

int do_gen(const std::string& family, const std::string& params, const std::string& out_path,
           std::ostream& out, std::ostream& err) {
    try {
        if (family == "census") {
            int n = parse_int_arg(params);
            std::string dir = out_path.empty() ? "." : out_path;
            std::filesystem::create_directories(dir);
            int count = 0;
            for_each_system(n, [&](const HexSystem& h, int size, int idx) {
                std::string name = "h" + std::to_string(size) + "_" + std::to_string(idx) + ".json";
                save_system_file(h, dir + "/" + name);
                out << name << "\n";
                ++count;
            });
            err << "wrote " << count << " systems to " << dir << "\n";
            return 0;
        }
        HexSystem h = [&] {
            if (family == "tp") {
                std::vector<int> rows = parse_int_list(params);
                return gen_truncated_parallelogram(rows);
            }
            if (family == "linear") return gen_linear_chain(parse_int_arg(params));
            if (family == "rn") return gen_rn(parse_int_arg(params));
            return gen_named(named_from_string(params));
        }();
        if (out_path.empty()) {
            out << cells_to_json(h.cells).dump() << "\n";
        } else {
            save_system_file(h, out_path);
            err << "wrote " << out_path << "\n";
        }
        return 0;
    } catch (const BudgetError& e) {
        err << "budget: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

std::string render_dot(const HexSystem& h, const std::vector<char>& in_m,
                       const std::vector<int>& alt_hexes) {
    std::ostringstream dot;
    auto pos = [](Point p) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.4f,%.4f!", p.x * 0.8660254, p.y * 0.5);
        return std::string(buf);
    };
    dot << "graph system {\n  layout=neato;\n  node [shape=point, width=0.1];\n";
    for (int v = 0; v < h.num_verts(); ++v)
        dot << "  v" << v << " [pos=\"" << pos(h.verts[v]) << "\"];\n";
    for (int e = 0; e < h.num_edges(); ++e) {
        dot << "  v" << h.edges[e].first << " -- v" << h.edges[e].second;
        if (!in_m.empty() && in_m[e]) dot << " [penwidth=3]";
        dot << ";\n";
    }
    for (std::size_t i = 0; i < alt_hexes.size(); ++i)
        dot << "  s" << i << " [pos=\"" << pos(cell_center(h.cells[alt_hexes[i]]))
            << "\", shape=none, label=\"*\", fontsize=24];\n";
    dot << "}\n";
    return dot.str();
}

int do_invariants(const std::string& input, const std::string& format, std::size_t cycle_cap,
                  bool with_certs, std::ostream& out, std::ostream& err) {
    try {
        HexSystem h = load_system_file(input);
        if (format == "dot") {
            out << render_dot(h, {}, {});
            return 0;
        }
        ReportOptions ro;
        ro.cycles.max_cycles = cycle_cap;
        ro.with_certs = with_certs;
        InvariantReport rep = compute_report(h, ro);
        if (format == "table")
            out << report_to_table(h, rep);
        else
            out << report_to_json(h, rep).dump(2) << "\n";
        return 0;
    } catch (const BudgetError& e) {
        err << "budget: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

std::vector<std::string> selected_theorems(const std::string& t) {
    if (t == "all")
        return {"minimax", "clar-fries", "main", "structure", "af1", "triphenylene", "sextet"};
    return {t};
}

int infer_rn_index(const HexSystem& h) {
    // Cell count 2n+4; anything that does not fit reports n = -1 and the
    // family check fails on the count.
    int c = h.num_cells();
    if (c >= 4 && c % 2 == 0) return (c - 4) / 2;
    return -1;
}

std::vector<Verdict> process_system(const HexSystem& h, const std::string& name, bool from_census,
                                    const std::vector<std::string>& sel,
                                    const VerifyOptions& opt) {
    try {
        SystemSweep sweep = compute_sweep(h, opt.cycles);
        if (sweep.matchings.empty() && from_census) return {};
        std::vector<Verdict> out;
        auto append = [&](std::vector<Verdict> vs) {
            for (Verdict& v : vs) out.push_back(std::move(v));
        };
        for (const std::string& t : sel) {
            if (t == "minimax")
                append(verify_minimax(h, sweep, name));
            else if (t == "clar-fries")
                append(verify_clar_fries(h, sweep, name));
            else if (t == "main")
                append(verify_main(h, sweep, name));
            else if (t == "structure")
                append(verify_structure(h, sweep, name, opt));
            else if (t == "af1")
                out.push_back(verify_af1(h, sweep, name));
            else if (t == "triphenylene")
                out.push_back(verify_triphenylene(h, sweep, name));
            else if (t == "sextet")
                out.push_back(verify_sextet_count(h, sweep, name));
            else if (t == "rn")
                out.push_back(validate_rn(h, infer_rn_index(h), sweep, name));
        }
        return out;
    } catch (const BudgetError& e) {
        std::vector<Verdict> out;
        for (const std::string& t : sel)
            out.push_back({t, name, Status::skipped_budget, {{"reason", e.what()}}});
        return out;
    }
}

int do_verify(const std::vector<std::string>& inputs, int census_n, const std::string& theorem,
              const VerifyOptions& opt, int jobs, std::ostream& out, std::ostream& err) {
    struct Item {
        HexSystem h;
        std::string name;
        bool from_census;
    };
    std::vector<Item> items;
    try {
        for (const std::string& path : inputs)
            items.push_back({load_system_file(path), std::filesystem::path(path).stem().string(),
                             false});
        if (census_n > 0)
            for_each_system(census_n, [&](const HexSystem& h, int size, int idx) {
                items.push_back(
                    {h, "h" + std::to_string(size) + "_" + std::to_string(idx), true});
            });
    } catch (const BudgetError& e) {
        err << "budget: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (items.empty()) {
        err << "error: nothing to verify; give input files and/or --census N\n";
        return 2;
    }

    std::vector<std::string> sel = selected_theorems(theorem);
    std::vector<std::vector<Verdict>> results(items.size());
    std::atomic<std::size_t> next{0};
    std::mutex emx;
    std::exception_ptr eptr;
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            try {
                results[i] = process_system(items[i].h, items[i].name, items[i].from_census, sel,
                                            opt);
            } catch (...) {
                std::lock_guard<std::mutex> lk(emx);
                if (!eptr) eptr = std::current_exception();
                return;
            }
        }
    };
    int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(items.size())));
    if (nthreads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    if (eptr) std::rethrow_exception(eptr);

    std::map<std::string, std::array<long, 4>> tally;
    for (const std::string& t : sel) tally[t] = {0, 0, 0, 0};
    for (const auto& vs : results)
        for (const Verdict& v : vs) {
            out << verdict_to_json(v).dump() << "\n";
            tally[v.theorem][static_cast<int>(v.status)]++;
        }

    err << std::left << std::setw(14) << "theorem" << std::right << std::setw(8) << "holds"
        << std::setw(8) << "fails" << std::setw(10) << "hyp-n-m" << std::setw(10) << "skipped"
        << "\n";
    long fails = 0, skipped = 0;
    for (const std::string& t : sel) {
        const auto& c = tally[t];
        err << std::left << std::setw(14) << t << std::right << std::setw(8) << c[0]
            << std::setw(8) << c[1] << std::setw(10) << c[2] << std::setw(10) << c[3] << "\n";
        fails += c[1];
        skipped += c[3];
    }
    err << "result: " << (fails ? "fail" : skipped ? "budget-limited" : "pass") << "\n";
    return fails ? 1 : skipped ? 3 : 0;
}

int do_export_dot(const std::string& input, int midx, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
    try {
        HexSystem h = load_system_file(input);
        std::vector<char> in_m(h.num_edges(), 0);
        std::vector<int> alt_hexes;
        if (midx >= 0) {
            std::vector<Matching> ms = enumerate_matchings(h);
            if (midx >= static_cast<int>(ms.size())) {
                err << "error: matching index " << midx << " out of range (k=" << ms.size()
                    << ")\n";
                return 2;
            }
            in_m = edge_mask(h, ms[midx]);
            alt_hexes = alternating_hexagons(h, ms[midx]);
        }
        std::string dot = render_dot(h, in_m, alt_hexes);
        if (out_path.empty()) {
            out << dot;
        } else {
            std::ofstream f(out_path);
            if (!f) throw ValidationError("cannot write " + out_path);
            f << dot;
            err << "wrote " << out_path << "\n";
        }
        return 0;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact perfect-matching, alternating-cycle and forcing invariants of "
                 "hexagonal systems",
                 "hexaf"};
    app.require_subcommand(1);

    std::string gen_family, gen_params, gen_out;
    CLI::App* gen = app.add_subcommand("gen", "generate hexagonal system files");
    gen->add_option("family", gen_family, "tp | linear | named | rn | census")
        ->required()
        ->check(CLI::IsMember({"tp", "linear", "named", "rn", "census"}));
    gen->add_option("params", gen_params,
                    "tp: comma-separated row lengths; linear/rn/census: an integer; "
                    "named: benzene|naphthalene|anthracene|triphenylene|coronene")
        ->required();
    gen->add_option("-o,--out", gen_out, "output file (for census: output directory)");

    std::string inv_input, inv_format = "json";
    std::size_t inv_cap = AltCycleOptions{}.max_cycles;
    bool inv_nocerts = false;
    CLI::App* inv = app.add_subcommand("invariants", "per-matching invariant report");
    inv->add_option("input", inv_input, "system JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    inv->add_option("--format", inv_format, "json, table or dot")
        ->check(CLI::IsMember({"json", "table", "dot"}));
    inv->add_option("--cycle-cap", inv_cap, "alternating cycle budget")
        ->check(CLI::PositiveNumber);
    inv->add_flag("--no-certs", inv_nocerts, "skip certificate extraction");

    std::vector<std::string> ver_inputs;
    int ver_census = 0;
    std::string ver_theorem = "all";
    VerifyOptions ver_opt;
    int ver_jobs = 1;
    CLI::App* ver = app.add_subcommand("verify", "stream verdicts for the selected theorem");
    ver->add_option("inputs", ver_inputs, "system JSON files")->check(CLI::ExistingFile);
    ver->add_option("--census", ver_census, "also verify every system with up to N hexagons")
        ->check(CLI::PositiveNumber);
    ver->add_option("--theorem", ver_theorem, "which claim to check")
        ->check(CLI::IsMember({"minimax", "clar-fries", "main", "structure", "af1",
                               "triphenylene", "rn", "sextet", "all"}));
    ver->add_option("--cycle-cap", ver_opt.cycles.max_cycles, "alternating cycle budget")
        ->check(CLI::PositiveNumber);
    ver->add_option("--max-sets", ver_opt.max_sets, "maximum-set enumeration budget")
        ->check(CLI::PositiveNumber);
    ver->add_option("--jobs", ver_jobs, "worker threads")->check(CLI::PositiveNumber);

    std::string dot_input, dot_out;
    int dot_matching = -1;
    CLI::App* dot = app.add_subcommand("export-dot", "plane drawing as Graphviz DOT");
    dot->add_option("input", dot_input, "system JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    dot->add_option("--matching", dot_matching,
                    "index into the sorted matching list; bold edges plus alternating-hexagon "
                    "markers");
    dot->add_option("-o,--out", dot_out, "output file");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (gen->parsed()) return do_gen(gen_family, gen_params, gen_out, out, err);
    if (inv->parsed())
        return do_invariants(inv_input, inv_format, inv_cap, !inv_nocerts, out, err);
    if (ver->parsed())
        return do_verify(ver_inputs, ver_census, ver_theorem, ver_opt, ver_jobs, out, err);
    if (dot->parsed()) return do_export_dot(dot_input, dot_matching, dot_out, out, err);
    err << "error: no command\n";
    return 2;
}

}  // namespace hexaf

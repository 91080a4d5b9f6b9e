#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <array>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <json.hpp>

#include "astopo/error.hpp"
#include "astopo/generator.hpp"
#include "astopo/ingest.hpp"
#include "astopo/map_diff.hpp"
#include "astopo/metrics.hpp"
#include "astopo/resilience.hpp"

#ifndef ASTOPO_VERSION
#define ASTOPO_VERSION "0.0.0"
#endif

namespace astopo::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

std::string sha256_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::IoError, "cannot open " + path.string());
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
    std::array<char, 1 << 16> buf{};
    while (in) {
        in.read(buf.data(), buf.size());
        EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), digest.data(), &len);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return hex.str();
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream s;
    s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return s.str();
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text) || !out.flush())
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
}

// State shared by every subcommand run.
struct Run {
    CLI::App* command = nullptr;
    std::vector<std::string> args;
    fs::path out_dir = ".";
    std::vector<fs::path> inputs;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> outputs;
    std::ostream* out = nullptr;

    void prepare_output() const {
        std::error_code ec;
        fs::create_directories(out_dir, ec);
        if (ec || !fs::is_directory(out_dir))
            throw Error(ErrorKind::IoError, "cannot create output directory " + out_dir.string());
    }

    fs::path output(const std::string& name) {
        outputs.push_back(name);
        return out_dir / name;
    }

    ParsedEdgeList load(const fs::path& path) {
        inputs.push_back(path);
        return read_edge_list(path);
    }

    void write_manifest() const {
        json flags = json::object();
        for (const CLI::Option* opt : command->get_options()) {
            const std::string name = opt->get_name();
            if (name == "--help")
                continue;
            if (opt->count() > 0) {
                const auto& results = opt->results();
                flags[name] = results.size() == 1 ? json(results.front()) : json(results);
            } else if (opt->get_type_size() == 0) {
                flags[name] = false;
            } else {
                flags[name] = opt->get_default_str();
            }
        }
        json inputs_json = json::array();
        for (const fs::path& p : inputs)
            inputs_json.push_back({{"path", p.string()}, {"sha256", sha256_file(p)}});

        json manifest;
        manifest["tool"] = "astopo";
        manifest["version"] = ASTOPO_VERSION;
        manifest["subcommand"] = command->get_name();
        manifest["arguments"] = args;
        manifest["flags"] = flags;
        manifest["inputs"] = inputs_json;
        manifest["seed"] = seed ? json(*seed) : json(nullptr);
        manifest["outputs"] = outputs;
        manifest["timestamp"] = utc_timestamp();
        write_text(out_dir / (command->get_name() + ".manifest.json"), manifest.dump(2) + "\n");
    }
};

json summary_json(const TopologySummary& s, const EdgeListDocument& doc) {
    json j;
    j["n_nodes"] = s.n_nodes;
    j["n_links"] = s.n_links;
    j["k_average"] = s.k_average;
    j["k_max"] = s.k_max;
    j["kt_max"] = s.kt_max;
    j["kt_average"] = s.kt_average;
    j["kr_max"] = s.kr_max;
    j["kr_average"] = s.kr_average;
    j["gamma_estimate"] = s.gamma_estimate ? json(*s.gamma_estimate) : json(nullptr);
    j["conventions"] = {
        {"cycle_averages", "arithmetic mean over all nodes, including degree 0 and 1"},
        {"rectangles", "4-cycles through the node, chords allowed, one per neighbour pair and closing node"},
        {"gamma", "least squares on log CCDF vs log k over distinct degrees >= 1; gamma = |slope| + 1"},
    };
    j["input"] = {
        {"path", doc.source_path},
        {"parsed_edges", doc.parsed_edges},
        {"dropped_self_loops", doc.dropped_self_loops},
        {"collapsed_duplicates", doc.collapsed_duplicates},
        {"skipped_lines", doc.skipped_lines},
    };
    return j;
}

void write_trace(const RemovalTrace& trace, const fs::path& path) {
    std::vector<CsvRow> rows;
    const std::string seed = trace.seed ? std::to_string(*trace.seed) : std::string();
    for (const TracePoint& p : trace.points)
        rows.push_back({p.f, p.S, std::string(to_string(trace.mode)), seed});
    write_curve_csv({"f", "S", "mode", "seed"}, rows, path);
}

std::string last_row(const RemovalTrace& trace) {
    if (trace.points.empty())
        return "no points\n";
    const TracePoint& p = trace.points.back();
    return "f=" + format_number(p.f) + " S=" + format_number(p.S) + "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"AS-level topology analysis: rich-club, link distribution, cycles, resilience, map diff"};
    app.set_version_flag("--version", ASTOPO_VERSION);
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    Run run;
    run.args = args;
    run.out = &out;
    std::function<void()> action;

    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", run.out_dir, "Directory for output artifacts and the run manifest");
    };

    // summary
    std::string summary_input;
    std::string summary_format = "json";
    bool with_gamma = false;
    auto* summary = app.add_subcommand("summary", "Network properties and cycle statistics (N, L, k, Kt, Kr)");
    summary->add_option("input", summary_input, "Edge-list file")->required();
    summary->add_flag("--gamma", with_gamma, "Also fit the power-law degree exponent");
    summary->add_option("--format", summary_format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    add_out(summary);
    summary->callback([&] {
        action = [&] {
            const auto parsed = run.load(summary_input);
            const TopologySummary s = summarize(parsed.graph, with_gamma);
            const json j = summary_json(s, parsed.document);
            if (summary_format == "json") {
                write_text(run.output("summary.json"), j.dump(2) + "\n");
            } else {
                std::vector<CsvRow> rows;
                for (const auto& [key, value] : j.items()) {
                    if (value.is_object())
                        continue;
                    rows.push_back({key, value.is_null() ? std::string() : value.dump()});
                }
                write_curve_csv({"field", "value"}, rows, run.output("summary.csv"));
            }
            out << j.dump(2) << "\n";
        };
    });

    // richclub
    std::string rc_input;
    std::size_t rc_points = 100;
    std::optional<double> rc_at;
    auto* richclub = app.add_subcommand("richclub", "Rich-club coefficient phi(r) against normalized rank r");
    richclub->add_option("input", rc_input, "Edge-list file")->required();
    richclub->add_option("--points", rc_points, "Log-spaced samples to keep (0 keeps every prefix)");
    richclub->add_option("--at", rc_at, "Print phi at a single rank r instead of writing the curve")
        ->check(CLI::Range(0.0, 1.0));
    add_out(richclub);
    richclub->callback([&] {
        action = [&] {
            const auto parsed = run.load(rc_input);
            if (rc_at) {
                out << format_number(rich_club_at(parsed.graph, *rc_at)) << "\n";
                return;
            }
            const RichClubCurve curve = rich_club_curve(parsed.graph);
            std::vector<CsvRow> rows;
            for (const RichClubPoint& p : log_spaced(curve, rc_points))
                rows.push_back({p.rank, p.phi});
            write_curve_csv({"r", "phi"}, rows, run.output("richclub.csv"));
            out << "wrote " << rows.size() << " points\n";
        };
    });

    // linkdist
    std::string ld_input;
    auto* linkdist = app.add_subcommand("linkdist", "Links between 5% rank bins l(r_i, r_j)");
    linkdist->add_option("input", ld_input, "Edge-list file")->required();
    add_out(linkdist);
    linkdist->callback([&] {
        action = [&] {
            const auto parsed = run.load(ld_input);
            const RankBinMatrix matrix = link_rank_matrix(parsed.graph);
            std::vector<CsvRow> rows;
            for (std::size_t i = 0; i < RankBinMatrix::kBins; ++i)
                for (std::size_t j = 0; j < RankBinMatrix::kBins; ++j)
                    rows.push_back({std::uint64_t{i}, std::uint64_t{j}, matrix.at(i, j)});
            write_curve_csv({"bin_i", "bin_j", "count"}, rows, run.output("linkdist.csv"));
            out << "links " << matrix.total() << "\n";
        };
    });

    // cycles
    std::string cy_input;
    auto* cycles = app.add_subcommand("cycles", "Triangle (Kt) and rectangle (Kr) coefficients against their ranks");
    cycles->add_option("input", cy_input, "Edge-list file")->required();
    add_out(cycles);
    cycles->callback([&] {
        action = [&] {
            const auto parsed = run.load(cy_input);
            const CycleCoefficientTable table = cycle_coefficients(parsed.graph);
            auto emit = [&](const std::vector<std::uint64_t>& values, const std::vector<NodeIndex>& order,
                            const std::string& column, const std::string& file) {
                std::vector<CsvRow> rows;
                for (std::size_t p = 0; p < order.size(); ++p)
                    rows.push_back({std::uint64_t{p + 1}, values[order[p]]});
                write_curve_csv({"rank", column}, rows, run.output(file));
            };
            emit(table.kt, table.kt_rank_order, "kt", "cycles_kt.csv");
            emit(table.kr, table.kr_rank_order, "kr", "cycles_kr.csv");
            out << "nodes " << table.kt.size() << "\n";
        };
    });

    // generate
    BaParams ba;
    std::optional<std::size_t> ba_m0;
    std::string ba_name = "ba.edges";
    auto* generate = app.add_subcommand("generate", "Barabasi-Albert preferential-attachment graph");
    generate->add_option("--n", ba.n_final, "Final node count")->required();
    generate->add_option("--m", ba.m_links, "Links per new node")->required();
    generate->add_option("--m0", ba_m0, "Seed clique size (default m + 1)");
    generate->add_option("--seed", ba.seed, "PRNG seed")->required();
    generate->add_option("--name", ba_name, "Output file name inside --out");
    add_out(generate);
    generate->callback([&] {
        action = [&] {
            ba.m0 = ba_m0;
            run.seed = ba.seed;
            const Graph g = generate_ba(ba);
            write_edge_list(g, run.output(ba_name));
            out << "nodes " << g.node_count() << " links " << g.edge_count() << "\n";
        };
    });

    // enrich
    std::string en_input;
    double en_top = 0.05;
    std::size_t en_budget = 0;
    std::uint64_t en_seed = 0;
    std::string en_name = "enriched.edges";
    auto* enrich = app.add_subcommand("enrich", "Add random links among the top-ranked nodes of a graph");
    enrich->add_option("input", en_input, "Edge-list file")->required();
    enrich->add_option("--top", en_top, "Top fraction of ranked nodes")->check(CLI::Range(0.0, 1.0));
    enrich->add_option("--budget", en_budget, "Number of links to add")->required();
    enrich->add_option("--seed", en_seed, "PRNG seed")->required();
    enrich->add_option("--name", en_name, "Output file name inside --out");
    add_out(enrich);
    enrich->callback([&] {
        action = [&] {
            run.seed = en_seed;
            const auto parsed = run.load(en_input);
            const Graph g = enrich_club(parsed.graph, en_top, en_budget, en_seed);
            write_edge_list(g, run.output(en_name));
            out << "nodes " << g.node_count() << " links " << g.edge_count() << "\n";
        };
    });

    // attack / error
    std::string at_input;
    double at_fmax = 0.1;
    std::optional<std::size_t> at_step;
    bool at_recompute = false;
    auto* attack = app.add_subcommand("attack", "Largest cluster S against fraction f of nodes removed by degree");
    attack->add_option("input", at_input, "Edge-list file")->required();
    attack->add_option("--fmax", at_fmax, "Largest removed fraction");
    attack->add_option("--step", at_step, "Removals between recorded points (default: ~200 points)");
    attack->add_flag("--recompute", at_recompute, "Re-rank surviving nodes by degree after each removal");
    add_out(attack);
    attack->callback([&] {
        action = [&] {
            const auto parsed = run.load(at_input);
            const std::size_t step = at_step.value_or(default_step(parsed.graph.node_count(), at_fmax));
            const RemovalTrace trace = attack_trace(parsed.graph, at_fmax, step, at_recompute);
            write_trace(trace, run.output("attack.csv"));
            out << last_row(trace);
        };
    });

    std::string er_input;
    double er_fmax = 0.1;
    std::optional<std::size_t> er_step;
    std::uint64_t er_seed = 0;
    std::size_t er_trials = 1;
    auto* error = app.add_subcommand("error", "Largest cluster S against fraction f of nodes removed at random");
    error->add_option("input", er_input, "Edge-list file")->required();
    error->add_option("--fmax", er_fmax, "Largest removed fraction");
    error->add_option("--step", er_step, "Removals between recorded points (default: ~200 points)");
    error->add_option("--seed", er_seed, "PRNG master seed")->required();
    error->add_option("--trials", er_trials, "Independent random orders to average");
    add_out(error);
    error->callback([&] {
        action = [&] {
            run.seed = er_seed;
            const auto parsed = run.load(er_input);
            const std::size_t step = er_step.value_or(default_step(parsed.graph.node_count(), er_fmax));
            const RemovalTrace trace = error_trace(parsed.graph, er_fmax, step, er_seed, er_trials);
            write_trace(trace, run.output("error.csv"));
            out << last_row(trace);
        };
    });

    // diff
    std::string df_a;
    std::string df_b;
    std::vector<double> df_top{0.05};
    auto* diff = app.add_subcommand("diff", "Classify links of map B missing from map A by B's degree ranks");
    diff->add_option("map_a", df_a, "Less complete map (edge list)")->required();
    diff->add_option("map_b", df_b, "More complete map (edge list)")->required();
    diff->add_option("--top", df_top, "Top fractions for the rich-rich share")->check(CLI::Range(0.0, 1.0));
    add_out(diff);
    diff->callback([&] {
        action = [&] {
            const auto a = run.load(df_a);
            const auto b = run.load(df_b);
            const MapDiffReport report = diff_maps(a.graph, b.graph);
            json shares = json::object();
            for (double t : df_top) {
                if (!(t > 0.0))
                    throw Error(ErrorKind::InvalidParams, "--top values must lie in (0, 1]");
                shares[format_number(t)] = report.missing_links.empty() ? 0.0 : rich_rich_fraction(report, t);
            }
            json j;
            j["map_a"] = df_a;
            j["map_b"] = df_b;
            j["common_nodes"] = report.common_nodes;
            j["nodes_only_in_a"] = report.nodes_only_in_a;
            j["nodes_only_in_b"] = report.nodes_only_in_b;
            j["links_in_a"] = report.links_in_a;
            j["links_in_b"] = report.links_in_b;
            j["shared_links"] = report.shared_links;
            j["links_only_in_a"] = report.links_only_in_a;
            j["missing_links"] = report.missing_links.size();
            j["rich_rich_fraction"] = shares;
            write_text(run.output("diff.json"), j.dump(2) + "\n");

            std::vector<CsvRow> rows;
            for (std::size_t i = 0; i < RankBinMatrix::kBins; ++i)
                for (std::size_t k = 0; k < RankBinMatrix::kBins; ++k)
                    rows.push_back({std::uint64_t{i}, std::uint64_t{k}, report.missing_bin_matrix.at(i, k)});
            write_curve_csv({"bin_i", "bin_j", "count"}, rows, run.output("diff_missing_bins.csv"));

            std::vector<CsvRow> links;
            for (const RankedEdge& e : report.missing_links)
                links.push_back({std::uint64_t{e.edge.u}, std::uint64_t{e.edge.v}, std::uint64_t{e.rank_u},
                                 std::uint64_t{e.rank_v}});
            write_curve_csv({"u", "v", "rank_u", "rank_v"}, links, run.output("diff_missing_links.csv"));
            out << j.dump(2) << "\n";
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    run.command = app.get_subcommands().front();
    try {
        run.prepare_output();
        action();
        run.write_manifest();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::ParseError:
        case ErrorKind::IoError:
        case ErrorKind::InvalidParams:
            return kUsageError;
        default:
            return kDomainError;
        }
    }
    return kSuccess;
}

} // namespace astopo::cli

// Command-line front end: exact contribution values, generating-series
// coefficients, partition listings, cell rank summaries, lattice audits,
// and numerical Maslov indices. All rationals print exactly, never as
// decimals; identical flags produce byte-identical output.

#include "diskcover/contributions.hpp"
#include "diskcover/io.hpp"
#include "diskcover/lattice.hpp"
#include "diskcover/maslov.hpp"
#include "diskcover/partitions.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1; // invariant or audit failure
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

using namespace diskcover;

Rational parse_m(const std::string& text) {
    Rational m = Rational::parse(text);
    if (m.is_zero())
        throw std::invalid_argument("--maslov-factor must be nonzero");
    return m;
}

int run_contrib(int g, int h, const std::string& m_text, const std::string& format) {
    Rational m = parse_m(m_text);
    Rational value = contribution(g, h, m);
    if (format == "json") {
        Json j;
        j["genus"] = g;
        j["boundary"] = h;
        j["m"] = m.str();
        j["contribution"] = value.str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << value.str() << "\n";
    }
    return kExitOk;
}

int run_series(int max_g, const std::string& m_text, const std::string& format,
               std::string cache_path) {
    Rational m = parse_m(m_text);

    Json contrib = Json::object();
    if (max_g == 0) {
        contrib["0"] = "1";
    } else {
        ContributionTable table = build_table(max_g, m);
        for (const auto& [g, c] : table.contrib)
            contrib[std::to_string(g)] = c.str();
        if (cache_path.empty())
            if (const char* env = std::getenv("DISKCOVER_CACHE"))
                cache_path = env;
        if (!cache_path.empty()) {
            CacheFile cache = cache_load(cache_path);
            cache.entries[CacheFile::key(max_g, m)] = table_to_json(table);
            if (!cache_save(cache, cache_path)) {
                std::cerr << "error: cannot write cache file '" << cache_path << "'\n";
                return kExitIo;
            }
        }
    }

    if (format == "json") {
        std::cout << contrib.dump() << "\n";
    } else {
        for (int g = 0; g <= max_g; ++g)
            std::cout << contrib[std::to_string(g)].get<std::string>() << "\n";
    }
    return kExitOk;
}

int run_partitions(int g, int h, const std::string& format) {
    auto partitions = enumerate_partitions(g, h);
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& p : partitions)
            arr.push_back(partition_to_json(p));
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& p : partitions)
            std::cout << partition_to_string(p) << "\n";
    }
    return kExitOk;
}

int run_cells(int g, int h, const std::string& format) {
    auto partitions = enumerate_partitions(g, h);
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& p : partitions) {
            CellSummary s = cell_summary(p);
            Json j;
            j["partition"] = partition_to_json(p);
            j["dim"] = s.dim;
            j["ob_rank"] = s.ob_rank;
            j["gluing_rank"] = s.gluing_rank;
            j["obF_rank"] = s.obF_rank;
            arr.push_back(j);
        }
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& p : partitions) {
            CellSummary s = cell_summary(p);
            std::cout << partition_to_string(p) << ": dim=" << s.dim << " ob=" << s.ob_rank
                      << " gluing=" << s.gluing_rank << " obF=" << s.obF_rank << "\n";
        }
    }
    return kExitOk;
}

int run_audit(int g, int h, const std::string& format) {
    LatticeGraph graph = lattice_graph(g, h);
    int expected = 3 * (2 * g + h - 1);

    if (format == "dot") {
        std::cout << graph_to_dot(graph);
        return kExitOk;
    }

    bool all_ok = true;
    std::string first_failure;
    Json cells = Json::array();
    std::ostringstream text;

    for (const auto& lambda : graph.vertices) {
        CellSummary s = cell_summary(lambda);
        auto [cell_total, cell_ok] = gluing_audit(cell_config(lambda));
        bool rank_ok = s.obF_rank == s.dim;

        Json audits = Json::array();
        audits.push_back(Json{{"stratum", "cell"}, {"total", cell_total}, {"ok", cell_ok}});
        text << "cell " << partition_to_string(lambda) << ": dim=" << s.dim
             << " ob=" << s.ob_rank << " gluing=" << s.gluing_rank << " obF=" << s.obF_rank
             << " | audit " << cell_total << " = " << expected
             << (cell_ok && rank_ok ? " ok" : " FAIL") << "\n";
        if (!(cell_ok && rank_ok) && first_failure.empty()) {
            first_failure = "cell " + partition_to_string(lambda);
            all_ok = false;
        }

        for (const auto& [move, target] : basic_degenerations(lambda)) {
            auto [total, ok] = gluing_audit(collision_config(lambda, move));
            audits.push_back(Json{{"stratum", std::string("collision ") + move_name(move.kind)},
                                  {"with", partition_to_string(target)},
                                  {"total", total},
                                  {"ok", ok}});
            text << "  collision " << move_name(move.kind) << " -> "
                 << partition_to_string(target) << ": audit " << total << " = " << expected
                 << (ok ? " ok" : " FAIL") << "\n";
            if (!ok) {
                all_ok = false;
                if (first_failure.empty())
                    first_failure = "collision " + partition_to_string(lambda) + " -> " +
                                    partition_to_string(target);
            }
        }

        Json j;
        j["partition"] = partition_to_json(lambda);
        j["dim"] = s.dim;
        j["ob_rank"] = s.ob_rank;
        j["gluing_rank"] = s.gluing_rank;
        j["obF_rank"] = s.obF_rank;
        j["audits"] = audits;
        cells.push_back(j);
    }

    if (!graph.connected)
        all_ok = false;

    if (format == "json") {
        Json j;
        j["cells"] = cells;
        j["graph"] = graph_to_json(graph);
        j["ok"] = all_ok;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << text.str();
        std::cout << "connected: " << (graph.connected ? "yes" : "no") << "\n";
        std::cout << (all_ok ? "audit ok" : "audit FAILED") << "\n";
    }

    if (!all_ok) {
        if (!first_failure.empty())
            std::cerr << "first failing configuration: " << first_failure << "\n";
        else
            std::cerr << "lattice graph is not connected\n";
        return kExitFailure;
    }
    return kExitOk;
}

int run_maslov(const std::string& input, const std::string& format) {
    Json j;
    try {
        if (input == "-") {
            j = Json::parse(std::cin);
        } else {
            std::ifstream in(input);
            if (!in) {
                std::cerr << "error: cannot read '" << input << "'\n";
                return kExitIo;
            }
            j = Json::parse(in);
        }
    } catch (const Json::parse_error& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << "\n";
        return kExitUsage;
    }
    int index = maslov_index(frame_loop_from_json(j));
    if (format == "json")
        std::cout << Json{{"maslov", index}}.dump() << "\n";
    else
        std::cout << index << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of degree-one disk covers: contributions, "
                 "ghost partitions, cell lattices, and index computations"};
    app.require_subcommand(1);

    std::string format = "text";
    int genus = 0, boundary = 1, max_genus = 0;
    std::string m_text = "-1";
    std::string cache_path;
    std::string input = "-";

    auto add_format = [&](CLI::App* cmd, std::initializer_list<std::string> choices) {
        cmd->add_option("--format", format)->check(CLI::IsMember(choices));
    };

    CLI::App* contrib = app.add_subcommand("contrib", "Contribution C(g,h)");
    contrib->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
    contrib->add_option("--boundary", boundary)->check(CLI::PositiveNumber);
    contrib->add_option("--maslov-factor", m_text);
    add_format(contrib, {"text", "json"});

    CLI::App* series = app.add_subcommand("series", "Generating-series coefficients");
    series->add_option("--max-genus", max_genus)->required()->check(CLI::NonNegativeNumber);
    series->add_option("--maslov-factor", m_text);
    series->add_option("--cache", cache_path);
    add_format(series, {"text", "json"});

    CLI::App* partitions = app.add_subcommand("partitions", "Ghost partitions of (g,h)");
    partitions->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
    partitions->add_option("--boundary", boundary)->check(CLI::PositiveNumber);
    add_format(partitions, {"text", "json"});

    CLI::App* cells = app.add_subcommand("cells", "Cell dimension and rank summaries");
    cells->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
    cells->add_option("--boundary", boundary)->check(CLI::PositiveNumber);
    add_format(cells, {"text", "json"});

    CLI::App* audit = app.add_subcommand("audit", "Gluing-dimension and rank audit");
    audit->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
    audit->add_option("--boundary", boundary)->check(CLI::PositiveNumber);
    add_format(audit, {"text", "json", "dot"});

    CLI::App* maslov = app.add_subcommand("maslov", "Maslov index of a sampled frame loop");
    maslov->add_option("--input", input, "JSON file path, or - for stdin");
    add_format(maslov, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (contrib->parsed())
            return run_contrib(genus, boundary, m_text, format);
        if (series->parsed())
            return run_series(max_genus, m_text, format, cache_path);
        if (partitions->parsed())
            return run_partitions(genus, boundary, format);
        if (cells->parsed())
            return run_cells(genus, boundary, format);
        if (audit->parsed())
            return run_audit(genus, boundary, format);
        if (maslov->parsed())
            return run_maslov(input, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

#pragma once

#include "diskcover/contributions.hpp"
#include "diskcover/lattice.hpp"
#include "diskcover/maslov.hpp"
#include "diskcover/partitions.hpp"
#include "diskcover/power_series.hpp"
#include "diskcover/rational.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace diskcover {

using Json = nlohmann::json;

// --- power series: JSON array of [exponent, "p/q"] pairs sorted by exponent

inline Json series_to_json(const PowerSeries& s) {
    Json arr = Json::array();
    for (const auto& [e, c] : s.coefficients())
        arr.push_back(Json::array({e, c.str()}));
    return arr;
}

inline PowerSeries series_from_json(const Json& j, int order, bool even_only = false) {
    PowerSeries s(order, even_only);
    for (const auto& pair : j)
        s.set(pair.at(0).get<int>(), Rational::parse(pair.at(1).get<std::string>()));
    return s;
}

// --- ghost partitions

inline Json partition_to_json(const GhostPartition& p) {
    Json j;
    j["closed"] = p.closed;
    Json open = Json::array();
    for (auto [g, h] : p.open)
        open.push_back(Json::array({g, h}));
    j["open"] = open;
    j["target"] = Json::array({p.target_genus, p.target_boundaries});
    return j;
}

inline GhostPartition partition_from_json(const Json& j) {
    GhostPartition p;
    p.closed = j.at("closed").get<std::vector<int>>();
    for (const auto& pair : j.at("open"))
        p.open.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    p.target_genus = j.at("target").at(0).get<int>();
    p.target_boundaries = j.at("target").at(1).get<int>();
    p.canonicalize();
    if (!p.valid())
        throw std::invalid_argument("partition_from_json: invalid partition");
    return p;
}

/// Compact display: closed genera first, then open pairs,
/// e.g. "(1, 2, (1, 1))"; the empty partition prints as "()".
inline std::string partition_to_string(const GhostPartition& p) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int g : p.closed) {
        if (!first)
            os << ", ";
        os << g;
        first = false;
    }
    for (auto [g, h] : p.open) {
        if (!first)
            os << ", ";
        os << "(" << g << ", " << h << ")";
        first = false;
    }
    os << ")";
    return os.str();
}

// --- lattice graph

inline Json graph_to_json(const LatticeGraph& g) {
    Json j;
    Json vertices = Json::array();
    for (const auto& v : g.vertices)
        vertices.push_back(partition_to_json(v));
    Json edges = Json::array();
    for (const auto& e : g.edges)
        edges.push_back(Json::array({e.from, e.to, move_name(e.kind)}));
    j["vertices"] = vertices;
    j["edges"] = edges;
    j["connected"] = g.connected;
    return j;
}

inline std::string graph_to_dot(const LatticeGraph& g) {
    std::ostringstream os;
    os << "graph lattice {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << partition_to_string(g.vertices[i]) << "\"];\n";
    for (const auto& e : g.edges)
        os << "  v" << e.from << " -- v" << e.to << " [label=\"" << move_name(e.kind)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

// --- frame loops: {"n": int, "samples": [[[re,im], ...], ...]}
//     with entries as numbers, decimal strings, or "p/q" strings

namespace detail {

inline double json_number(const Json& j) {
    if (j.is_number())
        return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.find('/') != std::string::npos)
            return Rational::parse(s).to_double();
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size())
            throw std::invalid_argument("frame_loop_from_json: malformed number '" + s + "'");
        return v;
    }
    throw std::invalid_argument("frame_loop_from_json: entry is neither number nor string");
}

} // namespace detail

inline FrameLoop frame_loop_from_json(const Json& j) {
    FrameLoop loop;
    loop.n = j.at("n").get<int>();
    for (const auto& sample : j.at("samples")) {
        std::vector<std::complex<double>> m;
        for (const auto& entry : sample)
            m.emplace_back(detail::json_number(entry.at(0)), detail::json_number(entry.at(1)));
        loop.samples.push_back(std::move(m));
    }
    if (!loop.well_formed())
        throw std::invalid_argument("frame_loop_from_json: malformed frame loop");
    return loop;
}

// --- contribution tables and the coefficient cache

inline Json table_to_json(const ContributionTable& t) {
    Json j;
    j["m"] = t.maslov_factor.str();
    Json alpha = Json::object();
    for (const auto& [g, a] : t.alpha)
        alpha[std::to_string(g)] = a.str();
    Json contrib = Json::object();
    for (const auto& [g, c] : t.contrib)
        contrib[std::to_string(g)] = c.str();
    j["alpha"] = alpha;
    j["contrib"] = contrib;
    return j;
}

inline ContributionTable table_from_json(const Json& j) {
    ContributionTable t;
    t.maslov_factor = Rational::parse(j.at("m").get<std::string>());
    for (const auto& [key, value] : j.at("alpha").items())
        t.alpha[std::stoi(key)] = Rational::parse(value.get<std::string>());
    for (const auto& [key, value] : j.at("contrib").items())
        t.contrib[std::stoi(key)] = Rational::parse(value.get<std::string>());
    t.max_genus = t.contrib.empty() ? 0 : t.contrib.rbegin()->first;
    return t;
}

struct CacheFile {
    static constexpr int current_schema = 1;
    int schema_version = current_schema;
    std::map<std::string, Json> entries; // key: "<max_genus>|<m>"

    static std::string key(int max_genus, const Rational& m) {
        return std::to_string(max_genus) + "|" + m.str();
    }
};

inline CacheFile cache_load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        return CacheFile{};
    Json j = Json::parse(in);
    CacheFile cache;
    cache.schema_version = j.at("schema_version").get<int>();
    if (cache.schema_version != CacheFile::current_schema)
        throw std::runtime_error("cache schema version mismatch");
    for (const auto& [key, value] : j.at("entries").items())
        cache.entries[key] = value;
    return cache;
}

/// Write-temp-then-rename; returns false on I/O failure.
inline bool cache_save(const CacheFile& cache, const std::string& path) {
    Json j;
    j["schema_version"] = cache.schema_version;
    j["entries"] = Json(cache.entries);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            return false;
        out << j.dump(2) << "\n";
        if (!out)
            return false;
    }
    return std::rename(tmp.c_str(), path.c_str()) == 0;
}

} // namespace diskcover

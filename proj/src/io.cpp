#include "io.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace pbdtk::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(Errc::parse, std::string("invalid document: ") + e.what());
    }
}

void check_version_kind(const json& j, const std::string& kind) {
    if (!j.is_object()) fail(Errc::parse, "document root must be an object");
    if (!j.contains("version") || !j["version"].is_number_integer())
        fail(Errc::parse, "missing integer field 'version'");
    if (j["version"].get<int>() != format_version)
        fail(Errc::version, "unsupported document version " + j["version"].dump());
    if (!j.contains("kind") || !j["kind"].is_string())
        fail(Errc::parse, "missing string field 'kind'");
    if (j["kind"].get<std::string>() != kind)
        fail(Errc::parse, "expected kind '" + kind + "', found " + j["kind"].dump());
}

int get_count(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        fail(Errc::parse, std::string("missing integer field '") + field + "'");
    long long v = j[field].get<long long>();
    if (v < 0 || v > 1000000) fail(Errc::parse, std::string("field '") + field + "' out of range");
    return static_cast<int>(v);
}

std::vector<std::vector<int>> get_int_lists(const json& j, const char* field, int n,
                                            std::size_t min_size) {
    if (!j.contains(field) || !j[field].is_array())
        fail(Errc::parse, std::string("missing array field '") + field + "'");
    std::vector<std::vector<int>> out;
    for (const auto& item : j[field]) {
        if (!item.is_array())
            fail(Errc::parse, std::string("entries of '") + field + "' must be arrays");
        std::vector<int> list;
        std::vector<char> seen(n, 0);
        for (const auto& v : item) {
            if (!v.is_number_integer())
                fail(Errc::parse, std::string("entries of '") + field + "' must hold integers");
            long long x = v.get<long long>();
            if (x < 0 || x >= n)
                fail(Errc::parse, std::string("index out of range in '") + field + "'");
            if (seen[static_cast<int>(x)])
                fail(Errc::parse, std::string("duplicate index in an entry of '") + field + "'");
            seen[static_cast<int>(x)] = 1;
            list.push_back(static_cast<int>(x));
        }
        if (list.size() < min_size)
            fail(Errc::parse, std::string("entry of '") + field + "' is too small");
        out.push_back(std::move(list));
    }
    return out;
}

json int_lists_json(const std::vector<std::vector<int>>& lists) {
    json out = json::array();
    for (const auto& l : lists) out.push_back(l);
    return out;
}

std::string dump_sorted(const json& j) {
    // nlohmann's default object backing is std::map, so keys are already
    // emitted in sorted order; dump(2) fixes the remaining layout.
    return j.dump(2) + "\n";
}

void put_optional_blocks(json& j, const nlohmann::json& metadata,
                         const nlohmann::json& certificate, const nlohmann::json& solver) {
    if (!metadata.is_null()) j["metadata"] = metadata;
    if (!certificate.is_null()) j["certificate"] = certificate;
    if (!solver.is_null()) j["solver"] = solver;
}

void take_optional_blocks(const json& j, nlohmann::json& metadata,
                          nlohmann::json& certificate, nlohmann::json& solver) {
    if (j.contains("metadata")) metadata = j["metadata"];
    if (j.contains("certificate")) certificate = j["certificate"];
    if (j.contains("solver")) solver = j["solver"];
}

} // namespace

std::string dump_design(const DesignDocument& doc) {
    json j;
    j["version"] = format_version;
    j["kind"] = "design";
    j["n"] = doc.design.n;
    j["blocks"] = int_lists_json(doc.design.blocks);
    if (doc.resolution) j["resolution"] = int_lists_json(doc.resolution->classes);
    put_optional_blocks(j, doc.metadata, doc.certificate, doc.solver);
    return dump_sorted(j);
}

DesignDocument parse_design(const std::string& text) {
    json j = parse_json(text);
    check_version_kind(j, "design");
    DesignDocument doc;
    doc.design.n = get_count(j, "n");
    doc.design.blocks = get_int_lists(j, "blocks", doc.design.n, 2);
    if (j.contains("resolution")) {
        Resolution r;
        r.classes = get_int_lists(j, "resolution", static_cast<int>(doc.design.blocks.size()), 0);
        doc.resolution = std::move(r);
    }
    take_optional_blocks(j, doc.metadata, doc.certificate, doc.solver);
    return doc;
}

std::string dump_partition(const PartitionDocument& doc) {
    json j;
    j["version"] = format_version;
    j["kind"] = "partition";
    json g;
    g["family"] = family_name(doc.graph.family);
    g["n"] = doc.graph.n;
    if (doc.graph.family == GraphFamily::complete_minus_clique) g["m"] = doc.graph.m;
    if (doc.graph.family == GraphFamily::explicit_edges) {
        json edges = json::array();
        for (auto [a, b] : doc.graph.edges) edges.push_back(json::array({a, b}));
        g["edges"] = edges;
    }
    j["graph"] = g;
    j["cliques"] = int_lists_json(doc.partition.cliques);
    put_optional_blocks(j, doc.metadata, doc.certificate, doc.solver);
    return dump_sorted(j);
}

PartitionDocument parse_partition(const std::string& text) {
    json j = parse_json(text);
    check_version_kind(j, "partition");
    if (!j.contains("graph") || !j["graph"].is_object())
        fail(Errc::parse, "missing object field 'graph'");
    const json& g = j["graph"];
    if (!g.contains("family") || !g["family"].is_string())
        fail(Errc::parse, "graph needs a string field 'family'");
    GraphFamily family = family_from_name(g["family"].get<std::string>());
    int n = get_count(g, "n");

    PartitionDocument doc;
    switch (family) {
        case GraphFamily::complete_minus_clique:
            doc.graph = complete_minus_clique(n, get_count(g, "m"));
            break;
        case GraphFamily::complement_path:
            doc.graph = complement_path(n);
            break;
        case GraphFamily::complement_cycle:
            doc.graph = complement_cycle(n);
            break;
        case GraphFamily::cocktail_party:
            doc.graph = cocktail_party(n);
            break;
        case GraphFamily::explicit_edges: {
            auto lists = get_int_lists(g, "edges", n, 2);
            std::vector<std::pair<int, int>> edges;
            for (const auto& l : lists) {
                if (l.size() != 2) fail(Errc::parse, "graph edges must be pairs");
                edges.emplace_back(l[0], l[1]);
            }
            doc.graph = explicit_graph(n, std::move(edges));
            break;
        }
    }
    doc.partition.cliques = get_int_lists(j, "cliques", n, 1);
    take_optional_blocks(j, doc.metadata, doc.certificate, doc.solver);
    return doc;
}

std::string dump_edge_coloring(const EdgeColoringDocument& doc) {
    json j;
    j["version"] = format_version;
    j["kind"] = "edge-coloring";
    j["n"] = doc.n;
    json classes = json::array();
    for (const auto& cls : doc.classes) {
        json c = json::array();
        for (auto [a, b] : cls) c.push_back(json::array({a, b}));
        classes.push_back(c);
    }
    j["classes"] = classes;
    return dump_sorted(j);
}

EdgeColoringDocument parse_edge_coloring(const std::string& text) {
    json j = parse_json(text);
    check_version_kind(j, "edge-coloring");
    EdgeColoringDocument doc;
    doc.n = get_count(j, "n");
    if (!j.contains("classes") || !j["classes"].is_array())
        fail(Errc::parse, "missing array field 'classes'");
    for (const auto& cls : j["classes"]) {
        if (!cls.is_array()) fail(Errc::parse, "classes must be arrays");
        std::vector<std::pair<int, int>> out;
        for (const auto& e : cls) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                fail(Errc::parse, "edges must be integer pairs");
            int a = e[0].get<int>(), b = e[1].get<int>();
            if (a < 0 || b < 0 || a >= doc.n || b >= doc.n || a == b)
                fail(Errc::parse, "edge endpoints out of range");
            out.emplace_back(a, b);
        }
        doc.classes.push_back(std::move(out));
    }
    return doc;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(Errc::io, "cannot open '" + path + "' for writing");
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f) fail(Errc::io, "write to '" + path + "' failed");
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(Errc::io, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_design_file(const std::string& path, const DesignDocument& doc) {
    write_text_file(path, dump_design(doc));
}

DesignDocument read_design_file(const std::string& path) {
    return parse_design(read_text_file(path));
}

void write_partition_file(const std::string& path, const PartitionDocument& doc) {
    write_text_file(path, dump_partition(doc));
}

PartitionDocument read_partition_file(const std::string& path) {
    return parse_partition(read_text_file(path));
}

std::string document_kind(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        fail(Errc::parse, "missing string field 'kind'");
    return j["kind"].get<std::string>();
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = digits[h & 0xf];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string(buf);
}

} // namespace pbdtk::io

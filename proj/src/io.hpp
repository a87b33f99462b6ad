#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "design.hpp"
#include "graph.hpp"

namespace pbdtk::io {

// On-disk documents are JSON with sorted keys and two-space indentation;
// serialization of a canonical-form object is byte-stable.  Field layout is
// documented in docs/formats.md.

inline constexpr int format_version = 1;

struct DesignDocument {
    Design design;
    std::optional<Resolution> resolution;
    nlohmann::json metadata;    // null when absent
    nlohmann::json certificate; // null when absent
    nlohmann::json solver;      // null when absent
};

struct PartitionDocument {
    Graph graph;
    CliquePartition partition;
    nlohmann::json metadata;
    nlohmann::json certificate;
    nlohmann::json solver;
};

struct EdgeColoringDocument {
    int n = 0;
    std::vector<std::vector<std::pair<int, int>>> classes;
};

std::string dump_design(const DesignDocument& doc);
DesignDocument parse_design(const std::string& text);

std::string dump_partition(const PartitionDocument& doc);
PartitionDocument parse_partition(const std::string& text);

std::string dump_edge_coloring(const EdgeColoringDocument& doc);
EdgeColoringDocument parse_edge_coloring(const std::string& text);

// File wrappers; throw Errc::io on filesystem errors, Errc::parse /
// Errc::version on malformed content.
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

void write_design_file(const std::string& path, const DesignDocument& doc);
DesignDocument read_design_file(const std::string& path);
void write_partition_file(const std::string& path, const PartitionDocument& doc);
PartitionDocument read_partition_file(const std::string& path);

// Peeks at the "kind" field: "design", "partition" or "edge-coloring".
std::string document_kind(const std::string& text);

// FNV-1a 64-bit checksum as 16 hex digits; used by the catalog index.
std::string fnv1a64_hex(const std::string& bytes);

} // namespace pbdtk::io

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "reuleaux/planar_map.hpp"

namespace reuleaux {

enum class CodecErrorKind {
    bad_header,
    truncated_record,
    neighbor_out_of_range,
    asymmetric_adjacency,
    unsupported_extension,
    multi_edge,
    too_large,
    bad_text,
};

struct CodecError : std::runtime_error {
    CodecErrorKind kind;
    CodecError(CodecErrorKind k, const std::string& what)
        : std::runtime_error(what), kind(k) {}
};

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

// planar_code: 15-byte ASCII header, then per graph: a vertex-count byte
// followed by n neighbor lists, each a 0-terminated run of 1-based
// neighbor bytes in rotation order. Single-byte variant only (n <= 255).
std::vector<PlanarMap> read_planar_code(const std::vector<uint8_t>& bytes);
std::vector<uint8_t> write_planar_code(const std::vector<PlanarMap>& maps);

std::vector<PlanarMap> read_planar_code_file(const std::string& path);
void write_planar_code_file(const std::string& path, const std::vector<PlanarMap>& maps);

struct EmbeddingReportFields {
    double objective = 0.0;
    double max_edge_error = 0.0;
    double avg_edge_error = 0.0;
    double min_pair_distance = 0.0;
    double diameter = 0.0;
};

// One `id x y z` line per vertex with 17 significant digits, then a
// comment block with the report fields. `header` lines, if any, are
// emitted first as comments (command line, seed, ...).
std::string write_embedding_text(const std::vector<std::array<double, 3>>& points,
                                 const EmbeddingReportFields& report,
                                 const std::vector<std::string>& header = {});

struct ParsedEmbedding {
    std::vector<std::array<double, 3>> points;
    EmbeddingReportFields report;
};

ParsedEmbedding read_embedding_text(const std::string& text);

// One `id color` line per vertex, colors in {0,1,2,3}.
std::string write_coloring_text(const std::vector<int>& colors,
                                const std::vector<std::string>& header = {});
std::vector<int> read_coloring_text(const std::string& text);

}  // namespace reuleaux

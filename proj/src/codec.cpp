#include "reuleaux/codec.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace reuleaux {

namespace {

[[noreturn]] void fail(CodecErrorKind kind, const std::string& what) {
    throw CodecError(kind, what);
}

PlanarMap decode_record(const std::vector<uint8_t>& bytes, size_t& pos, size_t record_index) {
    const std::string where = "record " + std::to_string(record_index);
    if (pos >= bytes.size()) fail(CodecErrorKind::truncated_record, where + ": missing vertex count");
    const int n = bytes[pos++];
    if (n == 0) fail(CodecErrorKind::truncated_record, where + ": zero vertex count");

    std::vector<std::vector<int>> neighbors(n);
    for (int v = 0; v < n; ++v) {
        while (true) {
            if (pos >= bytes.size())
                fail(CodecErrorKind::truncated_record,
                     where + ": unterminated list for vertex " + std::to_string(v + 1));
            const int b = bytes[pos++];
            if (b == 0) break;
            if (b > n)
                fail(CodecErrorKind::neighbor_out_of_range,
                     where + ": neighbor byte " + std::to_string(b) + " exceeds n=" +
                         std::to_string(n));
            neighbors[v].push_back(b - 1);
        }
    }
    try {
        return PlanarMap::from_rotations(neighbors);
    } catch (const InvalidMap& e) {
        const std::string what = e.what();
        if (what.find("duplicate neighbor") != std::string::npos)
            fail(CodecErrorKind::multi_edge, where + ": " + what);
        if (what.find("loop") != std::string::npos)
            fail(CodecErrorKind::multi_edge, where + ": " + what);
        if (what.find("asymmetric") != std::string::npos)
            fail(CodecErrorKind::asymmetric_adjacency, where + ": " + what);
        throw InvalidMap(where + ": " + what);
    }
}

}  // namespace

std::vector<PlanarMap> read_planar_code(const std::vector<uint8_t>& bytes) {
    const std::string_view header = kPlanarCodeHeader;
    if (bytes.size() < header.size() ||
        std::memcmp(bytes.data(), header.data(), header.size()) != 0) {
        // plantri-style extended headers (>>planar_code le<< etc.) are
        // rejected loudly rather than half-supported
        const std::string_view prefix = ">>planar_code";
        if (bytes.size() >= prefix.size() &&
            std::memcmp(bytes.data(), prefix.data(), prefix.size()) == 0)
            fail(CodecErrorKind::unsupported_extension,
                 "planar_code header carries an unsupported extension");
        fail(CodecErrorKind::bad_header, "missing >>planar_code<< header");
    }
    size_t pos = header.size();
    std::vector<PlanarMap> maps;
    while (pos < bytes.size()) maps.push_back(decode_record(bytes, pos, maps.size()));
    return maps;
}

std::vector<uint8_t> write_planar_code(const std::vector<PlanarMap>& maps) {
    std::vector<uint8_t> out(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
    for (const auto& m : maps) {
        if (m.vertex_count() > 255)
            fail(CodecErrorKind::too_large,
                 "planar_code single-byte variant requires n <= 255");
        if (!m.simple())
            fail(CodecErrorKind::multi_edge, "planar_code writer requires simple maps");
        out.push_back(static_cast<uint8_t>(m.vertex_count()));
        for (int v = 0; v < m.vertex_count(); ++v) {
            // start each rotation at the smallest neighbor id so that
            // write . read is the identity on bytes
            auto nb = m.neighbors(v);
            const size_t k = nb.size();
            size_t start = 0;
            for (size_t i = 1; i < k; ++i)
                if (nb[i] < nb[start]) start = i;
            for (size_t i = 0; i < k; ++i)
                out.push_back(static_cast<uint8_t>(nb[(start + i) % k] + 1));
            out.push_back(0);
        }
    }
    return out;
}

std::vector<PlanarMap> read_planar_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CodecError(CodecErrorKind::bad_header, "cannot open " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    return read_planar_code(bytes);
}

void write_planar_code_file(const std::string& path, const std::vector<PlanarMap>& maps) {
    const auto bytes = write_planar_code(maps);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CodecError(CodecErrorKind::bad_header, "cannot open " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

namespace {

std::string format_g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string write_embedding_text(const std::vector<std::array<double, 3>>& points,
                                 const EmbeddingReportFields& report,
                                 const std::vector<std::string>& header) {
    std::ostringstream out;
    for (const auto& line : header) out << "# " << line << "\n";
    for (size_t v = 0; v < points.size(); ++v) {
        out << v << ' ' << format_g17(points[v][0]) << ' ' << format_g17(points[v][1])
            << ' ' << format_g17(points[v][2]) << "\n";
    }
    out << "# J = " << format_g17(report.objective) << "\n";
    out << "# max_edge_error = " << format_g17(report.max_edge_error) << "\n";
    out << "# avg_edge_error = " << format_g17(report.avg_edge_error) << "\n";
    out << "# min_pair_distance = " << format_g17(report.min_pair_distance) << "\n";
    out << "# diameter = " << format_g17(report.diameter) << "\n";
    return out.str();
}

ParsedEmbedding read_embedding_text(const std::string& text) {
    ParsedEmbedding parsed;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream cs(line.substr(1));
            std::string key, eq;
            double value;
            if (cs >> key >> eq >> value && eq == "=") {
                if (key == "J") parsed.report.objective = value;
                else if (key == "max_edge_error") parsed.report.max_edge_error = value;
                else if (key == "avg_edge_error") parsed.report.avg_edge_error = value;
                else if (key == "min_pair_distance") parsed.report.min_pair_distance = value;
                else if (key == "diameter") parsed.report.diameter = value;
            }
            continue;
        }
        std::istringstream ls(line);
        size_t id;
        double x, y, z;
        if (!(ls >> id >> x >> y >> z))
            throw CodecError(CodecErrorKind::bad_text, "bad embedding line: " + line);
        if (id != parsed.points.size())
            throw CodecError(CodecErrorKind::bad_text,
                             "embedding lines must be ordered by vertex id");
        parsed.points.push_back({x, y, z});
    }
    return parsed;
}

std::string write_coloring_text(const std::vector<int>& colors,
                                const std::vector<std::string>& header) {
    std::ostringstream out;
    for (const auto& line : header) out << "# " << line << "\n";
    for (size_t v = 0; v < colors.size(); ++v) out << v << ' ' << colors[v] << "\n";
    return out.str();
}

std::vector<int> read_coloring_text(const std::string& text) {
    std::vector<int> colors;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        size_t id;
        int color;
        if (!(ls >> id >> color) || id != colors.size() || color < 0 || color > 3)
            throw CodecError(CodecErrorKind::bad_text, "bad coloring line: " + line);
        colors.push_back(color);
    }
    return colors;
}

}  // namespace reuleaux

#include "chordalpoly/io.hpp"

#include <fstream>
#include <sstream>

#include "chordalpoly/rational.hpp"

namespace chordalpoly {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string trimmed = raw;
        if (auto pos = trimmed.find_first_not_of(" \t\r"); pos != std::string::npos)
            trimmed = trimmed.substr(pos);
        else
            trimmed.clear();
        while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
            trimmed.pop_back();
        if (trimmed.empty() || trimmed[0] == '#') continue;
        lines.push_back({number, trimmed});
    }
    return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int parse_vertex_id(const std::string& tok, int n, int line) {
    int value;
    try {
        std::size_t used = 0;
        value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
        throw ParseError("malformed vertex id '" + tok + "'", line);
    }
    if (value < 1 || value > n)
        throw ParseError("vertex id " + tok + " out of range 1.." + std::to_string(n), line);
    return value - 1;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("missing 'p edge <n> <m>' header", 1);
    auto header = tokens_of(lines[0].text);
    if (header.size() != 4 || header[0] != "p" || header[1] != "edge")
        throw ParseError("malformed header; expected 'p edge <n> <m>'", lines[0].number);
    int n, m;
    try {
        n = std::stoi(header[2]);
        m = std::stoi(header[3]);
    } catch (const std::exception&) {
        throw ParseError("malformed header counts", lines[0].number);
    }
    if (n < 0 || m < 0) throw ParseError("negative counts in header", lines[0].number);
    if (static_cast<int>(lines.size()) - 1 != m)
        throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(lines.size() - 1),
                         lines.back().number);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= m; ++i) {
        auto toks = tokens_of(lines[i].text);
        if (toks.size() != 3 || toks[0] != "e")
            throw ParseError("malformed edge line; expected 'e <u> <v>'", lines[i].number);
        int u = parse_vertex_id(toks[1], n, lines[i].number);
        int v = parse_vertex_id(toks[2], n, lines[i].number);
        if (u == v) throw ParseError("loop edge", lines[i].number);
        edges.push_back({u, v});
    }
    return Graph::from_edges(n, edges);
}

namespace {

ExtendedVector parse_valued(const std::string& text, const Graph& g, bool integral_only) {
    ExtendedVector ev = ExtendedVector::zeros(g);
    for (const auto& line : content_lines(text)) {
        auto toks = tokens_of(line.text);
        if (toks.size() == 3 && toks[0] == "v") {
            int v = parse_vertex_id(toks[1], g.num_vertices(), line.number);
            Rational val;
            try {
                val = parse_rational(toks[2]);
            } catch (const InputError& err) {
                throw ParseError(err.what(), line.number);
            }
            if (integral_only && !is_integer(val))
                throw ParseError("expected an integer value, got '" + toks[2] + "'", line.number);
            ev.x[v] = val;
        } else if (toks.size() == 4 && toks[0] == "e") {
            int u = parse_vertex_id(toks[1], g.num_vertices(), line.number);
            int v = parse_vertex_id(toks[2], g.num_vertices(), line.number);
            int e = g.edge_index(u, v);
            if (e == -1)
                throw ParseError("unknown edge " + toks[1] + " " + toks[2], line.number);
            Rational val;
            try {
                val = parse_rational(toks[3]);
            } catch (const InputError& err) {
                throw ParseError(err.what(), line.number);
            }
            if (integral_only && !is_integer(val))
                throw ParseError("expected an integer value, got '" + toks[3] + "'", line.number);
            ev.y[e] = val;
        } else {
            throw ParseError("expected 'v <id> <value>' or 'e <u> <v> <value>'", line.number);
        }
    }
    return ev;
}

}  // namespace

ExtendedVector parse_weights(const std::string& text, const Graph& g) {
    return parse_valued(text, g, false);
}

ExtendedVector parse_point(const std::string& text, const Graph& g) {
    return parse_valued(text, g, true);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << content;
}

std::string digest(const std::string& content) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : content) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace chordalpoly

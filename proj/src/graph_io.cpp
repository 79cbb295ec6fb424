#include "ricci/graph_io.hpp"

#include <sstream>

namespace ricci {

Graph parse_edgelist(const std::string& bytes) {
    std::istringstream in(bytes);
    long n = -1, m = -1;
    if (!(in >> n >> m)) throw ParseError("edgelist: malformed header, expected \"n m\"");
    if (n < 0 || m < 0) throw ParseError("edgelist: negative count in header");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (long i = 0; i < m; ++i) {
        long u, v;
        if (!(in >> u >> v))
            throw ParseError("edgelist: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        if (u == v) throw ParseError("edgelist: loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edgelist: vertex out of range in edge " + std::to_string(u) +
                             " " + std::to_string(v));
        edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    }
    for (size_t i = 1; i < edges.size(); ++i) {
        // Graph's constructor also rejects duplicates, but report it as a
        // parse error with the offending pair.
        for (size_t j = 0; j < i; ++j)
            if (edges[i] == edges[j])
                throw ParseError("edgelist: duplicate edge " + std::to_string(edges[i].first) +
                                 " " + std::to_string(edges[i].second));
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(const std::string& bytes) {
    // Use the first line only.
    std::string line = bytes.substr(0, bytes.find('\n'));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) throw ParseError("graph6: empty input");
    size_t pos = 0;
    if (line.rfind(">>graph6<<", 0) == 0) pos = 10;
    long n;
    if (pos >= line.size()) throw ParseError("graph6: missing size");
    unsigned char c0 = line[pos];
    if (c0 == 126) {
        // 63 < n <= 258047: '~' then three bytes. Larger sizes are out of
        // scope for this library.
        if (pos + 4 > line.size()) throw ParseError("graph6: truncated size");
        if (static_cast<unsigned char>(line[pos + 1]) == 126)
            throw ParseError("graph6: graph too large");
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            unsigned char c = line[pos + i];
            if (c < 63 || c > 126) throw ParseError("graph6: invalid size byte");
            n = (n << 6) | (c - 63);
        }
        pos += 4;
    } else {
        if (c0 < 63 || c0 > 126) throw ParseError("graph6: invalid size byte");
        n = c0 - 63;
        pos += 1;
    }
    long bits_needed = n * (n - 1) / 2;
    long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long>(line.size()) - static_cast<long>(pos) < bytes_needed)
        throw ParseError("graph6: truncated adjacency data");
    std::vector<Edge> edges;
    long bit = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++bit) {
            unsigned char c = line[pos + bit / 6];
            if (c < 63 || c > 126) throw ParseError("graph6: invalid data byte");
            int val = (c - 63) >> (5 - bit % 6) & 1;
            if (val) edges.push_back({u, v});
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    long bits = static_cast<long>(n) * (n - 1) / 2;
    std::string data((bits + 5) / 6, 0);
    long bit = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++bit) {
            if (g.adjacent(u, v)) data[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
        }
    }
    for (char& c : data) c = static_cast<char>(c + 63);
    return out + data;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Graph parse_graph(const std::string& bytes, GraphFormat format) {
    switch (format) {
        case GraphFormat::Edgelist: return parse_edgelist(bytes);
        case GraphFormat::Graph6: return parse_graph6(bytes);
        case GraphFormat::Dot: throw ParseError("DOT is export-only");
    }
    throw ParseError("unknown format");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::Edgelist: return to_edgelist(g);
        case GraphFormat::Graph6: return to_graph6(g);
        case GraphFormat::Dot: return to_dot(g);
    }
    throw ParseError("unknown format");
}

GraphFormat format_from_path(const std::string& path) {
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0)
        return GraphFormat::Graph6;
    return GraphFormat::Edgelist;
}

}  // namespace ricci

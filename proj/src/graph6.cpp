#include "csfkit/errors.hpp"
#include "csfkit/graph.hpp"

// graph6, single-byte order only: byte 0 is n+63, then the upper triangle
// bits (0,1),(0,2),(1,2),(0,3),... packed six per byte, high bit first, each
// byte offset by 63.

namespace csf {

Graph from_graph6(std::string_view record) {
    size_t base = 0;
    static constexpr std::string_view header = ">>graph6<<";
    if (record.substr(0, header.size()) == header) base = header.size();
    std::string_view body = record.substr(base);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r'))
        body.remove_suffix(1);

    if (body.empty()) throw parse_error("graph6: empty record", base);
    unsigned first = (unsigned char)body[0];
    if (first == 126)
        throw parse_error("graph6: multi-byte vertex counts (n > 62) are not supported", base);
    if (first < 63 || first > 125)
        throw parse_error("graph6: vertex count byte out of range", base);
    int n = (int)first - 63;

    int bits = n * (n - 1) / 2;
    size_t need = 1 + (bits + 5) / 6;
    if (body.size() < need)
        throw parse_error("graph6: record truncated", base + body.size());
    if (body.size() > need)
        throw parse_error("graph6: trailing characters", base + need);

    Graph g(n);
    int k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k) {
            unsigned byte = (unsigned char)body[1 + k / 6];
            if (byte < 63 || byte > 126)
                throw parse_error("graph6: data byte out of range", base + 1 + k / 6);
            if ((byte - 63) >> (5 - k % 6) & 1) g.add_edge(u, v);
        }
    // padding bits must be zero
    for (; k < (int)(need - 1) * 6; ++k) {
        unsigned byte = (unsigned char)body[1 + k / 6];
        if (byte < 63 || byte > 126)
            throw parse_error("graph6: data byte out of range", base + 1 + k / 6);
        if ((byte - 63) >> (5 - k % 6) & 1)
            throw parse_error("graph6: nonzero padding", base + 1 + k / 6);
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out(1, (char)(n + 63));
    int k = 0;
    unsigned acc = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = acc << 1 | (g.has_edge(u, v) ? 1 : 0);
            if (++k % 6 == 0) {
                out += (char)(acc + 63);
                acc = 0;
            }
        }
    if (k % 6) out += (char)((acc << (6 - k % 6)) + 63);
    return out;
}

} // namespace csf

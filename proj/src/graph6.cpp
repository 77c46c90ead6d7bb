#include "sqfr/graph6.hpp"

#include "sqfr/errors.hpp"

namespace sqfr {

Graph parse_graph6(std::string_view record) {
    if (record.empty()) throw ParseError("empty graph6 record");
    for (char c : record) {
        unsigned b = static_cast<unsigned char>(c);
        if (b < 63 || b > 126) {
            throw ParseError("graph6 byte out of range 63..126: " + std::to_string(b));
        }
    }
    int n = static_cast<unsigned char>(record[0]) - 63;
    if (n > Graph::kMaxVertices) {
        throw ParseError("graph6 vertex count " + std::to_string(n) + " exceeds 32");
    }
    int nbits = n * (n - 1) / 2;
    std::size_t want = 1 + static_cast<std::size_t>((nbits + 5) / 6);
    if (record.size() != want) {
        throw ParseError("graph6 record length " + std::to_string(record.size()) +
                         ", expected " + std::to_string(want));
    }
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = static_cast<unsigned char>(record[static_cast<std::size_t>(1 + k / 6)]) - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    // remaining bits of the last byte must be zero padding
    for (; k % 6 != 0; ++k) {
        int byte = static_cast<unsigned char>(record[static_cast<std::size_t>(1 + k / 6)]) - 63;
        if ((byte >> (5 - k % 6)) & 1) throw ParseError("graph6 nonzero padding bits");
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    int nbits = n * (n - 1) / 2;
    std::string out(1 + static_cast<std::size_t>((nbits + 5) / 6), static_cast<char>(63));
    out[0] = static_cast<char>(63 + n);
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (g.has_edge(i, j)) {
                out[static_cast<std::size_t>(1 + k / 6)] =
                    static_cast<char>(out[static_cast<std::size_t>(1 + k / 6)] +
                                      (1 << (5 - k % 6)));
            }
        }
    }
    return out;
}

}  // namespace sqfr

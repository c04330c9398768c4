#include "imlab/graph_io.hpp"

#include <istream>
#include <sstream>

namespace imlab {

namespace {

constexpr char kBias = 63;            // printable offset; '?' encodes zero
constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(std::string_view line, std::size_t pos) {
    unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126)
        throw ParseError("graph6: character out of printable range 63..126", pos);
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    std::size_t pos = 0;
    if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    // strip a trailing newline so stream-read lines parse as-is
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (pos >= line.size()) throw ParseError("graph6: empty input", pos);

    if (static_cast<unsigned char>(line[pos]) == 126)
        throw ParseError("graph6: long form (n > 62) unsupported", pos);
    int n = decode_byte(line, pos);
    ++pos;

    int bits = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos != body)
        throw ParseError("graph6: expected " + std::to_string(body) +
                             " matrix bytes, got " + std::to_string(line.size() - pos),
                         pos);

    GraphBuilder b(n);
    int bit_index = 0;
    for (std::size_t k = 0; k < body; ++k) {
        int word = decode_byte(line, pos + k);
        for (int shift = 5; shift >= 0; --shift, ++bit_index) {
            bool bit = (word >> shift) & 1;
            if (bit_index >= bits) {
                if (bit)
                    throw ParseError("graph6: nonzero padding bit", pos + k);
                continue;
            }
            if (bit) {
                // bit_index enumerates the upper triangle column by column
                int col = 1;
                int idx = bit_index;
                while (idx >= col) {
                    idx -= col;
                    ++col;
                }
                b.add_edge(idx, col);
            }
        }
    }
    return b.build();
}

std::string encode_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw GraphError("encode_graph6: n > 62 unsupported by the short form");
    std::string out;
    out.push_back(static_cast<char>(n + kBias));
    int bits = n * (n - 1) / 2;
    int word = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            word = (word << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + kBias));
                word = 0;
                filled = 0;
            }
        }
    }
    if (bits % 6 != 0) {
        word <<= 6 - bits % 6;
        out.push_back(static_cast<char>(word + kBias));
    }
    return out;
}

Graph parse_edge_list(std::istream& in) {
    int n = 0;
    int m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header", 0);
    if (n < 0 || m < 0) throw ParseError("edge list: negative n or m", 0);
    GraphBuilder b(n);
    for (int i = 0; i < m; ++i) {
        int u = 0;
        int v = 0;
        if (!(in >> u >> v))
            throw ParseError("edge list: expected " + std::to_string(m) +
                                 " edges, got " + std::to_string(i),
                             0);
        b.add_edge(u, v);
    }
    return b.build();
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edge_list()) os << u << ' ' << v << '\n';
    return os.str();
}

}  // namespace imlab

#include "hdecomp/graph6.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "hdecomp/error.hpp"

namespace hdecomp {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > kMaxByte) {
        throw ParseError("graph6 byte " + std::to_string(static_cast<int>(c)) + " outside printable range 63..126", pos);
    }
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(kHeader)) {
        text.remove_prefix(kHeader.size());
    }
    if (text.empty()) {
        throw ParseError("empty graph6 string", 0);
    }

    std::size_t pos = 0;
    long long n = 0;
    if (static_cast<unsigned char>(text[0]) != kMaxByte) {
        n = sextet(text, 0);
        pos = 1;
    } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) != kMaxByte) {
        if (text.size() < 4) {
            throw ParseError("truncated graph6 order field", text.size());
        }
        n = (sextet(text, 1) << 12) | (sextet(text, 2) << 6) | sextet(text, 3);
        pos = 4;
    } else {
        if (text.size() < 8) {
            throw ParseError("truncated graph6 order field", text.size());
        }
        for (std::size_t i = 2; i < 8; ++i) {
            n = (n << 6) | sextet(text, i);
        }
        pos = 8;
    }
    if (n > 1'000'000) {
        throw SizeError("graph6 order " + std::to_string(n) + " is too large");
    }

    const int order = static_cast<int>(n);
    const std::size_t bits = pair_count(order);
    const std::size_t body = (bits + 5) / 6;
    if (text.size() - pos != body) {
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                             std::to_string(body) + " for order " + std::to_string(order),
                         std::min(text.size(), pos + body));
    }

    Graph g(order);
    std::size_t k = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = sextet(text, pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1) {
                g.add_edge(i, j);
            }
        }
    }
    if (bits % 6 != 0) {
        const std::size_t last = pos + body - 1;
        const int pad = 6 - static_cast<int>(bits % 6);
        if (sextet(text, last) & ((1 << pad) - 1)) {
            throw ParseError("graph6 padding bits are nonzero", last);
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(kMaxByte));
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
        }
    } else {
        out.push_back(static_cast<char>(kMaxByte));
        out.push_back(static_cast<char>(kMaxByte));
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
        }
    }

    int acc = 0;
    int filled = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    }
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.offset());
        }
    }
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open " + path);
    }
    return read_graph6_stream(in);
}

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs) {
    for (const auto& g : graphs) {
        out << emit_graph6(g) << '\n';
    }
}

}  // namespace hdecomp

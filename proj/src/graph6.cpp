#include "domgame/graph6.hpp"

namespace domgame {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void fail(std::size_t offset, const std::string& what) {
    throw FormatError("graph6: " + what + " at offset " + std::to_string(offset));
}

int payload_byte(std::string_view line, std::size_t i) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) fail(i, "byte out of range [63,126]");
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw FormatError("graph6: empty line");

    std::size_t pos = 0;
    long long n = 0;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~') fail(0, "order above 64 unsupported");
        if (line.size() < 4) fail(line.size(), "truncated size field");
        n = 0;
        for (pos = 1; pos <= 3; ++pos) n = (n << 6) | payload_byte(line, pos);
    } else {
        n = payload_byte(line, 0);
        pos = 1;
    }
    if (n > kMaxVertices) fail(0, "order " + std::to_string(n) + " exceeds 64");

    const std::size_t cells = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t want = (cells + 5) / 6;
    if (line.size() - pos != want)
        fail(pos, "payload length " + std::to_string(line.size() - pos) + ", expected " + std::to_string(want));

    std::vector<std::uint64_t> rows(n, 0);
    std::size_t cell = 0;
    int col = 1, row = 0;
    for (std::size_t i = 0; i < want; ++i) {
        int bits = payload_byte(line, pos + i);
        for (int b = 5; b >= 0 && cell < cells; --b, ++cell) {
            if ((bits >> b) & 1) {
                rows[row] |= std::uint64_t{1} << col;
                rows[col] |= std::uint64_t{1} << row;
            }
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return Graph::from_adjacency(static_cast<int>(n), std::move(rows));
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw PreconditionError("write_graph6 supports at most 62 vertices, got " + std::to_string(n));
    std::string out;
    out += static_cast<char>(n + 63);
    int acc = 0, have = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++have == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                have = 0;
            }
        }
    if (have > 0) out += static_cast<char>((acc << (6 - have)) + 63);
    return out;
}

}  // namespace domgame

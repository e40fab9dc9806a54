#include "heptalab/graph6.hpp"

#include <cstdint>

namespace heptalab {

namespace {

constexpr char kBias = 63;
constexpr char kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";
// Adjacency rows are dense bit rows; beyond this the matrix alone is gigabytes.
constexpr std::uint64_t kMaxOrder = 1U << 16;

std::string describe(unsigned char c)
{
    if (c >= 32 && c < 127)
        return std::string("'") + static_cast<char>(c) + "'";
    return "byte " + std::to_string(static_cast<unsigned>(c));
}

} // namespace

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::runtime_error("graph6: " + what + " at byte " + std::to_string(offset)), offset_(offset)
{
}

Graph from_graph6(std::string_view line)
{
    std::size_t base = 0;
    if (line.starts_with(kHeader)) {
        base = kHeader.size();
        line.remove_prefix(kHeader.size());
    }
    if (line.ends_with('\n'))
        line.remove_suffix(1);
    if (line.ends_with('\r'))
        line.remove_suffix(1);

    for (std::size_t i = 0; i < line.size(); ++i) {
        auto c = static_cast<unsigned char>(line[i]);
        if (c < static_cast<unsigned char>(kBias) || c > static_cast<unsigned char>(kMaxByte))
            throw Graph6Error("non-printable or out-of-range " + describe(c), base + i);
    }
    if (line.empty())
        throw Graph6Error("empty input", base);

    auto value = [&](std::size_t i) { return static_cast<std::uint64_t>(line[i] - kBias); };

    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (line[0] != kMaxByte) {
        n = value(0);
        pos = 1;
    } else if (line.size() >= 2 && line[1] != kMaxByte) {
        if (line.size() < 4)
            throw Graph6Error("truncated 4-byte length header", base + line.size());
        n = (value(1) << 12) | (value(2) << 6) | value(3);
        if (n < 63)
            throw Graph6Error("non-minimal length header for n = " + std::to_string(n), base);
        pos = 4;
    } else {
        if (line.size() < 8)
            throw Graph6Error("truncated 8-byte length header", base + line.size());
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | value(i);
        if (n <= 258047)
            throw Graph6Error("non-minimal length header for n = " + std::to_string(n), base);
        pos = 8;
    }
    if (n > kMaxOrder)
        throw Graph6Error("vertex count " + std::to_string(n) + " exceeds supported maximum", base);

    std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::uint64_t expected = (bits + 5) / 6;
    std::uint64_t actual = line.size() - pos;
    if (actual != expected)
        throw Graph6Error("payload has " + std::to_string(actual) + " bytes, expected " +
                              std::to_string(expected) + " for n = " + std::to_string(n),
                          base + pos + std::min(actual, expected));

    GraphBuilder b(static_cast<std::size_t>(n));
    std::uint64_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            std::uint64_t chunk = value(pos + k / 6);
            if ((chunk >> (5 - k % 6)) & 1U)
                b.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        std::uint64_t last = value(line.size() - 1);
        std::uint64_t pad_mask = (std::uint64_t{1} << (6 - bits % 6)) - 1;
        if ((last & pad_mask) != 0)
            throw Graph6Error("nonzero padding bits", base + line.size() - 1);
    }
    return b.build();
}

std::string to_graph6(const Graph& g)
{
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(kMaxByte);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
    } else {
        out.append(2, kMaxByte);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
    }

    unsigned chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

Graph6Record Graph6Record::parse(std::string_view line)
{
    Graph g = from_graph6(line);
    return {to_graph6(g), std::move(g)};
}

Graph6Record Graph6Record::of(Graph g)
{
    std::string text = to_graph6(g);
    return {std::move(text), std::move(g)};
}

} // namespace heptalab

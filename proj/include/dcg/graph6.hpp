#pragma once

// graph6 / sparse6 codec, bit-exact against the nauty format description.
//
// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (0,1),(0,2),(1,2),(0,3),..., packed big-endian into 6-bit
// bytes offset by 63, padded with 0 bits. sparse6 lines start with ':' and
// carry a stream of (b, x) units, b one bit and x k bits with k = bits
// needed for n-1.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dcg/graph.hpp"

namespace dcg {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t byte_offset)
        : std::runtime_error(std::move(message) + " (byte offset " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace g6detail {

constexpr int kBias = 63;
constexpr char kBigN = 126;  // '~'

struct BitReader {
    std::string_view data;
    std::size_t pos = 0;   // next byte
    int bit = 0;           // next bit within current byte, 0 = high

    bool exhausted() const { return pos >= data.size(); }

    std::size_t offset() const { return pos; }

    int value_at(std::size_t p) const {
        const unsigned char c = static_cast<unsigned char>(data[p]);
        if (c < kBias || c > 126)
            throw ParseError("invalid byte 0x" + to_hex(c) + " in bit data", p);
        return c - kBias;
    }

    // Reads one bit; false at end of data.
    bool next(int& out) {
        if (pos >= data.size()) return false;
        out = (value_at(pos) >> (5 - bit)) & 1;
        if (++bit == 6) {
            bit = 0;
            ++pos;
        }
        return true;
    }

    // Reads `count` bits big-endian; false if fewer remain.
    bool next_bits(int count, std::uint64_t& out) {
        out = 0;
        for (int i = 0; i < count; ++i) {
            int b = 0;
            if (!next(b)) return false;
            out = out << 1 | static_cast<std::uint64_t>(b);
        }
        return true;
    }

    // Remaining bits of the current byte plus all following bits.
    bool rest_is_all_ones() {
        int b = 0;
        while (next(b))
            if (b == 0) return false;
        return true;
    }

    static std::string to_hex(unsigned char c) {
        static const char* digits = "0123456789abcdef";
        return {digits[c >> 4], digits[c & 15]};
    }
};

// N(n): one byte for n <= 62, '~' + 18 bits for larger n. The 8-byte form
// encodes n far above the 64-vertex cap, so it is rejected outright.
inline int parse_order(std::string_view s, std::size_t& pos) {
    if (pos >= s.size()) throw ParseError("missing vertex count", pos);
    const unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < kBias || c > 126)
        throw ParseError("invalid vertex-count byte 0x" + BitReader::to_hex(c), pos);
    if (c < kBigN) {
        ++pos;
        return c - kBias;
    }
    if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos + 1]) == kBigN)
        throw ParseError("vertex count exceeds the 64-vertex limit", pos);
    if (pos + 4 > s.size()) throw ParseError("truncated vertex count", s.size());
    long n = 0;
    for (std::size_t i = pos + 1; i < pos + 4; ++i) {
        const unsigned char b = static_cast<unsigned char>(s[i]);
        if (b < kBias || b > 126)
            throw ParseError("invalid vertex-count byte 0x" + BitReader::to_hex(b), i);
        n = n << 6 | (b - kBias);
    }
    if (n > kMaxVertices)
        throw ParseError("vertex count " + std::to_string(n) + " exceeds the 64-vertex limit", pos);
    pos += 4;
    return static_cast<int>(n);
}

inline void append_order(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(kBigN);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
}

// Bits needed to write n-1, at least one.
inline int sparse6_width(int n) {
    int k = 1;
    while ((1 << k) < n) ++k;
    return k;
}

inline Graph parse_graph6_body(std::string_view s, std::size_t pos) {
    const int n = parse_order(s, pos);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
    BitReader reader{s, pos};
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            int b = 0;
            if (!reader.next(b)) throw ParseError("truncated adjacency bits", s.size());
            if (b) {
                rows[static_cast<std::size_t>(row)] |= std::uint64_t{1} << col;
                rows[static_cast<std::size_t>(col)] |= std::uint64_t{1} << row;
            }
        }
    if (reader.bit != 0) {
        // canonical padding is zero bits
        const std::size_t at = reader.pos;
        int b = 0;
        while (reader.pos == at && reader.next(b))
            if (b) throw ParseError("nonzero padding bits", at);
    }
    if (!reader.exhausted()) throw ParseError("trailing data after graph", reader.offset());
    return Graph::from_rows(std::move(rows));
}

inline Graph parse_sparse6_body(std::string_view s, std::size_t pos) {
    const int n = parse_order(s, pos);
    const int k = sparse6_width(n);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
    BitReader reader{s, pos};
    long long v = 0;
    for (;;) {
        const std::size_t unit_at = reader.offset();
        int b = 0;
        if (!reader.next(b)) break;
        std::uint64_t x = 0;
        if (!reader.next_bits(k, x)) break;  // partial unit = padding
        if (b) ++v;
        if (v >= n || x >= static_cast<std::uint64_t>(n)) break;
        if (static_cast<long long>(x) > v) {
            v = static_cast<long long>(x);
        } else if (static_cast<long long>(x) == v) {
            // A loop decoded from all-one bits on the last unit is the
            // documented padding ambiguity for n a power of two; anything
            // else is not a simple graph.
            if (v == n - 1 && b == 1 && x + 1 == (std::uint64_t{1} << k) && reader.rest_is_all_ones())
                break;
            throw ParseError("loop on vertex " + std::to_string(v) + "; graphs are simple", unit_at);
        } else {
            rows[static_cast<std::size_t>(x)] |= std::uint64_t{1} << v;
            rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << x;
        }
    }
    return Graph::from_rows(std::move(rows));
}

}  // namespace g6detail

// Accepts graph6 or sparse6, auto-detected by prefix; the optional
// >>graph6<< / >>sparse6<< headers are tolerated.
inline Graph parse_graph6(std::string_view line) {
    std::size_t pos = 0;
    if (line.rfind(">>graph6<<", 0) == 0) pos = 10;
    else if (line.rfind(">>sparse6<<", 0) == 0) pos = 11;
    while (line.size() > pos && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (pos >= line.size()) throw ParseError("empty graph record", pos);
    if (line[pos] == ':') return g6detail::parse_sparse6_body(line, pos + 1);
    return g6detail::parse_graph6_body(line, pos);
}

inline std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    g6detail::append_order(out, n);
    int acc = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = acc << 1 | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + g6detail::kBias));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + g6detail::kBias));
    return out;
}

inline std::string encode_sparse6(const Graph& g) {
    const int n = g.vertex_count();
    const int k = g6detail::sparse6_width(n);
    std::string out = ":";
    g6detail::append_order(out, n);

    std::vector<int> bits;
    auto push_bits = [&](std::uint64_t value, int width) {
        for (int i = width - 1; i >= 0; --i) bits.push_back(static_cast<int>(value >> i & 1));
    };
    int cur = 0;
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) {
            if (u > v) break;
            if (v == cur) {
                bits.push_back(0);
                push_bits(static_cast<std::uint64_t>(u), k);
            } else if (v == cur + 1) {
                cur = v;
                bits.push_back(1);
                push_bits(static_cast<std::uint64_t>(u), k);
            } else {
                cur = v;
                bits.push_back(1);
                push_bits(static_cast<std::uint64_t>(v), k);
                bits.push_back(0);
                push_bits(static_cast<std::uint64_t>(u), k);
            }
        }

    int pad = (6 - static_cast<int>(bits.size()) % 6) % 6;
    // All-ones padding would decode as one extra loop when n is a power of
    // two and vertex n-2 was current; lead with a zero bit in that case.
    if (pad >= k + 1 && n >= 2 && n == (1 << k) && cur == n - 2) {
        bits.push_back(0);
        --pad;
    }
    for (int i = 0; i < pad; ++i) bits.push_back(1);

    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int acc = 0;
        for (std::size_t j = i; j < i + 6; ++j) acc = acc << 1 | bits[j];
        out.push_back(static_cast<char>(acc + g6detail::kBias));
    }
    return out;
}

}  // namespace dcg

#include "pancycle/graph6.hpp"

#include <bit>
#include <cstdint>

#include "pancycle/errors.hpp"

namespace pancycle {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
    const int v = static_cast<unsigned char>(c) - 63;
    if (v < 0 || v > 63) throw MalformedRecord(std::string("invalid graph6 character '") + c + "'");
    return v;
}

// MSB-first bit stream over the sextets of a record.
class BitReader {
public:
    explicit BitReader(std::string_view data) : data_(data) {}

    std::uint64_t take(int k) {
        if (k > 32) {
            const std::uint64_t hi = take(k - 32);
            return (hi << 32) | take(32);
        }
        while (have_ < k) {
            acc_ = (acc_ << 6) | static_cast<std::uint64_t>(sextet(data_[next_++]));
            have_ += 6;
        }
        have_ -= k;
        return (acc_ >> have_) & ((std::uint64_t{1} << k) - 1);
    }

    bool padding_clear() const { return (acc_ & ((std::uint64_t{1} << have_) - 1)) == 0; }

private:
    std::string_view data_;
    std::size_t next_ = 0;
    std::uint64_t acc_ = 0;
    int have_ = 0;
};

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    if (line.empty()) throw MalformedRecord("empty graph6 record");

    std::size_t pos = 0;
    long n = 0;
    if (line[0] != '~') {
        n = sextet(line[0]);
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~') throw OrderTooLarge("graph6 order beyond 258047 is not supported");
        if (line.size() < 4) throw MalformedRecord("truncated graph6 order field");
        n = (long{sextet(line[1])} << 12) | (long{sextet(line[2])} << 6) | sextet(line[3]);
        if (n < 63) throw MalformedRecord("non-canonical graph6 order field");
        pos = 4;
    }
    if (n > kMaxOrder) throw OrderTooLarge("graph6 order " + std::to_string(n) + " exceeds 64");
    if (n == 0) throw MalformedRecord("graph6 record of the empty graph");

    const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t chars = (bit_count + 5) / 6;
    if (line.size() - pos != chars) throw MalformedRecord("graph6 record has wrong length for order " + std::to_string(n));

    Graph g(static_cast<int>(n));
    BitReader bits(line.substr(pos));
    // Column j carries the pairs (0,j)..(j-1,j), first pair in the high bit.
    for (int j = 1; j < n; ++j) {
        std::uint64_t col = bits.take(j);
        while (col) {
            const int i = j - 1 - std::countr_zero(col);
            col &= col - 1;
            g.rows_[i] |= std::uint64_t{1} << j;
            g.rows_[j] |= std::uint64_t{1} << i;
        }
    }
    if (!bits.padding_clear()) throw MalformedRecord("nonzero graph6 padding bits");
    return g;
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

}  // namespace pancycle

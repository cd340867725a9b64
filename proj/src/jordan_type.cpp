#include "unip/jordan_type.hpp"

#include <cctype>
#include <charconv>

#include "unip/error.hpp"
#include "unip/primes.hpp"

namespace unip {

JordanType::JordanType(std::initializer_list<std::int64_t> sizes) {
    for (auto s : sizes)
        add(s);
}

JordanType JordanType::from_sizes(const std::vector<std::int64_t> &sizes) {
    JordanType t;
    for (auto s : sizes)
        t.add(s);
    return t;
}

JordanType JordanType::from_pairs(const std::vector<std::pair<std::int64_t, std::int64_t>> &pairs) {
    JordanType t;
    for (auto [s, m] : pairs)
        t.add(s, m);
    return t;
}

void JordanType::add(std::int64_t size, std::int64_t mult) {
    if (size < 1)
        throw DomainError("Jordan block size must be positive, got " + std::to_string(size));
    if (mult < 0)
        throw DomainError("negative block multiplicity");
    if (mult == 0)
        return;
    auto &m = blocks_[size];
    m = checked_add(m, mult);
}

void JordanType::merge(const JordanType &other) {
    for (auto [s, m] : other.blocks_)
        add(s, m);
}

std::int64_t JordanType::dim() const {
    std::int64_t d = 0;
    for (auto [s, m] : blocks_)
        d = checked_add(d, checked_mul(s, m));
    return d;
}

std::int64_t JordanType::multiplicity(std::int64_t size) const {
    auto it = blocks_.find(size);
    return it == blocks_.end() ? 0 : it->second;
}

std::int64_t JordanType::num_blocks() const {
    std::int64_t n = 0;
    for (auto [s, m] : blocks_)
        n += m;
    return n;
}

std::int64_t JordanType::max_block() const { return blocks_.empty() ? 0 : blocks_.begin()->first; }

std::vector<std::int64_t> JordanType::sizes() const {
    std::vector<std::int64_t> out;
    for (auto [s, m] : blocks_)
        out.insert(out.end(), static_cast<std::size_t>(m), s);
    return out;
}

bool JordanType::fits_order(std::int64_t p) const { return max_block() <= p; }

void JordanType::check_order(std::int64_t p) const {
    if (!fits_order(p))
        throw DomainError("Jordan block J_" + std::to_string(max_block()) + " exceeds p = " + std::to_string(p));
}

std::string JordanType::to_string() const {
    std::string out;
    for (auto [s, m] : blocks_) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(s);
        if (m != 1)
            out += '^' + std::to_string(m);
    }
    return out;
}

namespace {

std::int64_t read_int(std::string_view text, std::size_t &pos) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + pos)
        throw ParseError("expected a positive integer in partition", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return v;
}

} // namespace

JordanType JordanType::parse(std::string_view text) {
    JordanType t;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
    };
    skip();
    while (pos < text.size()) {
        std::size_t start = pos;
        auto size = read_int(text, pos);
        std::int64_t mult = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            mult = read_int(text, pos);
            if (mult < 1)
                throw ParseError("multiplicity must be positive", pos);
        }
        if (size < 1)
            throw ParseError("block size must be positive", start);
        if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ',')
            throw ParseError(std::string("unexpected character '") + text[pos] + "' in partition", pos);
        t.add(size, mult);
        skip();
    }
    return t;
}

JordanType operator+(JordanType a, const JordanType &b) {
    a.merge(b);
    return a;
}

JordanType scale(const JordanType &t, std::int64_t m) {
    JordanType out;
    for (auto [s, k] : t.blocks())
        out.add(s, checked_mul(k, m));
    return out;
}

std::int64_t partition_distance(const JordanType &a, const JordanType &b) {
    std::int64_t d = 0;
    for (auto [s, m] : a.blocks())
        d += std::max<std::int64_t>(0, m - b.multiplicity(s));
    for (auto [s, m] : b.blocks())
        d += std::max<std::int64_t>(0, m - a.multiplicity(s));
    return d;
}

} // namespace unip

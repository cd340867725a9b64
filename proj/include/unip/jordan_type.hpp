#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace unip {

/// Jordan block partition of a unipotent operator: block size -> multiplicity.
///
/// Canonical form is descending by size with multiplicities merged, rendered
/// as "5^15 1^3" (exponent omitted when it is 1). The empty type is the zero
/// module. Block sizes are not bounded by p here because distinguished-class
/// and class-table data carry blocks larger than p; use check_order() where
/// an order-p element is implied.
class JordanType {
  public:
    using BlockMap = std::map<std::int64_t, std::int64_t, std::greater<>>;

    JordanType() = default;
    // Each entry is one block size; repeats are merged.
    JordanType(std::initializer_list<std::int64_t> sizes);
    static JordanType from_sizes(const std::vector<std::int64_t> &sizes);
    static JordanType from_pairs(const std::vector<std::pair<std::int64_t, std::int64_t>> &pairs);

    // Accepts "15 9 3", "15,9,3", "5^15 1^3" and mixtures; empty string is the
    // empty type. Throws ParseError.
    static JordanType parse(std::string_view text);

    void add(std::int64_t size, std::int64_t mult = 1);
    void merge(const JordanType &other);

    std::int64_t dim() const;
    std::int64_t multiplicity(std::int64_t size) const;
    std::int64_t num_blocks() const;
    std::int64_t max_block() const;
    bool empty() const noexcept { return blocks_.empty(); }

    const BlockMap &blocks() const noexcept { return blocks_; }
    // Sizes with repetition, descending.
    std::vector<std::int64_t> sizes() const;

    // True when every block is at most p (the element has order dividing p).
    bool fits_order(std::int64_t p) const;
    // Throws DomainError naming the offending block when fits_order fails.
    void check_order(std::int64_t p) const;

    std::string to_string() const;

    friend bool operator==(const JordanType &, const JordanType &) = default;

  private:
    BlockMap blocks_;
};

JordanType operator+(JordanType a, const JordanType &b);
// m copies of t.
JordanType scale(const JordanType &t, std::int64_t m);

// Size of the multiset symmetric difference of the block lists.
std::int64_t partition_distance(const JordanType &a, const JordanType &b);

} // namespace unip

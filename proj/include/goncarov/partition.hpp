#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "goncarov/poly.hpp"

namespace gonc {

inline constexpr unsigned kPartitionGuard = 12;

// Set partition of [n] = {1..n}; blocks sorted internally and ordered by
// least element.
class SetPartition {
public:
    // From a restricted growth string (0-based block index per element).
    static SetPartition from_rgs(std::vector<std::uint8_t> rgs);
    static SetPartition from_blocks(unsigned n, std::vector<std::vector<unsigned>> blocks);
    // Space-separated 1-based block indices, e.g. "1 2 1 1 1 3 3 3".
    static SetPartition parse(std::string_view text);

    static SetPartition finest(unsigned n);
    static SetPartition coarsest(unsigned n);

    unsigned n() const { return static_cast<unsigned>(rgs_.size()); }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<std::vector<unsigned>>& blocks() const { return blocks_; }
    const std::vector<std::uint8_t>& rgs() const { return rgs_; }
    // 0-based block index of element e in [1, n].
    unsigned block_of(unsigned e) const { return rgs_[e - 1]; }

    std::string str() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.rgs_ == b.rgs_; }
    friend bool operator<(const SetPartition& a, const SetPartition& b) { return a.rgs_ < b.rgs_; }

private:
    std::vector<std::uint8_t> rgs_;
    std::vector<std::vector<unsigned>> blocks_;
};

// Block-size profile of sigma/pi: lambda[i-1] = number of induced blocks of size i.
struct PartitionClass {
    std::vector<unsigned> lambda;
    friend bool operator==(const PartitionClass&, const PartitionClass&) = default;
};

// Visits every partition of [n] in restricted-growth-string lexicographic order.
void for_each_partition(unsigned n, const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> partitions_of(unsigned n);

bool refines(const SetPartition& pi, const SetPartition& sigma);
PartitionClass induced_class(const SetPartition& pi, const SetPartition& sigma);

// All sigma >= pi, in RGS order over the blocks of pi.
std::vector<SetPartition> coarsenings(const SetPartition& pi);

// w(pi, sigma) = prod_i w_i^{lambda_i} with w_1 = 1.
MultiPoly zeta_type(const SetPartition& pi, const SetPartition& sigma);
// w(0, pi) = prod over blocks B of w_{|B|}.
MultiPoly block_weight(const SetPartition& pi);

// Moebius-type function mu^w. Each row mu^w(pi, .) is computed on first use by
// the defining recursion over the interval [pi, 1]; not thread-safe while rows
// are being filled.
class MobiusTable {
public:
    explicit MobiusTable(unsigned n);

    unsigned n() const { return n_; }
    const MultiPoly& mu(const SetPartition& pi, const SetPartition& sigma);

private:
    struct Row {
        std::vector<SetPartition> upper;       // coarsenings of pi, by decreasing block count
        std::map<SetPartition, MultiPoly> value;
    };
    const Row& row(const SetPartition& pi);

    unsigned n_;
    std::map<SetPartition, Row> rows_;
};

MultiPoly mobius_type(const SetPartition& pi, const SetPartition& sigma);

// a_n(x; w)
MultiPoly zeta_enumerator(unsigned n);
// b_n(x; w)
MultiPoly mobius_enumerator(unsigned n);

} // namespace gonc

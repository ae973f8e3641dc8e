#pragma once

#include <cstdint>
#include <vector>

#include "goncarov/operator_calculus.hpp"
#include "goncarov/poly.hpp"
#include "goncarov/series.hpp"

namespace gonc {

// Interpolation grid z_0, z_1, ... with polynomial nodes.
class Grid {
public:
    Grid() = default;
    explicit Grid(std::vector<MultiPoly> nodes) : nodes_(std::move(nodes)) {}

    static Grid symbolic(unsigned length);
    static Grid numeric(const std::vector<long>& values);
    // z_i = a + b*i
    static Grid arithmetic(const MultiPoly& a, const MultiPoly& b, unsigned length);

    std::size_t size() const { return nodes_.size(); }
    const MultiPoly& operator[](std::size_t i) const { return nodes_.at(i); }
    const std::vector<MultiPoly>& nodes() const { return nodes_; }

    Grid negated() const;                           // -Z
    Grid shifted(const MultiPoly& eta) const;       // Z + eta
    Grid reflected(const MultiPoly& origin) const;  // origin - Z

private:
    std::vector<MultiPoly> nodes_;
};

// Ordered set partition (B_1, ..., B_k) of [n], stored as the surjection
// element -> 0-based block position.
class OrderedPartition {
public:
    OrderedPartition(std::vector<std::uint8_t> position, unsigned block_count);

    unsigned n() const { return static_cast<unsigned>(position_.size()); }
    unsigned block_count() const { return k_; }
    const std::vector<std::uint8_t>& positions() const { return position_; }
    std::vector<std::vector<unsigned>> blocks() const;
    // b_1..b_k
    std::vector<unsigned> block_sizes() const;

    friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;

private:
    std::vector<std::uint8_t> position_;
    unsigned k_;
};

inline constexpr unsigned kOrderedPartitionGuard = 8;

std::vector<OrderedPartition> ordered_partitions(unsigned n);

// t_0 = 1; t_n = p_n(x) - sum_{i<n} C(n,i) p_{n-i}(z_i) t_i(x).
PolySequence goncarov_sequence(const PolySequence& p, const Grid& grid, unsigned n_max);

// t_n(0; -Z) as the signed sum over ordered partitions.
MultiPoly goncarov_constant_ordered_partitions(const PolySequence& p, const Grid& grid, unsigned n);

// t_n(x + eta; Z + eta) == t_n(x; Z) with symbolic x, eta, z_i.
CheckResult verify_shift_invariance(const PolySequence& p, unsigned n_max);

// eval_{z_i} f(D)^i t_n == n! delta_{i,n} for 0 <= i <= n <= n_max.
CheckResult verify_biorthogonality(const TruncatedSeries& f, const Grid& grid, const PolySequence& t,
                                   unsigned n_max);

// sum_{i<=n} C(n,i) p_{n-i}(z_i) t_i(x) == p_n(x) for n <= n_max.
CheckResult verify_reconstruction(const PolySequence& p, const Grid& grid, const PolySequence& t,
                                  unsigned n_max);

} // namespace gonc

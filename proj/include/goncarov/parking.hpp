#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "goncarov/check.hpp"
#include "goncarov/partition.hpp"
#include "goncarov/poly.hpp"

namespace gonc {

inline constexpr std::uint64_t kLabelingGuard = 10'000'000;

// Nondecreasing positive bound vector u_1 <= ... <= u_n.
class ParkingVector {
public:
    explicit ParkingVector(std::vector<long> bounds);

    std::size_t size() const { return u_.size(); }
    long operator[](std::size_t i) const { return u_.at(i); }
    const std::vector<long>& bounds() const { return u_; }
    long max_bound() const { return u_.empty() ? 0 : u_.back(); }
    bool strictly_increasing() const;
    ParkingVector prefix(std::size_t len) const;

private:
    std::vector<long> u_;
};

bool is_u_parking(std::span<const long> seq, const ParkingVector& u);

// Brute force over {1..u_n}^n.
std::uint64_t count_parking(unsigned n, const ParkingVector& u);

// Block labelings f: Block(pi) -> {1..z_{n-1}} whose induced list is a
// z-parking function. With `injective`, distinct blocks get distinct labels.
std::uint64_t pf_partition(const SetPartition& pi, const ParkingVector& zvec, bool injective = false);

// sum over Pi_n of w(0, pi) * PF_pi(Z); 1 for n = 0.
MultiPoly weighted_pf_enumerator(unsigned n, const ParkingVector& zvec);

// a_n(x; w) == sum_i C(n,i) a_{n-i}(x - z_i; w) * weighted_pf_enumerator(i),
// together with a brute-force classification of every block-labelled
// partition by its parking prefix. Needs z strictly increasing and z_{n-1} < x.
CheckResult verify_decomposition(unsigned n, const ParkingVector& zvec, long x);

} // namespace gonc

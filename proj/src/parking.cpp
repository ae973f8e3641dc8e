#include "goncarov/parking.hpp"

#include <algorithm>

#include "goncarov/error.hpp"

namespace gonc {

namespace {

// Order statistics of the labelling satisfy x_(i) <= u_i, tested through the
// label histogram: #{cars with label <= u_i} >= i for every i.
class ParkingTester {
public:
    ParkingTester(const ParkingVector& u, long max_label) : u_(u), hist_(max_label + 2, 0), prefix_(max_label + 2, 0) {}

    // labels[b] is the label of a group of sizes[b] cars.
    bool test(const std::vector<long>& labels, const std::vector<unsigned>& sizes) {
        std::fill(hist_.begin(), hist_.end(), 0u);
        const long cap = static_cast<long>(hist_.size()) - 1;
        for (std::size_t b = 0; b < labels.size(); ++b) hist_[std::min(labels[b], cap)] += sizes[b];
        unsigned running = 0;
        for (std::size_t v = 0; v < hist_.size(); ++v) {
            running += hist_[v];
            prefix_[v] = running;
        }
        for (std::size_t i = 0; i < u_.size(); ++i) {
            const long bound = std::min(u_[i], cap);
            if (bound < 1 || prefix_[bound] < i + 1) return false;
        }
        return true;
    }

    // Length of the longest prefix of order statistics that parks.
    unsigned parking_prefix(const std::vector<long>& labels, const std::vector<unsigned>& sizes,
                            std::vector<long>& scratch) {
        scratch.clear();
        for (std::size_t b = 0; b < labels.size(); ++b) scratch.insert(scratch.end(), sizes[b], labels[b]);
        std::sort(scratch.begin(), scratch.end());
        unsigned k = 0;
        while (k < scratch.size() && k < u_.size() && scratch[k] <= u_[k]) ++k;
        return k;
    }

private:
    const ParkingVector& u_;
    std::vector<unsigned> hist_;
    std::vector<unsigned> prefix_;
};

std::uint64_t checked_power(long base, std::size_t exp) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        out *= static_cast<std::uint64_t>(base);
        if (out > kLabelingGuard) {
            throw Error(ErrorCode::SizeLimitExceeded, "more than 10^7 labelings");
        }
    }
    return out;
}

std::vector<unsigned> block_sizes(const SetPartition& pi) {
    std::vector<unsigned> sizes;
    for (const auto& b : pi.blocks()) sizes.push_back(static_cast<unsigned>(b.size()));
    return sizes;
}

// Calls visit(labels) for every labels in {1..max_label}^k.
template <typename Visit>
void for_each_labeling(std::size_t k, long max_label, Visit&& visit) {
    if (max_label < 1) return;
    std::vector<long> labels(k, 1);
    while (true) {
        visit(labels);
        std::size_t i = 0;
        while (i < k && labels[i] == max_label) labels[i++] = 1;
        if (i == k) return;
        ++labels[i];
    }
}

bool all_distinct(const std::vector<long>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if (labels[i] == labels[j]) return false;
        }
    }
    return true;
}

} // namespace

ParkingVector::ParkingVector(std::vector<long> bounds) : u_(std::move(bounds)) {
    for (std::size_t i = 0; i < u_.size(); ++i) {
        if (u_[i] < 1 || (i > 0 && u_[i] < u_[i - 1])) {
            throw std::invalid_argument("parking vector must be positive and nondecreasing");
        }
    }
}

bool ParkingVector::strictly_increasing() const {
    for (std::size_t i = 1; i < u_.size(); ++i) {
        if (u_[i] <= u_[i - 1]) return false;
    }
    return true;
}

ParkingVector ParkingVector::prefix(std::size_t len) const {
    if (len > u_.size()) throw Error(ErrorCode::LengthMismatch, "grid shorter than requested length");
    return ParkingVector(std::vector<long>(u_.begin(), u_.begin() + static_cast<std::ptrdiff_t>(len)));
}

bool is_u_parking(std::span<const long> seq, const ParkingVector& u) {
    if (seq.size() != u.size()) {
        throw Error(ErrorCode::LengthMismatch, "sequence and parking vector lengths differ");
    }
    std::vector<long> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > u[i]) return false;
    }
    return true;
}

std::uint64_t count_parking(unsigned n, const ParkingVector& u) {
    if (n != u.size()) throw Error(ErrorCode::LengthMismatch, "n must equal |u|");
    if (n == 0) return 1;
    checked_power(u.max_bound(), n);
    std::uint64_t count = 0;
    for_each_labeling(n, u.max_bound(), [&](const std::vector<long>& seq) {
        if (is_u_parking(seq, u)) ++count;
    });
    return count;
}

std::uint64_t pf_partition(const SetPartition& pi, const ParkingVector& zvec, bool injective) {
    if (zvec.size() != pi.n()) {
        throw Error(ErrorCode::LengthMismatch, "grid length must equal the ground set size");
    }
    const long max_label = zvec.max_bound();
    checked_power(max_label, pi.block_count());
    const auto sizes = block_sizes(pi);
    ParkingTester tester(zvec, max_label);
    std::uint64_t count = 0;
    for_each_labeling(pi.block_count(), max_label, [&](const std::vector<long>& labels) {
        if (injective && !all_distinct(labels)) return;
        if (tester.test(labels, sizes)) ++count;
    });
    return count;
}

MultiPoly weighted_pf_enumerator(unsigned n, const ParkingVector& zvec) {
    if (n == 0) return MultiPoly(1);
    const ParkingVector z = zvec.prefix(n);
    std::uint64_t budget = 0;
    MultiPoly out;
    for_each_partition(n, [&](const SetPartition& pi) {
        budget += checked_power(z.max_bound(), pi.block_count());
        if (budget > kLabelingGuard) throw Error(ErrorCode::SizeLimitExceeded, "more than 10^7 labelings");
        const std::uint64_t count = pf_partition(pi, z);
        if (count) out += block_weight(pi) * Rational(Integer(static_cast<unsigned long>(count)));
    });
    return out;
}

CheckResult verify_decomposition(unsigned n, const ParkingVector& zvec, long x) {
    if (n == 0) return zeta_enumerator(0) == MultiPoly(1) ? CheckResult::pass()
                                                          : CheckResult::fail(0, zeta_enumerator(0) - 1);
    const ParkingVector z = zvec.prefix(n);
    if (!z.strictly_increasing() || z.max_bound() >= x) {
        throw Error(ErrorCode::HypothesisViolated, "needs z_0 < z_1 < ... < z_{n-1} < x");
    }
    const VarId xv = VarId::x();

    // Algebraic side of the identity.
    std::vector<MultiPoly> terms(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        const long shifted = i < n ? x - z[i] : 0;
        const MultiPoly a = i < n ? poly_substitute(zeta_enumerator(n - i), xv, MultiPoly(shifted)) : MultiPoly(1);
        terms[i] = a * weighted_pf_enumerator(i, z) * Rational(binomial(n, i));
    }
    const MultiPoly lhs = poly_substitute(zeta_enumerator(n), xv, MultiPoly(x));
    MultiPoly rhs;
    for (const auto& t : terms) rhs += t;
    if (lhs != rhs) return CheckResult::fail(n, lhs - rhs, "a_n(x) != sum of decomposition terms");

    // Enumerative side: split every (pi, f) with f: Block(pi) -> [x] by the
    // length i of its parking prefix and compare bucket i with term i.
    std::vector<MultiPoly> buckets(n + 1);
    std::uint64_t budget = 0;
    ParkingTester tester(z, x);
    std::vector<long> scratch;
    for_each_partition(n, [&](const SetPartition& pi) {
        budget += checked_power(x, pi.block_count());
        if (budget > kLabelingGuard) throw Error(ErrorCode::SizeLimitExceeded, "more than 10^7 labelings");
        const auto sizes = block_sizes(pi);
        std::vector<std::uint64_t> counts(n + 1, 0);
        for_each_labeling(pi.block_count(), x, [&](const std::vector<long>& labels) {
            ++counts[tester.parking_prefix(labels, sizes, scratch)];
        });
        const MultiPoly weight = block_weight(pi);
        for (unsigned i = 0; i <= n; ++i) {
            if (counts[i]) buckets[i] += weight * Rational(Integer(static_cast<unsigned long>(counts[i])));
        }
    });
    for (unsigned i = 0; i <= n; ++i) {
        if (buckets[i] != terms[i]) {
            return CheckResult::fail(i, buckets[i] - terms[i],
                                     "labelled partitions with parking prefix " + std::to_string(i) +
                                         " disagree with C(n,i) a_{n-i}(x-z_i) PF_i");
        }
    }
    return CheckResult::pass();
}

} // namespace gonc

#include "goncarov/goncarov.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "goncarov/error.hpp"
#include "goncarov/partition.hpp"

namespace gonc {

namespace {

void require_grid(const Grid& grid, unsigned nodes_needed) {
    if (grid.size() < nodes_needed) {
        throw Error(ErrorCode::GridTooShort, "grid has " + std::to_string(grid.size()) + " nodes, need " +
                                                 std::to_string(nodes_needed));
    }
}

MultiPoly at(const MultiPoly& p, const MultiPoly& node) { return poly_substitute(p, VarId::x(), node); }

} // namespace

Grid Grid::symbolic(unsigned length) {
    std::vector<MultiPoly> nodes;
    for (unsigned i = 0; i < length; ++i) nodes.emplace_back(VarId::z(i));
    return Grid(std::move(nodes));
}

Grid Grid::numeric(const std::vector<long>& values) {
    std::vector<MultiPoly> nodes;
    for (long v : values) nodes.emplace_back(v);
    return Grid(std::move(nodes));
}

Grid Grid::arithmetic(const MultiPoly& a, const MultiPoly& b, unsigned length) {
    std::vector<MultiPoly> nodes;
    for (unsigned i = 0; i < length; ++i) nodes.push_back(a + b * Rational(static_cast<long>(i)));
    return Grid(std::move(nodes));
}

Grid Grid::negated() const {
    std::vector<MultiPoly> nodes;
    for (const auto& z : nodes_) nodes.push_back(-z);
    return Grid(std::move(nodes));
}

Grid Grid::shifted(const MultiPoly& eta) const {
    std::vector<MultiPoly> nodes;
    for (const auto& z : nodes_) nodes.push_back(z + eta);
    return Grid(std::move(nodes));
}

Grid Grid::reflected(const MultiPoly& origin) const {
    std::vector<MultiPoly> nodes;
    for (const auto& z : nodes_) nodes.push_back(origin - z);
    return Grid(std::move(nodes));
}

OrderedPartition::OrderedPartition(std::vector<std::uint8_t> position, unsigned block_count)
    : position_(std::move(position)), k_(block_count) {
    std::vector<bool> seen(k_, false);
    for (auto p : position_) {
        if (p >= k_) throw std::invalid_argument("block position out of range");
        seen[p] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw std::invalid_argument("ordered partition has an empty block");
    }
}

std::vector<std::vector<unsigned>> OrderedPartition::blocks() const {
    std::vector<std::vector<unsigned>> out(k_);
    for (unsigned e = 0; e < position_.size(); ++e) out[position_[e]].push_back(e + 1);
    return out;
}

std::vector<unsigned> OrderedPartition::block_sizes() const {
    std::vector<unsigned> out(k_, 0);
    for (auto p : position_) ++out[p];
    return out;
}

std::vector<OrderedPartition> ordered_partitions(unsigned n) {
    if (n < 1) throw std::invalid_argument("ordered_partitions needs n >= 1");
    if (n > kOrderedPartitionGuard) {
        throw Error(ErrorCode::SizeLimitExceeded,
                    "ordered partitions limited to n <= " + std::to_string(kOrderedPartitionGuard));
    }
    // Every ordered partition is a set partition plus an ordering of its blocks.
    std::vector<OrderedPartition> out;
    for_each_partition(n, [&](const SetPartition& sp) {
        const unsigned k = static_cast<unsigned>(sp.block_count());
        std::vector<std::uint8_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<std::uint8_t> position(n);
            for (unsigned e = 0; e < n; ++e) position[e] = perm[sp.rgs()[e]];
            out.emplace_back(std::move(position), k);
        } while (std::next_permutation(perm.begin(), perm.end()));
    });
    return out;
}

PolySequence goncarov_sequence(const PolySequence& p, const Grid& grid, unsigned n_max) {
    require_grid(grid, n_max);
    if (p.max_index() < n_max) {
        throw std::invalid_argument("goncarov_sequence: basic sequence shorter than n_max");
    }
    // coeff[i][m] = p_m(z_i), filled lazily.
    std::vector<std::vector<MultiPoly>> evaluated(n_max);
    for (unsigned i = 0; i < n_max; ++i) {
        evaluated[i].resize(n_max - i + 1);
        for (unsigned m = 1; m + i <= n_max; ++m) evaluated[i][m] = at(p[m], grid[i]);
    }
    std::vector<MultiPoly> t{MultiPoly(1)};
    for (unsigned n = 1; n <= n_max; ++n) {
        MultiPoly tn = p[n];
        for (unsigned i = 0; i < n; ++i) {
            const MultiPoly& c = evaluated[i][n - i];
            if (c.is_zero() || t[i].is_zero()) continue;
            tn -= c * t[i] * Rational(binomial(n, i));
        }
        t.push_back(std::move(tn));
    }
    return PolySequence(std::move(t));
}

MultiPoly goncarov_constant_ordered_partitions(const PolySequence& p, const Grid& grid, unsigned n) {
    if (n < 1) throw std::invalid_argument("goncarov_constant_ordered_partitions needs n >= 1");
    require_grid(grid, n);
    if (p.max_index() < n) {
        throw std::invalid_argument("goncarov_constant_ordered_partitions: sequence shorter than n");
    }
    // p_b(-z_s), keyed by (b, s).
    std::map<std::pair<unsigned, unsigned>, MultiPoly> factor;
    auto factor_at = [&](unsigned b, unsigned s) -> const MultiPoly& {
        auto key = std::make_pair(b, s);
        auto it = factor.find(key);
        if (it == factor.end()) it = factor.emplace(key, at(p[b], -grid[s])).first;
        return it->second;
    };
    // The summand depends only on the block sizes (b_1, ..., b_k).
    std::map<std::vector<unsigned>, MultiPoly> by_composition;
    MultiPoly total;
    for (const auto& rho : ordered_partitions(n)) {
        const auto sizes = rho.block_sizes();
        auto it = by_composition.find(sizes);
        if (it == by_composition.end()) {
            MultiPoly term(sizes.size() % 2 == 0 ? 1 : -1);
            unsigned s = 0;
            for (unsigned b : sizes) {
                term *= factor_at(b, s);
                s += b;
            }
            it = by_composition.emplace(sizes, std::move(term)).first;
        }
        total += it->second;
    }
    return total;
}

CheckResult verify_shift_invariance(const PolySequence& p, unsigned n_max) {
    if (!binomial_type_check(p, n_max)) {
        throw Error(ErrorCode::NotBinomialType, "shift invariance needs a sequence of binomial type");
    }
    const MultiPoly eta(VarId::eta());
    const Grid z = Grid::symbolic(n_max);
    const PolySequence t = goncarov_sequence(p, z, n_max);
    const PolySequence shifted = goncarov_sequence(p, z.shifted(eta), n_max);
    const MultiPoly x_plus_eta = MultiPoly(VarId::x()) + eta;
    for (unsigned n = 0; n <= n_max; ++n) {
        MultiPoly residual = poly_substitute(shifted[n], VarId::x(), x_plus_eta) - t[n];
        if (!residual.is_zero()) {
            return CheckResult::fail(n, std::move(residual), "t_n(x+eta; Z+eta) != t_n(x; Z)");
        }
    }
    return CheckResult::pass();
}

CheckResult verify_biorthogonality(const TruncatedSeries& f, const Grid& grid, const PolySequence& t,
                                   unsigned n_max) {
    if (!is_delta_indicator(f)) {
        throw Error(ErrorCode::NotADeltaIndicator, "biorthogonality needs a delta indicator");
    }
    require_grid(grid, n_max + 1);
    TruncatedSeries power(f.order());
    power.set(0, MultiPoly(1));
    for (unsigned i = 0; i <= n_max; ++i) {
        for (unsigned n = i; n <= n_max; ++n) {
            const MultiPoly value = at(apply_operator(power, t[n]), grid[i]);
            const MultiPoly expected = i == n ? MultiPoly(Rational(factorial(n))) : MultiPoly();
            if (value != expected) {
                return CheckResult::fail(n, value - expected,
                                         "eval at z_" + std::to_string(i) + " of f(D)^" + std::to_string(i) +
                                             " t_n != n! delta");
            }
        }
        power = power * f;
    }
    return CheckResult::pass();
}

CheckResult verify_reconstruction(const PolySequence& p, const Grid& grid, const PolySequence& t,
                                  unsigned n_max) {
    require_grid(grid, n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        MultiPoly sum = t[n];
        for (unsigned i = 0; i < n; ++i) sum += at(p[n - i], grid[i]) * t[i] * Rational(binomial(n, i));
        MultiPoly residual = sum - p[n];
        if (!residual.is_zero()) {
            return CheckResult::fail(n, std::move(residual), "sum C(n,i) p_{n-i}(z_i) t_i != p_n");
        }
    }
    return CheckResult::pass();
}

} // namespace gonc

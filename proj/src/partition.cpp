#include "goncarov/partition.hpp"

#include <algorithm>
#include <sstream>

#include "goncarov/error.hpp"

namespace gonc {

namespace {

void check_guard(unsigned n) {
    if (n > kPartitionGuard) {
        throw Error(ErrorCode::SizeLimitExceeded,
                    "partition enumeration limited to n <= " + std::to_string(kPartitionGuard));
    }
}

void check_same_ground(const SetPartition& a, const SetPartition& b) {
    if (a.n() != b.n()) {
        throw Error(ErrorCode::GroundSetMismatch, "partitions of different ground sets");
    }
}

} // namespace

SetPartition SetPartition::from_rgs(std::vector<std::uint8_t> labels) {
    // Relabel by first occurrence so any labelling maps to the canonical RGS.
    std::vector<int> relabel(256, -1);
    std::uint8_t next = 0;
    SetPartition out;
    out.rgs_.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        int& r = relabel[labels[i]];
        if (r < 0) {
            r = next++;
            out.blocks_.emplace_back();
        }
        out.rgs_.push_back(static_cast<std::uint8_t>(r));
        out.blocks_[r].push_back(static_cast<unsigned>(i + 1));
    }
    return out;
}

SetPartition SetPartition::from_blocks(unsigned n, std::vector<std::vector<unsigned>> blocks) {
    std::vector<int> label(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
            throw std::invalid_argument("empty block");
        }
        for (unsigned e : blocks[b]) {
            if (e < 1 || e > n || label[e - 1] >= 0) {
                throw std::invalid_argument("blocks do not partition [n]");
            }
            label[e - 1] = static_cast<int>(b);
        }
    }
    std::vector<std::uint8_t> rgs(n);
    for (unsigned i = 0; i < n; ++i) {
        if (label[i] < 0) throw std::invalid_argument("blocks do not cover [n]");
        rgs[i] = static_cast<std::uint8_t>(label[i]);
    }
    return from_rgs(std::move(rgs));
}

SetPartition SetPartition::parse(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::vector<std::uint8_t> rgs;
    int label = 0;
    std::uint8_t expected_max = 0;
    while (is >> label) {
        if (label < 1 || label > expected_max + 1 || label > 255) {
            throw Error(ErrorCode::ParseError, "not a restricted growth string: '" + std::string(text) + "'");
        }
        expected_max = std::max<std::uint8_t>(expected_max, static_cast<std::uint8_t>(label));
        rgs.push_back(static_cast<std::uint8_t>(label - 1));
    }
    if (!is.eof() || rgs.empty()) {
        throw Error(ErrorCode::ParseError, "bad partition string '" + std::string(text) + "'");
    }
    return from_rgs(std::move(rgs));
}

SetPartition SetPartition::finest(unsigned n) {
    std::vector<std::uint8_t> rgs(n);
    for (unsigned i = 0; i < n; ++i) rgs[i] = static_cast<std::uint8_t>(i);
    return from_rgs(std::move(rgs));
}

SetPartition SetPartition::coarsest(unsigned n) { return from_rgs(std::vector<std::uint8_t>(n, 0)); }

std::string SetPartition::str() const {
    std::string out;
    for (std::size_t i = 0; i < rgs_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(rgs_[i] + 1);
    }
    return out;
}

void for_each_partition(unsigned n, const std::function<void(const SetPartition&)>& visit) {
    check_guard(n);
    if (n == 0) return;
    // Restricted growth strings in lexicographic order.
    std::vector<std::uint8_t> rgs(n, 0);
    std::vector<std::uint8_t> prefix_max(n, 0);
    while (true) {
        visit(SetPartition::from_rgs(rgs));
        unsigned i = n - 1;
        while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
        if (i == 0) return;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (unsigned j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

std::vector<SetPartition> partitions_of(unsigned n) {
    if (n < 1) throw std::invalid_argument("partitions_of needs n >= 1");
    std::vector<SetPartition> out;
    for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

bool refines(const SetPartition& pi, const SetPartition& sigma) {
    check_same_ground(pi, sigma);
    for (const auto& block : pi.blocks()) {
        const unsigned target = sigma.block_of(block.front());
        for (unsigned e : block) {
            if (sigma.block_of(e) != target) return false;
        }
    }
    return true;
}

PartitionClass induced_class(const SetPartition& pi, const SetPartition& sigma) {
    if (!refines(pi, sigma)) {
        throw Error(ErrorCode::NotRefinement, "pi does not refine sigma");
    }
    // Each block of sigma is a union of blocks of pi; count them.
    std::vector<unsigned> per_sigma_block(sigma.block_count(), 0);
    for (const auto& block : pi.blocks()) ++per_sigma_block[sigma.block_of(block.front())];
    PartitionClass cls;
    cls.lambda.assign(pi.block_count(), 0);
    for (unsigned count : per_sigma_block) ++cls.lambda[count - 1];
    return cls;
}

std::vector<SetPartition> coarsenings(const SetPartition& pi) {
    std::vector<SetPartition> out;
    const unsigned k = static_cast<unsigned>(pi.block_count());
    for_each_partition(k, [&](const SetPartition& merge) {
        std::vector<std::uint8_t> labels(pi.n());
        for (unsigned e = 1; e <= pi.n(); ++e) labels[e - 1] = merge.rgs()[pi.block_of(e)];
        out.push_back(SetPartition::from_rgs(std::move(labels)));
    });
    return out;
}

MultiPoly zeta_type(const SetPartition& pi, const SetPartition& sigma) {
    const PartitionClass cls = induced_class(pi, sigma);
    Monomial m;
    for (std::size_t i = 1; i < cls.lambda.size(); ++i) {
        if (cls.lambda[i] > 0) m = m * Monomial(VarId::w(static_cast<unsigned>(i + 1)), cls.lambda[i]);
    }
    return MultiPoly(m);
}

MultiPoly block_weight(const SetPartition& pi) {
    Monomial m;
    for (const auto& block : pi.blocks()) {
        if (block.size() > 1) m = m * Monomial(VarId::w(static_cast<unsigned>(block.size())));
    }
    return MultiPoly(m);
}

MobiusTable::MobiusTable(unsigned n) : n_(n) { check_guard(n); }

const MobiusTable::Row& MobiusTable::row(const SetPartition& pi) {
    auto it = rows_.find(pi);
    if (it != rows_.end()) return it->second;

    Row r;
    r.upper = coarsenings(pi);
    std::stable_sort(r.upper.begin(), r.upper.end(), [](const SetPartition& a, const SetPartition& b) {
        return a.block_count() > b.block_count();
    });
    // upper[0] is pi itself.
    r.value.emplace(pi, MultiPoly(1));
    for (std::size_t s = 1; s < r.upper.size(); ++s) {
        const SetPartition& sigma = r.upper[s];
        MultiPoly acc;
        for (std::size_t t = 0; t < s; ++t) {
            const SetPartition& tau = r.upper[t];
            if (tau.block_count() <= sigma.block_count() || !refines(tau, sigma)) continue;
            acc += r.value.at(tau) * zeta_type(tau, sigma);
        }
        r.value.emplace(sigma, -acc);
    }
    return rows_.emplace(pi, std::move(r)).first->second;
}

const MultiPoly& MobiusTable::mu(const SetPartition& pi, const SetPartition& sigma) {
    if (pi.n() != n_ || sigma.n() != n_) {
        throw Error(ErrorCode::GroundSetMismatch, "partition size differs from table size");
    }
    if (!refines(pi, sigma)) {
        throw Error(ErrorCode::NotRefinement, "pi does not refine sigma");
    }
    return row(pi).value.at(sigma);
}

MultiPoly mobius_type(const SetPartition& pi, const SetPartition& sigma) {
    check_same_ground(pi, sigma);
    MobiusTable table(pi.n());
    return table.mu(pi, sigma);
}

MultiPoly zeta_enumerator(unsigned n) {
    check_guard(n);
    if (n == 0) return MultiPoly(1);
    MultiPoly out;
    for_each_partition(n, [&](const SetPartition& p) {
        out += block_weight(p) * MultiPoly(Monomial(VarId::x(), static_cast<unsigned>(p.block_count())));
    });
    return out;
}

MultiPoly mobius_enumerator(unsigned n) {
    check_guard(n);
    if (n == 0) return MultiPoly(1);
    MobiusTable table(n);
    const SetPartition bottom = SetPartition::finest(n);
    MultiPoly out;
    for_each_partition(n, [&](const SetPartition& p) {
        out += table.mu(bottom, p) * MultiPoly(Monomial(VarId::x(), static_cast<unsigned>(p.block_count())));
    });
    return out;
}

} // namespace gonc

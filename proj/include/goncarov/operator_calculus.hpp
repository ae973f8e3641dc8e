#pragma once

#include <cstddef>
#include <vector>

#include "goncarov/check.hpp"
#include "goncarov/poly.hpp"
#include "goncarov/series.hpp"

namespace gonc {

// p_0..p_N in the variable x, with p_0 = 1.
class PolySequence {
public:
    PolySequence() : entries_{MultiPoly(1)} {}
    explicit PolySequence(std::vector<MultiPoly> entries);

    std::size_t size() const { return entries_.size(); }
    unsigned max_index() const { return static_cast<unsigned>(entries_.size() - 1); }
    const MultiPoly& operator[](std::size_t n) const { return entries_.at(n); }
    const std::vector<MultiPoly>& entries() const { return entries_; }

    // Applies the same substitution to every entry.
    PolySequence substituted(const Assignment& assignment) const;

    friend bool operator==(const PolySequence&, const PolySequence&) = default;

private:
    std::vector<MultiPoly> entries_;
};

PolySequence monomial_sequence(unsigned n_max);
PolySequence falling_factorial_sequence(unsigned n_max);
PolySequence zeta_sequence(unsigned n_max);
PolySequence mobius_sequence(unsigned n_max);

// g(t) = t + sum_{i=2}^{order} w_i t^i / i!.
TruncatedSeries zeta_indicator(unsigned order);

// p_n = n! [t^n] exp(x g(t)).
PolySequence conjugate_sequence(const TruncatedSeries& g, unsigned n_max);
// sum_{k>=1} [x^1]p_k t^k / k!
TruncatedSeries indicator_from_sequence(const PolySequence& p);
// f(D) p = sum_k c_k D^k p with D = d/dx.
MultiPoly apply_operator(const TruncatedSeries& f, const MultiPoly& p);

CheckResult binomial_type_check(const PolySequence& p, unsigned n_max);
CheckResult basic_property_check(const TruncatedSeries& f, const PolySequence& p, unsigned n_max);

} // namespace gonc

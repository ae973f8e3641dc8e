#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "goncarov/check.hpp"
#include "goncarov/goncarov.hpp"
#include "goncarov/operator_calculus.hpp"
#include "goncarov/parking.hpp"
#include "goncarov/poly.hpp"

namespace gonc {

// Exponential family given by its deck sizes d_n = |D_n|.
struct DeckSpec {
    std::string name;
    std::function<Integer(unsigned)> d;
    unsigned min_weight = 1;

    Integer deck(unsigned n) const { return n == 0 ? Integer(0) : d(n); }
};

std::vector<std::string> builtin_family_names();
DeckSpec builtin_family(std::string_view name);
// Finite-support deck table {weight: size}.
DeckSpec custom_family(std::string name, const std::map<unsigned, Integer>& decks);

// D(t) = sum_k d_k [y_k] t^k / k!
TruncatedSeries deck_series(const DeckSpec& F, unsigned order, bool with_types);

// h_n(x); cross-checked between the exponential formula and a direct sum over Pi_n.
MultiPoly hand_enumerator(const DeckSpec& F, unsigned n);
// h_n(x; y), cross-checked the same way.
MultiPoly type_enumerator(const DeckSpec& F, unsigned n);
// h_n(x; y) with x^k replaced by the falling factorial x_(k).
MultiPoly injective_type_enumerator(const DeckSpec& F, unsigned n);

PolySequence type_sequence(const DeckSpec& F, unsigned n_max);
PolySequence injective_type_sequence(const DeckSpec& F, unsigned n_max);

PolySequence family_goncarov(const DeckSpec& F, const Grid& grid, unsigned n_max);

// sum over hands H of weight n of type(H) * PF_H(Z), with n = |zvec|.
// With `injective`, different cards receive different labels.
MultiPoly hand_parking_enumerator(const DeckSpec& F, const ParkingVector& zvec, bool injective = false);

// h_n(x; y) == sum_i C(n,i) h_{n-i}(x - z_i; y) * hand_parking_enumerator(prefix i), numeric x.
CheckResult verify_family_decomposition(const DeckSpec& F, unsigned n, const ParkingVector& zvec, long x);

// Lattice paths with unit east/north steps from (0,0) to (z_{n-1}-1, n)
// whose north step from row i leaves from a column strictly left of z_i.
Integer count_boundary_paths(const std::vector<long>& boundary);

enum class ClosedFormCheck { Abel, Family2, FussCatalan, LatticePath };

ClosedFormCheck parse_closed_form_check(std::string_view name);

struct ClosedFormParams {
    unsigned n = 3;
    unsigned k = 1;  // Fuss-Catalan order (a = 1, b = k)
    long a = 1;      // lattice_path progression start
    long b = 1;      // lattice_path progression step
};

CheckResult closed_form_checks(ClosedFormCheck check, const ClosedFormParams& params);

} // namespace gonc

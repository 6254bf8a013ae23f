#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "nmds/codes.hpp"
#include "nmds/field.hpp"
#include "nmds/opoly.hpp"

namespace nmds {

/// F_q minus the image of x -> f(x) + x, ascending by index. Even q; f must be an o-polynomial.
[[nodiscard]] std::vector<Elem> valid_v_set(const OPolynomial& f);

/// {w : eta(w) = eta(1+4w) = -1}, ascending by index. Odd q.
[[nodiscard]] std::vector<Elem> valid_w_set(const Field& field);

/// Even-q construction: hyperoval of an o-polynomial f plus three points on the
/// line z = 0 side and two points depending on v.
struct EvenConstruction {
    OPolynomial f;
    Elem v;

    /// Throws InvalidInput when f is not an o-polynomial or v is not admissible.
    static EvenConstruction make(OPolynomial f, Elem v);

    /// Columns (f(a),a,1) over the ordered field, then (1,0,0), (0,1,0), (1,1,0), (0,v,1), (v,0,1).
    [[nodiscard]] GeneratorMatrix matrix(ElementOrder order = ElementOrder::standard) const;
};

/// Odd-q construction on the conic oval.
struct OddConstruction {
    FieldPtr field;
    Elem w;

    /// Throws InvalidInput when w is not admissible (no w exists for q = 3).
    static OddConstruction make(FieldPtr field, Elem w);

    /// Columns (a^2,a,1) over the ordered field, then (1,0,0), (0,1,0), (1,1,0), (0,w,-1), (w,0,1).
    [[nodiscard]] GeneratorMatrix matrix(ElementOrder order = ElementOrder::standard) const;
};

[[nodiscard]] GeneratorMatrix build_gv(const OPolynomial& f, Elem v, ElementOrder order = ElementOrder::standard);
[[nodiscard]] GeneratorMatrix build_gw(const FieldPtr& field, Elem w, ElementOrder order = ElementOrder::standard);

/// Weight distribution of the even construction (length q+5). q = 2^m >= 4.
[[nodiscard]] WeightDistribution closed_form_enumerator_even(std::uint64_t q);
/// Weight distribution of the odd construction (length q+5), branching on q mod 4. Odd q >= 5.
[[nodiscard]] WeightDistribution closed_form_enumerator_odd(std::uint64_t q);

enum class CensusKind { even_a1, even_a2, odd_b1, odd_b2 };
[[nodiscard]] std::string_view to_string(CensusKind kind);
[[nodiscard]] CensusKind parse_census_kind(std::string_view text);

struct Census {
    CensusKind kind{};
    std::uint64_t q = 0;
    /// number of roots -> number of pairs (u1,u2) in (F*)^2
    std::map<std::size_t, std::uint64_t> pairs_by_roots;
    std::uint64_t two_root_pairs = 0;
    std::uint64_t expected_two_root_pairs = 0;
    /// every diagonal pair (u,u) for even kinds, (u,-u) for odd kinds, has no root
    bool diagonal_ok = false;
    /// no forbidden root counts (1 for even kinds, more than 2 for any kind)
    bool sizes_ok = false;

    [[nodiscard]] bool pass() const {
        return diagonal_ok && sizes_ok && two_root_pairs == expected_two_root_pairs;
    }
};

/// Root counts of the census equations over all (u1,u2) in (F*)^2:
///   even_a1: u1 f(x) + u2 x + u2 v,  even_a2: u1 f(x) + u2 x + u1 v,
///   odd_b1:  u1 x^2 + u2 x + u2 w,   odd_b2:  u1 x^2 + u2 x - u1 w.
/// `f` is required for the even kinds; `parameter` is v or w.
[[nodiscard]] Census solution_count_census(CensusKind kind, const FieldPtr& field, const OPolynomial* f,
                                           Elem parameter);

}  // namespace nmds

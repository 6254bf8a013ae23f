#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nmds/codes.hpp"

namespace nmds {

/// Localities read off the weight-3 dual supports B_3 of a 3 x n arc code.
struct LocalityReport {
    std::size_t n = 0;
    std::size_t k = 0;
    /// 2 when the supports cover every coordinate; nullopt when the criterion is inconclusive.
    std::optional<std::size_t> r_primal;
    /// n - 4 when the supports have empty common intersection; nullopt otherwise.
    std::optional<std::size_t> r_dual;
    bool cover_ok = false;
    bool disjoint_ok = false;
    std::vector<std::array<std::size_t, 3>> supports;
};

/// B_3 of the dual as collinear column triples (see min_weight_supports).
[[nodiscard]] std::vector<std::array<std::size_t, 3>> dual_min_supports_geometric(const GeneratorMatrix& g);

/// Applies the cover / empty-intersection criteria to B_3. Requires k = 3.
[[nodiscard]] LocalityReport locality_report(const GeneratorMatrix& g);

struct BoundCheck {
    long long rhs = 0;
    bool optimal = false;
};

/// d <= n - k - ceil(k/r) + 2; optimal iff equality. Throws InvalidInput for r < 1 or d > rhs.
[[nodiscard]] BoundCheck singleton_like_check(long long n, long long k, long long d, long long r);

/// k <= min_t [t r + k_opt(n - t(r+1), d)] with k_opt(n', d) = max(n' - d + 1, 0)
/// (Singleton-relaxed CM bound). t runs from 1 up to and including the first t with
/// n - t(r+1) <= 0. Optimal iff k equals the minimum.
[[nodiscard]] BoundCheck cm_bound_check(long long n, long long k, long long d, long long r, std::uint64_t q);

struct BoundVerdict {
    bool d_optimal = false;
    bool k_optimal = false;
    long long singleton_like_rhs = 0;
    long long cm_rhs = 0;
};

[[nodiscard]] BoundVerdict bound_verdict(long long n, long long k, long long d, long long r, std::uint64_t q);

/// Locality plus optimality of a code and its dual.
struct LrcAssessment {
    CodeProfile profile;
    LocalityReport locality;
    std::optional<BoundVerdict> primal;  ///< when r_primal is established
    std::optional<BoundVerdict> dual;    ///< when r_dual and d_dual are established
    [[nodiscard]] bool all_optimal() const {
        return primal && dual && primal->d_optimal && primal->k_optimal && dual->d_optimal && dual->k_optimal;
    }
};

[[nodiscard]] LrcAssessment assess_lrc(const GeneratorMatrix& g, const CodeProfile& profile);

}  // namespace nmds

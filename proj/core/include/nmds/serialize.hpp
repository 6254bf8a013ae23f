#pragma once

#include <nlohmann/json.hpp>

#include "nmds/arcsearch.hpp"
#include "nmds/codes.hpp"
#include "nmds/construct.hpp"
#include "nmds/lrc.hpp"

namespace nmds {

using Json = nlohmann::json;

/// Counts that fit in 64 bits are numbers; larger ones are decimal strings.
[[nodiscard]] Json big_to_json(const BigInt& v);
[[nodiscard]] BigInt big_from_json(const Json& j);

/// [[weight, count], ...] over the nonzero counts.
[[nodiscard]] Json to_json(const WeightDistribution& d);
[[nodiscard]] WeightDistribution weight_distribution_from_json(const Json& j, std::size_t n);

[[nodiscard]] Json to_json(const CodeProfile& p);
[[nodiscard]] CodeProfile code_profile_from_json(const Json& j);

/// {n, k, d, r_primal, r_dual, d_optimal, k_optimal, dual_d_optimal, dual_k_optimal, supports}.
/// Unestablished localities are null; supports use 1-based column indices.
[[nodiscard]] Json to_json(const LrcAssessment& a);

/// {found_n, nodes, restarts, seed, elapsed_ms, budget_exhausted, complete, arc: ["x:y:z", ...]}.
[[nodiscard]] Json to_json(const SearchResult& r, const Field& field, Notation notation = Notation::index);
[[nodiscard]] SearchResult search_result_from_json(const Json& j, const Field& field);

[[nodiscard]] Json to_json(const Census& c);

}  // namespace nmds

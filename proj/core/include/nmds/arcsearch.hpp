#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nmds/codes.hpp"
#include "nmds/geometry.hpp"

namespace nmds {

/// A point set of PG(2,q) with per-line multiplicities, kept at most 3.
class ArcState {
public:
    explicit ArcState(const Plane& plane);

    [[nodiscard]] const Plane& plane() const { return *plane_; }
    [[nodiscard]] std::span<const std::uint32_t> chosen() const { return chosen_; }
    [[nodiscard]] std::span<const std::uint8_t> line_multiplicities() const { return line_mult_; }
    [[nodiscard]] bool contains(std::uint32_t point) const { return in_set_[point]; }

    /// True when the point is new and every line through it holds at most 2 chosen points.
    [[nodiscard]] bool can_add(std::uint32_t point) const;
    /// Throws InvalidInput when can_add is false.
    void add(std::uint32_t point);
    void remove_last();

    /// Recomputes the multiplicities from scratch and compares.
    [[nodiscard]] bool consistent() const;
    [[nodiscard]] PointSet points() const;

private:
    const Plane* plane_;
    std::vector<std::uint32_t> chosen_;
    std::vector<std::uint8_t> line_mult_;
    std::vector<bool> in_set_;
};

enum class SearchStrategy { dfs, greedy_restart };
[[nodiscard]] std::string_view to_string(SearchStrategy s);
[[nodiscard]] SearchStrategy parse_strategy(std::string_view text);

struct SearchBudget {
    std::uint64_t max_nodes = 0;      ///< 0: unlimited
    std::uint64_t max_restarts = 1000;  ///< greedy_restart only
    double max_seconds = 0;           ///< 0: unlimited
    std::optional<std::size_t> target;  ///< stop as soon as an arc of this size is found
    unsigned threads = 1;             ///< greedy_restart only
};

struct SearchConfig {
    SearchStrategy strategy = SearchStrategy::dfs;
    SearchBudget budget;
    std::uint64_t seed = 1;
};

struct SearchResult {
    PointSet arc;  ///< base points first, then the added points
    std::uint64_t nodes = 0;
    std::uint64_t restarts = 0;
    std::uint64_t seed = 0;
    double elapsed_ms = 0;
    bool budget_exhausted = false;  ///< stopped by the node, restart or time limit
    bool complete = false;          ///< dfs explored the whole tree: the arc is a largest extension
    [[nodiscard]] std::size_t found_n() const { return arc.size(); }
};

/// Extends an arc or (n,3)-arc to the largest (n,3)-arc found within the budget.
/// Throws InvalidInput when the base has four collinear points or repeats a point.
[[nodiscard]] SearchResult extend_to_n3_arc(const Plane& plane, std::span<const Point> base, const SearchConfig& config);

/// The 3 x 15 matrix over GF(8) (modulus x^3+x+1) of a [15,3,12] NMDS code.
[[nodiscard]] GeneratorMatrix conclusion_matrix();

struct ConclusionReport {
    CodeProfile profile;
    bool columns_form_n3_arc = false;
    bool contains_hyperoval = false;  ///< the first q+2 columns form a hyperoval
    std::size_t elliptic_bound = 0;   ///< q + floor(2 sqrt(q)) + 1
};

[[nodiscard]] ConclusionReport verify_conclusion_matrix();

}  // namespace nmds

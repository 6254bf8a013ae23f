#include "nmds/arcsearch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <random>
#include <thread>

#include "nmds/error.hpp"

namespace nmds {

ArcState::ArcState(const Plane& plane)
    : plane_(&plane), line_mult_(plane.size(), 0), in_set_(plane.size(), false) {}

bool ArcState::can_add(std::uint32_t point) const {
    if (in_set_[point]) return false;
    for (const auto l : plane_->lines_through(point)) {
        if (line_mult_[l] >= 3) return false;
    }
    return true;
}

void ArcState::add(std::uint32_t point) {
    if (!can_add(point)) throw InvalidInput("point would create four collinear points");
    for (const auto l : plane_->lines_through(point)) ++line_mult_[l];
    in_set_[point] = true;
    chosen_.push_back(point);
}

void ArcState::remove_last() {
    const auto point = chosen_.back();
    chosen_.pop_back();
    in_set_[point] = false;
    for (const auto l : plane_->lines_through(point)) --line_mult_[l];
}

bool ArcState::consistent() const {
    std::vector<std::uint8_t> fresh(plane_->size(), 0);
    for (const auto p : chosen_)
        for (const auto l : plane_->lines_through(p)) ++fresh[l];
    return fresh == line_mult_ && std::all_of(fresh.begin(), fresh.end(), [](std::uint8_t m) { return m <= 3; });
}

PointSet ArcState::points() const {
    PointSet out;
    for (const auto p : chosen_) out.push_back(plane_->points()[p]);
    return out;
}

std::string_view to_string(SearchStrategy s) { return s == SearchStrategy::dfs ? "dfs" : "greedy-restart"; }

SearchStrategy parse_strategy(std::string_view text) {
    if (text == "dfs") return SearchStrategy::dfs;
    if (text == "greedy-restart" || text == "greedy") return SearchStrategy::greedy_restart;
    throw InvalidInput("unknown search strategy '" + std::string(text) + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

struct Stopwatch {
    Clock::time_point start = Clock::now();
    double max_seconds;
    [[nodiscard]] double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
    [[nodiscard]] bool expired() const { return max_seconds > 0 && elapsed_ms() >= max_seconds * 1000.0; }
};

/// Points through which every line is still below multiplicity 3, in lexicographic order.
std::vector<std::uint32_t> open_points(const ArcState& state) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 0; p < state.plane().size(); ++p) {
        if (state.can_add(p)) out.push_back(p);
    }
    return out;
}

class DepthFirst {
public:
    DepthFirst(ArcState& state, const SearchBudget& budget, const Stopwatch& clock)
        : state_(state), budget_(budget), clock_(clock), best_(state.chosen().begin(), state.chosen().end()) {}

    void run() {
        descend(open_points(state_));
        complete_ = !stopped_;
    }

    [[nodiscard]] const std::vector<std::uint32_t>& best() const { return best_; }
    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }
    [[nodiscard]] bool exhausted() const { return exhausted_; }
    [[nodiscard]] bool complete() const { return complete_; }

private:
    void descend(const std::vector<std::uint32_t>& candidates) {
        for (std::size_t i = 0; i < candidates.size() && !stopped_; ++i) {
            // bound: even taking every remaining candidate cannot beat the best
            if (state_.chosen().size() + (candidates.size() - i) <= best_.size()) return;
            const auto p = candidates[i];
            ++nodes_;
            if ((budget_.max_nodes && nodes_ >= budget_.max_nodes) || ((nodes_ & 1023) == 0 && clock_.expired())) {
                stopped_ = exhausted_ = true;
            }
            state_.add(p);
            if (state_.chosen().size() > best_.size()) {
                best_.assign(state_.chosen().begin(), state_.chosen().end());
                if (budget_.target && best_.size() >= *budget_.target) stopped_ = true;
            }
            if (!stopped_) {
                std::vector<std::uint32_t> next;
                next.reserve(candidates.size() - i);
                for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                    if (state_.can_add(candidates[j])) next.push_back(candidates[j]);
                }
                descend(next);
            }
            state_.remove_last();
        }
    }

    ArcState& state_;
    const SearchBudget& budget_;
    const Stopwatch& clock_;
    std::vector<std::uint32_t> best_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
    bool exhausted_ = false;
    bool complete_ = false;
};

/// Larger arcs win; equal sizes are broken by the lexicographically smaller sorted point list.
bool better(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    auto sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa < sb;
}

}  // namespace

SearchResult extend_to_n3_arc(const Plane& plane, std::span<const Point> base, const SearchConfig& config) {
    const Stopwatch clock{Clock::now(), config.budget.max_seconds};
    require_distinct(base);
    ArcState root(plane);
    for (const Point& p : base) {
        const auto id = static_cast<std::uint32_t>(plane.point_id(make_point(plane.field(), p.coords)));
        if (!root.can_add(id)) throw InvalidInput("base point set has four collinear points");
        root.add(id);
    }

    SearchResult result;
    result.seed = config.seed;
    std::vector<std::uint32_t> best(root.chosen().begin(), root.chosen().end());
    const bool target_met_initially = config.budget.target && best.size() >= *config.budget.target;

    if (target_met_initially) {
        // nothing to do
    } else if (config.strategy == SearchStrategy::dfs) {
        DepthFirst dfs(root, config.budget, clock);
        dfs.run();
        best = dfs.best();
        result.nodes = dfs.nodes();
        result.budget_exhausted = dfs.exhausted();
        result.complete = dfs.complete();
        result.restarts = 1;
    } else {
        const auto base_open = open_points(root);
        std::mutex mu;
        std::atomic<std::uint64_t> next{0};
        std::atomic<std::uint64_t> nodes{0};
        std::atomic<bool> stop{false};
        std::atomic<bool> exhausted{false};
        auto worker = [&] {
            ArcState state = root;
            std::vector<std::uint32_t> order;
            while (!stop) {
                const std::uint64_t r = next.fetch_add(1);
                if (r >= config.budget.max_restarts) break;
                if (clock.expired() || (config.budget.max_nodes && nodes >= config.budget.max_nodes)) {
                    exhausted = true;
                    break;
                }
                std::mt19937_64 rng(config.seed + r);
                order = base_open;
                std::shuffle(order.begin(), order.end(), rng);
                for (const auto p : order) {
                    ++nodes;
                    if (state.can_add(p)) state.add(p);
                }
                {
                    std::vector<std::uint32_t> found(state.chosen().begin(), state.chosen().end());
                    const std::lock_guard lock(mu);
                    if (better(found, best)) best = std::move(found);
                    if (config.budget.target && best.size() >= *config.budget.target) stop = true;
                }
                while (state.chosen().size() > root.chosen().size()) state.remove_last();
            }
        };
        const unsigned threads = std::max(1u, config.budget.threads);
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        result.nodes = nodes;
        result.restarts = std::min<std::uint64_t>(next.load(), config.budget.max_restarts);
        result.budget_exhausted = exhausted;
    }

    for (const auto p : best) result.arc.push_back(plane.points()[p]);
    result.elapsed_ms = clock.elapsed_ms();
    return result;
}

GeneratorMatrix conclusion_matrix() {
    return parse_matrix(
        "p=2 m=3 mod=1,1,0,1\n"
        "g^5 g^3 g   g^6 g^4 g^2 1 0 1 0 1 0   g^5 g   g^2\n"
        "g^6 g^5 g^4 g^3 g^2 g   1 0 0 1 1 g^5 0   g^3 1\n"
        "1   1   1   1   1   1   1 1 0 0 0 1   1   1   1\n");
}

ConclusionReport verify_conclusion_matrix() {
    const auto g = conclusion_matrix();
    const Field& F = g.field();
    ConclusionReport r;
    r.profile = classify(g);
    const auto pts = g.column_points();
    r.columns_form_n3_arc = is_n3_arc(F, pts);
    const std::size_t q = F.order();
    r.contains_hyperoval = is_arc(F, std::span<const Point>(pts).first(q + 2));
    r.elliptic_bound = q + static_cast<std::size_t>(std::floor(2.0 * std::sqrt(static_cast<double>(q)))) + 1;
    return r;
}

}  // namespace nmds

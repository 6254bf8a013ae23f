#include "nmds/lrc.hpp"

#include <algorithm>
#include <limits>

#include "nmds/error.hpp"

namespace nmds {

std::vector<std::array<std::size_t, 3>> dual_min_supports_geometric(const GeneratorMatrix& g) {
    return min_weight_supports(g);
}

LocalityReport locality_report(const GeneratorMatrix& g) {
    if (g.k() != 3) throw InvalidInput("the locality criterion is implemented for k = 3");
    LocalityReport r;
    r.n = g.n();
    r.k = g.k();
    r.supports = dual_min_supports_geometric(g);
    std::vector<bool> covered(r.n, false);
    std::vector<std::size_t> hits(r.n, 0);
    for (const auto& t : r.supports) {
        for (const auto i : t) {
            covered[i] = true;
            ++hits[i];
        }
    }
    r.cover_ok = !r.supports.empty() && std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
    r.disjoint_ok = !r.supports.empty() &&
                    std::none_of(hits.begin(), hits.end(), [&](std::size_t h) { return h == r.supports.size(); });
    if (r.cover_ok) r.r_primal = r.k - 1;
    if (r.disjoint_ok) r.r_dual = r.n - r.k - 1;
    return r;
}

BoundCheck singleton_like_check(long long n, long long k, long long d, long long r) {
    if (r < 1) throw InvalidInput("locality must be at least 1");
    const long long rhs = n - k - (k + r - 1) / r + 2;
    if (d > rhs) throw InvalidInput("d exceeds the Singleton-like bound; parameters are inconsistent");
    return {rhs, d == rhs};
}

BoundCheck cm_bound_check(long long n, long long k, long long d, long long r, std::uint64_t) {
    if (r < 1) throw InvalidInput("locality must be at least 1");
    long long best = std::numeric_limits<long long>::max();
    for (long long t = 1;; ++t) {
        const long long rest = n - t * (r + 1);
        const long long kopt = std::max(rest - d + 1, 0LL);
        best = std::min(best, t * r + kopt);
        if (rest <= 0) break;
    }
    return {best, k == best};
}

BoundVerdict bound_verdict(long long n, long long k, long long d, long long r, std::uint64_t q) {
    const auto s = singleton_like_check(n, k, d, r);
    const auto c = cm_bound_check(n, k, d, r, q);
    return {s.optimal, c.optimal, s.rhs, c.rhs};
}

LrcAssessment assess_lrc(const GeneratorMatrix& g, const CodeProfile& profile) {
    LrcAssessment a;
    a.profile = profile;
    a.locality = locality_report(g);
    const auto n = static_cast<long long>(profile.n);
    const auto k = static_cast<long long>(profile.k);
    const std::uint64_t q = g.field().order();
    if (a.locality.r_primal) {
        a.primal = bound_verdict(n, k, static_cast<long long>(profile.d),
                                 static_cast<long long>(*a.locality.r_primal), q);
    }
    if (a.locality.r_dual && profile.d_dual) {
        a.dual = bound_verdict(n, n - k, static_cast<long long>(*profile.d_dual),
                               static_cast<long long>(*a.locality.r_dual), q);
    }
    return a;
}

}  // namespace nmds

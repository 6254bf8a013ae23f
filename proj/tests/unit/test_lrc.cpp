#include "doctest.h"

#include "fixtures.hpp"
#include "nmds/construct.hpp"
#include "nmds/error.hpp"
#include "nmds/lrc.hpp"

using namespace nmds;

TEST_CASE("supports of Example 1") {
    const auto g = fixtures::matrix("example1.txt");
    const auto s = dual_min_supports_geometric(g);
    CHECK(s.size() == 10);
    const auto r = locality_report(g);
    CHECK(r.cover_ok);
    CHECK(r.disjoint_ok);
    CHECK(r.r_primal == 2u);
    CHECK(r.r_dual == 5u);  // q + 1
}

TEST_CASE("MDS hyperoval code: both criteria fail") {
    const auto F = Field::of_order(8);
    const auto g = GeneratorMatrix::from_columns(F, hyperoval_from_opoly(make_family_opoly(F, OFamily::segre)));
    const auto r = locality_report(g);
    CHECK(r.supports.empty());
    CHECK_FALSE(r.cover_ok);
    CHECK_FALSE(r.disjoint_ok);
    CHECK_FALSE(r.r_primal.has_value());
    CHECK_FALSE(r.r_dual.has_value());
    const auto a = assess_lrc(g, classify(g));
    CHECK_FALSE(a.primal.has_value());
    CHECK_FALSE(a.all_optimal());
}

TEST_CASE("Singleton-like bound") {
    for (const long long q : {4, 8, 9, 11}) {
        const auto c = singleton_like_check(q + 5, 3, q + 2, 2);
        CHECK(c.rhs == q + 2);
        CHECK(c.optimal);
    }
    CHECK(singleton_like_check(10, 3, 6, 3).rhs == 8);  // r = k: classical Singleton
    const auto c = singleton_like_check(10, 3, 6, 2);
    CHECK(c.rhs == 7);
    CHECK_FALSE(c.optimal);
    CHECK_THROWS_AS((void)singleton_like_check(10, 3, 9, 2), InvalidInput);
    CHECK_THROWS_AS((void)singleton_like_check(10, 3, 6, 0), InvalidInput);
}

TEST_CASE("Singleton-relaxed CM bound") {
    for (const long long q : {4, 8, 16, 9, 11}) {
        const auto c = cm_bound_check(q + 5, 3, q + 2, 2, q);
        CHECK(c.rhs == 3);
        CHECK(c.optimal);
        const auto dual = cm_bound_check(q + 5, q + 2, 3, q + 1, q);
        CHECK(dual.rhs == q + 2);
        CHECK(dual.optimal);
    }
    CHECK(cm_bound_check(10, 2, 9, 2, 4).rhs == 2);  // d > n-(r+1): only the tr term survives
    // brute-force oracle over t, allowing arbitrarily large t
    for (long long n = 3; n < 20; ++n)
        for (long long d = 1; d <= n; ++d)
            for (long long r = 1; r < n; ++r) {
                long long best = 1LL << 40;
                for (long long t = 1; t <= 40; ++t) best = std::min(best, t * r + std::max(n - t * (r + 1) - d + 1, 0LL));
                CHECK(cm_bound_check(n, 1, d, r, 2).rhs == best);
            }
}

TEST_CASE("constructed codes are optimal LRCs with localities (2, q+1)") {
    auto check = [](const GeneratorMatrix& g) {
        const std::size_t q = g.field().order();
        const auto a = assess_lrc(g, classify(g));
        CHECK(a.locality.r_primal == 2u);
        CHECK(a.locality.r_dual == q + 1);
        CHECK(a.all_optimal());
    };
    for (const std::uint32_t q : {4u, 8u, 16u}) {
        const auto F = Field::of_order(q);
        const auto f = make_family_opoly(F, OFamily::translation);
        for (const Elem v : valid_v_set(f)) check(build_gv(f, v));
    }
    for (const std::uint32_t q : {5u, 7u, 9u, 11u}) {
        const auto F = Field::of_order(q);
        for (const Elem w : valid_w_set(*F)) check(build_gw(F, w));
    }
}

TEST_CASE("locality needs k = 3") {
    const auto F = Field::of_order(5);
    const GeneratorMatrix g(F, {{F->one(), F->one(), F->one()}});
    CHECK_THROWS_AS((void)locality_report(g), InvalidInput);
}

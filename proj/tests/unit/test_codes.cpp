#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "nmds/codes.hpp"
#include "nmds/error.hpp"
#include "nmds/geometry.hpp"

using namespace nmds;

namespace {

std::vector<long long> tail(const WeightDistribution& d, std::size_t from) {
    std::vector<long long> out;
    for (std::size_t w = from; w <= d.length(); ++w) out.push_back(static_cast<long long>(d[w]));
    return out;
}

// Oracle: enumerate every message (not just projective representatives).
std::vector<std::uint64_t> naive_distribution(const GeneratorMatrix& g) {
    const std::uint32_t q = g.field().order();
    std::vector<std::uint64_t> counts(g.n() + 1, 0);
    std::vector<Elem> msg(g.k(), Elem{0});
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < g.k(); ++i) total *= q;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (auto& m : msg) {
            m = Elem{static_cast<std::uint32_t>(c % q)};
            c /= q;
        }
        ++counts[weight_of(g, msg)];
    }
    return counts;
}

std::vector<std::vector<Elem>> reduced(const GeneratorMatrix& g) {
    // canonical basis of the row space via the null space of the null space
    const auto h = null_space(g.field(), g.rows(), g.n());
    return null_space(g.field(), h, g.n());
}

}  // namespace

TEST_CASE("Example 1 code") {
    const auto g = fixtures::matrix("example1.txt");
    CHECK(g.n() == 9);
    const auto d = weight_distribution(g);
    CHECK(tail(d, 6) == std::vector<long long>{30, 18, 9, 6});
    CHECK(d.total() == 64);
    const auto naive = naive_distribution(g);
    for (std::size_t w = 0; w <= 9; ++w) CHECK(d[w] == naive[w]);

    const auto p = classify(g);
    CHECK(p.d == 6);
    CHECK(p.d_dual == 3u);
    CHECK(p.code_class == CodeClass::nmds);

    const auto& F = g.field();
    CHECK(weight_of(g, std::vector<Elem>{F.zero(), F.zero(), F.zero()}) == 0);
    CHECK(weight_of(g, std::vector<Elem>{F.zero(), F.zero(), F.one()}) == 6);
    CHECK_THROWS_AS((void)weight_of(g, std::vector<Elem>{F.one()}), InvalidInput);
}

TEST_CASE("Examples 2 and 3 codes") {
    const auto g2 = fixtures::matrix("example2.txt");
    CHECK(tail(weight_distribution(g2), 11) == std::vector<long long>{160, 248, 144, 176});
    const auto p2 = classify(g2);
    CHECK(p2.n == 14);
    CHECK(p2.d == 11);
    CHECK(p2.code_class == CodeClass::nmds);

    const auto g3 = fixtures::matrix("example3.txt");
    CHECK(tail(weight_distribution(g3), 13) == std::vector<long long>{230, 510, 210, 380});
    CHECK(classify(g3).code_class == CodeClass::nmds);
}

TEST_CASE("repetition code") {
    const auto F = Field::of_order(7);
    const GeneratorMatrix g(F, {std::vector<Elem>(5, F->one())});
    const auto d = weight_distribution(g);
    CHECK(d[0] == 1);
    CHECK(d[5] == 6);
    CHECK(d.total() == 7);
    CHECK(classify(g).code_class == CodeClass::mds);
}

TEST_CASE("generator matrix validation and text form") {
    const auto F = Field::of_order(4);
    CHECK_THROWS_AS(GeneratorMatrix(F, {{F->one(), F->zero()}, {F->one(), F->zero()}}), InvalidInput);
    CHECK_THROWS_AS(GeneratorMatrix(F, {{F->one(), F->zero()}, {F->one()}}), InvalidInput);
    CHECK_THROWS_AS((void)fixtures::matrix("zero_rank.txt"), InvalidInput);
    CHECK_THROWS_AS((void)parse_matrix("1 0 0\n"), InvalidInput);

    const auto g = fixtures::matrix("example2.txt");
    CHECK(parse_matrix(format_matrix(g)) == g);
    CHECK(parse_matrix(format_matrix(g, Notation::power)) == g);
    const auto text = format_matrix(g);
    CHECK(text.rfind("q=9 p=3 m=2 mod=2,2,1\n", 0) == 0);
}

TEST_CASE("dual matrix") {
    const auto g = fixtures::matrix("example1.txt");
    const auto h = dual_matrix(g);
    CHECK(h.k() == 6);
    CHECK(h.n() == 9);
    const Field& F = g.field();
    for (const auto& gr : g.rows()) {
        for (const auto& hr : h.rows()) {
            Elem acc = F.zero();
            for (std::size_t j = 0; j < 9; ++j) acc = F.add(acc, F.mul(gr[j], hr[j]));
            CHECK(acc.is_zero());
        }
    }
    CHECK(reduced(dual_matrix(h)) == reduced(g));

    const auto Fq = Field::of_order(5);
    const GeneratorMatrix full(Fq, {{Fq->one(), Fq->zero()}, {Fq->zero(), Fq->one()}});
    CHECK_THROWS_AS((void)dual_matrix(full), PreconditionFailed);

    // dual weight distribution of Example 1 by brute force matches the closed form
    const auto dual = weight_distribution(h);
    const auto closed = nmds_closed_form(9, 3, 4, 30);
    CHECK(dual == closed.dual);
    CHECK(weight_distribution(g) == closed.code);
}

TEST_CASE("dual distance by column dependencies") {
    const auto F = Field::of_order(8);
    const auto ho = hyperoval_from_opoly(make_family_opoly(F, OFamily::translation));
    const auto g = GeneratorMatrix::from_columns(F, ho);
    CHECK(dual_distance(g) == 4u);
    CHECK(classify(g).code_class == CodeClass::mds);
    CHECK(min_weight_supports(g).empty());
    CHECK_THROWS_AS((void)min_weight_pairing_check(g), PreconditionFailed);

    // an [n,5] code whose dual distance exceeds the search depth
    const auto F7 = Field::of_order(7);
    std::vector<std::vector<Elem>> rows(5, std::vector<Elem>(6, F7->zero()));
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::uint32_t j = 0; j < 6; ++j) rows[i][j] = F7->pow(Elem{j + 1}, static_cast<long long>(i));
    }
    const GeneratorMatrix rs(F7, rows);
    CHECK_FALSE(dual_distance(rs, 4).has_value());
    CHECK(dual_distance(rs, 6) == 6u);
}

TEST_CASE("NMDS closed forms") {
    const auto c1 = nmds_closed_form(9, 3, 4, 30);
    CHECK(tail(c1.code, 6) == std::vector<long long>{30, 18, 9, 6});
    CHECK(c1.code.total() == 64);
    CHECK(c1.dual.total() == BigInt(4096));
    const auto c2 = nmds_closed_form(14, 3, 9, 160);
    CHECK(tail(c2.code, 11) == std::vector<long long>{160, 248, 144, 176});
    const auto c3 = nmds_closed_form(16, 3, 11, 230);
    CHECK(tail(c3.code, 13) == std::vector<long long>{230, 510, 210, 380});
    BigInt q11 = 1;
    for (int i = 0; i < 13; ++i) q11 *= 11;
    CHECK(c3.dual.total() == q11);
    CHECK_THROWS_AS((void)nmds_closed_form(9, 3, 4, 1000), InvalidInput);
    // large lengths need more than 64 bits
    const auto big = nmds_closed_form(261, 3, 256, BigInt(255) * 1000);
    CHECK(big.dual[261] > BigInt(std::numeric_limits<std::uint64_t>::max()));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
}

TEST_CASE("minimum-weight supports and pairing") {
    const auto g1 = fixtures::matrix("example1.txt");
    const auto triples = min_weight_supports(g1);
    CHECK(triples.size() == 10);
    CHECK(std::find(triples.begin(), triples.end(), std::array<std::size_t, 3>{4, 5, 6}) != triples.end());
    const auto v1 = min_weight_pairing_check(g1);
    CHECK(v1.pass);
    CHECK(v1.a_min == 30);
    CHECK(v1.codewords_checked == 10);

    const auto g2 = fixtures::matrix("example2.txt");
    const auto v2 = min_weight_pairing_check(g2);
    CHECK(v2.pass);
    CHECK(v2.a_min == 160);
    CHECK(v2.a_min_dual == 160);
    CHECK(min_weight_supports(g2).size() * 8 == 160);

    // four collinear columns
    const auto F = Field::of_order(4);
    const GeneratorMatrix bad(F, {{F->one(), F->zero(), F->one(), Elem{2}, F->zero()},
                                  {F->zero(), F->one(), F->one(), F->one(), F->zero()},
                                  {F->zero(), F->zero(), F->zero(), F->zero(), F->one()}});
    CHECK_THROWS_AS((void)min_weight_supports(bad), InvalidInput);
    const GeneratorMatrix prop(F, {{F->one(), Elem{2}, F->zero(), F->zero()},
                                   {F->zero(), F->zero(), F->one(), F->zero()},
                                   {F->zero(), F->zero(), F->zero(), F->one()}});
    CHECK_THROWS_AS((void)min_weight_supports(prop), InvalidInput);
}

TEST_CASE("weight distribution is independent of thread count and respects the budget") {
    const auto g = fixtures::matrix("example3.txt");
    CHECK(weight_distribution(g, {.threads = 1}) == weight_distribution(g, {.threads = 4}));
    CHECK_THROWS_AS((void)weight_distribution(g, {.threads = 1, .budget = 1000}), BudgetExceeded);
    CHECK_THROWS_AS((void)weight_distribution(dual_matrix(fixtures::matrix("example2.txt"))), BudgetExceeded);
}

TEST_CASE("weight plus incident columns equals n for every message") {
    for (const auto* name : {"example1.txt", "example2.txt", "example3.txt", "conclusion_gf8.txt"}) {
        const auto g = fixtures::matrix(name);
        const Field& F = g.field();
        const auto cols = g.column_points();
        const std::uint32_t q = F.order();
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                for (std::uint32_t c = 0; c < q; ++c) {
                    if (a == 0 && b == 0 && c == 0) continue;
                    const Triple u{Elem{a}, Elem{b}, Elem{c}};
                    const Line l = make_line(F, u);
                    std::size_t on = 0;
                    for (const auto& p : cols) on += incident(F, p, l);
                    CHECK(weight_of(g, u) + on == g.n());
                }
    }
}

#include "doctest.h"

#include <random>
#include <set>

#include "nmds/error.hpp"
#include "nmds/opoly.hpp"

using namespace nmds;

namespace {

// Oracle for o-polynomials: the hyperoval {(f(c),c,1)} ∪ {(1,0,0),(0,1,0)} has no
// three collinear points. Checked with 3x3 determinants, independent of g_a.
bool hyperoval_by_determinants(const OPolynomial& f) {
    const Field& F = f.field();
    std::vector<std::array<Elem, 3>> pts;
    for (std::uint32_t c = 0; c < F.order(); ++c) pts.push_back({f(Elem{c}), Elem{c}, F.one()});
    pts.push_back({F.one(), F.zero(), F.zero()});
    pts.push_back({F.zero(), F.one(), F.zero()});
    auto det = [&](const auto& a, const auto& b, const auto& c) {
        auto m = [&](Elem x, Elem y) { return F.mul(x, y); };
        Elem t = F.mul(a[0], F.sub(m(b[1], c[2]), m(b[2], c[1])));
        t = F.sub(t, F.mul(a[1], F.sub(m(b[0], c[2]), m(b[2], c[0]))));
        return F.add(t, F.mul(a[2], F.sub(m(b[0], c[1]), m(b[1], c[0]))));
    };
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (det(pts[i], pts[j], pts[k]).is_zero()) return false;
    return true;
}

OPolynomial monomial(const FieldPtr& F, unsigned e) {
    std::vector<Elem> c(e + 1, F->zero());
    c[e] = F->one();
    return OPolynomial::from_coefficients(F, c);
}

}  // namespace

TEST_CASE("family polynomials have the expected coefficient form") {
    const auto gf4 = Field::of_order(4);
    const auto t = make_family_opoly(gf4, OFamily::translation, {.h = 1});
    CHECK(t.degree() == 2);
    CHECK(t.coefficients()[2] == gf4->one());
    CHECK(t.descriptor() == "translation:h=1");

    const auto gf8 = Field::of_order(8);
    const auto s = make_family_opoly(gf8, OFamily::segre);
    CHECK(s.degree() == 6);
    const Elem g = gf8->primitive_element();
    CHECK(s.eval(g) == gf8->pow(g, 6));
    CHECK(s(g) == s.eval(g));
    CHECK(s.eval(gf8->zero()) == gf8->zero());

    CHECK_THROWS_AS((void)make_family_opoly(gf4, OFamily::segre), InvalidInput);
    CHECK_THROWS_AS((void)make_family_opoly(Field::of_order(16), OFamily::translation, {.h = 2}), InvalidInput);
    CHECK_THROWS_AS((void)make_family_opoly(Field::of_order(9), OFamily::translation), InvalidInput);
    CHECK_THROWS_AS((void)make_family_opoly(Field::of_order(8), OFamily::glynn3), InvalidInput);
}

TEST_CASE("interpolation round trip") {
    std::mt19937 rng(3);
    for (const std::uint32_t q : {4u, 5u, 8u, 9u, 16u}) {
        const auto F = Field::of_order(q);
        std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Elem> values(q);
            for (auto& v : values) v = Elem{pick(rng)};
            const auto p = OPolynomial::from_values(F, values);
            CHECK(p.degree() < static_cast<int>(q));
            for (std::uint32_t x = 0; x < q; ++x) CHECK(p.eval(Elem{x}) == values[x]);
        }
    }
}

TEST_CASE("o-polynomial verdicts") {
    const auto gf4 = Field::of_order(4);
    CHECK(is_o_polynomial(monomial(gf4, 2)).pass);
    const auto v = is_o_polynomial(monomial(gf4, 1));
    CHECK_FALSE(v.pass);
    CHECK(v.failed_condition == 3);
    CHECK(is_o_polynomial(make_family_opoly(Field::of_order(8), OFamily::segre)).pass);

    CHECK(is_two_to_one_with_linear(monomial(gf4, 2)).pass);
    CHECK_FALSE(is_two_to_one_with_linear(monomial(gf4, 3)).pass);

    const auto notperm = is_o_polynomial(monomial(gf4, 3));
    CHECK(notperm.failed_condition == 1);
    CHECK_THROWS_AS((void)is_o_polynomial(monomial(Field::of_order(9), 2)), InvalidInput);
}

TEST_CASE("every built-in family passes at every applicable q <= 32") {
    for (const std::uint32_t q : {4u, 8u, 16u, 32u}) {
        const auto F = Field::of_order(q);
        for (const OFamily fam : applicable_families(*F)) {
            if ((fam == OFamily::subiaco || fam == OFamily::adelaide) && q > 16) continue;
            for (const auto& f : family_instances(F, fam)) {
                CAPTURE(q);
                CAPTURE(f.descriptor());
                const auto verdict = is_o_polynomial(f);
                CHECK(verdict.pass);
                CHECK(is_two_to_one_with_linear(f).pass);
                CHECK(hyperoval_by_determinants(f));
                // the image of f(x)+x has size q/2
                std::set<Elem> image;
                for (std::uint32_t x = 0; x < q; ++x) image.insert(F->add(f(Elem{x}), Elem{x}));
                CHECK(image.size() == q / 2);
            }
        }
    }
}

TEST_CASE("applicable families by field degree") {
    auto has = [](const std::vector<OFamily>& v, OFamily f) { return std::find(v.begin(), v.end(), f) != v.end(); };
    const auto f8 = applicable_families(*Field::of_order(8));
    CHECK(has(f8, OFamily::segre));
    CHECK(has(f8, OFamily::glynn2));
    CHECK_FALSE(has(f8, OFamily::glynn3));
    CHECK_FALSE(has(f8, OFamily::adelaide));
    const auto f16 = applicable_families(*Field::of_order(16));
    CHECK(has(f16, OFamily::adelaide));
    CHECK(has(f16, OFamily::subiaco));
    CHECK_FALSE(has(f16, OFamily::payne));
    CHECK(has(applicable_families(*Field::of_order(32)), OFamily::glynn3));
    CHECK(applicable_families(*Field::of_order(9)).empty());
}

TEST_CASE("descriptor parsing") {
    const auto gf8 = Field::of_order(8);
    CHECK(parse_opoly(gf8, "segre").degree() == 6);
    const auto c = parse_opoly(gf8, "custom:coeffs=0,0,1");
    CHECK(c.degree() == 2);
    CHECK(c.descriptor() == "custom:coeffs=0,0,1");
    CHECK(parse_opoly(gf8, "translation:h=2").descriptor() == "translation:h=2");
    const auto gf16 = Field::of_order(16);
    const auto sub = make_family_opoly(gf16, OFamily::subiaco);
    CHECK(parse_opoly(gf16, sub.descriptor()).values().size() == 16);
    const auto ad = make_family_opoly(gf16, OFamily::adelaide);
    const auto ad2 = parse_opoly(gf16, ad.descriptor());
    CHECK(std::equal(ad.values().begin(), ad.values().end(), ad2.values().begin()));
    CHECK_THROWS_AS((void)parse_opoly(gf8, "nonsense"), InvalidInput);
    CHECK_THROWS_AS((void)parse_opoly(gf8, "translation:z=1"), InvalidInput);
    CHECK_THROWS_AS((void)parse_opoly(gf8, "custom"), InvalidInput);
}

TEST_CASE("2-to-1 criterion agrees with the o-polynomial test on random polynomials") {
    std::mt19937 rng(11);
    for (const std::uint32_t q : {4u, 8u, 16u, 32u}) {
        const auto F = Field::of_order(q);
        std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
        int agree = 0;
        for (int trial = 0; trial < 60; ++trial) {
            // random permutation fixing 0 and 1 makes the verdict nontrivial more often
            std::vector<Elem> values(q);
            std::vector<std::uint32_t> rest;
            for (std::uint32_t i = 2; i < q; ++i) rest.push_back(i);
            std::shuffle(rest.begin(), rest.end(), rng);
            values[0] = F->zero();
            values[1] = F->one();
            for (std::uint32_t i = 2; i < q; ++i) values[i] = Elem{trial % 2 ? rest[i - 2] : pick(rng)};
            const auto f = OPolynomial::from_values(F, values);
            agree += is_o_polynomial(f).pass == is_two_to_one_with_linear(f).pass;
        }
        CHECK(agree == 60);
    }
}

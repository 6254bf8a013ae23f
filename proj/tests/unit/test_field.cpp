#include "doctest.h"

#include <random>
#include <set>

#include "nmds/error.hpp"
#include "nmds/field.hpp"

using namespace nmds;

namespace {

// Oracle: multiply two residues as polynomials over GF(p) and reduce by the modulus.
std::uint32_t slow_mul(const Field& f, std::uint32_t a, std::uint32_t b) {
    const unsigned p = f.characteristic();
    const unsigned m = f.degree();
    auto ca = f.coefficients(Elem{a});
    auto cb = f.coefficients(Elem{b});
    std::vector<unsigned> prod(2 * m, 0);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    auto mod = f.modulus();
    for (unsigned d = 2 * m - 1; d >= m; --d) {
        const unsigned c = prod[d];
        if (c == 0) continue;
        for (unsigned i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + p * p - c * mod[i] % p) % p;
    }
    std::uint32_t idx = 0;
    for (unsigned i = m; i-- > 0;) idx = idx * p + prod[i];
    return idx;
}

std::uint32_t slow_add(const Field& f, std::uint32_t a, std::uint32_t b) {
    auto ca = f.coefficients(Elem{a});
    auto cb = f.coefficients(Elem{b});
    std::uint32_t idx = 0;
    for (unsigned i = f.degree(); i-- > 0;) idx = idx * f.characteristic() + (ca[i] + cb[i]) % f.characteristic();
    return idx;
}

}  // namespace

TEST_CASE("default moduli match the worked examples") {
    CHECK(Field::make(2, 2)->modulus().size() == 3);
    const auto gf4 = Field::make(2, 2);
    CHECK(std::vector<unsigned>(gf4->modulus().begin(), gf4->modulus().end()) == std::vector<unsigned>{1, 1, 1});
    const auto gf9 = Field::make(3, 2);
    CHECK(std::vector<unsigned>(gf9->modulus().begin(), gf9->modulus().end()) == std::vector<unsigned>{2, 2, 1});
    const auto gf8 = Field::make(2, 3);
    CHECK(std::vector<unsigned>(gf8->modulus().begin(), gf8->modulus().end()) == std::vector<unsigned>{1, 1, 0, 1});
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS((void)Field::make(2, 2, std::vector<unsigned>{0, 1, 1}), InvalidInput);
    CHECK_THROWS_AS((void)Field::make(4, 1), InvalidInput);
    CHECK_THROWS_AS((void)Field::make(2, 17), InvalidInput);
    CHECK_THROWS_AS((void)Field::make(2, 3, std::vector<unsigned>{1, 1, 1}), InvalidInput);
    CHECK_THROWS_AS((void)Field::of_order(6), InvalidInput);
}

TEST_CASE("GF(4) arithmetic") {
    const auto f = Field::make(2, 2);
    const Elem xi{2};
    CHECK(f->mul(xi, xi) == Elem{3});
    CHECK(f->mul(xi, f->mul(xi, xi)) == f->one());
    CHECK(f->mul(f->one(), Elem{3}) == Elem{3});
    CHECK_THROWS_AS((void)f->inv(f->zero()), InvalidInput);
}

TEST_CASE("primitive elements") {
    CHECK(Field::of_order(4)->primitive_element() == Elem{2});
    CHECK(Field::of_order(2)->primitive_element() == Elem{1});
    CHECK(Field::of_order(11)->primitive_element() == Elem{2});
}

TEST_CASE("quadratic character") {
    const auto f = Field::of_order(11);
    CHECK(f->quadratic_character(f->neg(f->one())) == -1);
    CHECK(f->quadratic_character(f->one()) == 1);
    CHECK(f->quadratic_character(Elem{7}) == -1);
    CHECK(f->quadratic_character(f->zero()) == 0);
    CHECK_THROWS_AS((void)Field::of_order(8)->quadratic_character(Elem{1}), InvalidInput);
    // squares mod 11
    std::set<std::uint32_t> squares;
    for (std::uint32_t x = 1; x < 11; ++x) squares.insert(x * x % 11);
    for (std::uint32_t x = 1; x < 11; ++x) CHECK((f->quadratic_character(Elem{x}) == 1) == squares.contains(x));
}

TEST_CASE("trace") {
    const auto gf4 = Field::of_order(4);
    CHECK(gf4->trace(Elem{2}, 1) == gf4->one());
    CHECK(gf4->trace(gf4->zero(), 1) == gf4->zero());
    const auto gf16 = Field::of_order(16);
    std::array<int, 2> fibers{};
    for (std::uint32_t x = 0; x < 16; ++x) {
        const Elem t = gf16->trace(Elem{x}, 1);
        REQUIRE(t.index() < 2);
        ++fibers[t.index()];
    }
    CHECK(fibers == std::array<int, 2>{8, 8});
    // GF(16) -> GF(4) lands in the subfield
    for (std::uint32_t x = 0; x < 16; ++x) {
        const Elem t = gf16->trace(Elem{x}, 2);
        CHECK(gf16->pow(t, 4) == t);
    }
    CHECK_THROWS_AS((void)gf16->trace(Elem{3}, 3), InvalidInput);
}

TEST_CASE("element orderings") {
    const auto gf9 = Field::make(3, 2);
    const auto pw = gf9->elements(ElementOrder::powers);
    REQUIRE(pw.size() == 9);
    const Elem z = gf9->primitive_element();
    for (int i = 0; i < 8; ++i) CHECK(pw[i] == gf9->pow(z, 7 - i));
    CHECK(pw[8] == gf9->zero());
    // ζ^4 = 2 in GF(9) with ζ^2 + 2ζ + 2 = 0
    CHECK(pw[3] == Elem{2});

    const auto gf11 = Field::of_order(11);
    const auto std11 = gf11->elements(ElementOrder::standard);
    for (std::uint32_t i = 0; i < 11; ++i) CHECK(std11[i] == Elem{10 - i});

    const auto gf2 = Field::of_order(2);
    CHECK(gf2->elements() == std::vector<Elem>{Elem{0}, Elem{1}});
    CHECK_THROWS_AS((void)gf2->elements(ElementOrder::powers), InvalidInput);

    for (const std::uint32_t q : {3u, 4u, 8u, 9u, 16u, 25u, 27u}) {
        const auto f = Field::of_order(q);
        auto e = f->elements(ElementOrder::powers);
        CHECK(e.back() == f->zero());
        std::sort(e.begin(), e.end());
        CHECK(e == f->elements());
    }
}

TEST_CASE("text forms") {
    const auto f = Field::parse_descriptor("p=2 m=3 mod=1,1,0,1");
    CHECK(f->order() == 8);
    CHECK(f->descriptor() == "p=2 m=3 mod=1,1,0,1");
    CHECK(f->parse_element("g^3") == f->pow(f->primitive_element(), 3));
    CHECK(f->parse_element("g") == f->primitive_element());
    CHECK(f->parse_element("5") == Elem{5});
    CHECK(f->format(f->parse_element("g^5"), Notation::power) == "g^5");
    CHECK(f->format(f->one(), Notation::power) == "1");
    CHECK(f->format(f->zero(), Notation::power) == "0");
    CHECK_THROWS_AS((void)f->parse_element("9"), InvalidInput);
    CHECK_THROWS_AS((void)f->parse_element("h^2"), InvalidInput);
    const auto gf11 = Field::of_order(11);
    CHECK(gf11->parse_element("-1") == Elem{10});
    CHECK_THROWS_AS((void)Field::parse_descriptor("p=2 m=2 mod=0,1,1"), InvalidInput);
}

TEST_CASE("field axioms against polynomial arithmetic oracle") {
    for (const std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        CAPTURE(q);
        const auto f = Field::of_order(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f->mul(Elem{a}, Elem{b}).index() == slow_mul(*f, a, b));
                CHECK(f->add(Elem{a}, Elem{b}).index() == slow_add(*f, a, b));
                for (std::uint32_t c = 0; c < q; c += 3) {
                    const Elem lhs = f->mul(Elem{a}, f->add(Elem{b}, Elem{c}));
                    const Elem rhs = f->add(f->mul(Elem{a}, Elem{b}), f->mul(Elem{a}, Elem{c}));
                    CHECK(lhs == rhs);
                }
            }
            if (a != 0) CHECK(f->mul(Elem{a}, f->inv(Elem{a})) == f->one());
            CHECK(f->add(Elem{a}, f->neg(Elem{a})) == f->zero());
        }
    }
}

TEST_CASE("every default table entry is irreducible and primitive") {
    for (std::uint32_t q = 2; q <= Field::max_order; ++q) {
        const auto pm = prime_power(q);
        if (!pm) continue;
        const auto [p, m] = *pm;
        const auto mod = Field::default_modulus(p, m);
        CAPTURE(q);
        CHECK(is_irreducible(p, mod));
        if (q <= 4096) {
            // x is primitive iff the primitive element is the residue x (index p), for m > 1
            const auto f = Field::make(p, m);
            if (m > 1) CHECK(f->multiplicative_order(Elem{p}) == q - 1);
        }
    }
}

TEST_CASE("Frobenius and pow conventions") {
    const auto f = Field::of_order(16);
    CHECK(f->pow(f->zero(), 0) == f->one());
    CHECK(f->pow(f->zero(), 5) == f->zero());
    for (std::uint32_t x = 0; x < 16; ++x) {
        const Elem r = f->frobenius(Elem{x}, -1);
        CHECK(f->mul(r, r) == Elem{x});
        CHECK(f->frobenius(Elem{x}, 2) == f->pow(Elem{x}, 4));
        if (x) CHECK(f->pow(Elem{x}, -1) == f->inv(Elem{x}));
    }
}

TEST_CASE("FieldValue operators") {
    const auto f = Field::of_order(9);
    const FieldValue a(*f, Elem{4});
    const FieldValue b(*f, Elem{7});
    CHECK(((a + b) - b) == a);
    CHECK(((a * b) / b) == a);
    CHECK((a * a.inverse()).elem() == f->one());
    const auto g = Field::of_order(9);
    CHECK_THROWS_AS((void)(a + FieldValue(*Field::of_order(8), Elem{1})), InvalidInput);
    CHECK((a + FieldValue(*g, Elem{1})).elem() == f->add(Elem{4}, Elem{1}));
}

TEST_CASE("randomized axioms on large fields") {
    std::mt19937_64 rng(7);
    for (const std::uint32_t q : {256u, 729u, 3125u, 65536u, 65521u}) {
        const auto f = Field::of_order(q);
        std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
        for (int i = 0; i < 500; ++i) {
            const Elem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
            CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
            CHECK(f->mul(a, b).index() == slow_mul(*f, a.index(), b.index()));
        }
    }
}

TEST_CASE("quadratic character sums over odd fields") {
    for (const std::uint32_t q : {3u, 5u, 9u, 13u, 25u, 27u}) {
        const auto f = Field::of_order(q);
        auto eta = [&](Elem x) { return f->quadratic_character(x); };
        long long total = 0;
        for (std::uint32_t x = 0; x < q; ++x) total += eta(Elem{x});
        CHECK(total == 0);
        CHECK(eta(f->neg(f->one())) == (q % 4 == 1 ? 1 : -1));
        const Elem four = f->from_integer(4);
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                for (std::uint32_t c = 0; c < q; ++c) {
                    long long s = 0;
                    for (std::uint32_t x = 0; x < q; ++x) {
                        const Elem e{x};
                        s += eta(f->add(f->add(f->mul(Elem{a}, f->mul(e, e)), f->mul(Elem{b}, e)), Elem{c}));
                    }
                    // a perfect square ax^2+bx+c = a(x-r)^2 sums to (q-1)eta(a)
                    const bool singular = f->sub(f->mul(Elem{b}, Elem{b}), f->mul(four, f->mul(Elem{a}, Elem{c}))).is_zero();
                    CHECK(s == (singular ? static_cast<long long>(q - 1) : -1) * eta(Elem{a}));
                }
    }
}

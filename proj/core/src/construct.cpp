#include "nmds/construct.hpp"

#include <algorithm>

#include "nmds/error.hpp"

namespace nmds {

namespace {

void require_o_polynomial(const OPolynomial& f) {
    const auto verdict = is_o_polynomial(f);
    if (!verdict.pass) throw InvalidInput("not an o-polynomial: " + verdict.detail);
}

bool is_power_of_two(std::uint64_t q) { return q != 0 && (q & (q - 1)) == 0; }

WeightDistribution tail_distribution(std::uint64_t q, std::array<BigInt, 4> tail) {
    WeightDistribution out(q + 5);
    out[0] = 1;
    for (std::size_t i = 0; i < 4; ++i) out[q + 2 + i] = tail[i];
    return out;
}

}  // namespace

std::vector<Elem> valid_v_set(const OPolynomial& f) {
    const Field& F = f.field();
    if (F.is_odd()) throw InvalidInput("v is defined for even q");
    require_o_polynomial(f);
    std::vector<bool> hit(F.order(), false);
    for (std::uint32_t x = 0; x < F.order(); ++x) hit[F.add(f(Elem{x}), Elem{x}).index()] = true;
    std::vector<Elem> out;
    for (std::uint32_t v = 0; v < F.order(); ++v) {
        if (!hit[v]) out.emplace_back(v);
    }
    return out;
}

std::vector<Elem> valid_w_set(const Field& F) {
    if (!F.is_odd()) throw InvalidInput("w is defined for odd q");
    const Elem four = F.from_integer(4);
    std::vector<Elem> out;
    for (std::uint32_t i = 1; i < F.order(); ++i) {
        const Elem w{i};
        if (F.quadratic_character(w) == -1 && F.quadratic_character(F.add(F.one(), F.mul(four, w))) == -1) {
            out.push_back(w);
        }
    }
    return out;
}

EvenConstruction EvenConstruction::make(OPolynomial f, Elem v) {
    const auto admissible = valid_v_set(f);
    if (!std::binary_search(admissible.begin(), admissible.end(), v)) {
        throw InvalidInput("v = " + f.field().format(v) + " lies in the image of f(x)+x");
    }
    return EvenConstruction{std::move(f), v};
}

GeneratorMatrix EvenConstruction::matrix(ElementOrder order) const {
    const Field& F = f.field();
    const Elem o = F.zero();
    const Elem l = F.one();
    std::vector<std::vector<Elem>> rows(3);
    auto push = [&](Elem a, Elem b, Elem c) {
        rows[0].push_back(a);
        rows[1].push_back(b);
        rows[2].push_back(c);
    };
    for (const Elem a : F.elements(order)) push(f(a), a, l);
    push(l, o, o);
    push(o, l, o);
    push(l, l, o);
    push(o, v, l);
    push(v, o, l);
    return GeneratorMatrix(f.field_ptr(), std::move(rows));
}

OddConstruction OddConstruction::make(FieldPtr field, Elem w) {
    const auto admissible = valid_w_set(*field);
    if (admissible.empty()) {
        throw InvalidInput("no admissible w exists over GF(" + std::to_string(field->order()) + ")");
    }
    if (!std::binary_search(admissible.begin(), admissible.end(), w)) {
        throw InvalidInput("w = " + field->format(w) + " needs eta(w) = eta(1+4w) = -1");
    }
    return OddConstruction{std::move(field), w};
}

GeneratorMatrix OddConstruction::matrix(ElementOrder order) const {
    const Field& F = *field;
    const Elem o = F.zero();
    const Elem l = F.one();
    std::vector<std::vector<Elem>> rows(3);
    auto push = [&](Elem a, Elem b, Elem c) {
        rows[0].push_back(a);
        rows[1].push_back(b);
        rows[2].push_back(c);
    };
    for (const Elem a : F.elements(order)) push(F.mul(a, a), a, l);
    push(l, o, o);
    push(o, l, o);
    push(l, l, o);
    push(o, w, F.neg(l));
    push(w, o, l);
    return GeneratorMatrix(field, std::move(rows));
}

GeneratorMatrix build_gv(const OPolynomial& f, Elem v, ElementOrder order) {
    return EvenConstruction::make(f, v).matrix(order);
}

GeneratorMatrix build_gw(const FieldPtr& field, Elem w, ElementOrder order) {
    return OddConstruction::make(field, w).matrix(order);
}

WeightDistribution closed_form_enumerator_even(std::uint64_t q) {
    if (q < 4 || !is_power_of_two(q)) throw InvalidInput("even closed form needs q = 2^m >= 4");
    const BigInt Q = q;
    return tail_distribution(q, {(Q - 1) * (3 * Q + 8) / 2, (Q - 1) * (Q + 2) * (Q - 2) / 2,
                                 3 * (Q - 1) * (Q - 2) / 2, (Q - 1) * (Q - 2) * (Q - 2) / 2});
}

WeightDistribution closed_form_enumerator_odd(std::uint64_t q) {
    const auto pm = prime_power(q);
    if (!pm || pm->first == 2 || q < 5) throw InvalidInput("odd closed form needs an odd prime power q >= 5");
    const BigInt Q = q;
    if (q % 4 == 1) {
        return tail_distribution(q, {(2 * Q + 2) * (Q - 1), (Q - 1) * (Q * Q - 3 * Q + 8) / 2, (3 * Q - 9) * (Q - 1),
                                     (Q - 1) * (Q * Q - 5 * Q + 8) / 2});
    }
    return tail_distribution(q, {(2 * Q + 1) * (Q - 1), (Q - 1) * (Q * Q - 3 * Q + 14) / 2, (3 * Q - 12) * (Q - 1),
                                 (Q - 1) * (Q * Q - 5 * Q + 10) / 2});
}

std::string_view to_string(CensusKind kind) {
    switch (kind) {
        case CensusKind::even_a1: return "even-A1";
        case CensusKind::even_a2: return "even-A2";
        case CensusKind::odd_b1: return "odd-B1";
        case CensusKind::odd_b2: return "odd-B2";
    }
    return "unknown";
}

CensusKind parse_census_kind(std::string_view text) {
    for (const auto kind : {CensusKind::even_a1, CensusKind::even_a2, CensusKind::odd_b1, CensusKind::odd_b2}) {
        if (to_string(kind) == text) return kind;
    }
    throw InvalidInput("unknown census kind '" + std::string(text) + "'");
}

Census solution_count_census(CensusKind kind, const FieldPtr& field, const OPolynomial* f, Elem parameter) {
    const Field& F = *field;
    const bool even = kind == CensusKind::even_a1 || kind == CensusKind::even_a2;
    const std::uint64_t q = F.order();
    if (even) {
        if (!f) throw InvalidInput("even censuses need an o-polynomial");
        if (!(f->field() == F)) throw InvalidInput("o-polynomial belongs to a different field");
        (void)EvenConstruction::make(*f, parameter);
    } else {
        (void)OddConstruction::make(field, parameter);
    }

    Census c;
    c.kind = kind;
    c.q = q;
    c.diagonal_ok = true;
    c.sizes_ok = true;
    for (std::uint32_t a = 1; a < q; ++a) {
        const Elem u1{a};
        for (std::uint32_t b = 1; b < q; ++b) {
            const Elem u2{b};
            std::size_t roots = 0;
            for (std::uint32_t xi = 0; xi < q; ++xi) {
                const Elem x{xi};
                Elem value;
                switch (kind) {
                    case CensusKind::even_a1:
                        value = F.add(F.add(F.mul(u1, (*f)(x)), F.mul(u2, x)), F.mul(u2, parameter));
                        break;
                    case CensusKind::even_a2:
                        value = F.add(F.add(F.mul(u1, (*f)(x)), F.mul(u2, x)), F.mul(u1, parameter));
                        break;
                    case CensusKind::odd_b1:
                        value = F.add(F.add(F.mul(u1, F.mul(x, x)), F.mul(u2, x)), F.mul(u2, parameter));
                        break;
                    case CensusKind::odd_b2:
                        value = F.sub(F.add(F.mul(u1, F.mul(x, x)), F.mul(u2, x)), F.mul(u1, parameter));
                        break;
                }
                roots += value.is_zero();
            }
            ++c.pairs_by_roots[roots];
            if (roots > 2 || (even && roots == 1)) c.sizes_ok = false;
            const bool diagonal = even ? u2 == u1 : u2 == F.neg(u1);
            if (diagonal && roots != 0) c.diagonal_ok = false;
        }
    }
    c.two_root_pairs = c.pairs_by_roots.count(2) ? c.pairs_by_roots.at(2) : 0;
    switch (kind) {
        case CensusKind::even_a1:
        case CensusKind::even_a2: c.expected_two_root_pairs = (q - 1) * (q - 2) / 2; break;
        case CensusKind::odd_b1: c.expected_two_root_pairs = (q - 1) * (q - 3) / 2; break;
        case CensusKind::odd_b2: {
            const int eta = F.quadratic_character(F.neg(F.one()));
            c.expected_two_root_pairs = (q - 1) * static_cast<std::uint64_t>(static_cast<long long>(q) - 2 + eta) / 2;
            break;
        }
    }
    return c;
}

}  // namespace nmds

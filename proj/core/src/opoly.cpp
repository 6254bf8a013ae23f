#include "nmds/opoly.hpp"

#include <algorithm>
#include <numeric>

#include "nmds/error.hpp"

namespace nmds {

namespace {

constexpr std::pair<OFamily, std::string_view> kFamilyNames[] = {
    {OFamily::translation, "translation"}, {OFamily::segre, "segre"},
    {OFamily::glynn1, "glynn1"},           {OFamily::glynn2, "glynn2"},
    {OFamily::glynn3, "glynn3"},           {OFamily::cherowitzo, "cherowitzo"},
    {OFamily::payne, "payne"},             {OFamily::subiaco, "subiaco"},
    {OFamily::adelaide, "adelaide"},       {OFamily::custom, "custom"},
};

void require_even(const Field& field) {
    if (field.is_odd()) throw InvalidInput("o-polynomials are defined over fields of characteristic 2");
}

std::vector<Elem> evaluate_all(const Field& field, auto&& formula) {
    std::vector<Elem> values(field.order());
    for (std::uint32_t i = 0; i < field.order(); ++i) values[i] = formula(Elem{i});
    return values;
}

long long inverse_mod(long long a, long long n) {
    long long t = 0, new_t = 1, r = n, new_r = ((a % n) + n) % n;
    while (new_r != 0) {
        const long long quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (r != 1) throw InvalidInput("exponent is not invertible modulo q-1");
    return ((t % n) + n) % n;
}

bool subiaco_parameter_ok(const Field& field, Elem a) {
    if (a.is_zero()) return false;
    if (field.trace(field.inv(a), 1) != field.one()) return false;
    // a must avoid GF(4) when m = 2 (mod 4)
    if (field.degree() % 4 == 2 && field.pow(a, 4) == a) return false;
    return true;
}

/// GF(q^2) together with the embedding of GF(q) fixed by a root of GF(q)'s modulus.
struct QuadraticExtension {
    FieldPtr big;
    std::vector<Elem> embed;                     // small index -> big element
    std::vector<std::int64_t> restrict_to_small;  // big index -> small index or -1

    explicit QuadraticExtension(const Field& small) {
        big = Field::make(small.characteristic(), 2 * small.degree());
        const auto q = static_cast<long long>(small.order());
        const auto mod = small.modulus();
        std::optional<Elem> root;
        for (std::uint32_t i = 0; i < big->order() && !root; ++i) {
            const Elem y{i};
            if (big->pow(y, q) != y) continue;
            Elem acc = big->zero();
            for (std::size_t j = mod.size(); j-- > 0;) {
                acc = big->add(big->mul(acc, y), big->from_integer(mod[j]));
            }
            if (acc.is_zero()) root = y;
        }
        if (!root) throw InvalidInput("failed to embed GF(q) in GF(q^2)");
        embed.resize(small.order());
        restrict_to_small.assign(big->order(), -1);
        for (std::uint32_t i = 0; i < small.order(); ++i) {
            const auto coeffs = small.coefficients(Elem{i});
            Elem acc = big->zero();
            for (std::size_t j = coeffs.size(); j-- > 0;) {
                acc = big->add(big->mul(acc, *root), big->from_integer(coeffs[j]));
            }
            embed[i] = acc;
            restrict_to_small[acc.index()] = i;
        }
    }
};

std::vector<Elem> adelaide_betas(const QuadraticExtension& ext, long long q) {
    std::vector<Elem> out;
    for (std::uint32_t i = 2; i < ext.big->order(); ++i) {
        if (ext.big->pow(Elem{i}, q + 1) == ext.big->one()) out.emplace_back(i);
    }
    return out;
}

std::string join_coeffs(const Field& field, std::span<const Elem> coeffs) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i != 0) out += ',';
        out += field.format(coeffs[i]);
    }
    return out;
}

}  // namespace

std::string_view to_string(OFamily family) {
    for (const auto& [f, name] : kFamilyNames) {
        if (f == family) return name;
    }
    return "unknown";
}

OFamily parse_family(std::string_view name) {
    for (const auto& [f, n] : kFamilyNames) {
        if (n == name) return f;
    }
    throw InvalidInput("unknown o-polynomial family '" + std::string(name) + "'");
}

std::vector<Elem> interpolate(const Field& field, std::span<const Elem> values) {
    const std::uint32_t q = field.order();
    if (values.size() != q) throw InvalidInput("interpolation needs exactly q values");
    // c_0 = f(0); c_j = -sum_a f(a) a^(q-1-j) for 1 <= j <= q-1 (with 0^0 = 1)
    std::vector<Elem> coeffs(q, field.zero());
    coeffs[0] = values[0];
    for (std::uint32_t j = 1; j < q; ++j) {
        Elem acc = field.zero();
        for (std::uint32_t a = 0; a < q; ++a) {
            if (values[a].is_zero()) continue;
            acc = field.add(acc, field.mul(values[a], field.pow(Elem{a}, q - 1 - j)));
        }
        coeffs[j] = field.neg(acc);
    }
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

OPolynomial::OPolynomial(FieldPtr field, std::vector<Elem> coeffs, OFamily family, std::string params)
    : field_(std::move(field)), coeffs_(std::move(coeffs)), family_(family), params_(std::move(params)) {
    if (!field_) throw InvalidInput("polynomial needs a field");
    if (coeffs_.size() > field_->order()) throw InvalidInput("polynomial degree must be below q");
    for (const Elem c : coeffs_) {
        if (!field_->contains(c)) throw InvalidInput("coefficient does not belong to the field");
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    values_.resize(field_->order());
    for (std::uint32_t i = 0; i < field_->order(); ++i) values_[i] = eval(Elem{i});
}

OPolynomial OPolynomial::from_coefficients(FieldPtr field, std::vector<Elem> coeffs, OFamily family,
                                           std::string params) {
    return OPolynomial(std::move(field), std::move(coeffs), family, std::move(params));
}

OPolynomial OPolynomial::from_values(FieldPtr field, std::span<const Elem> values, OFamily family,
                                     std::string params) {
    auto coeffs = interpolate(*field, values);
    return OPolynomial(std::move(field), std::move(coeffs), family, std::move(params));
}

int OPolynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

Elem OPolynomial::eval(Elem x) const {
    Elem acc = field_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
    return acc;
}

std::string OPolynomial::descriptor() const {
    std::string out(to_string(family_));
    if (family_ == OFamily::custom) return out + ":coeffs=" + join_coeffs(*field_, coeffs_);
    if (!params_.empty()) out += ":" + params_;
    return out;
}

OPolynomial make_family_opoly(const FieldPtr& field_ptr, OFamily family, const FamilyParams& params) {
    const Field& field = *field_ptr;
    require_even(field);
    const unsigned m = field.degree();
    const auto q = static_cast<long long>(field.order());
    auto sqrt = [&](Elem x) { return field.frobenius(x, -1); };
    auto need_odd_m = [&](std::string_view name) {
        if (m % 2 == 0) throw InvalidInput(std::string(name) + " family requires m odd");
    };

    switch (family) {
        case OFamily::translation: {
            const unsigned h = params.h.value_or(1);
            if (std::gcd(h, m) != 1) throw InvalidInput("translation family requires gcd(h, m) = 1");
            const auto values = evaluate_all(field, [&](Elem x) { return field.frobenius(x, h); });
            return OPolynomial::from_values(field_ptr, values, family, "h=" + std::to_string(h));
        }
        case OFamily::segre: {
            need_odd_m("segre");
            const auto values = evaluate_all(field, [&](Elem x) { return field.pow(x, 6); });
            return OPolynomial::from_values(field_ptr, values, family);
        }
        case OFamily::glynn1: {
            need_odd_m("glynn1");
            const long long e = 3 * (1LL << ((m + 1) / 2)) + 4;
            const auto values = evaluate_all(field, [&](Elem x) { return field.pow(x, e); });
            return OPolynomial::from_values(field_ptr, values, family);
        }
        case OFamily::glynn2: {
            if (m % 4 != 3) throw InvalidInput("glynn2 family requires m = 3 (mod 4)");
            const long long e = (1LL << ((m + 1) / 2)) + (1LL << ((m + 1) / 4));
            const auto values = evaluate_all(field, [&](Elem x) { return field.pow(x, e); });
            return OPolynomial::from_values(field_ptr, values, family);
        }
        case OFamily::glynn3: {
            if (m % 4 != 1) throw InvalidInput("glynn3 family requires m = 1 (mod 4)");
            const long long e = (1LL << ((m + 1) / 2)) + (1LL << ((3 * m + 1) / 4));
            const auto values = evaluate_all(field, [&](Elem x) { return field.pow(x, e); });
            return OPolynomial::from_values(field_ptr, values, family);
        }
        case OFamily::cherowitzo: {
            need_odd_m("cherowitzo");
            const long long s = 1LL << ((m + 1) / 2);
            const auto values = evaluate_all(field, [&](Elem x) {
                return field.add(field.add(field.pow(x, s), field.pow(x, s + 2)), field.pow(x, 3 * s + 4));
            });
            return OPolynomial::from_values(field_ptr, values, family);
        }
        case OFamily::payne: {
            need_odd_m("payne");
            // x^(1/6) + x^(1/2) + x^(5/6), exponents taken modulo q-1
            const long long sixth = q > 2 ? inverse_mod(6, q - 1) : 1;
            const long long five_sixths = q > 2 ? (5 * sixth) % (q - 1) : 1;
            const auto values = evaluate_all(field, [&](Elem x) {
                return field.add(field.add(field.pow(x, sixth), sqrt(x)), field.pow(x, five_sixths));
            });
            return OPolynomial::from_values(field_ptr, values, family);
        }
        case OFamily::subiaco: {
            Elem a;
            if (params.a) {
                a = field.element(params.a->index());
                if (!subiaco_parameter_ok(field, a)) {
                    throw InvalidInput("subiaco parameter needs Tr(1/a) = 1 (and a outside GF(4) when m = 2 mod 4)");
                }
            } else {
                const auto all = field.elements();
                const auto it = std::find_if(all.begin(), all.end(), [&](Elem e) { return subiaco_parameter_ok(field, e); });
                if (it == all.end()) throw InvalidInput("no admissible subiaco parameter over this field");
                a = *it;
            }
            const Elem a2 = field.mul(a, a);
            const Elem c = field.mul(a2, field.add(field.add(field.one(), a), a2));
            const auto values = evaluate_all(field, [&](Elem x) {
                const Elem x2 = field.mul(x, x);
                const Elem x3 = field.mul(x2, x);
                const Elem x4 = field.mul(x2, x2);
                const Elem num = field.add(field.mul(a2, field.add(x4, x)), field.mul(c, field.add(x3, x2)));
                const Elem den = field.add(field.add(x4, field.mul(a2, x2)), field.one());
                return field.add(field.mul(num, field.pow(den, q - 2)), sqrt(x));
            });
            return OPolynomial::from_values(field_ptr, values, family, "a=" + field.format(a));
        }
        case OFamily::adelaide: {
            if (m < 4 || m % 2 != 0) throw InvalidInput("adelaide family requires m >= 4 even");
            const QuadraticExtension ext(field);
            const Field& big = *ext.big;
            const long long third = (q - 1) / 3;
            const long long k = params.exponent.value_or(third);
            const long long kr = ((k % (q + 1)) + (q + 1)) % (q + 1);
            if (kr != third && kr != (q + 1 - third) % (q + 1)) {
                throw InvalidInput("adelaide exponent must be +-(q-1)/3 modulo q+1");
            }
            Elem beta;
            if (params.beta) {
                beta = big.element(*params.beta);
                if (beta == big.one() || big.pow(beta, q + 1) != big.one()) {
                    throw InvalidInput("adelaide beta must satisfy beta^(q+1) = 1, beta != 1");
                }
            } else {
                beta = adelaide_betas(ext, q).front();
            }
            auto tr = [&](Elem y) { return big.add(y, big.pow(y, q)); };
            const Elem t_beta = tr(beta);
            const Elem beta_q = big.pow(beta, q);
            const Elem t_beta_k = tr(big.pow(beta, k));
            const auto values = evaluate_all(field, [&](Elem x_small) {
                const Elem x = ext.embed[x_small.index()];
                const Elem root = big.frobenius(x, -1);
                const Elem term1 = big.div(big.mul(t_beta_k, big.add(x, big.one())), t_beta);
                const Elem num = tr(big.pow(big.add(big.mul(beta, x), beta_q), k));
                const Elem base = big.add(big.add(x, big.mul(t_beta, root)), big.one());
                const Elem den = big.mul(t_beta, big.pow(base, k - 1));
                // x^(q^2-2) convention: a vanishing denominator contributes 0
                const Elem quot = den.is_zero() ? big.zero() : big.div(num, den);
                const Elem total = big.add(big.add(term1, quot), root);
                const auto back = ext.restrict_to_small[total.index()];
                if (back < 0) throw InvalidInput("adelaide value fell outside GF(q)");
                return Elem{static_cast<std::uint32_t>(back)};
            });
            auto poly = OPolynomial::from_values(
                field_ptr, values, family, "beta=" + big.format(beta, Notation::power) + ",k=" + std::to_string(k));
            if (!is_o_polynomial(poly).pass) {
                throw InvalidInput("adelaide parameters do not yield an o-polynomial");
            }
            return poly;
        }
        case OFamily::custom: {
            auto poly = OPolynomial::from_coefficients(field_ptr, params.coeffs, family);
            return poly;
        }
    }
    throw InvalidInput("unknown o-polynomial family");
}

OPolynomial parse_opoly(const FieldPtr& field, std::string_view descriptor) {
    const auto colon = descriptor.find(':');
    const OFamily family = parse_family(descriptor.substr(0, colon));
    FamilyParams params;
    if (colon != std::string_view::npos) {
        std::string_view rest = descriptor.substr(colon + 1);
        std::vector<std::pair<std::string, std::string>> kv;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string_view tok = rest.substr(0, comma);
            const auto eq = tok.find('=');
            if (eq == std::string_view::npos) {
                if (kv.empty()) throw InvalidInput("malformed o-polynomial parameter '" + std::string(tok) + "'");
                kv.back().second += "," + std::string(tok);
            } else {
                kv.emplace_back(std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1)));
            }
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        for (const auto& [key, value] : kv) {
            if (key == "h") {
                params.h = static_cast<unsigned>(std::stoul(value));
            } else if (key == "a") {
                params.a = field->parse_element(value);
            } else if (key == "beta") {
                params.beta = Field::make(field->characteristic(), 2 * field->degree())->parse_element(value).index();
            } else if (key == "k") {
                params.exponent = std::stoll(value);
            } else if (key == "coeffs") {
                std::string_view list = value;
                while (!list.empty()) {
                    const auto c = list.find(',');
                    params.coeffs.push_back(field->parse_element(list.substr(0, c)));
                    if (c == std::string_view::npos) break;
                    list.remove_prefix(c + 1);
                }
            } else {
                throw InvalidInput("unknown o-polynomial parameter '" + key + "'");
            }
        }
    }
    if (family == OFamily::custom && params.coeffs.empty()) {
        throw InvalidInput("custom o-polynomial needs coeffs=...");
    }
    return make_family_opoly(field, family, params);
}

std::vector<OFamily> applicable_families(const Field& field) {
    std::vector<OFamily> out;
    if (field.is_odd()) return out;
    const unsigned m = field.degree();
    out.push_back(OFamily::translation);
    if (m % 2 == 1) {
        out.push_back(OFamily::segre);
        out.push_back(OFamily::glynn1);
        if (m % 4 == 3) out.push_back(OFamily::glynn2);
        if (m % 4 == 1) out.push_back(OFamily::glynn3);
        out.push_back(OFamily::cherowitzo);
        out.push_back(OFamily::payne);
    }
    const auto all = field.elements();
    if (std::any_of(all.begin(), all.end(), [&](Elem a) { return subiaco_parameter_ok(field, a); })) {
        out.push_back(OFamily::subiaco);
    }
    if (m >= 4 && m % 2 == 0) out.push_back(OFamily::adelaide);
    return out;
}

std::vector<OPolynomial> family_instances(const FieldPtr& field, OFamily family) {
    std::vector<OPolynomial> out;
    const unsigned m = field->degree();
    switch (family) {
        case OFamily::translation:
            for (unsigned h = 1; h < std::max(2u, m); ++h) {
                if (std::gcd(h, m) == 1) out.push_back(make_family_opoly(field, family, {.h = h}));
            }
            break;
        case OFamily::subiaco:
            for (const Elem a : field->elements()) {
                if (subiaco_parameter_ok(*field, a)) out.push_back(make_family_opoly(field, family, {.a = a}));
            }
            break;
        case OFamily::adelaide: {
            const QuadraticExtension ext(*field);
            const auto q = static_cast<long long>(field->order());
            const long long third = (q - 1) / 3;
            for (const Elem beta : adelaide_betas(ext, q)) {
                for (const long long k : {third, q + 1 - third}) {
                    out.push_back(make_family_opoly(field, family, {.beta = beta.index(), .exponent = k}));
                }
            }
            break;
        }
        case OFamily::custom:
            throw InvalidInput("custom polynomials have no parameter enumeration");
        default:
            out.push_back(make_family_opoly(field, family));
    }
    return out;
}

OVerdict is_o_polynomial(const OPolynomial& f) {
    const Field& field = f.field();
    require_even(field);
    const std::uint32_t q = field.order();
    std::vector<std::uint8_t> seen(q);
    auto first_collision = [&](auto&& g) -> std::optional<Elem> {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::uint32_t i = 0; i < q; ++i) {
            const Elem y = g(Elem{i});
            if (seen[y.index()]) return Elem{i};
            seen[y.index()] = 1;
        }
        return std::nullopt;
    };

    if (const auto x = first_collision([&](Elem x) { return f(x); })) {
        return {false, 1, x, "f is not a permutation (repeated value at x=" + field.format(*x) + ")"};
    }
    if (f(field.zero()) != field.zero()) return {false, 2, field.zero(), "f(0) != 0"};
    if (f(field.one()) != field.one()) return {false, 2, field.one(), "f(1) != 1"};
    for (std::uint32_t ai = 0; ai < q; ++ai) {
        const Elem a{ai};
        const Elem fa = f(a);
        const auto x = first_collision([&](Elem x) {
            return field.mul(field.add(f(field.add(x, a)), fa), field.pow(x, q - 2));
        });
        if (x) return {false, 3, a, "g_a is not a permutation for a=" + field.format(a)};
    }
    return {true, 0, std::nullopt, "o-polynomial"};
}

OVerdict is_two_to_one_with_linear(const OPolynomial& f) {
    const Field& field = f.field();
    require_even(field);
    if (f(field.zero()) != field.zero()) throw InvalidInput("2-to-1 criterion requires f(0) = 0");
    const std::uint32_t q = field.order();
    std::vector<std::uint32_t> fiber(q);
    for (std::uint32_t ui = 1; ui < q; ++ui) {
        const Elem u{ui};
        std::fill(fiber.begin(), fiber.end(), 0);
        for (std::uint32_t i = 0; i < q; ++i) ++fiber[field.add(f(Elem{i}), field.mul(u, Elem{i})).index()];
        if (std::any_of(fiber.begin(), fiber.end(), [](std::uint32_t c) { return c != 0 && c != 2; })) {
            return {false, 1, u, "f(x)+ux is not 2-to-1 for u=" + field.format(u)};
        }
    }
    return {true, 0, std::nullopt, "f(x)+ux is 2-to-1 for every u != 0"};
}

}  // namespace nmds

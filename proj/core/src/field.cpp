#include "nmds/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "nmds/error.hpp"

namespace nmds {

namespace {

using Poly = std::vector<unsigned>;  // coefficients over GF(p), low-to-high

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
    // p is prime, a != 0 (mod p)
    long long t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        const long long quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0) t += p;
    return static_cast<unsigned>(t);
}

Poly poly_mod(Poly a, const Poly& f, unsigned p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const unsigned lead_inv = inv_mod(f.back(), p);
    while (a.size() > df) {
        const std::size_t shift = a.size() - 1 - df;
        const unsigned c = static_cast<unsigned>((static_cast<unsigned long long>(a.back()) * lead_inv) % p);
        for (std::size_t i = 0; i <= df; ++i) {
            const unsigned sub = static_cast<unsigned>((static_cast<unsigned long long>(c) * f[i]) % p);
            a[i + shift] = (a[i + shift] + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<unsigned>((r[i + j] + static_cast<unsigned long long>(a[i]) * b[j]) % p);
        }
    }
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, unsigned p) {
    Poly result{1};
    base = poly_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1u) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return poly_mod(std::move(result), f, p);
}

Poly poly_sub(Poly a, const Poly& b, unsigned p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// x has multiplicative order p^m - 1 modulo f (f assumed irreducible).
bool x_is_primitive(unsigned p, const Poly& f) {
    const unsigned m = static_cast<unsigned>(f.size() - 1);
    const std::uint64_t order = ipow(p, m) - 1;
    for (const std::uint64_t l : prime_factors(order)) {
        if (poly_powmod(Poly{0, 1}, order / l, f, p) == Poly{1}) return false;
    }
    return true;
}

// Conway polynomials for the small fields this library is exercised on;
// every entry is checked for irreducibility and primitivity by the tests.
const std::map<std::pair<unsigned, unsigned>, Poly>& default_table() {
    static const std::map<std::pair<unsigned, unsigned>, Poly> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{7, 2}, {3, 6, 1}},
    };
    return table;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return std::nullopt;
    return std::pair{static_cast<unsigned>(p), m};
}

bool is_irreducible(unsigned p, std::span<const unsigned> poly_in) {
    Poly f(poly_in.begin(), poly_in.end());
    trim(f);
    if (f.size() < 2) return false;
    const unsigned m = static_cast<unsigned>(f.size() - 1);
    if (m == 1) return true;
    if (f[0] == 0) return false;
    const Poly x{0, 1};
    // frob[k] = x^(p^k) mod f
    std::vector<Poly> frob{poly_mod(x, f, p)};
    for (unsigned k = 1; k <= m; ++k) frob.push_back(poly_powmod(frob.back(), p, f, p));
    if (poly_sub(frob[m], x, p) != Poly{}) return false;
    for (const std::uint64_t l : prime_factors(m)) {
        const Poly g = poly_gcd(f, poly_sub(frob[m / l], x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<unsigned> Field::default_modulus(unsigned p, unsigned m) {
    if (!is_prime(p)) throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw InvalidInput("extension degree must be at least 1");
    if (const auto it = default_table().find({p, m}); it != default_table().end()) return it->second;
    if (m == 1) {
        // x - g for the least primitive root g
        for (unsigned g = 1; g < p; ++g) {
            if (x_is_primitive(p, Poly{(p - g) % p, 1})) return {(p - g) % p, 1};
        }
    }
    // First primitive polynomial in increasing order of its low coefficients.
    const std::uint64_t span = ipow(p, m);
    for (std::uint64_t code = 1; code < span; ++code) {
        Poly f(m + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = static_cast<unsigned>(c % p);
            c /= p;
        }
        f[m] = 1;
        if (f[0] == 0) continue;
        if (is_irreducible(p, f) && x_is_primitive(p, f)) return f;
    }
    throw InvalidInput("no primitive polynomial found");  // unreachable for valid (p, m)
}

FieldPtr Field::make(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus) {
    if (!is_prime(p)) throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw InvalidInput("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > max_order) throw InvalidInput("field order exceeds the supported range q <= 2^16");
    }
    std::vector<unsigned> mod = modulus ? *modulus : default_modulus(p, m);
    if (mod.size() != m + 1) {
        throw InvalidInput("modulus must have degree exactly " + std::to_string(m));
    }
    if (mod.back() != 1) throw InvalidInput("modulus must be monic");
    for (const unsigned c : mod) {
        if (c >= p) throw InvalidInput("modulus coefficient out of range for GF(" + std::to_string(p) + ")");
    }
    if (!is_irreducible(p, mod)) throw InvalidInput("modulus is reducible over GF(" + std::to_string(p) + ")");
    return FieldPtr(new Field(p, m, std::move(mod)));
}

FieldPtr Field::of_order(std::uint32_t q) {
    const auto pm = prime_power(q);
    if (!pm) throw InvalidInput(std::to_string(q) + " is not a prime power");
    return make(pm->first, pm->second);
}

FieldPtr Field::parse_descriptor(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string token;
    std::optional<unsigned> p, m, q;
    std::optional<std::vector<unsigned>> mod;
    auto parse_uint = [](std::string_view s) {
        unsigned v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw InvalidInput("expected an unsigned integer, got '" + std::string(s) + "'");
        }
        return v;
    };
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw InvalidInput("malformed field descriptor token '" + token + "'");
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "p") {
            p = parse_uint(value);
        } else if (key == "m") {
            m = parse_uint(value);
        } else if (key == "q") {
            q = parse_uint(value);
        } else if (key == "mod") {
            std::vector<unsigned> coeffs;
            std::string_view rest = value;
            while (!rest.empty()) {
                const auto comma = rest.find(',');
                coeffs.push_back(parse_uint(rest.substr(0, comma)));
                if (comma == std::string_view::npos) break;
                rest.remove_prefix(comma + 1);
            }
            mod = std::move(coeffs);
        } else {
            throw InvalidInput("unknown field descriptor key '" + key + "'");
        }
    }
    if (q) {
        const auto pm = prime_power(*q);
        if (!pm) throw InvalidInput("q=" + std::to_string(*q) + " is not a prime power");
        if ((p && *p != pm->first) || (m && *m != pm->second)) {
            throw InvalidInput("inconsistent p, m and q in field descriptor");
        }
        p = pm->first;
        m = pm->second;
    }
    if (!p || !m) throw InvalidInput("field descriptor needs p and m (or q)");
    return make(*p, *m, std::move(mod));
}

Field::Field(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), q_(static_cast<std::uint32_t>(ipow(p, m))), modulus_(std::move(modulus)) {
    const Poly f(modulus_.begin(), modulus_.end());
    auto to_poly = [&](std::uint32_t a) {
        Poly r(m_, 0);
        for (unsigned i = 0; i < m_; ++i) {
            r[i] = a % p_;
            a /= p_;
        }
        trim(r);
        return r;
    };
    auto from_poly = [&](const Poly& a) {
        std::uint32_t r = 0;
        for (std::size_t i = a.size(); i-- > 0;) r = r * p_ + a[i];
        return r;
    };
    auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
        return from_poly(poly_mulmod(to_poly(a), to_poly(b), f, p_));
    };
    auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
        std::uint32_t r = 1;
        while (e > 0) {
            if (e & 1u) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };

    const std::uint32_t n = q_ - 1;
    const auto factors = prime_factors(n);
    std::uint32_t g = 1;
    for (std::uint32_t a = 1; a < q_; ++a) {
        const bool primitive = std::all_of(factors.begin(), factors.end(),
                                           [&](std::uint64_t l) { return slow_pow(a, n / l) != 1; });
        if (primitive) {
            g = a;
            break;
        }
    }
    primitive_ = Elem{g};

    exp_.assign(2 * static_cast<std::size_t>(n), 0);
    log_.assign(q_, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = cur;
        exp_[i + n] = cur;
        log_[cur] = i;
        cur = slow_mul(cur, g);
    }

    if (p_ != 2) {
        auto digit_add = [&](std::uint32_t a, std::uint32_t b) {
            std::uint32_t r = 0, scale = 1;
            for (unsigned i = 0; i < m_; ++i) {
                r += ((a % p_ + b % p_) % p_) * scale;
                a /= p_;
                b /= p_;
                scale *= p_;
            }
            return r;
        };
        zech_.assign(n, -1);
        for (std::uint32_t d = 0; d < n; ++d) {
            const std::uint32_t s = digit_add(1, exp_[d]);
            zech_[d] = s == 0 ? -1 : static_cast<std::int32_t>(log_[s]);
        }
        eta_.assign(q_, 0);
        for (std::uint32_t a = 1; a < q_; ++a) eta_[a] = (log_[a] % 2 == 0) ? 1 : -1;
    }
}

std::string Field::descriptor() const {
    std::string out = "p=" + std::to_string(p_) + " m=" + std::to_string(m_) + " mod=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
        if (i != 0) out += ',';
        out += std::to_string(modulus_[i]);
    }
    return out;
}

Elem Field::element(std::uint32_t index) const {
    if (index >= q_) {
        throw InvalidInput("element index " + std::to_string(index) + " out of range for GF(" + std::to_string(q_) +
                           ")");
    }
    return Elem{index};
}

Elem Field::from_integer(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::inv(Elem a) const {
    if (!contains(a)) throw InvalidInput("element does not belong to this field");
    if (a.is_zero()) throw InvalidInput("zero has no multiplicative inverse");
    const std::uint32_t n = q_ - 1;
    return Elem{exp_[(n - log_[a.index()]) % n]};
}

Elem Field::pow(Elem a, long long e) const {
    if (a.is_zero()) {
        if (e == 0) return one();
        if (e < 0) throw InvalidInput("zero has no multiplicative inverse");
        return zero();
    }
    const long long n = q_ - 1;
    long long k = e % n;
    if (k < 0) k += n;
    const auto l = static_cast<unsigned long long>(log_[a.index()]);
    return Elem{exp_[(l * static_cast<unsigned long long>(k)) % static_cast<unsigned long long>(n)]};
}

Elem Field::frobenius(Elem a, long long k) const {
    long long r = k % static_cast<long long>(m_);
    if (r < 0) r += m_;
    return pow(a, static_cast<long long>(ipow(p_, static_cast<unsigned>(r))));
}

Elem Field::exp(long long k) const {
    const long long n = q_ - 1;
    long long r = k % n;
    if (r < 0) r += n;
    return Elem{exp_[static_cast<std::size_t>(r)]};
}

std::uint32_t Field::log(Elem a) const {
    if (!contains(a) || a.is_zero()) throw InvalidInput("logarithm of zero is undefined");
    return log_[a.index()];
}

std::uint64_t Field::multiplicative_order(Elem a) const {
    const std::uint64_t n = q_ - 1;
    return n / std::gcd<std::uint64_t>(log(a), n);
}

int Field::quadratic_character(Elem a) const {
    if (p_ == 2) throw InvalidInput("quadratic character requires odd characteristic");
    if (!contains(a)) throw InvalidInput("element does not belong to this field");
    return eta_[a.index()];
}

Elem Field::trace(Elem a, unsigned subfield_degree) const {
    if (subfield_degree == 0 || m_ % subfield_degree != 0) {
        throw InvalidInput("subfield degree " + std::to_string(subfield_degree) + " does not divide " +
                           std::to_string(m_));
    }
    Elem acc = zero();
    for (unsigned i = 0; i < m_ / subfield_degree; ++i) acc = add(acc, frobenius(a, static_cast<long long>(subfield_degree) * i));
    return acc;
}

std::vector<Elem> Field::elements(ElementOrder order) const {
    std::vector<Elem> out;
    out.reserve(q_);
    if (order == ElementOrder::standard) order = m_ > 1 ? ElementOrder::powers : ElementOrder::descending;
    switch (order) {
        case ElementOrder::canonical:
            for (std::uint32_t i = 0; i < q_; ++i) out.emplace_back(i);
            break;
        case ElementOrder::descending:
            for (std::uint32_t i = q_; i-- > 0;) out.emplace_back(i);
            break;
        case ElementOrder::powers:
            if (q_ < 3) throw InvalidInput("powers ordering needs q >= 3");
            for (std::uint32_t k = q_ - 1; k-- > 0;) out.push_back(exp(k));
            out.push_back(zero());
            break;
        case ElementOrder::standard:
            break;
    }
    return out;
}

std::string Field::format(Elem a, Notation notation) const {
    if (notation == Notation::index || a.index() <= 1) return std::to_string(a.index());
    return "g^" + std::to_string(log(a));
}

Elem Field::parse_element(std::string_view token) const {
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    if (token.empty()) throw InvalidInput("empty field element token");
    if (token.front() == '-') return neg(parse_element(token.substr(1)));
    if (token.front() == 'g') {
        if (token.size() == 1) return primitive_element();
        if (token[1] != '^') throw InvalidInput("malformed power token '" + std::string(token) + "'");
        long long k = 0;
        const auto body = token.substr(2);
        const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), k);
        if (ec != std::errc{} || ptr != body.data() + body.size()) {
            throw InvalidInput("malformed power token '" + std::string(token) + "'");
        }
        return exp(k);
    }
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw InvalidInput("malformed field element token '" + std::string(token) + "'");
    }
    return element(v);
}

std::vector<unsigned> Field::coefficients(Elem a) const {
    std::vector<unsigned> out(m_, 0);
    std::uint32_t v = a.index();
    for (unsigned i = 0; i < m_; ++i) {
        out[i] = v % p_;
        v /= p_;
    }
    return out;
}

Elem Field::from_coefficients(std::span<const unsigned> coeffs) const {
    if (coeffs.size() > m_) throw InvalidInput("too many coefficients for this field");
    std::uint32_t r = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p_) throw InvalidInput("coefficient out of range");
        r = r * p_ + coeffs[i];
    }
    return Elem{r};
}

FieldValue::FieldValue(const Field& field, Elem e) : field_(&field), e_(e) {
    if (!field.contains(e)) throw InvalidInput("element does not belong to this field");
}

namespace {
const Field& same_field(const FieldValue& a, const FieldValue& b) {
    if (&a.field() != &b.field() && !(a.field() == b.field())) {
        throw InvalidInput("operands belong to different fields");
    }
    return a.field();
}
}  // namespace

FieldValue operator+(const FieldValue& a, const FieldValue& b) {
    const Field& f = same_field(a, b);
    return {f, f.add(a.elem(), b.elem())};
}

FieldValue operator-(const FieldValue& a, const FieldValue& b) {
    const Field& f = same_field(a, b);
    return {f, f.sub(a.elem(), b.elem())};
}

FieldValue operator*(const FieldValue& a, const FieldValue& b) {
    const Field& f = same_field(a, b);
    return {f, f.mul(a.elem(), b.elem())};
}

FieldValue operator/(const FieldValue& a, const FieldValue& b) {
    const Field& f = same_field(a, b);
    return {f, f.div(a.elem(), b.elem())};
}

bool operator==(const FieldValue& a, const FieldValue& b) {
    same_field(a, b);
    return a.elem() == b.elem();
}

}  // namespace nmds

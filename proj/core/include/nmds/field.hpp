#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nmds {

/// An element of GF(p^m), stored as its coefficient index
/// sum_i c_i p^i for the residue sum_i c_i x^i modulo the field modulus.
class Elem {
public:
    constexpr Elem() = default;
    constexpr explicit Elem(std::uint32_t index) : index_(index) {}

    [[nodiscard]] constexpr std::uint32_t index() const { return index_; }
    [[nodiscard]] constexpr bool is_zero() const { return index_ == 0; }

    auto operator<=>(const Elem&) const = default;

private:
    std::uint32_t index_ = 0;
};

/// Element orderings used when a field has to be laid out as a sequence
/// (generator-matrix columns, CLI listings).
enum class ElementOrder {
    canonical,   ///< indices 0, 1, ..., q-1
    powers,      ///< g^(q-2), ..., g, 1, 0 for the primitive element g
    descending,  ///< indices q-1, ..., 1, 0
    standard,    ///< powers for extension fields, descending for prime fields
};

/// Notation for printing elements.
enum class Notation { index, power };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^m) for q = p^m <= 2^16 with table-driven arithmetic.
///
/// Multiplication goes through exp/log tables built from the primitive
/// element, addition in odd characteristic through a Zech-logarithm table,
/// and the quadratic character through a precomputed table. A Field is
/// immutable after construction and safe to share across threads.
class Field {
public:
    static constexpr std::uint32_t max_order = 1u << 16;

    /// Builds GF(p^m). When `modulus` is omitted the built-in default table
    /// supplies one. Coefficients are listed low-to-high and must be monic.
    static FieldPtr make(unsigned p, unsigned m,
                         std::optional<std::vector<unsigned>> modulus = std::nullopt);

    /// Builds the field of order q (a prime power) with its default modulus.
    static FieldPtr of_order(std::uint32_t q);

    /// Parses "p=2 m=3 mod=1,1,0,1".
    static FieldPtr parse_descriptor(std::string_view text);

    /// Default modulus for GF(p^m) (low-to-high, monic).
    static std::vector<unsigned> default_modulus(unsigned p, unsigned m);

    [[nodiscard]] unsigned characteristic() const { return p_; }
    [[nodiscard]] unsigned degree() const { return m_; }
    [[nodiscard]] std::uint32_t order() const { return q_; }
    [[nodiscard]] std::span<const unsigned> modulus() const { return modulus_; }
    [[nodiscard]] bool is_odd() const { return p_ != 2; }

    [[nodiscard]] std::string descriptor() const;

    [[nodiscard]] Elem zero() const { return Elem{0}; }
    [[nodiscard]] Elem one() const { return Elem{1}; }

    /// Checked conversion from a raw index.
    [[nodiscard]] Elem element(std::uint32_t index) const;
    /// The image of an integer under Z -> GF(p).
    [[nodiscard]] Elem from_integer(long long n) const;
    [[nodiscard]] bool contains(Elem a) const { return a.index() < q_; }

    [[nodiscard]] Elem add(Elem a, Elem b) const {
        if (p_ == 2) return Elem{a.index() ^ b.index()};
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const std::uint32_t la = log_[a.index()];
        std::uint32_t d = log_[b.index()] + (q_ - 1) - la;
        if (d >= q_ - 1) d -= q_ - 1;
        const std::int32_t z = zech_[d];
        if (z < 0) return Elem{0};
        return Elem{exp_[la + static_cast<std::uint32_t>(z)]};
    }

    [[nodiscard]] Elem neg(Elem a) const {
        if (p_ == 2 || a.is_zero()) return a;
        return Elem{exp_[log_[a.index()] + (q_ - 1) / 2]};
    }

    [[nodiscard]] Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    [[nodiscard]] Elem mul(Elem a, Elem b) const {
        if (a.is_zero() || b.is_zero()) return Elem{0};
        return Elem{exp_[log_[a.index()] + log_[b.index()]]};
    }

    /// Throws InvalidInput on zero.
    [[nodiscard]] Elem inv(Elem a) const;
    [[nodiscard]] Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    /// a^e with exponent reduction mod q-1 for nonzero a; negative e inverts.
    /// 0^0 = 1 and 0^e = 0 for e > 0.
    [[nodiscard]] Elem pow(Elem a, long long e) const;

    /// x -> x^(p^k); k may be any integer (taken mod m).
    [[nodiscard]] Elem frobenius(Elem a, long long k) const;

    /// Least-index element of multiplicative order q-1.
    [[nodiscard]] Elem primitive_element() const { return primitive_; }
    /// g^k for the primitive element g.
    [[nodiscard]] Elem exp(long long k) const;
    /// Discrete log base g of a nonzero element.
    [[nodiscard]] std::uint32_t log(Elem a) const;
    [[nodiscard]] std::uint64_t multiplicative_order(Elem a) const;

    /// Quadratic character in {-1, 0, 1}; odd characteristic only.
    [[nodiscard]] int quadratic_character(Elem a) const;

    /// Relative trace from GF(p^m) down to GF(p^d); d must divide m.
    [[nodiscard]] Elem trace(Elem a, unsigned subfield_degree) const;

    [[nodiscard]] std::vector<Elem> elements(ElementOrder order = ElementOrder::canonical) const;

    [[nodiscard]] std::string format(Elem a, Notation notation = Notation::index) const;
    /// Accepts a decimal index, "g", "g^k" (k may be negative), or "-<index>".
    [[nodiscard]] Elem parse_element(std::string_view token) const;

    /// Base-p coefficients of a (length m, low-to-high).
    [[nodiscard]] std::vector<unsigned> coefficients(Elem a) const;
    [[nodiscard]] Elem from_coefficients(std::span<const unsigned> coeffs) const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

private:
    Field(unsigned p, unsigned m, std::vector<unsigned> modulus);

    unsigned p_;
    unsigned m_;
    std::uint32_t q_;
    std::vector<unsigned> modulus_;
    Elem primitive_;
    std::vector<std::uint32_t> exp_;  // length 2(q-1), exp_[i] = g^i
    std::vector<std::uint32_t> log_;  // log_[0] unused
    std::vector<std::int32_t> zech_;  // zech_[d] = log(1 + g^d), -1 when 1 + g^d = 0
    std::vector<std::int8_t> eta_;
};

/// Element bound to its field, with operators. Mixing elements of different
/// fields throws InvalidInput. The field must outlive the value.
class FieldValue {
public:
    FieldValue(const Field& field, Elem e);

    [[nodiscard]] const Field& field() const { return *field_; }
    [[nodiscard]] Elem elem() const { return e_; }

    friend FieldValue operator+(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator-(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator*(const FieldValue& a, const FieldValue& b);
    friend FieldValue operator/(const FieldValue& a, const FieldValue& b);
    FieldValue operator-() const { return {*field_, field_->neg(e_)}; }
    [[nodiscard]] FieldValue inverse() const { return {*field_, field_->inv(e_)}; }
    [[nodiscard]] FieldValue pow(long long e) const { return {*field_, field_->pow(e_, e)}; }

    friend bool operator==(const FieldValue& a, const FieldValue& b);

private:
    const Field* field_;
    Elem e_;
};

/// True when n is prime (trial division).
[[nodiscard]] bool is_prime(std::uint64_t n);

/// Splits a prime power q into (p, m); nullopt when q is not a prime power.
[[nodiscard]] std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q);

/// Rabin irreducibility test for a monic polynomial over GF(p), low-to-high.
[[nodiscard]] bool is_irreducible(unsigned p, std::span<const unsigned> poly);

}  // namespace nmds

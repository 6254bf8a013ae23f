#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nmds/field.hpp"

namespace nmds {

/// Known infinite families of o-polynomials over GF(2^m), plus user-supplied ones.
enum class OFamily {
    translation,
    segre,
    glynn1,
    glynn2,
    glynn3,
    cherowitzo,
    payne,
    subiaco,
    adelaide,
    custom,
};

[[nodiscard]] std::string_view to_string(OFamily family);
[[nodiscard]] OFamily parse_family(std::string_view name);

/// Family parameters. Unset values fall back to the first admissible choice.
struct FamilyParams {
    std::optional<unsigned> h{};               ///< translation exponent 2^h
    std::optional<Elem> a{};                   ///< Subiaco parameter
    std::optional<std::uint32_t> beta{};       ///< Adelaide beta, as an index in GF(q^2)
    std::optional<long long> exponent{};       ///< Adelaide exponent k, k = +-(q-1)/3 mod q+1
    std::vector<Elem> coeffs{};                ///< custom coefficients, low-to-high
};

/// A polynomial of degree < q over GF(q), tagged with the family it came from.
class OPolynomial {
public:
    static OPolynomial from_coefficients(FieldPtr field, std::vector<Elem> coeffs,
                                         OFamily family = OFamily::custom, std::string params = {});
    /// Interpolates the unique polynomial of degree < q taking values[x.index()] at x.
    static OPolynomial from_values(FieldPtr field, std::span<const Elem> values,
                                   OFamily family = OFamily::custom, std::string params = {});

    [[nodiscard]] const Field& field() const { return *field_; }
    [[nodiscard]] const FieldPtr& field_ptr() const { return field_; }
    [[nodiscard]] OFamily family() const { return family_; }
    [[nodiscard]] const std::string& parameters() const { return params_; }
    [[nodiscard]] std::span<const Elem> coefficients() const { return coeffs_; }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const;

    /// Horner evaluation of the coefficient form.
    [[nodiscard]] Elem eval(Elem x) const;
    /// Table lookup of the value at x (same result as eval).
    [[nodiscard]] Elem operator()(Elem x) const { return values_[x.index()]; }
    /// Values indexed by element index.
    [[nodiscard]] std::span<const Elem> values() const { return values_; }

    /// "family:key=value,..." in the CLI descriptor syntax.
    [[nodiscard]] std::string descriptor() const;

private:
    OPolynomial(FieldPtr field, std::vector<Elem> coeffs, OFamily family, std::string params);

    FieldPtr field_;
    std::vector<Elem> coeffs_;
    std::vector<Elem> values_;
    OFamily family_;
    std::string params_;
};

/// Coefficients (degree < q) of the polynomial function with the given values.
[[nodiscard]] std::vector<Elem> interpolate(const Field& field, std::span<const Elem> values);

/// Evaluates a family formula at every point of GF(q) and interpolates.
/// Throws InvalidInput when the family's applicability constraints fail.
[[nodiscard]] OPolynomial make_family_opoly(const FieldPtr& field, OFamily family, const FamilyParams& params = {});

/// Parses "translation:h=1", "segre", "subiaco:a=g^5", "adelaide:beta=g^15,k=5", "custom:coeffs=0,0,1".
[[nodiscard]] OPolynomial parse_opoly(const FieldPtr& field, std::string_view descriptor);

/// Families whose constraints can be met over this field (custom excluded).
[[nodiscard]] std::vector<OFamily> applicable_families(const Field& field);

/// Every admissible parameter choice of a family over this field.
[[nodiscard]] std::vector<OPolynomial> family_instances(const FieldPtr& field, OFamily family);

struct OVerdict {
    bool pass = false;
    /// 0 when passing; otherwise 1 (not a permutation), 2 (f(0) != 0 or f(1) != 1),
    /// 3 (some g_a is not a permutation) for is_o_polynomial, or 1 for the 2-to-1 check.
    int failed_condition = 0;
    std::optional<Elem> witness;
    std::string detail;
};

/// Checks the o-polynomial conditions: f a permutation, f(0)=0, f(1)=1, and
/// g_a(x) = (f(x+a) + f(a)) x^(q-2) a permutation for every a. Even q only.
[[nodiscard]] OVerdict is_o_polynomial(const OPolynomial& f);

/// Checks that f(x) + ux is 2-to-1 for every nonzero u. Even q and f(0)=0.
[[nodiscard]] OVerdict is_two_to_one_with_linear(const OPolynomial& f);

}  // namespace nmds

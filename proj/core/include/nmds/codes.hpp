#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nmds/field.hpp"
#include "nmds/geometry.hpp"

namespace nmds {

using BigInt = boost::multiprecision::cpp_int;

/// A k x n generator matrix of full row rank over GF(q).
class GeneratorMatrix {
public:
    /// Rows of equal length n >= k >= 1. Throws InvalidInput on rank deficiency.
    GeneratorMatrix(FieldPtr field, std::vector<std::vector<Elem>> rows);

    /// Builds the 3 x n matrix whose columns are the given points.
    static GeneratorMatrix from_columns(FieldPtr field, std::span<const Point> columns);

    [[nodiscard]] const Field& field() const { return *field_; }
    [[nodiscard]] const FieldPtr& field_ptr() const { return field_; }
    [[nodiscard]] std::size_t k() const { return rows_.size(); }
    [[nodiscard]] std::size_t n() const { return rows_.front().size(); }
    [[nodiscard]] Elem at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    [[nodiscard]] const std::vector<std::vector<Elem>>& rows() const { return rows_; }
    [[nodiscard]] std::vector<Elem> column(std::size_t j) const;
    /// Columns as projective points (k = 3 only).
    [[nodiscard]] PointSet column_points() const;

    friend bool operator==(const GeneratorMatrix& a, const GeneratorMatrix& b) {
        return *a.field_ == *b.field_ && a.rows_ == b.rows_;
    }

private:
    FieldPtr field_;
    std::vector<std::vector<Elem>> rows_;
};

/// Rank of a list of equal-length vectors.
[[nodiscard]] std::size_t rank(const Field& field, std::vector<std::vector<Elem>> rows);
/// Basis of {x : M x^T = 0}, one vector per free column of the reduced echelon form.
[[nodiscard]] std::vector<std::vector<Elem>> null_space(const Field& field, std::vector<std::vector<Elem>> rows,
                                                        std::size_t width);

/// A_0..A_n as exact integers.
class WeightDistribution {
public:
    WeightDistribution() = default;
    explicit WeightDistribution(std::size_t n) : counts_(n + 1) {}
    explicit WeightDistribution(std::vector<BigInt> counts) : counts_(std::move(counts)) {}

    [[nodiscard]] std::size_t length() const { return counts_.empty() ? 0 : counts_.size() - 1; }
    [[nodiscard]] const BigInt& operator[](std::size_t w) const { return counts_.at(w); }
    BigInt& operator[](std::size_t w) { return counts_.at(w); }
    [[nodiscard]] std::span<const BigInt> counts() const { return counts_; }
    [[nodiscard]] BigInt total() const;
    /// Smallest nonzero weight with a nonzero count; 0 if only the zero word exists.
    [[nodiscard]] std::size_t min_weight() const;
    /// (weight, count) for every nonzero count.
    [[nodiscard]] std::vector<std::pair<std::size_t, BigInt>> nonzero_terms() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

private:
    std::vector<BigInt> counts_;
};

struct EnumerationOptions {
    unsigned threads = 1;
    /// Upper bound on q^k.
    std::uint64_t budget = std::uint64_t{1} << 32;
};

/// Hamming weight of uG.
[[nodiscard]] std::size_t weight_of(const GeneratorMatrix& g, std::span<const Elem> message);

/// Exact weight distribution by enumerating one message per projective class.
/// Throws BudgetExceeded when q^k exceeds the budget.
[[nodiscard]] WeightDistribution weight_distribution(const GeneratorMatrix& g, const EnumerationOptions& options = {});

/// Generator matrix of the dual code. Throws PreconditionFailed when n = k.
[[nodiscard]] GeneratorMatrix dual_matrix(const GeneratorMatrix& g);

/// Smallest number of linearly dependent columns, searched over subsets of
/// size <= max_subset; nullopt when none is found (d_dual > max_subset).
[[nodiscard]] std::optional<std::size_t> dual_distance(const GeneratorMatrix& g, std::size_t max_subset = 4);

enum class CodeClass { mds, amds, nmds, other };
[[nodiscard]] std::string_view to_string(CodeClass c);

struct CodeProfile {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::optional<std::size_t> d_dual;  ///< nullopt: larger than the dependency search depth
    long long defect = 0;
    std::optional<long long> defect_dual;
    CodeClass code_class = CodeClass::other;
};

/// d by brute force, d_dual by column-dependency search.
[[nodiscard]] CodeProfile classify(const GeneratorMatrix& g, const EnumerationOptions& options = {});
/// Classification when the weight distribution is already known.
[[nodiscard]] CodeProfile classify(const GeneratorMatrix& g, const WeightDistribution& distribution);

[[nodiscard]] BigInt binomial(long long n, long long r);

struct NmdsDistributions {
    WeightDistribution code;
    WeightDistribution dual;
};

/// Weight distributions of an [n,k,n-k] NMDS code and its dual determined by
/// A_{n-k} = A_k^dual = a_min. Throws InvalidInput when a count comes out negative.
[[nodiscard]] NmdsDistributions nmds_closed_form(std::size_t n, std::size_t k, std::uint64_t q, const BigInt& a_min);

/// Index triples {i<j<l} of collinear columns of a 3 x n matrix: the supports of
/// minimum-weight dual codewords. Throws InvalidInput on proportional columns or
/// on four collinear columns.
[[nodiscard]] std::vector<std::array<std::size_t, 3>> min_weight_supports(const GeneratorMatrix& g);

struct PairingVerdict {
    bool pass = false;
    BigInt a_min;       ///< A_{n-k}
    BigInt a_min_dual;  ///< A_k of the dual
    std::size_t codewords_checked = 0;  ///< projective classes of minimum-weight codewords
    std::size_t failures = 0;
    std::string detail;
};

/// For each minimum-weight codeword c, checks that exactly one projective class of
/// minimum-weight dual codewords has support disjoint from supp(c), and that
/// A_{n-k} = A_k^dual. Throws PreconditionFailed unless the code is NMDS.
[[nodiscard]] PairingVerdict min_weight_pairing_check(const GeneratorMatrix& g, const EnumerationOptions& options = {});

/// "q=<q> p=<p> m=<m> mod=<coeffs>" followed by k rows of element tokens.
[[nodiscard]] std::string format_matrix(const GeneratorMatrix& g, Notation notation = Notation::index);
[[nodiscard]] GeneratorMatrix parse_matrix(std::string_view text);

}  // namespace nmds

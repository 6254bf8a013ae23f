#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nmds/field.hpp"
#include "nmds/opoly.hpp"

namespace nmds {

using Triple = std::array<Elem, 3>;

/// Scales a nonzero triple so that its last nonzero coordinate is 1.
/// Throws InvalidInput for the zero vector.
[[nodiscard]] Triple canonical_triple(const Field& field, Triple v);

/// A point of PG(2,q) in canonical form.
struct Point {
    Triple coords{};
    auto operator<=>(const Point&) const = default;
};

/// A line H_u = {x : x.u = 0} of PG(2,q), with u in canonical form.
struct Line {
    Triple coeffs{};
    auto operator<=>(const Line&) const = default;
};

[[nodiscard]] Point make_point(const Field& field, Triple v);
[[nodiscard]] Line make_line(const Field& field, Triple u);

[[nodiscard]] Elem dot(const Field& field, const Triple& a, const Triple& b);
[[nodiscard]] Triple cross(const Field& field, const Triple& a, const Triple& b);

[[nodiscard]] inline bool incident(const Field& field, const Point& p, const Line& l) {
    return dot(field, p.coords, l.coeffs).is_zero();
}

/// The unique line through two distinct points. Throws InvalidInput if p1 == p2.
[[nodiscard]] Line line_through(const Field& field, const Point& p1, const Point& p2);

/// Ordered list of distinct points (the column order of a generator matrix).
using PointSet = std::vector<Point>;

/// Throws InvalidInput when two entries coincide.
void require_distinct(std::span<const Point> points);

/// All points and lines of PG(2,q) in lexicographic order of canonical
/// coordinates, with incidence lists in both directions.
class Plane {
public:
    explicit Plane(FieldPtr field);

    [[nodiscard]] const Field& field() const { return *field_; }
    [[nodiscard]] const FieldPtr& field_ptr() const { return field_; }
    [[nodiscard]] std::size_t size() const { return points_.size(); }  ///< q^2+q+1

    [[nodiscard]] std::span<const Point> points() const { return points_; }
    [[nodiscard]] std::span<const Line> lines() const { return lines_; }
    [[nodiscard]] std::size_t point_id(const Point& p) const;
    [[nodiscard]] std::size_t line_id(const Line& l) const;

    /// The q+1 line ids through a point id, ascending.
    [[nodiscard]] std::span<const std::uint32_t> lines_through(std::size_t point) const {
        return {lines_through_.data() + point * per_, per_};
    }
    /// The q+1 point ids on a line id, ascending.
    [[nodiscard]] std::span<const std::uint32_t> points_on(std::size_t line) const {
        return {points_on_.data() + line * per_, per_};
    }

private:
    FieldPtr field_;
    std::size_t per_;
    std::vector<Point> points_;
    std::vector<Line> lines_;
    std::vector<std::uint32_t> lines_through_;
    std::vector<std::uint32_t> points_on_;
};

struct IntersectionProfile {
    std::map<std::size_t, std::size_t> lines_by_size;  ///< |L ∩ S| -> number of lines L
    std::size_t max_size = 0;
};

/// Counts, for every line of PG(2,q), how many points of S it contains.
[[nodiscard]] IntersectionProfile line_intersection_profile(const Field& field, std::span<const Point> points);
[[nodiscard]] IntersectionProfile line_intersection_profile(const Plane& plane, std::span<const Point> points);

/// No three collinear.
[[nodiscard]] bool is_arc(const Field& field, std::span<const Point> points);
/// Some three collinear, no four collinear.
[[nodiscard]] bool is_n3_arc(const Field& field, std::span<const Point> points);

/// {(f(c),c,1)} in the given element order, then (1,0,0) and (0,1,0).
/// Throws InvalidInput when f is not an o-polynomial.
[[nodiscard]] PointSet hyperoval_from_opoly(const OPolynomial& f, ElementOrder order = ElementOrder::standard);

/// {(x^2,x,1)} in the given element order, then (1,0,0). Odd q only.
[[nodiscard]] PointSet standard_oval(const Field& field, ElementOrder order = ElementOrder::standard);

/// "x:y:z" with element tokens.
[[nodiscard]] std::string format_triple(const Field& field, const Triple& v, Notation notation = Notation::index);
/// Parses "x:y:z"; the result is not canonicalized.
[[nodiscard]] Triple parse_triple(const Field& field, std::string_view text);

}  // namespace nmds

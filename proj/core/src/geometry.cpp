#include "nmds/geometry.hpp"

#include <algorithm>

#include "nmds/error.hpp"

namespace nmds {

Triple canonical_triple(const Field& field, Triple v) {
    for (std::size_t i = 3; i-- > 0;) {
        if (v[i].is_zero()) continue;
        const Elem s = field.inv(v[i]);
        for (auto& c : v) c = field.mul(c, s);
        return v;
    }
    throw InvalidInput("the zero vector is not a projective point");
}

Point make_point(const Field& field, Triple v) { return Point{canonical_triple(field, v)}; }
Line make_line(const Field& field, Triple u) { return Line{canonical_triple(field, u)}; }

Elem dot(const Field& field, const Triple& a, const Triple& b) {
    return field.add(field.add(field.mul(a[0], b[0]), field.mul(a[1], b[1])), field.mul(a[2], b[2]));
}

Triple cross(const Field& field, const Triple& a, const Triple& b) {
    auto det2 = [&](Elem x0, Elem y0, Elem x1, Elem y1) { return field.sub(field.mul(x0, y1), field.mul(y0, x1)); };
    return {det2(a[1], a[2], b[1], b[2]), det2(a[2], a[0], b[2], b[0]), det2(a[0], a[1], b[0], b[1])};
}

Line line_through(const Field& field, const Point& p1, const Point& p2) {
    if (p1 == p2) throw InvalidInput("a line needs two distinct points");
    return make_line(field, cross(field, p1.coords, p2.coords));
}

void require_distinct(std::span<const Point> points) {
    std::vector<Point> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidInput("point set contains a repeated point");
    }
}

namespace {

std::vector<Triple> canonical_triples(const Field& field) {
    const std::uint32_t q = field.order();
    std::vector<Triple> out;
    out.reserve(static_cast<std::size_t>(q) * q + q + 1);
    for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y) out.push_back({Elem{x}, Elem{y}, field.one()});
    for (std::uint32_t x = 0; x < q; ++x) out.push_back({Elem{x}, field.one(), field.zero()});
    out.push_back({field.one(), field.zero(), field.zero()});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Plane::Plane(FieldPtr field) : field_(std::move(field)), per_(field_->order() + 1) {
    const Field& F = *field_;
    for (const auto& t : canonical_triples(F)) {
        points_.push_back(Point{t});
        lines_.push_back(Line{t});
    }
    points_on_.reserve(lines_.size() * per_);
    std::vector<std::uint32_t> ids;
    for (const Line& l : lines_) {
        // two independent vectors spanning l's null space: e_j - u_j e_i for j != i,
        // i the position of the final 1 of the canonical u
        const auto& u = l.coeffs;
        std::size_t i = 2;
        while (u[i].is_zero()) --i;
        std::array<Triple, 2> basis{};
        for (std::size_t j = 0, b = 0; j < 3; ++j) {
            if (j == i) continue;
            Triple v{F.zero(), F.zero(), F.zero()};
            v[j] = F.one();
            v[i] = F.neg(u[j]);
            basis[b++] = v;
        }
        ids.clear();
        ids.push_back(static_cast<std::uint32_t>(point_id(make_point(F, basis[1]))));
        for (std::uint32_t t = 0; t < F.order(); ++t) {
            Triple v;
            for (std::size_t c = 0; c < 3; ++c) v[c] = F.add(basis[0][c], F.mul(Elem{t}, basis[1][c]));
            ids.push_back(static_cast<std::uint32_t>(point_id(make_point(F, v))));
        }
        std::sort(ids.begin(), ids.end());
        points_on_.insert(points_on_.end(), ids.begin(), ids.end());
    }
    lines_through_.assign(points_.size() * per_, 0);
    std::vector<std::size_t> fill(points_.size(), 0);
    for (std::size_t l = 0; l < lines_.size(); ++l) {
        for (const auto p : points_on(l)) lines_through_[p * per_ + fill[p]++] = static_cast<std::uint32_t>(l);
    }
}

std::size_t Plane::point_id(const Point& p) const {
    const auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) throw InvalidInput("point is not in canonical form");
    return static_cast<std::size_t>(it - points_.begin());
}

std::size_t Plane::line_id(const Line& l) const {
    const auto it = std::lower_bound(lines_.begin(), lines_.end(), l);
    if (it == lines_.end() || *it != l) throw InvalidInput("line is not in canonical form");
    return static_cast<std::size_t>(it - lines_.begin());
}

IntersectionProfile line_intersection_profile(const Plane& plane, std::span<const Point> points) {
    std::vector<std::size_t> hits(plane.size(), 0);
    for (const Point& p : points) {
        for (const auto l : plane.lines_through(plane.point_id(p))) ++hits[l];
    }
    IntersectionProfile out;
    for (const auto h : hits) {
        ++out.lines_by_size[h];
        out.max_size = std::max(out.max_size, h);
    }
    return out;
}

IntersectionProfile line_intersection_profile(const Field& field, std::span<const Point> points) {
    // Lines are enumerated directly so that no Plane has to be built.
    std::vector<Point> canon;
    canon.reserve(points.size());
    for (const Point& p : points) canon.push_back(make_point(field, p.coords));
    IntersectionProfile out;
    for (const auto& u : canonical_triples(field)) {
        std::size_t h = 0;
        for (const Point& p : canon) h += dot(field, p.coords, u).is_zero();
        ++out.lines_by_size[h];
        out.max_size = std::max(out.max_size, h);
    }
    return out;
}

namespace {

/// Largest number of points of S on one line, counting only lines through two points of S.
std::size_t max_collinear(const Field& field, std::span<const Point> points) {
    if (points.size() < 2) return points.size();
    std::map<Line, std::size_t> pairs;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) ++pairs[line_through(field, points[i], points[j])];
    std::size_t best = 2;
    for (const auto& [line, count] : pairs) {
        // count = C(s, 2) for s points on the line
        std::size_t s = 2;
        while (s * (s - 1) / 2 < count) ++s;
        best = std::max(best, s);
    }
    return best;
}

}  // namespace

bool is_arc(const Field& field, std::span<const Point> points) {
    require_distinct(points);
    return max_collinear(field, points) <= 2;
}

bool is_n3_arc(const Field& field, std::span<const Point> points) {
    require_distinct(points);
    return max_collinear(field, points) == 3;
}

PointSet hyperoval_from_opoly(const OPolynomial& f, ElementOrder order) {
    const Field& F = f.field();
    const auto verdict = is_o_polynomial(f);
    if (!verdict.pass) throw InvalidInput("not an o-polynomial: " + verdict.detail);
    PointSet out;
    for (const Elem c : F.elements(order)) out.push_back(Point{{f(c), c, F.one()}});
    out.push_back(Point{{F.one(), F.zero(), F.zero()}});
    out.push_back(Point{{F.zero(), F.one(), F.zero()}});
    return out;
}

PointSet standard_oval(const Field& field, ElementOrder order) {
    if (!field.is_odd()) throw InvalidInput("the conic oval is used for odd q only");
    PointSet out;
    for (const Elem x : field.elements(order)) out.push_back(Point{{field.mul(x, x), x, field.one()}});
    out.push_back(Point{{field.one(), field.zero(), field.zero()}});
    return out;
}

std::string format_triple(const Field& field, const Triple& v, Notation notation) {
    return field.format(v[0], notation) + ":" + field.format(v[1], notation) + ":" + field.format(v[2], notation);
}

Triple parse_triple(const Field& field, std::string_view text) {
    Triple out{};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto colon = text.find(':');
        if ((i < 2) == (colon == std::string_view::npos)) {
            throw InvalidInput("expected x:y:z, got '" + std::string(text) + "'");
        }
        out[i] = field.parse_element(text.substr(0, colon));
        if (i < 2) text.remove_prefix(colon + 1);
    }
    return out;
}

}  // namespace nmds

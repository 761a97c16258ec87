#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "islands/predicates.hpp"

namespace islands {

enum class Containment { open, closed };

// Vertices in CCW order, strictly convex (no repeated or collinear vertices).
// Degenerate shapes are first-class: one vertex (point) or two (segment).
struct ConvexPolygon {
    std::vector<Point> verts;

    bool is_point() const { return verts.size() == 1; }
    bool is_segment() const { return verts.size() == 2; }
    size_t size() const { return verts.size(); }
};

inline ConvexPolygon convex_hull(std::vector<Point> pts) {
    if (pts.empty()) throw invalid_input_error("empty point set");
    std::sort(pts.begin(), pts.end(), xy_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) return ConvexPolygon{{pts[0]}};
    if (pts.size() == 2) return ConvexPolygon{{pts[0], pts[1]}};
    // monotone chain, strict turns only
    std::vector<Point> hull(2 * pts.size());
    size_t k = 0;
    for (const Point& p : pts) {
        while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) != Orient::ccw) --k;
        hull[k++] = p;
    }
    size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (k >= lower && orientation(hull[k - 2], hull[k - 1], *it) != Orient::ccw) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
    return ConvexPolygon{std::move(hull)};
}

inline bool point_in_hull(const Point& p, const ConvexPolygon& h, Containment mode) {
    if (h.verts.empty()) return false;
    if (h.is_point()) return mode == Containment::closed && p == h.verts[0];
    if (h.is_segment()) {
        if (mode == Containment::open) return false;  // a segment has empty interior
        return on_segment(h.verts[0], h.verts[1], p);
    }
    size_t n = h.verts.size();
    for (size_t i = 0; i < n; ++i) {
        Orient o = orientation(h.verts[i], h.verts[(i + 1) % n], p);
        if (mode == Containment::closed) {
            if (o == Orient::cw) return false;
        } else {
            if (o != Orient::ccw) return false;
        }
    }
    return true;
}

struct SegmentIntersection {
    enum class Kind { none, point, overlap } kind = Kind::none;
    Point p;  // set when kind == point
};

// Exact intersection of closed segments [a,b] and [c,d].
inline SegmentIntersection segment_intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
    Orient o1 = orientation(a, b, c);
    Orient o2 = orientation(a, b, d);
    Orient o3 = orientation(c, d, a);
    Orient o4 = orientation(c, d, b);

    if (o1 == Orient::collinear && o2 == Orient::collinear) {
        // all four points on one line
        bool c_on = between_collinear(a, b, c);
        bool d_on = between_collinear(a, b, d);
        bool a_on = between_collinear(c, d, a);
        bool b_on = between_collinear(c, d, b);
        int touch = int(c_on) + int(d_on) + int(a_on) + int(b_on);
        if (touch == 0) return {};
        // single shared endpoint counts as a point, anything longer is an overlap
        std::vector<Point> shared;
        auto push = [&shared](const Point& p) {
            for (const Point& q : shared)
                if (q == p) return;
            shared.push_back(p);
        };
        if (c_on) push(c);
        if (d_on) push(d);
        if (a_on) push(a);
        if (b_on) push(b);
        if (shared.size() == 1) return {SegmentIntersection::Kind::point, shared[0]};
        return {SegmentIntersection::Kind::overlap, {}};
    }

    auto opposite = [](Orient u, Orient v) {
        return (u == Orient::ccw && v == Orient::cw) || (u == Orient::cw && v == Orient::ccw);
    };
    bool proper = opposite(o1, o2) && opposite(o3, o4);
    if (proper) {
        // line intersection, denominators exact
        Rat r1a = b.y - a.y, r1b = a.x - b.x, r1c = r1a * a.x + r1b * a.y;
        Rat r2a = d.y - c.y, r2b = c.x - d.x, r2c = r2a * c.x + r2b * c.y;
        Rat det = r1a * r2b - r2a * r1b;
        Rat px = (r1c * r2b - r2c * r1b) / det;
        Rat py = (r1a * r2c - r2a * r1c) / det;
        return {SegmentIntersection::Kind::point, Point(px, py)};
    }
    // touching cases: an endpoint on the other segment
    if (o1 == Orient::collinear && between_collinear(a, b, c)) return {SegmentIntersection::Kind::point, c};
    if (o2 == Orient::collinear && between_collinear(a, b, d)) return {SegmentIntersection::Kind::point, d};
    if (o3 == Orient::collinear && between_collinear(c, d, a)) return {SegmentIntersection::Kind::point, a};
    if (o4 == Orient::collinear && between_collinear(c, d, b)) return {SegmentIntersection::Kind::point, b};
    return {};
}

namespace detail {

// edges of the boundary walk; a point contributes none, a segment one
inline size_t boundary_edge_count(const ConvexPolygon& h) {
    if (h.verts.size() <= 1) return 0;
    if (h.verts.size() == 2) return 1;
    return h.verts.size();
}

inline std::pair<Point, Point> boundary_edge(const ConvexPolygon& h, size_t i) {
    return {h.verts[i], h.verts[(i + 1) % h.verts.size()]};
}

inline bool segment_hits_hull(const Point& a, const Point& b, const ConvexPolygon& h) {
    if (point_in_hull(a, h, Containment::closed) || point_in_hull(b, h, Containment::closed)) return true;
    for (size_t i = 0; i < boundary_edge_count(h); ++i) {
        auto [c, d] = boundary_edge(h, i);
        if (segment_intersection(a, b, c, d).kind != SegmentIntersection::Kind::none) return true;
    }
    return false;
}

}  // namespace detail

// Closed-set intersection test, all degenerate combinations included.
inline bool hulls_intersect(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.verts.empty() || b.verts.empty()) return false;
    if (a.is_point()) return point_in_hull(a.verts[0], b, Containment::closed);
    if (b.is_point()) return point_in_hull(b.verts[0], a, Containment::closed);
    if (a.is_segment()) return detail::segment_hits_hull(a.verts[0], a.verts[1], b);
    if (b.is_segment()) return detail::segment_hits_hull(b.verts[0], b.verts[1], a);
    for (const Point& p : a.verts)
        if (point_in_hull(p, b, Containment::closed)) return true;
    for (const Point& p : b.verts)
        if (point_in_hull(p, a, Containment::closed)) return true;
    for (size_t i = 0; i < a.verts.size(); ++i) {
        auto [p, q] = detail::boundary_edge(a, i);
        for (size_t j = 0; j < b.verts.size(); ++j) {
            auto [r, s] = detail::boundary_edge(b, j);
            if (segment_intersection(p, q, r, s).kind != SegmentIntersection::Kind::none) return true;
        }
    }
    return false;
}

// |boundary(a) n boundary(b)| when finite; throws on collinear overlap.
inline long boundary_intersection_count(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.verts.empty() || b.verts.empty()) return 0;
    std::vector<Point> found;
    auto record = [&found](const Point& p) {
        for (const Point& q : found)
            if (q == p) return;
        found.push_back(p);
    };
    if (a.is_point()) {
        const Point& p = a.verts[0];
        if (b.is_point()) return p == b.verts[0] ? 1 : 0;
        bool on = false;
        if (b.is_segment()) {
            on = on_segment(b.verts[0], b.verts[1], p);
        } else {
            size_t n = b.verts.size();
            for (size_t i = 0; i < n && !on; ++i) on = on_segment(b.verts[i], b.verts[(i + 1) % n], p);
        }
        return on ? 1 : 0;
    }
    if (b.is_point()) return boundary_intersection_count(b, a);
    for (size_t i = 0; i < detail::boundary_edge_count(a); ++i) {
        auto [p, q] = detail::boundary_edge(a, i);
        for (size_t j = 0; j < detail::boundary_edge_count(b); ++j) {
            auto [r, s] = detail::boundary_edge(b, j);
            SegmentIntersection si = segment_intersection(p, q, r, s);
            if (si.kind == SegmentIntersection::Kind::overlap)
                throw degeneracy_error("non-generic boundary overlap");
            if (si.kind == SegmentIntersection::Kind::point) record(si.p);
        }
    }
    return static_cast<long>(found.size());
}

// Twice the signed area; positive for CCW polygons, zero for degenerate hulls.
inline Rat area2(const ConvexPolygon& h) {
    Rat s(0);
    size_t n = h.verts.size();
    if (n < 3) return s;
    for (size_t i = 0; i < n; ++i) {
        const Point& p = h.verts[i];
        const Point& q = h.verts[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

// Conservative double bounding box, for pre-filtering exact tests only.
struct BBox {
    double xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    bool overlaps(const BBox& o) const { return xlo <= o.xhi && o.xlo <= xhi && ylo <= o.yhi && o.ylo <= yhi; }
};

inline BBox bbox_of_points(const std::vector<Point>& pts) {
    BBox b{1e308, -1e308, 1e308, -1e308};
    for (const Point& p : pts) {
        b.xlo = std::min(b.xlo, p.ix.lo);
        b.xhi = std::max(b.xhi, p.ix.hi);
        b.ylo = std::min(b.ylo, p.iy.lo);
        b.yhi = std::max(b.yhi, p.iy.hi);
    }
    return b;
}

inline BBox bbox_of(const ConvexPolygon& h) { return bbox_of_points(h.verts); }

// Clips a convex CCW polygon (>= 3 verts) against the closed half-plane left of a->b.
inline std::vector<Point> clip_halfplane(const std::vector<Point>& poly, const Point& a, const Point& b) {
    std::vector<Point> out;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& cur = poly[i];
        const Point& nxt = poly[(i + 1) % n];
        Orient oc = orientation(a, b, cur);
        Orient on = orientation(a, b, nxt);
        bool cur_in = oc != Orient::cw;
        bool nxt_in = on != Orient::cw;
        if (cur_in) out.push_back(cur);
        if (cur_in != nxt_in) {
            SegmentIntersection si = segment_intersection(cur, nxt, a, b);
            if (si.kind == SegmentIntersection::Kind::point) {
                if (out.empty() || !(out.back() == si.p)) out.push_back(si.p);
            } else {
                // crossing the infinite line outside segment [a,b]: intersect with the line
                Rat r1a = nxt.y - cur.y, r1b = cur.x - nxt.x, r1c = r1a * cur.x + r1b * cur.y;
                Rat r2a = b.y - a.y, r2b = a.x - b.x, r2c = r2a * a.x + r2b * a.y;
                Rat det = r1a * r2b - r2a * r1b;
                Point p((r1c * r2b - r2c * r1b) / det, (r1a * r2c - r2a * r1c) / det);
                if (out.empty() || !(out.back() == p)) out.push_back(p);
            }
        }
    }
    return out;
}

// Exact area of the intersection of a convex CCW polygon with a convex hull (twice the area).
inline Rat intersection_area2(const std::vector<Point>& poly, const ConvexPolygon& hull) {
    if (hull.verts.size() < 3 || poly.size() < 3) return Rat(0);
    std::vector<Point> cur = poly;
    size_t n = hull.verts.size();
    for (size_t i = 0; i < n && !cur.empty(); ++i)
        cur = clip_halfplane(cur, hull.verts[i], hull.verts[(i + 1) % n]);
    Rat s(0);
    for (size_t i = 0; i < cur.size(); ++i) {
        const Point& p = cur[i];
        const Point& q = cur[(i + 1) % cur.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

}  // namespace islands

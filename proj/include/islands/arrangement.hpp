#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "islands/oracles.hpp"

namespace islands {

// Planar subdivision of island hull boundaries under the bold insertion rule:
// the newest island's hull interior is one face, so a boundary portion of an
// earlier island survives only where it is not strictly inside a later hull.
// Rebuilt from the ordered island list on every augmentation; overlay cost is
// quadratic, which is fine at the scales this library targets.

struct HalfEdge {
    int origin = -1;
    int twin = -1;
    int next = -1;
    int prev = -1;
    int face = -1;
    int island = -1;  // source island of the carrier segment
};

struct FaceCycle {
    std::vector<int> half_edges;
    bool bounded = false;  // CCW outer cycle of a bounded face
    int owner = -1;        // latest island whose hull contains the face, -1 if none
    ConvexPolygon closure; // canonical, only for bounded cycles
};

struct DegeneratePiece {
    int owner = -1;
    bool is_point = false;
    Point a, b;  // a == b for points
};

struct StepStats {
    long long contact_points = 0;      // boundary points shared with earlier islands
    long long face_increase = 0;       // change in F* (owned faces + degenerate pieces)
    long long component_change = 0;
    long long faces_equal_new_hull = 0;
};

struct Subdivision {
    std::vector<Island> inserted;  // insertion order

    std::vector<Point> verts;
    std::vector<HalfEdge> half;
    std::vector<FaceCycle> cycles;
    std::vector<DegeneratePiece> pieces;
    long long vertex_count = 0;
    long long edge_count = 0;
    long long face_count = 1;  // includes the unbounded face
    long long component_count = 0;
    long long f_star = 0;  // owned bounded faces + degenerate pieces
    StepStats last_step;
};

struct FaceRecord {
    int id = -1;
    ConvexPolygon closure;
    int owner = -1;
    bool degenerate = false;
};

inline Subdivision empty_subdivision() { return Subdivision{}; }

namespace detail {

struct Carrier {
    // boundary segments of one island's hull; empty for point islands
    std::vector<std::pair<Point, Point>> segments;
    std::optional<Point> isolated;  // point island
};

inline Carrier carrier_of(const Island& island) {
    Carrier c;
    const ConvexPolygon& h = island.hull;
    if (h.is_point()) {
        c.isolated = h.verts[0];
    } else if (h.is_segment()) {
        c.segments.push_back({h.verts[0], h.verts[1]});
    } else {
        for (size_t i = 0; i < h.verts.size(); ++i)
            c.segments.push_back({h.verts[i], h.verts[(i + 1) % h.verts.size()]});
    }
    return c;
}

// exact parameter of p on segment (a,b), using the dominant axis
inline Rat segment_param(const Point& a, const Point& b, const Point& p) {
    if (cmp(a.x, b.x) != 0) return (p.x - a.x) / (b.x - a.x);
    return (p.y - a.y) / (b.y - a.y);
}

inline Point point_on_segment(const Point& a, const Point& b, const Rat& t) {
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
}

struct PointLess {
    bool operator()(const Point& a, const Point& b) const { return xy_less(a, b); }
};

struct SubSegment {
    int island;
    int segment_index;
    Rat t0, t1;
    Point a, b;
};

// clip parametric [0,1] of segment (a,b) to the closed hull; empty when disjoint
inline std::optional<std::pair<Rat, Rat>> clip_param_to_hull(const Point& a, const Point& b,
                                                             const ConvexPolygon& h) {
    if (h.verts.size() < 3) return std::nullopt;  // degenerate hulls have no interior to cover
    Rat lo(0), hi(1);
    size_t n = h.verts.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& e1 = h.verts[i];
        const Point& e2 = h.verts[(i + 1) % n];
        // constraint cross(e2-e1, P(t)-e1) >= 0, linear in t
        Rat c0 = (e2.x - e1.x) * (a.y - e1.y) - (e2.y - e1.y) * (a.x - e1.x);
        Rat c1 = (e2.x - e1.x) * (b.y - a.y) - (e2.y - e1.y) * (b.x - a.x);
        if (sgn(c1) == 0) {
            if (sgn(c0) < 0) return std::nullopt;
            continue;
        }
        Rat bound = -c0 / c1;
        if (sgn(c1) > 0) {
            if (cmp(bound, lo) > 0) lo = bound;
        } else {
            if (cmp(bound, hi) < 0) hi = bound;
        }
        if (cmp(lo, hi) > 0) return std::nullopt;
    }
    return std::make_pair(lo, hi);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline Subdivision build_arrangement(std::vector<Island> islands) {
    Subdivision sub;
    sub.inserted = std::move(islands);
    size_t m = sub.inserted.size();

    std::vector<Carrier> carriers;
    carriers.reserve(m);
    for (const Island& isl : sub.inserted) carriers.push_back(carrier_of(isl));

    // cut parameters per carrier segment, plus which boundaries pass through each contact point
    std::vector<std::vector<std::vector<Rat>>> cuts(m);
    for (size_t i = 0; i < m; ++i) cuts[i].assign(carriers[i].segments.size(), {});
    std::map<Point, std::set<int>, PointLess> through;

    auto note_point = [&](const Point& p, int i, int j) {
        std::set<int>& s = through[p];
        s.insert(i);
        s.insert(j);
    };
    auto add_cut = [&](size_t isl, size_t seg, const Point& p) {
        const auto& [a, b] = carriers[isl].segments[seg];
        Rat t = segment_param(a, b, p);
        if (sgn(t) > 0 && cmp(t, Rat(1)) < 0) cuts[isl][seg].push_back(t);
    };

    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            for (size_t si = 0; si < carriers[i].segments.size(); ++si) {
                const auto& [a, b] = carriers[i].segments[si];
                for (size_t sj = 0; sj < carriers[j].segments.size(); ++sj) {
                    const auto& [c, d] = carriers[j].segments[sj];
                    SegmentIntersection inter = segment_intersection(a, b, c, d);
                    if (inter.kind == SegmentIntersection::Kind::overlap)
                        throw degeneracy_error("non-generic overlap");
                    if (inter.kind != SegmentIntersection::Kind::point) continue;
                    note_point(inter.p, static_cast<int>(i), static_cast<int>(j));
                    add_cut(i, si, inter.p);
                    add_cut(j, sj, inter.p);
                }
            }
            if (carriers[i].isolated) {
                for (size_t sj = 0; sj < carriers[j].segments.size(); ++sj) {
                    const auto& [c, d] = carriers[j].segments[sj];
                    if (on_segment(c, d, *carriers[i].isolated)) {
                        note_point(*carriers[i].isolated, static_cast<int>(i), static_cast<int>(j));
                        add_cut(j, sj, *carriers[i].isolated);
                    }
                }
            }
            if (carriers[j].isolated) {
                for (size_t si = 0; si < carriers[i].segments.size(); ++si) {
                    const auto& [a, b] = carriers[i].segments[si];
                    if (on_segment(a, b, *carriers[j].isolated)) {
                        note_point(*carriers[j].isolated, static_cast<int>(i), static_cast<int>(j));
                        add_cut(i, si, *carriers[j].isolated);
                    }
                }
            }
            if (carriers[i].isolated && carriers[j].isolated && *carriers[i].isolated == *carriers[j].isolated)
                throw degeneracy_error("boundary triple point");
        }
    }
    for (const auto& [p, who] : through)
        if (who.size() >= 3) throw degeneracy_error("boundary triple point");

    // survival: split at cut parameters, drop sub-segments strictly inside later hulls
    std::vector<SubSegment> survivors;
    std::vector<char> point_survives(m, 1);
    for (size_t i = 0; i < m; ++i) {
        if (carriers[i].isolated) {
            for (size_t j = i + 1; j < m; ++j)
                if (point_in_hull(*carriers[i].isolated, sub.inserted[j].hull, Containment::open)) {
                    point_survives[i] = 0;
                    break;
                }
            continue;
        }
        for (size_t si = 0; si < carriers[i].segments.size(); ++si) {
            const auto& [a, b] = carriers[i].segments[si];
            std::vector<Rat> ts = cuts[i][si];
            ts.push_back(Rat(0));
            ts.push_back(Rat(1));
            std::sort(ts.begin(), ts.end(), [](const Rat& u, const Rat& v) { return cmp(u, v) < 0; });
            ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
            for (size_t k = 0; k + 1 < ts.size(); ++k) {
                Rat mid = (ts[k] + ts[k + 1]) / 2;
                Point midpoint = point_on_segment(a, b, mid);
                bool erased = false;
                for (size_t j = i + 1; j < m && !erased; ++j)
                    erased = point_in_hull(midpoint, sub.inserted[j].hull, Containment::open);
                if (erased) continue;
                survivors.push_back(SubSegment{static_cast<int>(i), static_cast<int>(si), ts[k], ts[k + 1],
                                               point_on_segment(a, b, ts[k]), point_on_segment(a, b, ts[k + 1])});
            }
        }
    }

    // vertex table
    std::map<Point, int, PointLess> vid;
    auto vertex_id = [&](const Point& p) {
        auto it = vid.find(p);
        if (it != vid.end()) return it->second;
        int id = static_cast<int>(sub.verts.size());
        vid.emplace(p, id);
        sub.verts.push_back(p);
        return id;
    };
    for (const SubSegment& s : survivors) {
        vertex_id(s.a);
        vertex_id(s.b);
    }
    for (size_t i = 0; i < m; ++i)
        if (carriers[i].isolated && point_survives[i]) vertex_id(*carriers[i].isolated);

    // half edges: 2k and 2k+1 are twins
    for (const SubSegment& s : survivors) {
        int u = vid[s.a], v = vid[s.b];
        int h0 = static_cast<int>(sub.half.size());
        sub.half.push_back(HalfEdge{u, h0 + 1, -1, -1, -1, s.island});
        sub.half.push_back(HalfEdge{v, h0, -1, -1, -1, s.island});
    }

    // rotation order around each vertex
    std::vector<std::vector<int>> outgoing(sub.verts.size());
    for (size_t h = 0; h < sub.half.size(); ++h) outgoing[sub.half[h].origin].push_back(static_cast<int>(h));
    for (size_t v = 0; v < sub.verts.size(); ++v) {
        const Point& o = sub.verts[v];
        std::sort(outgoing[v].begin(), outgoing[v].end(), [&](int ha, int hb) {
            const Point& pa = sub.verts[sub.half[sub.half[ha].twin].origin];
            const Point& pb = sub.verts[sub.half[sub.half[hb].twin].origin];
            if (pa == pb) return ha < hb;
            return direction_less(o, pa, pb);
        });
    }
    // next(h): clockwise successor of twin(h) around the head of h
    for (size_t h = 0; h < sub.half.size(); ++h) {
        int t = sub.half[h].twin;
        int head = sub.half[t].origin;
        const std::vector<int>& ring = outgoing[head];
        size_t idx = std::find(ring.begin(), ring.end(), t) - ring.begin();
        int nxt = ring[(idx + ring.size() - 1) % ring.size()];
        sub.half[h].next = nxt;
        sub.half[nxt].prev = static_cast<int>(h);
    }

    // face cycles
    std::vector<char> seen(sub.half.size(), 0);
    for (size_t h0 = 0; h0 < sub.half.size(); ++h0) {
        if (seen[h0]) continue;
        FaceCycle cyc;
        int h = static_cast<int>(h0);
        Rat area(0);
        do {
            seen[h] = 1;
            cyc.half_edges.push_back(h);
            const Point& p = sub.verts[sub.half[h].origin];
            const Point& q = sub.verts[sub.half[sub.half[h].twin].origin];
            area += p.x * q.y - q.x * p.y;
            h = sub.half[h].next;
        } while (h != static_cast<int>(h0));
        cyc.bounded = sgn(area) > 0;
        int id = static_cast<int>(sub.cycles.size());
        for (int he : cyc.half_edges) sub.half[he].face = id;
        if (cyc.bounded) {
            std::vector<Point> pts;
            for (int he : cyc.half_edges) pts.push_back(sub.verts[sub.half[he].origin]);
            cyc.closure = convex_hull(pts);
            for (size_t j = m; j-- > 0;) {
                bool inside = true;
                for (const Point& p : cyc.closure.verts)
                    inside = inside && point_in_hull(p, sub.inserted[j].hull, Containment::closed);
                if (inside) {
                    cyc.owner = static_cast<int>(j);
                    break;
                }
            }
        }
        sub.cycles.push_back(std::move(cyc));
    }

    // degenerate pieces: maximal runs of a segment island, cut only by later boundaries
    for (size_t i = 0; i < m; ++i) {
        if (carriers[i].isolated) {
            if (point_survives[i])
                sub.pieces.push_back(DegeneratePiece{static_cast<int>(i), true, *carriers[i].isolated,
                                                     *carriers[i].isolated});
            continue;
        }
        if (!sub.inserted[i].hull.is_segment()) continue;
        std::vector<const SubSegment*> mine;
        for (const SubSegment& s : survivors)
            if (s.island == static_cast<int>(i)) mine.push_back(&s);
        std::sort(mine.begin(), mine.end(),
                  [](const SubSegment* a, const SubSegment* b) { return cmp(a->t0, b->t0) < 0; });
        size_t k = 0;
        while (k < mine.size()) {
            size_t e = k;
            while (e + 1 < mine.size()) {
                if (cmp(mine[e]->t1, mine[e + 1]->t0) != 0) break;  // gap: erased portion
                auto it = through.find(mine[e]->b);
                bool cut_here = false;
                if (it != through.end())
                    for (int other : it->second)
                        if (other > static_cast<int>(i)) cut_here = true;
                if (cut_here) break;
                ++e;
            }
            sub.pieces.push_back(
                DegeneratePiece{static_cast<int>(i), false, mine[k]->a, mine[e]->b});
            k = e + 1;
        }
    }

    // counts
    sub.vertex_count = static_cast<long long>(sub.verts.size());
    sub.edge_count = static_cast<long long>(sub.half.size() / 2);
    long long bounded = 0;
    for (const FaceCycle& c : sub.cycles) bounded += c.bounded ? 1 : 0;
    sub.face_count = bounded + 1;
    UnionFind uf(sub.verts.size());
    for (size_t h = 0; h < sub.half.size(); h += 2)
        uf.unite(sub.half[h].origin, sub.half[h + 1].origin);
    std::set<int> roots;
    for (size_t v = 0; v < sub.verts.size(); ++v) roots.insert(uf.find(static_cast<int>(v)));
    sub.component_count = static_cast<long long>(roots.size());
    long long owned = 0;
    for (const FaceCycle& c : sub.cycles) owned += (c.bounded && c.owner >= 0) ? 1 : 0;
    sub.f_star = owned + static_cast<long long>(sub.pieces.size());
    return sub;
}

inline long long count_contacts_with_new(const Subdivision& sub) {
    // contact points between the newest boundary and all earlier ones
    if (sub.inserted.empty()) return 0;
    int last = static_cast<int>(sub.inserted.size()) - 1;
    Carrier cl = carrier_of(sub.inserted[last]);
    std::set<std::pair<std::string, std::string>> pts;
    for (int j = 0; j < last; ++j) {
        Carrier cj = carrier_of(sub.inserted[j]);
        auto record = [&pts](const Point& p) { pts.insert({format_rat(p.x), format_rat(p.y)}); };
        for (const auto& [a, b] : cl.segments)
            for (const auto& [c, d] : cj.segments) {
                SegmentIntersection si = segment_intersection(a, b, c, d);
                if (si.kind == SegmentIntersection::Kind::point) record(si.p);
            }
        if (cl.isolated)
            for (const auto& [c, d] : cj.segments)
                if (on_segment(c, d, *cl.isolated)) record(*cl.isolated);
        if (cj.isolated)
            for (const auto& [a, b] : cl.segments)
                if (on_segment(a, b, *cj.isolated)) record(*cj.isolated);
    }
    return static_cast<long long>(pts.size());
}

}  // namespace detail

inline std::vector<FaceRecord> faces(const Subdivision& sub) {
    std::vector<FaceRecord> out;
    for (size_t i = 0; i < sub.cycles.size(); ++i) {
        const FaceCycle& c = sub.cycles[i];
        if (!c.bounded || c.owner < 0) continue;
        out.push_back(FaceRecord{static_cast<int>(i), c.closure, c.owner, false});
    }
    int next_id = static_cast<int>(sub.cycles.size());
    for (const DegeneratePiece& p : sub.pieces) {
        FaceRecord rec;
        rec.id = next_id++;
        rec.owner = p.owner;
        rec.degenerate = true;
        rec.closure = p.is_point ? ConvexPolygon{{p.a}} : convex_hull({p.a, p.b});
        out.push_back(rec);
    }
    return out;
}

inline bool polygons_equal(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.verts.size() != b.verts.size()) return false;
    for (size_t i = 0; i < a.verts.size(); ++i)
        if (!(a.verts[i] == b.verts[i])) return false;
    return true;
}

// Inserts one island under the bold rule. When opt_bound is given, the growth
// of owned faces and pieces is checked against 2 * opt_bound * (i - 1), with a
// credit for newly created components (a disjoint insertion is one new face).
inline Subdivision bold_augment(const Subdivision& sub, const Island& island,
                                std::optional<long long> opt_bound = std::nullopt) {
    std::vector<Island> next_islands = sub.inserted;
    next_islands.push_back(island);
    Subdivision next = detail::build_arrangement(std::move(next_islands));

    StepStats stats;
    stats.contact_points = detail::count_contacts_with_new(next);
    stats.face_increase = next.f_star - sub.f_star;
    stats.component_change = next.component_count - sub.component_count;
    ConvexPolygon target = island.hull;
    for (const FaceRecord& rec : faces(next))
        if (rec.owner == static_cast<int>(next.inserted.size()) - 1 && polygons_equal(rec.closure, target))
            ++stats.faces_equal_new_hull;
    next.last_step = stats;

    if (opt_bound) {
        long long i = static_cast<long long>(next.inserted.size());
        long long limit = 2 * *opt_bound * (i - 1) + std::max<long long>(stats.component_change, 0);
        if (stats.face_increase > limit) throw validation_error("face increase exceeds bound");
    }
    return next;
}

// Structural and geometric validation: half-edge integrity, the
// component-aware Euler identity, convexity of bounded faces, and exact
// coverage of every inserted hull by bounded features.
inline Report validate(const Subdivision& sub) {
    size_t H = sub.half.size();
    for (size_t h = 0; h < H; ++h) {
        const HalfEdge& e = sub.half[h];
        if (e.twin < 0 || e.twin >= static_cast<int>(H) || sub.half[e.twin].twin != static_cast<int>(h) ||
            e.twin == static_cast<int>(h))
            return Report::fail("twin involution");
        if (e.next < 0 || e.next >= static_cast<int>(H) || sub.half[e.next].prev != static_cast<int>(h))
            return Report::fail("next/prev inverse");
        if (sub.half[e.next].origin != sub.half[e.twin].origin) return Report::fail("next origin mismatch");
    }
    long long bounded = 0;
    for (const FaceCycle& c : sub.cycles) bounded += c.bounded ? 1 : 0;
    if (sub.face_count != bounded + 1) return Report::fail("face count mismatch");
    if (sub.vertex_count - sub.edge_count + sub.face_count != 1 + sub.component_count)
        return Report::fail("euler identity");

    for (const FaceCycle& c : sub.cycles) {
        if (!c.bounded) continue;
        size_t k = c.half_edges.size();
        for (size_t i = 0; i < k; ++i) {
            const Point& a = sub.verts[sub.half[c.half_edges[i]].origin];
            const Point& b = sub.verts[sub.half[c.half_edges[(i + 1) % k]].origin];
            const Point& d = sub.verts[sub.half[c.half_edges[(i + 2) % k]].origin];
            if (orientation(a, b, d) == Orient::cw) return Report::fail("non-convex face");
        }
    }

    // every hull is exactly covered by bounded features
    for (size_t j = 0; j < sub.inserted.size(); ++j) {
        const ConvexPolygon& hull = sub.inserted[j].hull;
        if (hull.is_point()) {
            bool covered = false;
            for (size_t k = j + 1; k < sub.inserted.size() && !covered; ++k)
                covered = point_in_hull(hull.verts[0], sub.inserted[k].hull, Containment::closed);
            if (!covered) {
                bool present = false;
                for (const Point& v : sub.verts) present = present || v == hull.verts[0];
                if (!present) return Report::fail("coverage: missing point island " + std::to_string(j));
            }
            continue;
        }
        if (hull.is_segment()) {
            const Point& a = hull.verts[0];
            const Point& b = hull.verts[1];
            std::vector<std::pair<Rat, Rat>> intervals;
            for (const DegeneratePiece& p : sub.pieces) {
                if (p.owner != static_cast<int>(j) || p.is_point) continue;
                Rat t0 = detail::segment_param(a, b, p.a);
                Rat t1 = detail::segment_param(a, b, p.b);
                if (cmp(t0, t1) > 0) std::swap(t0, t1);
                intervals.push_back({t0, t1});
            }
            for (size_t k = j + 1; k < sub.inserted.size(); ++k) {
                auto clip = detail::clip_param_to_hull(a, b, sub.inserted[k].hull);
                if (clip) intervals.push_back(*clip);
            }
            std::sort(intervals.begin(), intervals.end(),
                      [](const auto& u, const auto& v) { return cmp(u.first, v.first) < 0; });
            Rat reach(0);
            for (const auto& [lo, hi] : intervals) {
                if (cmp(lo, reach) > 0) return Report::fail("coverage gap on segment island " + std::to_string(j));
                if (cmp(hi, reach) > 0) reach = hi;
            }
            if (cmp(reach, Rat(1)) < 0) return Report::fail("coverage gap on segment island " + std::to_string(j));
            continue;
        }
        Rat want = area2(hull);
        Rat got(0);
        for (const FaceCycle& c : sub.cycles) {
            if (!c.bounded || c.owner < 0) continue;
            std::vector<Point> poly;
            for (int he : c.half_edges) poly.push_back(sub.verts[sub.half[he].origin]);
            got += intersection_area2(poly, hull);
        }
        if (!(got == want)) return Report::fail("coverage area mismatch on island " + std::to_string(j));
    }
    return Report::ok();
}

// Deterministic text listing of the structure, for golden tests.
inline std::string debug_dump(const Subdivision& sub) {
    std::ostringstream os;
    os << "subdivision islands=" << sub.inserted.size() << " V=" << sub.vertex_count << " E=" << sub.edge_count
       << " F=" << sub.face_count << " C=" << sub.component_count << " F*=" << sub.f_star << "\n";
    for (size_t v = 0; v < sub.verts.size(); ++v)
        os << "vertex " << v << " " << format_rat(sub.verts[v].x) << " " << format_rat(sub.verts[v].y) << "\n";
    for (size_t h = 0; h < sub.half.size(); ++h) {
        const HalfEdge& e = sub.half[h];
        os << "halfedge " << h << " origin=" << e.origin << " twin=" << e.twin << " next=" << e.next
           << " prev=" << e.prev << " face=" << e.face << " island=" << e.island << "\n";
    }
    for (size_t c = 0; c < sub.cycles.size(); ++c) {
        os << "face " << c << (sub.cycles[c].bounded ? " bounded" : " outer") << " owner=" << sub.cycles[c].owner
           << " edges=";
        for (int he : sub.cycles[c].half_edges) os << he << ",";
        os << "\n";
    }
    for (const DegeneratePiece& p : sub.pieces)
        os << "piece owner=" << p.owner << (p.is_point ? " point " : " segment ") << format_rat(p.a.x) << ","
           << format_rat(p.a.y) << " " << format_rat(p.b.x) << "," << format_rat(p.b.y) << "\n";
    return os.str();
}

}  // namespace islands

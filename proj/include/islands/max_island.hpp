#pragma once

#include <climits>
#include <optional>
#include <vector>

#include "islands/island.hpp"

namespace islands {

// Lexicographic objective: maximize primary sum, then minimize secondary sum.
struct Weight {
    long long primary = 0;
    long long secondary = 0;
    Weight operator+(const Weight& o) const { return {primary + o.primary, secondary + o.secondary}; }
    Weight& operator+=(const Weight& o) {
        primary += o.primary;
        secondary += o.secondary;
        return *this;
    }
    bool operator==(const Weight& o) const { return primary == o.primary && secondary == o.secondary; }
};

inline bool weight_better(const Weight& a, const Weight& b) {
    if (a.primary != b.primary) return a.primary > b.primary;
    return a.secondary < b.secondary;
}

struct WeightSpec {
    std::vector<long long> primary;    // per point index
    std::vector<long long> secondary;  // per point index, minimized
    int color = 0;
    std::vector<ConvexPolygon> forbidden;
};

namespace detail {

// One island candidate produced for a root: objective value plus members.
struct RootResult {
    bool found = false;
    Weight val;
    std::vector<int> members;
};

inline bool candidate_better(const Weight& w, const std::vector<int>& m,
                             const Weight& bw, const std::vector<int>& bm) {
    if (!(w == bw)) return weight_better(w, bw);
    return members_lex_less(m, bm);
}

}  // namespace detail

// Weighted search for the best island of one color. Chains of hull edges are
// grown counterclockwise around each root (the (y,x)-minimal member); every
// fan triangle is checked against blockers and forbidden regions, so any
// produced chain is an island. Results per root are cached across calls:
// weights only ever decrease and constraints only tighten during the greedy
// loops, so an undisturbed cached optimum stays exact and a disturbed one is
// still a valid upper bound.
class MaxIslandEngine {
  public:
    MaxIslandEngine(const Instance& inst, int color) : inst_(inst), color_(color) {
        size_t n = inst.size();
        weights_.assign(n, Weight{});
        active_.assign(n, 0);
        for (size_t i = 0; i < n; ++i) {
            if (inst.colors[i] == color) {
                same_color_.push_back(static_cast<int>(i));
                active_[i] = 1;
            } else {
                blockers_.push_back(static_cast<int>(i));
            }
        }
        caches_.assign(n, RootCache{});
        pos_.assign(n, -1);
    }

    void set_weight(int id, Weight w) {
        weights_[id] = w;
        mark_member_dirty(id);
    }

    void set_all_weights(Weight w) {
        for (int id : same_color_)
            if (active_[id]) weights_[id] = w;
        for (auto& c : caches_) demote(c);
    }

    void deactivate(int id) {
        active_[id] = 0;
        caches_[id] = RootCache{};
        mark_member_dirty(id);
    }

    void add_region(const ConvexPolygon& region) {
        regions_.push_back(region);
        region_boxes_.push_back(bbox_of(region));
        for (int id : same_color_) {
            RootCache& c = caches_[id];
            if (!c.has) continue;
            if (bbox_of(c.hull).overlaps(region_boxes_.back()) && hulls_intersect(c.hull, region)) demote(c);
        }
    }

    long long active_positive_primary() const {
        long long s = 0;
        for (int id : same_color_)
            if (active_[id] && weights_[id].primary > 0) s += weights_[id].primary;
        return s;
    }

    bool has_active() const {
        for (int id : same_color_)
            if (active_[id]) return true;
        return false;
    }

    // Best island over all roots, or nullopt when no candidate point is active.
    std::optional<Island> best() {
        build_rings();
        std::vector<int> roots;
        for (int id : same_color_)
            if (active_[id]) roots.push_back(id);
        if (roots.empty()) return std::nullopt;

        std::sort(roots.begin(), roots.end(), [&](int a, int b) {
            const RootCache& ca = caches_[a];
            const RootCache& cb = caches_[b];
            bool ua = !ca.has || !ca.ub_known;
            bool ub = !cb.has || !cb.ub_known;
            if (ua != ub) return ua;  // unknown bound = treat as +inf
            if (!ua && !(ca.ub == cb.ub)) return weight_better(ca.ub, cb.ub);
            return yx_less(inst_.pts[a], inst_.pts[b]);
        });

        // positive-primary suffix over the (y,x) order, for whole-root pruning
        std::vector<int> yx_order = roots;
        std::sort(yx_order.begin(), yx_order.end(),
                  [&](int a, int b) { return yx_less(inst_.pts[a], inst_.pts[b]); });
        std::vector<long long> yx_suffix(yx_order.size() + 1, 0);
        std::vector<int> yx_rank(inst_.size(), 0);
        for (size_t i = yx_order.size(); i-- > 0;) {
            long long w = weights_[yx_order[i]].primary;
            yx_suffix[i] = yx_suffix[i + 1] + (w > 0 ? w : 0);
            yx_rank[yx_order[i]] = static_cast<int>(i);
        }

        bool have_best = false;
        Weight best_w;
        std::vector<int> best_members;
        for (int r : roots) {
            RootCache& c = caches_[r];
            if (have_best && c.has && c.ub_known && weight_better(best_w, c.ub)) break;
            if (c.has && c.exact) {
                if (!have_best || detail::candidate_better(c.val, c.members, best_w, best_members)) {
                    have_best = true;
                    best_w = c.val;
                    best_members = c.members;
                }
                continue;
            }
            long long threshold = have_best ? best_w.primary : LLONG_MIN;
            int rank = yx_rank[r];
            long long root_ub = weights_[r].primary + yx_suffix[rank] -
                                (weights_[r].primary > 0 ? weights_[r].primary : 0);
            if (have_best && root_ub < threshold) {
                store_pruned(c, threshold);
                continue;
            }
            detail::RootResult res = solve_root(r, threshold);
            if (res.found && res.val.primary >= threshold) {
                c.has = true;
                c.exact = true;
                c.ub_known = true;
                c.ub = res.val;
                c.val = res.val;
                c.members = res.members;
                c.hull = hull_of(res.members);
                if (!have_best || detail::candidate_better(res.val, res.members, best_w, best_members)) {
                    have_best = true;
                    best_w = res.val;
                    best_members = std::move(res.members);
                }
            } else {
                store_pruned(c, threshold);
            }
        }
        if (!have_best) return std::nullopt;
        return Island::of(inst_, best_members);
    }

    const std::vector<ConvexPolygon>& regions() const { return regions_; }

  private:
    struct RootCache {
        bool has = false;
        bool exact = false;    // val/members are the true optimum for this root
        bool ub_known = false; // ub is a finite upper bound (else unbounded)
        Weight ub;
        Weight val;
        std::vector<int> members;
        ConvexPolygon hull;
    };

    struct Entry {
        int id = -1;
        const Point* pt = nullptr;
        int ray = 0;
        bool candidate = false;
        bool ray_blocked = false;  // blocker strictly nearer on this ray
        bool start_ok = false;     // (root, pt) is a feasible first hull edge
        Weight w;
        Weight ray_w0;  // weight of candidate points strictly nearer on this ray
    };

    struct State {
        int u_entry;  // predecessor vertex entry, -1 for the root
        int v_entry;
        Weight val;
        int back;
    };

    void demote(RootCache& c) {
        if (!c.has) return;
        if (c.exact) {
            c.ub = c.val;
            c.ub_known = true;
        }
        c.exact = false;
    }

    void store_pruned(RootCache& c, long long threshold) {
        // nothing at this root reaches the threshold; remember that as a bound
        c.has = true;
        c.exact = false;
        if (threshold == LLONG_MIN) return;
        Weight bound{threshold - 1, LLONG_MIN};
        if (!c.ub_known || weight_better(c.ub, bound)) {
            c.ub = bound;
            c.ub_known = true;
        }
        c.members.clear();
        c.hull = ConvexPolygon{};
    }

    void mark_member_dirty(int id) {
        for (int rid : same_color_) {
            RootCache& c = caches_[rid];
            if (!c.has || !c.exact) continue;
            if (std::binary_search(c.members.begin(), c.members.end(), id)) demote(c);
        }
    }

    ConvexPolygon hull_of(const std::vector<int>& members) const {
        std::vector<Point> pts;
        pts.reserve(members.size());
        for (int i : members) pts.push_back(inst_.pts[i]);
        return convex_hull(std::move(pts));
    }

    void build_rings() {
        if (rings_built_) return;
        rings_built_ = true;
        rings_.assign(inst_.size(), {});
        for (int u : same_color_) {
            std::vector<int>& ring = rings_[u];
            ring.reserve(same_color_.size() - 1);
            for (int w : same_color_)
                if (w != u) ring.push_back(w);
            const Point& up = inst_.pts[u];
            std::sort(ring.begin(), ring.end(), [&](int a, int b) {
                return direction_less(up, inst_.pts[a], inst_.pts[b]);
            });
        }
    }

    bool segment_hits_regions(const Point& a, const Point& b) const {
        if (regions_.empty()) return false;
        BBox box = bbox_of_points({a, b});
        for (size_t i = 0; i < regions_.size(); ++i) {
            if (!box.overlaps(region_boxes_[i])) continue;
            if (detail_region_hit_segment(a, b, regions_[i])) return true;
        }
        return false;
    }

    static bool detail_region_hit_segment(const Point& a, const Point& b, const ConvexPolygon& region) {
        ConvexPolygon seg = a == b ? ConvexPolygon{{a}} : ConvexPolygon{{a, b}};
        return hulls_intersect(seg, region);
    }

    bool triangle_hits_regions(const Point& a, const Point& b, const Point& c) const {
        if (regions_.empty()) return false;
        BBox box = bbox_of_points({a, b, c});
        bool any = false;
        for (size_t i = 0; i < regions_.size(); ++i)
            if (box.overlaps(region_boxes_[i])) {
                any = true;
                break;
            }
        if (!any) return false;
        ConvexPolygon tri{{a, b, c}};  // CCW by construction of chains
        for (size_t i = 0; i < regions_.size(); ++i) {
            if (!box.overlaps(region_boxes_[i])) continue;
            if (hulls_intersect(tri, regions_[i])) return true;
        }
        return false;
    }

    detail::RootResult solve_root(int root, long long threshold) {
        const Point& rp = inst_.pts[root];
        for (const ConvexPolygon& region : regions_)
            if (point_in_hull(rp, region, Containment::closed)) return {};

        // gather entries strictly (y,x)-after the root
        std::vector<Entry> S;
        S.reserve(same_color_.size() + blockers_.size());
        for (int id : same_color_) {
            if (!active_[id] || id == root) continue;
            if (!yx_less(rp, inst_.pts[id])) continue;
            Entry e;
            e.id = id;
            e.pt = &inst_.pts[id];
            e.candidate = true;
            e.w = weights_[id];
            S.push_back(e);
        }
        for (int id : blockers_) {
            if (!yx_less(rp, inst_.pts[id])) continue;
            Entry e;
            e.id = id;
            e.pt = &inst_.pts[id];
            e.candidate = false;
            S.push_back(e);
        }

        std::sort(S.begin(), S.end(), [&](const Entry& a, const Entry& b) {
            bool za = cmp(a.pt->y, rp.y) == 0;
            bool zb = cmp(b.pt->y, rp.y) == 0;
            if (za != zb) return za;
            if (!za) {
                Orient o = orientation(rp, *a.pt, *b.pt);
                if (o != Orient::collinear) return o == Orient::ccw;
            }
            // same ray: nearer first
            if (cmp(a.pt->y, b.pt->y) != 0) return cmp(a.pt->y, b.pt->y) < 0;
            return cmp(a.pt->x, b.pt->x) < 0;
        });

        detail::RootResult best;
        best.found = true;
        best.val = weights_[root];
        best.members = {root};

        // ray bookkeeping, segment islands, start-edge feasibility
        std::vector<int> ray_start;
        {
            size_t i = 0;
            int ray = -1;
            while (i < S.size()) {
                size_t j = i;
                bool zero = cmp(S[i].pt->y, rp.y) == 0;
                while (j + 1 < S.size()) {
                    const Entry& nx = S[j + 1];
                    bool nz = cmp(nx.pt->y, rp.y) == 0;
                    if (zero != nz) break;
                    if (!zero && orientation(rp, *S[i].pt, *nx.pt) != Orient::collinear) break;
                    ++j;
                }
                ++ray;
                ray_start.push_back(static_cast<int>(i));
                Weight w0{};
                bool blocked = false;
                bool region_blocked = false;
                std::vector<int> prefix;
                Weight seg_val = weights_[root];
                for (size_t k = i; k <= j; ++k) {
                    Entry& e = S[k];
                    e.ray = ray;
                    e.ray_blocked = blocked;
                    e.ray_w0 = w0;
                    if (!e.candidate) {
                        blocked = true;
                        continue;
                    }
                    if (!blocked && !region_blocked) {
                        region_blocked = segment_hits_regions(rp, *e.pt);
                        if (!region_blocked) {
                            e.start_ok = true;
                            prefix.push_back(e.id);
                            seg_val += e.w;
                            std::vector<int> members{root};
                            members.insert(members.end(), prefix.begin(), prefix.end());
                            std::sort(members.begin(), members.end());
                            if (detail::candidate_better(seg_val, members, best.val, best.members)) {
                                best.val = seg_val;
                                best.members = std::move(members);
                            }
                        }
                    }
                    w0 += e.w;
                }
                i = j + 1;
            }
            ray_start.push_back(static_cast<int>(S.size()));
        }

        // suffix of positive primaries over candidate entries
        std::vector<long long> suffix(S.size() + 1, 0);
        for (size_t i = S.size(); i-- > 0;)
            suffix[i] = suffix[i + 1] + (S[i].candidate && S[i].w.primary > 0 ? S[i].w.primary : 0);

        for (int id = 0; id < static_cast<int>(S.size()); ++id) pos_[S[id].id] = id;

        std::vector<State> arena;
        std::vector<std::vector<int>> incoming(S.size());
        int best_state = -1;
        Weight best_state_val;

        for (size_t vi = 0; vi < S.size(); ++vi) {
            Entry& ve = S[vi];
            if (!ve.candidate) continue;
            const Point& vp = *ve.pt;

            if (ve.start_ok) {
                Weight val = weights_[root] + ve.w + ve.ray_w0;
                arena.push_back(State{-1, static_cast<int>(vi), val, -1});
                incoming[vi].push_back(static_cast<int>(arena.size()) - 1);
            }
            if (incoming[vi].empty()) continue;

            // sort incoming states by direction of arrival (relative to dir(root->v))
            std::vector<int>& inc = incoming[vi];
            std::sort(inc.begin(), inc.end(), [&](int sa, int sb) {
                int ua = arena[sa].u_entry, ub = arena[sb].u_entry;
                if (ua == ub) return sa < sb;
                if (ua == -1) return true;  // the root direction is the axis itself
                if (ub == -1) return false;
                const Point& pa = *S[ua].pt;
                const Point& pb = *S[ub].pt;
                Orient o = cross_sign(pa, vp, pb, vp);
                if (o != Orient::collinear) return o == Orient::ccw;
                return sa < sb;
            });

            Weight max_in = arena[inc[0]].val;
            for (int s : inc)
                if (weight_better(arena[s].val, max_in)) max_in = arena[s].val;
            int next_ray_pos = ray_start[ve.ray + 1];
            if (threshold != LLONG_MIN && max_in.primary + suffix[next_ray_pos] < threshold) continue;

            const std::vector<int>& ring = rings_[ve.id];
            if (ring.empty()) continue;
            // first ring direction strictly ccw-after dir(root->v)
            Point axis_key(vp.x + (vp.x - rp.x), vp.y + (vp.y - rp.y));
            size_t start = std::upper_bound(ring.begin(), ring.end(), axis_key,
                                            [&](const Point& key, int w) {
                                                return direction_less(vp, key, inst_.pts[w]);
                                            }) -
                           ring.begin();

            size_t ptr = 0;
            bool have_pred = false;
            Weight run_val;
            int run_state = -1;

            for (size_t step = 0; step < ring.size(); ++step) {
                int wid = ring[(start + step) % ring.size()];
                const Point& wp = inst_.pts[wid];
                // admissible outgoing directions form one contiguous arc from `start`
                if (orientation(rp, vp, wp) != Orient::ccw) break;
                int wpos = pos_[wid];
                if (wpos < 0) continue;
                Entry& we = S[wpos];

                while (ptr < inc.size()) {
                    int s = inc[ptr];
                    int ue = arena[s].u_entry;
                    const Point& upt = ue == -1 ? rp : *S[ue].pt;
                    if (orientation(upt, vp, wp) != Orient::ccw) break;
                    if (!have_pred || weight_better(arena[s].val, run_val)) {
                        run_val = arena[s].val;
                        run_state = s;
                        have_pred = true;
                    }
                    ++ptr;
                }
                if (!have_pred) continue;
                if (threshold != LLONG_MIN && run_val.primary + suffix[next_ray_pos] < threshold) continue;
                if (we.ray_blocked) continue;

                // fan triangle (root, v, w): members and blockers strictly between the rays
                bool feasible = true;
                Weight tri = we.w + we.ray_w0;
                for (int q = static_cast<int>(ray_start[ve.ray + 1]); q < ray_start[we.ray]; ++q) {
                    const Entry& qe = S[q];
                    Orient side = orientation(vp, wp, *qe.pt);
                    if (side == Orient::cw) continue;  // beyond the chord, outside the triangle
                    if (!qe.candidate) {               // inside or on the chord
                        feasible = false;
                        break;
                    }
                    tri += qe.w;
                }
                if (!feasible) continue;
                if (triangle_hits_regions(rp, vp, wp)) continue;

                Weight val = run_val + tri;
                arena.push_back(State{static_cast<int>(vi), wpos, val, run_state});
                int sid = static_cast<int>(arena.size()) - 1;
                incoming[wpos].push_back(sid);
                if (orientation(vp, wp, rp) == Orient::ccw) {
                    if (best_state < 0 || weight_better(val, best_state_val)) {
                        best_state = sid;
                        best_state_val = val;
                    }
                }
            }
        }

        if (best_state >= 0 && !weight_better(best.val, best_state_val)) {
            // reconstruct hull chain, then collect all members inside it
            std::vector<int> chain;
            for (int s = best_state; s >= 0; s = arena[s].back) chain.push_back(arena[s].v_entry);
            std::vector<Point> hull_pts{rp};
            for (auto it = chain.rbegin(); it != chain.rend(); ++it) hull_pts.push_back(*S[*it].pt);
            ConvexPolygon hull{std::move(hull_pts)};
            std::vector<int> members{root};
            Weight check = weights_[root];
            for (const Entry& e : S) {
                bool inside = point_in_hull(*e.pt, hull, Containment::closed);
                if (!inside) continue;
                if (!e.candidate) throw validation_error("island search produced a blocked hull");
                members.push_back(e.id);
                check += e.w;
            }
            std::sort(members.begin(), members.end());
            if (!(check == best_state_val)) throw validation_error("island weight accounting mismatch");
            if (detail::candidate_better(best_state_val, members, best.val, best.members)) {
                best.val = best_state_val;
                best.members = std::move(members);
            }
        }

        for (const Entry& e : S) pos_[e.id] = -1;
        return best;
    }

    const Instance& inst_;
    int color_;
    std::vector<Weight> weights_;
    std::vector<char> active_;
    std::vector<int> same_color_;
    std::vector<int> blockers_;
    std::vector<ConvexPolygon> regions_;
    std::vector<BBox> region_boxes_;
    std::vector<RootCache> caches_;
    std::vector<int> pos_;
    std::vector<std::vector<int>> rings_;
    bool rings_built_ = false;
};

// Best island of the required color under the weight spec, hull disjoint from
// every forbidden region. Ties on the objective resolve deterministically
// toward lexicographically smaller member sets.
inline Island max_weight_island(const Instance& inst, const WeightSpec& spec) {
    if (spec.primary.size() != inst.size() || spec.secondary.size() != inst.size())
        throw invalid_input_error("weight vectors must cover every point");
    MaxIslandEngine engine(inst, spec.color);
    for (const ConvexPolygon& region : spec.forbidden) engine.add_region(region);
    for (size_t i = 0; i < inst.size(); ++i) {
        if (inst.colors[i] != spec.color) continue;
        bool excluded = false;
        for (const ConvexPolygon& region : spec.forbidden)
            if (point_in_hull(inst.pts[i], region, Containment::closed)) {
                excluded = true;
                break;
            }
        if (excluded)
            engine.deactivate(static_cast<int>(i));
        else
            engine.set_weight(static_cast<int>(i), Weight{spec.primary[i], spec.secondary[i]});
    }
    std::optional<Island> isl = engine.best();
    if (!isl) throw Error(Error::Code::no_candidate, "no candidate island");
    return *isl;
}

}  // namespace islands

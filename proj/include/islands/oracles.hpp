#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <string>
#include <vector>

#include "islands/island.hpp"
#include "islands/max_island.hpp"

namespace islands {

struct Report {
    bool pass = true;
    std::string violation;  // first failure, empty when pass

    static Report ok() { return {}; }
    static Report fail(std::string why) { return {false, std::move(why)}; }
};

struct Cover {
    std::vector<Island> islands;              // selection order
    std::vector<long long> uncovered_counts;  // |U_i| per step
};

struct Partition {
    std::vector<Island> parts;
};

struct CompatibleFamilies {
    std::vector<std::vector<Island>> families;  // aligned with the source cover
};

namespace detail {

inline Report check_island_list(const Instance& inst, const std::vector<Island>& list) {
    for (size_t i = 0; i < list.size(); ++i) {
        const Island& isl = list[i];
        if (isl.members.empty()) return Report::fail("island " + std::to_string(i) + " is empty");
        for (int id : isl.members)
            if (id < 0 || id >= static_cast<int>(inst.size()))
                return Report::fail("island " + std::to_string(i) + " references an unknown point");
        if (!is_island(isl.members, inst)) {
            int color = inst.colors[isl.members[0]];
            for (int id : isl.members)
                if (inst.colors[id] != color)
                    return Report::fail("island " + std::to_string(i) + " not monochromatic");
            return Report::fail("island " + std::to_string(i) + " violates the island property");
        }
    }
    return Report::ok();
}

}  // namespace detail

// Verifiers re-derive hulls from scratch; they share nothing with the solvers.
inline Report verify_partition(const Instance& inst, const Partition& partition) {
    Report base = detail::check_island_list(inst, partition.parts);
    if (!base.pass) return base;
    std::vector<int> owner(inst.size(), -1);
    for (size_t i = 0; i < partition.parts.size(); ++i)
        for (int id : partition.parts[i].members) {
            if (owner[id] != -1) return Report::fail("point " + std::to_string(id) + " assigned twice");
            owner[id] = static_cast<int>(i);
        }
    for (size_t id = 0; id < inst.size(); ++id)
        if (owner[id] == -1) return Report::fail("not covering: point " + std::to_string(id));
    std::vector<ConvexPolygon> hulls;
    for (const Island& isl : partition.parts) {
        std::vector<Point> pts;
        for (int id : isl.members) pts.push_back(inst.pts[id]);
        hulls.push_back(convex_hull(pts));
    }
    for (size_t i = 0; i < hulls.size(); ++i)
        for (size_t j = i + 1; j < hulls.size(); ++j)
            if (hulls_intersect(hulls[i], hulls[j]))
                return Report::fail("hulls intersect: parts " + std::to_string(i) + "," + std::to_string(j));
    return Report::ok();
}

inline Report verify_cover(const Instance& inst, const Cover& cover) {
    Report base = detail::check_island_list(inst, cover.islands);
    if (!base.pass) return base;
    std::vector<char> covered(inst.size(), 0);
    for (const Island& isl : cover.islands)
        for (int id : isl.members) covered[id] = 1;
    for (size_t id = 0; id < inst.size(); ++id)
        if (!covered[id]) return Report::fail("not covering: point " + std::to_string(id));
    return Report::ok();
}

// The three compatibility conditions: same union, per-family containment,
// pairwise hull-disjointness of all produced islands.
inline Report verify_compatible(const Instance& inst, const Cover& cover, const CompatibleFamilies& fams) {
    if (fams.families.size() != cover.islands.size()) return Report::fail("family count mismatch");
    std::vector<char> in_cover(inst.size(), 0), in_fams(inst.size(), 0);
    for (const Island& isl : cover.islands)
        for (int id : isl.members) in_cover[id] = 1;
    std::vector<const Island*> produced;
    for (size_t i = 0; i < fams.families.size(); ++i) {
        std::vector<char> in_source(inst.size(), 0);
        for (int id : cover.islands[i].members) in_source[id] = 1;
        for (const Island& isl : fams.families[i]) {
            produced.push_back(&isl);
            for (int id : isl.members) {
                if (!in_source[id])
                    return Report::fail("containment: family " + std::to_string(i) + " exceeds its island");
                in_fams[id] = 1;
            }
        }
    }
    for (size_t id = 0; id < inst.size(); ++id)
        if (in_cover[id] != in_fams[id]) return Report::fail("union mismatch at point " + std::to_string(id));
    Report base;
    {
        std::vector<Island> all;
        for (const Island* p : produced) all.push_back(*p);
        base = detail::check_island_list(inst, all);
    }
    if (!base.pass) return base;
    for (size_t i = 0; i < produced.size(); ++i)
        for (size_t j = i + 1; j < produced.size(); ++j) {
            ConvexPolygon hi = convex_hull([&] {
                std::vector<Point> pts;
                for (int id : produced[i]->members) pts.push_back(inst.pts[id]);
                return pts;
            }());
            ConvexPolygon hj = convex_hull([&] {
                std::vector<Point> pts;
                for (int id : produced[j]->members) pts.push_back(inst.pts[id]);
                return pts;
            }());
            if (hulls_intersect(hi, hj)) return Report::fail("produced islands' hulls intersect");
        }
    return Report::ok();
}

constexpr size_t kExactSolverLimit = 14;

struct ExactPartitionResult {
    long long value = 0;
    Partition witness;
};

struct ExactCoverResult {
    long long value = 0;
    Cover witness;
};

namespace detail {

struct ExactSearchContext {
    const Instance& inst;
    std::vector<Island> islands;                  // size desc, then lex
    std::vector<std::vector<int>> containing;     // point -> island ids containing it
    size_t max_island = 1;
};

inline ExactSearchContext build_search_context(const Instance& inst) {
    if (inst.size() > kExactSolverLimit) throw size_limit_error("oracle size limit");
    ExactSearchContext ctx{inst, enumerate_islands(inst), {}, 1};
    ctx.containing.assign(inst.size(), {});
    for (size_t k = 0; k < ctx.islands.size(); ++k) {
        ctx.max_island = std::max(ctx.max_island, ctx.islands[k].members.size());
        for (int id : ctx.islands[k].members) ctx.containing[id].push_back(static_cast<int>(k));
    }
    return ctx;
}

struct PartitionSearch {
    const ExactSearchContext& ctx;
    std::vector<char> assigned;
    std::vector<int> chosen;
    std::vector<int> best;
    size_t best_size;

    explicit PartitionSearch(const ExactSearchContext& c, size_t upper)
        : ctx(c), assigned(c.inst.size(), 0), best_size(upper) {}

    void run(size_t covered) {
        if (covered == ctx.inst.size()) {
            if (chosen.size() < best_size) {
                best_size = chosen.size();
                best = chosen;
            }
            return;
        }
        size_t remaining = ctx.inst.size() - covered;
        size_t lower = chosen.size() + (remaining + ctx.max_island - 1) / ctx.max_island;
        if (lower >= best_size) return;
        int pivot = 0;
        while (assigned[pivot]) ++pivot;
        for (int k : ctx.containing[pivot]) {
            const Island& cand = ctx.islands[k];
            bool ok = true;
            for (int id : cand.members) ok = ok && !assigned[id];
            if (!ok) continue;
            for (int prev : chosen)
                if (hulls_intersect(ctx.islands[prev].hull, cand.hull)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (int id : cand.members) assigned[id] = 1;
            chosen.push_back(k);
            run(covered + cand.members.size());
            chosen.pop_back();
            for (int id : cand.members) assigned[id] = 0;
        }
    }
};

}  // namespace detail

// Minimum-cardinality island partition by branch and bound over the island
// containing the lowest unassigned point.
inline ExactPartitionResult exact_min_partition(const Instance& inst) {
    detail::ExactSearchContext ctx = detail::build_search_context(inst);
    detail::PartitionSearch search(ctx, inst.size() + 1);  // all singletons always work
    search.run(0);
    ExactPartitionResult out;
    out.value = static_cast<long long>(search.best_size);
    for (int k : search.best) out.witness.parts.push_back(ctx.islands[k]);
    return out;
}

// Minimum-cardinality island cover: depth-limited search with memoized masks.
inline ExactCoverResult exact_min_cover(const Instance& inst) {
    detail::ExactSearchContext ctx = detail::build_search_context(inst);
    size_t n = inst.size();
    std::vector<unsigned> masks(ctx.islands.size(), 0);
    for (size_t k = 0; k < ctx.islands.size(); ++k)
        for (int id : ctx.islands[k].members) masks[k] |= 1u << id;
    unsigned full = n == 32 ? ~0u : (1u << n) - 1;

    std::map<unsigned, size_t> seen;
    std::vector<int> chosen, best;
    size_t best_size = n + 1;
    auto dfs = [&](auto&& self, unsigned covered) -> void {
        if (covered == full) {
            if (chosen.size() < best_size) {
                best_size = chosen.size();
                best = chosen;
            }
            return;
        }
        if (chosen.size() + 1 >= best_size) return;
        auto it = seen.find(covered);
        if (it != seen.end() && it->second <= chosen.size()) return;
        seen[covered] = chosen.size();
        int pivot = 0;
        while (covered & (1u << pivot)) ++pivot;
        for (int k : ctx.containing[pivot]) {
            chosen.push_back(k);
            self(self, covered | masks[k]);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
    ExactCoverResult out;
    out.value = static_cast<long long>(best_size);
    for (int k : best) {
        out.witness.islands.push_back(ctx.islands[k]);
        out.witness.uncovered_counts.push_back(0);  // not meaningful for a witness
    }
    return out;
}

struct AlternatingCertificate {
    bool valid = false;
    long long bound = 0;  // k + 1 when valid
};

// 2k points in strictly convex position whose colors alternate along the hull.
inline AlternatingCertificate verify_alternating_certificate(const Instance& inst, const std::vector<int>& indices) {
    AlternatingCertificate out;
    if (indices.size() < 4 || indices.size() % 2 != 0) return out;
    std::vector<int> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return out;
    std::vector<Point> pts;
    for (int id : indices) pts.push_back(inst.pts[id]);
    ConvexPolygon hull = convex_hull(pts);
    if (hull.size() != indices.size()) return out;  // not in strictly convex position
    // colors along the hull's cyclic order must alternate
    std::vector<int> hull_colors;
    for (const Point& v : hull.verts) {
        for (int id : indices)
            if (inst.pts[id] == v) {
                hull_colors.push_back(inst.colors[id]);
                break;
            }
    }
    size_t m = hull_colors.size();
    for (size_t i = 0; i < m; ++i)
        if (hull_colors[i] == hull_colors[(i + 1) % m]) return out;
    out.valid = true;
    out.bound = static_cast<long long>(indices.size() / 2 + 1);
    return out;
}

inline long long max_pairwise_boundary_intersections(const Cover& cover) {
    long long best = 0;
    for (size_t i = 0; i < cover.islands.size(); ++i)
        for (size_t j = i + 1; j < cover.islands.size(); ++j)
            best = std::max(best, static_cast<long long>(boundary_intersection_count(
                                      cover.islands[i].hull, cover.islands[j].hull)));
    return best;
}

// H(n) = 1 + 1/2 + ... + 1/n, exactly.
inline Rat harmonic(size_t n) {
    Rat h(0);
    for (size_t i = 1; i <= n; ++i) h += make_rat(1, static_cast<long>(i));
    return h;
}

}  // namespace islands

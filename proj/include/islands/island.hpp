#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "islands/instance.hpp"

namespace islands {

// A monochromatic subset whose convex hull contains no other input point.
struct Island {
    std::vector<int> members;  // sorted point indices
    ConvexPolygon hull;

    static Island of(const Instance& inst, std::vector<int> members) {
        std::sort(members.begin(), members.end());
        std::vector<Point> pts;
        pts.reserve(members.size());
        for (int i : members) pts.push_back(inst.pts[i]);
        Island isl;
        isl.members = std::move(members);
        isl.hull = convex_hull(std::move(pts));
        return isl;
    }
};

inline bool members_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// CH(members) contains exactly the member points, and all members share one color.
inline bool is_island(const std::vector<int>& members, const Instance& inst) {
    if (members.empty()) throw invalid_input_error("empty member set");
    int color = inst.colors[members[0]];
    for (int i : members)
        if (inst.colors[i] != color) return false;
    std::vector<Point> pts;
    pts.reserve(members.size());
    std::vector<char> in_set(inst.size(), 0);
    for (int i : members) {
        pts.push_back(inst.pts[i]);
        in_set[i] = 1;
    }
    ConvexPolygon hull = convex_hull(pts);
    for (size_t i = 0; i < inst.size(); ++i) {
        if (in_set[i]) continue;
        if (point_in_hull(inst.pts[i], hull, Containment::closed)) return false;
    }
    return true;
}

constexpr size_t kEnumerationLimit = 16;

// Brute-force oracle: every island, deterministically ordered
// (size descending, then lexicographic members).
inline std::vector<Island> enumerate_islands(const Instance& inst,
                                             std::optional<size_t> max_size = std::nullopt) {
    size_t n = inst.size();
    if (n > kEnumerationLimit) throw size_limit_error("oracle size limit");
    std::vector<Island> out;
    std::vector<std::vector<int>> by_color(inst.color_count);
    for (size_t i = 0; i < n; ++i) by_color[inst.colors[i]].push_back(static_cast<int>(i));
    for (const auto& group : by_color) {
        size_t g = group.size();
        if (g == 0) continue;
        for (unsigned long mask = 1; mask < (1ul << g); ++mask) {
            std::vector<int> members;
            for (size_t b = 0; b < g; ++b)
                if (mask & (1ul << b)) members.push_back(group[b]);
            if (max_size && members.size() > *max_size) continue;
            if (is_island(members, inst)) out.push_back(Island::of(inst, members));
        }
    }
    std::sort(out.begin(), out.end(), [](const Island& a, const Island& b) {
        if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
        return members_lex_less(a.members, b.members);
    });
    return out;
}

}  // namespace islands

#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "islands/arrangement.hpp"
#include "islands/max_island.hpp"
#include "islands/oracles.hpp"

namespace islands {

namespace detail {

inline std::vector<std::unique_ptr<MaxIslandEngine>> make_engines(const Instance& inst) {
    std::vector<std::unique_ptr<MaxIslandEngine>> engines;
    for (int c = 0; c < inst.color_count; ++c) engines.push_back(std::make_unique<MaxIslandEngine>(inst, c));
    return engines;
}

}  // namespace detail

// Repeatedly takes the island covering the most uncovered points whose hull is
// disjoint from everything chosen before. Hull disjointness is closed-set:
// touching hulls conflict.
inline Partition disjoint_greedy(const Instance& inst) {
    validate_instance(inst);
    Partition out;
    if (inst.size() == 0) return out;
    auto engines = detail::make_engines(inst);
    std::vector<long long> uncovered(inst.color_count, 0);
    for (size_t i = 0; i < inst.size(); ++i) ++uncovered[inst.colors[i]];
    for (int c = 0; c < inst.color_count; ++c)
        if (uncovered[c] > 0) engines[c]->set_all_weights(Weight{1, 0});

    size_t covered_total = 0;
    while (covered_total < inst.size()) {
        bool have = false;
        Weight best_w;
        Island best;
        int best_color = -1;
        for (int c = 0; c < inst.color_count; ++c) {
            if (uncovered[c] == 0) continue;
            if (have && uncovered[c] < best_w.primary) continue;
            std::optional<Island> isl = engines[c]->best();
            if (!isl) continue;
            Weight w{static_cast<long long>(isl->members.size()), 0};
            if (!have || detail::candidate_better(w, isl->members, best_w, best.members)) {
                have = true;
                best_w = w;
                best = std::move(*isl);
                best_color = c;
            }
        }
        if (!have) throw validation_error("greedy step found no island");  // cannot happen: singletons remain
        for (int c = 0; c < inst.color_count; ++c) engines[c]->add_region(best.hull);
        for (int id : best.members) engines[best_color]->deactivate(id);
        uncovered[best_color] -= static_cast<long long>(best.members.size());
        covered_total += best.members.size();
        out.parts.push_back(std::move(best));
    }
    return out;
}

// Set-cover greedy over islands: maximize newly covered points, break ties by
// covering the fewest already-covered points, then lexicographic members.
inline Cover overlap_greedy(const Instance& inst) {
    validate_instance(inst);
    Cover out;
    if (inst.size() == 0) return out;
    auto engines = detail::make_engines(inst);
    std::vector<long long> uncovered(inst.color_count, 0);
    for (size_t i = 0; i < inst.size(); ++i) ++uncovered[inst.colors[i]];
    for (int c = 0; c < inst.color_count; ++c)
        if (uncovered[c] > 0) engines[c]->set_all_weights(Weight{1, 0});
    std::vector<char> covered(inst.size(), 0);

    size_t covered_total = 0;
    long long prev_gain = -1;
    while (covered_total < inst.size()) {
        bool have = false;
        Weight best_w;
        Island best;
        int best_color = -1;
        for (int c = 0; c < inst.color_count; ++c) {
            if (uncovered[c] == 0) continue;
            if (have && uncovered[c] < best_w.primary) continue;
            std::optional<Island> isl = engines[c]->best();
            if (!isl) continue;
            Weight w{0, 0};
            for (int id : isl->members) w += covered[id] ? Weight{0, 1} : Weight{1, 0};
            if (!have || detail::candidate_better(w, isl->members, best_w, best.members)) {
                have = true;
                best_w = w;
                best = std::move(*isl);
                best_color = c;
            }
        }
        if (!have || best_w.primary <= 0) throw validation_error("greedy step covers nothing");
        if (prev_gain >= 0 && best_w.primary > prev_gain)
            throw validation_error("uncovered gain increased");  // greedy coverage must be non-increasing
        prev_gain = best_w.primary;
        for (int id : best.members) {
            if (!covered[id]) {
                covered[id] = 1;
                --uncovered[best_color];
                ++covered_total;
                engines[best_color]->set_weight(id, Weight{0, 1});
            }
        }
        out.uncovered_counts.push_back(best_w.primary);
        out.islands.push_back(std::move(best));
    }
    return out;
}

// Assigns every point to the distinguished face of the latest island that
// contains it; each face's points form one output island, grouped per source
// island into families.
inline std::pair<Partition, CompatibleFamilies> extract_compatible_partition(const Subdivision& sub,
                                                                             const Cover& cover,
                                                                             const Instance& inst) {
    std::vector<FaceRecord> recs = faces(sub);
    std::vector<std::vector<int>> bucket(recs.size());
    for (size_t id = 0; id < inst.size(); ++id) {
        int latest = -1;
        for (size_t k = 0; k < cover.islands.size(); ++k)
            for (int m : cover.islands[k].members)
                if (m == static_cast<int>(id)) latest = static_cast<int>(k);
        if (latest < 0) throw validation_error("coverage hole");
        bool placed = false;
        for (size_t r = 0; r < recs.size() && !placed; ++r) {
            if (recs[r].owner != latest) continue;
            if (point_in_hull(inst.pts[id], recs[r].closure, Containment::closed)) {
                bucket[r].push_back(static_cast<int>(id));
                placed = true;
            }
        }
        if (!placed) throw validation_error("coverage hole");
    }
    Partition partition;
    CompatibleFamilies fams;
    fams.families.assign(cover.islands.size(), {});
    for (size_t r = 0; r < recs.size(); ++r) {
        if (bucket[r].empty()) continue;
        Island part = Island::of(inst, bucket[r]);
        fams.families[recs[r].owner].push_back(part);
        partition.parts.push_back(std::move(part));
    }
    return {std::move(partition), std::move(fams)};
}

struct BoldResult {
    Cover cover;
    Subdivision arrangement;
    Partition partition;
    CompatibleFamilies families;
    std::vector<StepStats> steps;
};

// overlap-greedy, then bold augmentation in selection order, then extraction
inline BoldResult bold_overlap_greedy(const Instance& inst,
                                      std::optional<long long> opt_partition = std::nullopt) {
    BoldResult out;
    out.cover = overlap_greedy(inst);
    out.arrangement = empty_subdivision();
    for (const Island& isl : out.cover.islands) {
        out.arrangement = bold_augment(out.arrangement, isl, opt_partition);
        out.steps.push_back(out.arrangement.last_step);
    }
    auto [partition, fams] = extract_compatible_partition(out.arrangement, out.cover, inst);
    out.partition = std::move(partition);
    out.families = std::move(fams);
    return out;
}

}  // namespace islands

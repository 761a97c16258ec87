#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "islands/oracles.hpp"

namespace islands {

struct GeneratedInstance {
    Instance instance;
    std::optional<Partition> witness_partition;
    std::optional<Cover> witness_cover;
    std::vector<std::vector<int>> special_islands;  // e.g. the forced vertical pair islands
    std::map<std::string, std::string> metadata;
};

struct FlatTreeParams {
    long height = 2;       // >= 1
    Rat eps;               // square width
    Rat delta;             // ball diameter, 0 < delta < eps
    long red_base = 64;    // cluster size at height 0 doubles per level
    unsigned tangent_precision = 48;  // rounding grid exponent for tangent points

    static FlatTreeParams defaults(long height, long red_base = 64) {
        FlatTreeParams p;
        p.height = height;
        p.eps = pow2(-height - 4);
        p.delta = p.eps / 4;
        p.red_base = red_base;
        return p;
    }
};

namespace detail {

struct TangentPoint {
    Point p;
    bool keep = true;
};

// Crossing of one outer common tangent (equal radii) of the balls at c1, c2
// with the boundary of the eps-square around c1, taken nearest to c2. The
// point is rounded outward from the square center on the tangent-precision
// grid. Crossings whose free coordinate lies strictly within the delta/2 band
// around the square's center line are discarded: such a point would sit inside
// the hull of a vertically or horizontally opposed cluster pair.
inline std::vector<Point> tangent_blues(const Point& c1, const Point& c2, const Rat& eps, const Rat& delta,
                                        unsigned precision) {
    std::vector<Point> out;
    Rat dx = c2.x - c1.x;
    Rat dy = c2.y - c1.y;
    Rat half = eps / 2;
    Rat band = delta / 2;

    if (sgn(dx) == 0 || sgn(dy) == 0) {
        // axis-aligned neighbor: tangents are exact axis-parallel lines
        for (int t : {1, -1}) {
            Point p = sgn(dx) == 0
                          ? Point(c1.x + Rat(t) * band, c1.y + Rat(sgn(dy)) * half)
                          : Point(c1.x + Rat(sgn(dx)) * half, c1.y + Rat(t) * band);
            out.push_back(p);  // offset is exactly band: on the guard boundary, kept
        }
        return out;
    }

    Rat q = dx * dx + dy * dy;
    auto [slo, shi] = sqrt_bounds(q, precision + 24);
    for (int t : {1, -1}) {
        Rat r1 = Rat(t) * (delta / 2) * slo;
        Rat r2 = Rat(t) * (delta / 2) * shi;
        if (cmp(r1, r2) > 0) std::swap(r1, r2);
        // tangent line: (-dy)(x - c1x) + dx(y - c1y) = r, with r in [r1, r2]

        struct Crossing {
            Rat flo, fhi;   // free-coordinate interval (global)
            Rat fixed;      // the side's fixed coordinate (global)
            bool vertical;  // true: free coordinate is y (left/right side)
            Rat center;     // square-center value of the free coordinate
        };
        std::vector<Crossing> found;
        auto consider = [&](const Rat& a_lo, const Rat& a_hi, const Rat& center, const Rat& fixed,
                            bool vertical) {
            Rat lo = a_lo, hi = a_hi;
            if (cmp(lo, hi) > 0) std::swap(lo, hi);
            Rat off_lo = lo - center, off_hi = hi - center;
            bool inside = cmp(off_lo, -half) > 0 && cmp(off_hi, half) < 0;
            bool outside = cmp(off_hi, -half) < 0 || cmp(off_lo, half) > 0;
            if (!inside && !outside) throw degeneracy_error("tangent precision insufficient");
            if (inside) found.push_back(Crossing{lo, hi, fixed, vertical, center});
        };
        // bottom/top: y fixed, x = c1x + (dx*(y - c1y) - r) / dy  (from the line equation)
        for (int s : {-1, 1}) {
            Rat yfix = c1.y + Rat(s) * half;
            Rat x_a = c1.x + (dx * (yfix - c1.y) - r1) / dy;
            Rat x_b = c1.x + (dx * (yfix - c1.y) - r2) / dy;
            consider(x_a, x_b, c1.x, yfix, false);
        }
        // left/right: x fixed, y = c1y + (r + dy*(x - c1x)) / dx
        for (int s : {-1, 1}) {
            Rat xfix = c1.x + Rat(s) * half;
            Rat y_a = c1.y + (r1 + dy * (xfix - c1.x)) / dx;
            Rat y_b = c1.y + (r2 + dy * (xfix - c1.x)) / dx;
            consider(y_a, y_b, c1.y, xfix, true);
        }
        if (found.size() != 2) throw degeneracy_error("tangent crossing ambiguity");

        // nearest to the neighbor, by midpoint distance
        auto mid_point = [](const Crossing& c) {
            Rat f = (c.flo + c.fhi) / 2;
            return c.vertical ? Point(c.fixed, f) : Point(f, c.fixed);
        };
        Rat d0 = squared_distance(mid_point(found[0]), c2);
        Rat d1 = squared_distance(mid_point(found[1]), c2);
        if (cmp(d0, d1) == 0) throw degeneracy_error("tangent crossing ambiguity");
        const Crossing& chosen = cmp(d0, d1) < 0 ? found[0] : found[1];

        Rat off_lo = chosen.flo - chosen.center;
        Rat off_hi = chosen.fhi - chosen.center;
        bool in_band = cmp(abs(off_lo), band) < 0 && cmp(abs(off_hi), band) < 0;
        bool out_band = cmp(abs(off_lo), band) >= 0 && cmp(abs(off_hi), band) >= 0 &&
                        sgn(off_lo) == sgn(off_hi);
        if (!in_band && !out_band) throw degeneracy_error("tangent precision insufficient");
        if (in_band) continue;  // guarded: would intrude into a cluster-pair hull band

        Rat rounded = sgn(off_lo) > 0 ? ceil_to_grid(chosen.fhi, precision)
                                      : floor_to_grid(chosen.flo, precision);
        out.push_back(chosen.vertical ? Point(chosen.fixed, rounded) : Point(rounded, chosen.fixed));
    }
    return out;
}

}  // namespace detail

// Two opposing trees of point clusters. At height i there are 2^(height-1-i)
// squares per tree; the cluster in each square has red_base * 2^i red points
// on a tiny circle, and each square carries at most fourteen blue points made
// from outer common tangents against its neighbors. The mirrored tree is the
// reflection y -> -y. Witnesses: the vertical cluster-pair islands, and a
// layered partition with at most 4 * height islands.
inline GeneratedInstance flat_tree(const FlatTreeParams& params) {
    if (params.height < 1) throw invalid_input_error("height must be at least 1");
    if (sgn(params.delta) <= 0 || cmp(params.delta, params.eps) >= 0)
        throw invalid_input_error("need 0 < delta < eps");
    if (cmp(params.eps, pow2(-params.height - 3)) >= 0)
        throw invalid_input_error("eps too large for this height");
    if (params.red_base < 1) throw invalid_input_error("red cluster base must be positive");
    if (params.tangent_precision < 16) throw invalid_input_error("tangent precision too small");

    long ell = params.height;
    GeneratedInstance out;
    Instance& inst = out.instance;
    inst.color_count = 2;

    auto center = [&](long i, long j) {
        Rat x = pow2(i) + Rat(j) * pow2(i + 1);
        Rat y = make_rat(5, 2) - pow2(1 - i);
        return Point(x, y);
    };
    auto squares_at = [&](long i) { return 1l << (ell - 1 - i); };

    // red clusters, both trees; remember index ranges for the pair islands
    Rat radius = (params.delta / 2) * (Rat(1) - pow2(-static_cast<long>(params.tangent_precision)));
    std::map<std::pair<long, long>, std::pair<std::vector<int>, std::vector<int>>> cluster_indices;
    for (int tree = 0; tree < 2; ++tree) {
        for (long i = 0; i < ell; ++i) {
            long count = params.red_base << i;
            for (long j = 0; j < squares_at(i); ++j) {
                Point c = center(i, j);
                std::vector<int>& bucket = tree == 0 ? cluster_indices[{i, j}].first
                                                     : cluster_indices[{i, j}].second;
                for (long k = 0; k < count; ++k) {
                    Rat t = make_rat(k, count);
                    Rat den = Rat(1) + t * t;
                    Rat cx = (Rat(1) - t * t) / den;
                    Rat cy = (Rat(2) * t) / den;
                    Rat px = c.x + radius * cx;
                    Rat py = c.y + radius * cy;
                    if (tree == 1) py = -py;
                    bucket.push_back(static_cast<int>(inst.pts.size()));
                    inst.pts.push_back(Point(px, py));
                    inst.colors.push_back(0);
                }
            }
        }
    }

    // blue tangent points per square, mirrored for the second tree
    long max_blue_per_square = 0;
    for (long i = 0; i < ell; ++i) {
        for (long j = 0; j < squares_at(i); ++j) {
            Point c = center(i, j);
            std::vector<Point> neighbors;
            if (j - 1 >= 0) neighbors.push_back(center(i, j - 1));
            if (j + 1 < squares_at(i)) neighbors.push_back(center(i, j + 1));
            {
                Point opp = center(i, j);
                neighbors.push_back(Point(opp.x, -opp.y));
            }
            if (i - 1 >= 0) {
                for (long cj : {2 * j, 2 * j + 1}) {
                    Point child = center(i - 1, cj);
                    neighbors.push_back(child);
                    neighbors.push_back(Point(child.x, -child.y));
                }
            }
            std::vector<Point> blues;
            for (const Point& nb : neighbors) {
                std::vector<Point> pts =
                    detail::tangent_blues(c, nb, params.eps, params.delta, params.tangent_precision);
                for (const Point& p : pts) {
                    bool dup = false;
                    for (const Point& q : blues) dup = dup || q == p;
                    if (!dup) blues.push_back(p);
                }
            }
            max_blue_per_square = std::max(max_blue_per_square, static_cast<long>(blues.size()));
            if (blues.size() > 14) throw validation_error("square exceeds fourteen blue points");
            std::sort(blues.begin(), blues.end(), xy_less);
            for (const Point& p : blues) {
                inst.pts.push_back(p);
                inst.colors.push_back(1);
                inst.pts.push_back(Point(p.x, -p.y));
                inst.colors.push_back(1);
            }
        }
    }
    validate_instance(inst);

    // vertical pair islands
    for (long i = ell - 1; i >= 0; --i)
        for (long j = 0; j < squares_at(i); ++j) {
            auto& [top, bottom] = cluster_indices[{i, j}];
            std::vector<int> members = top;
            members.insert(members.end(), bottom.begin(), bottom.end());
            std::sort(members.begin(), members.end());
            out.special_islands.push_back(std::move(members));
        }

    // layered witness: one red island per tree and layer, blue slabs between
    // consecutive layer center lines, one shared central slab
    Partition witness;
    for (int tree = 0; tree < 2; ++tree)
        for (long i = 0; i < ell; ++i) {
            std::vector<int> members;
            for (long j = 0; j < squares_at(i); ++j) {
                const auto& pair = cluster_indices[{i, j}];
                const std::vector<int>& bucket = tree == 0 ? pair.first : pair.second;
                members.insert(members.end(), bucket.begin(), bucket.end());
            }
            witness.parts.push_back(Island::of(inst, members));
        }
    {
        std::vector<Rat> bands;
        for (long i = 0; i < ell; ++i) bands.push_back(make_rat(5, 2) - pow2(1 - i));
        std::vector<std::vector<int>> slabs(2 * ell);  // per tree: ell-1 gaps + top
        std::vector<int> central;
        for (size_t id = 0; id < inst.size(); ++id) {
            if (inst.colors[id] != 1) continue;
            const Rat& y = inst.pts[id].y;
            Rat ay = abs(y);
            if (cmp(ay, bands[0]) < 0) {
                central.push_back(static_cast<int>(id));
                continue;
            }
            int tree = sgn(y) > 0 ? 0 : 1;
            long g = ell - 1;  // top slab by default
            for (long i = 0; i + 1 < ell; ++i)
                if (cmp(ay, bands[i]) > 0 && cmp(ay, bands[i + 1]) < 0) g = i;
            slabs[tree * ell + g].push_back(static_cast<int>(id));
        }
        if (!central.empty()) witness.parts.push_back(Island::of(inst, central));
        for (const std::vector<int>& slab : slabs)
            if (!slab.empty()) witness.parts.push_back(Island::of(inst, slab));
    }
    out.witness_partition = std::move(witness);

    out.metadata["family"] = "flat-tree";
    out.metadata["height"] = std::to_string(ell);
    out.metadata["eps"] = format_rat(params.eps);
    out.metadata["delta"] = format_rat(params.delta);
    out.metadata["red_base"] = std::to_string(params.red_base);
    out.metadata["tangent_precision"] = std::to_string(params.tangent_precision);
    out.metadata["max_blue_per_square"] = std::to_string(max_blue_per_square);
    return out;
}

// k vertical blue columns of k+1 points crossing k horizontal red rows of k+1
// points; every column hull crosses every row hull. Witnesses: the 2k-line
// cover and the (2k+1)-island partition of whole columns plus red stacks.
inline GeneratedInstance checkerboard_cross(long k) {
    if (k < 1) throw invalid_input_error("k must be at least 1");
    GeneratedInstance out;
    Instance& inst = out.instance;
    inst.color_count = 2;
    for (long j = 1; j <= k; ++j)
        for (long y = 0; y <= k; ++y) {
            inst.pts.push_back(Point(make_rat(j), make_rat(y)));
            inst.colors.push_back(1);
        }
    for (long i = 1; i <= k; ++i)
        for (long t = 0; t <= k; ++t) {
            inst.pts.push_back(Point(make_rat(2 * t + 1, 2), make_rat(2 * i - 1, 2)));
            inst.colors.push_back(0);
        }
    validate_instance(inst);

    Cover cover;
    for (long j = 0; j < k; ++j) {
        std::vector<int> col;
        for (long y = 0; y <= k; ++y) col.push_back(static_cast<int>(j * (k + 1) + y));
        cover.islands.push_back(Island::of(inst, col));
        cover.uncovered_counts.push_back(k + 1);
    }
    long blue_total = k * (k + 1);
    for (long i = 0; i < k; ++i) {
        std::vector<int> row;
        for (long t = 0; t <= k; ++t) row.push_back(static_cast<int>(blue_total + i * (k + 1) + t));
        cover.islands.push_back(Island::of(inst, row));
        cover.uncovered_counts.push_back(k + 1);
    }
    out.witness_cover = std::move(cover);

    Partition partition;
    for (long j = 0; j < k; ++j) {
        std::vector<int> col;
        for (long y = 0; y <= k; ++y) col.push_back(static_cast<int>(j * (k + 1) + y));
        partition.parts.push_back(Island::of(inst, col));
    }
    for (long t = 0; t <= k; ++t) {
        std::vector<int> stack;
        for (long i = 0; i < k; ++i) stack.push_back(static_cast<int>(blue_total + i * (k + 1) + t));
        partition.parts.push_back(Island::of(inst, stack));
    }
    out.witness_partition = std::move(partition);

    out.metadata["family"] = "checkerboard-cross";
    out.metadata["k"] = std::to_string(k);
    out.metadata["crossings"] = std::to_string(k * k);
    return out;
}

// k x k alternating grid with thin guard rectangles along every coordinate gap
// on the grid sides. Witness: diagonal runs plus one island per rectangle,
// O(k) islands in total.
inline GeneratedInstance grid_with_rectangles(long k) {
    if (k < 2 || (k & (k - 1)) != 0) throw invalid_input_error("k must be a power of two, at least 2");
    GeneratedInstance out;
    Instance& inst = out.instance;
    inst.color_count = 2;
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) {
            inst.pts.push_back(Point(make_rat(i), make_rat(j)));
            inst.colors.push_back(static_cast<int>((i + j) % 2));
        }

    Rat thin = make_rat(1, 8), len = make_rat(1, 4);
    std::vector<std::vector<int>> rect_islands;
    // a rectangle straddling a gap line: thin across the gap, longer along it
    auto add_rect = [&](const Rat& cx, const Rat& cy, bool thin_in_x, int color) {
        std::vector<int> ids;
        Rat hx = thin_in_x ? thin : len;
        Rat hy = thin_in_x ? len : thin;
        for (int sx : {-1, 1})
            for (int sy : {-1, 1}) {
                ids.push_back(static_cast<int>(inst.pts.size()));
                inst.pts.push_back(Point(cx + Rat(sx) * hx, cy + Rat(sy) * hy));
                inst.colors.push_back(color);
            }
        rect_islands.push_back(ids);
    };
    for (long g = 0; g + 1 < k; ++g) {
        Rat gap = make_rat(2 * g + 1, 2);
        add_rect(gap, make_rat(-3, 2), true, 1);        // below vertical gap
        add_rect(gap, Rat(k - 1) + make_rat(3, 2), true, 0);  // above vertical gap
        add_rect(make_rat(-3, 2), gap, false, 1);       // left of horizontal gap
        add_rect(Rat(k - 1) + make_rat(3, 2), gap, false, 0); // right of horizontal gap
    }
    validate_instance(inst);

    Partition witness;
    for (long d = -(k - 1); d <= k - 1; ++d) {
        std::vector<int> run;
        for (long i = 0; i < k; ++i) {
            long j = i - d;
            if (j < 0 || j >= k) continue;
            run.push_back(static_cast<int>(i * k + j));
        }
        if (!run.empty()) witness.parts.push_back(Island::of(inst, run));
    }
    for (const std::vector<int>& ids : rect_islands) witness.parts.push_back(Island::of(inst, ids));
    out.witness_partition = std::move(witness);

    out.metadata["family"] = "grid-rectangles";
    out.metadata["k"] = std::to_string(k);
    out.metadata["witness_cardinality"] = std::to_string(out.witness_partition->parts.size());
    return out;
}

// Deterministic random instance; with general_position, no three points are
// collinear. The first `colors` points get distinct colors.
inline GeneratedInstance random_instance(long n, int colors, unsigned long seed, bool general_position) {
    if (n < 1 || colors < 1) throw invalid_input_error("need n >= 1 and colors >= 1");
    GeneratedInstance out;
    Instance& inst = out.instance;
    inst.color_count = colors;
    std::mt19937_64 rng(seed);
    long range = 4 * n * n + 8;
    while (static_cast<long>(inst.pts.size()) < n) {
        long x = static_cast<long>(rng() % static_cast<unsigned long>(range));
        long y = static_cast<long>(rng() % static_cast<unsigned long>(range));
        Point cand(make_rat(x), make_rat(y));
        bool ok = true;
        for (const Point& p : inst.pts) ok = ok && !(p == cand);
        if (ok && general_position)
            for (size_t i = 0; i < inst.pts.size() && ok; ++i)
                for (size_t j = i + 1; j < inst.pts.size() && ok; ++j)
                    ok = orientation(inst.pts[i], inst.pts[j], cand) != Orient::collinear;
        if (!ok) continue;
        int idx = static_cast<int>(inst.pts.size());
        inst.pts.push_back(cand);
        inst.colors.push_back(idx < colors ? idx : static_cast<int>(rng() % colors));
    }
    validate_instance(inst);
    out.metadata["family"] = "random";
    out.metadata["n"] = std::to_string(n);
    out.metadata["colors"] = std::to_string(colors);
    out.metadata["seed"] = std::to_string(seed);
    out.metadata["general_position"] = general_position ? "1" : "0";
    return out;
}

}  // namespace islands

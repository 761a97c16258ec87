#pragma once

#include <map>
#include <string>
#include <vector>

#include "islands/oracles.hpp"

namespace islands {

// Line a*x + b*y = c with (a,b) != (0,0). Canonical form: integer coprime
// coefficients, first nonzero of (a,b) positive. Candidate construction
// guarantees no input point lies on a chosen line.
struct SeparatingLine {
    Rat a, b, c;

    void canonicalize() {
        Int lcm = a.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), b.get_den().get_mpz_t());
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        Int ia = a.get_num() * (lcm / a.get_den());
        Int ib = b.get_num() * (lcm / b.get_den());
        Int ic = c.get_num() * (lcm / c.get_den());
        Int g;
        mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ic.get_mpz_t());
        if (sgn(g) != 0) {
            ia /= g;
            ib /= g;
            ic /= g;
        }
        int lead = sgn(ia) != 0 ? sgn(ia) : sgn(ib);
        if (lead < 0) {
            ia = -ia;
            ib = -ib;
            ic = -ic;
        }
        a = Rat(ia);
        b = Rat(ib);
        c = Rat(ic);
    }

    int side(const Point& p) const { return sgn(a * p.x + b * p.y - c); }

    bool operator==(const SeparatingLine& o) const { return a == o.a && b == o.b && c == o.c; }
};

namespace detail {

inline SeparatingLine make_line(Rat a, Rat b, Rat c) {
    SeparatingLine line{std::move(a), std::move(b), std::move(c)};
    line.canonicalize();
    return line;
}

inline std::string bipartition_key(const Instance& inst, const SeparatingLine& line) {
    std::string sig(inst.size(), '0');
    for (size_t i = 0; i < inst.size(); ++i) {
        int s = line.side(inst.pts[i]);
        if (s == 0) return {};  // touches a point: unusable
        sig[i] = s > 0 ? '1' : '0';
    }
    std::string flipped(sig);
    for (char& ch : flipped) ch = ch == '0' ? '1' : '0';
    return std::min(sig, flipped);
}

}  // namespace detail

// A finite family of lines through no input point such that every bipartition
// of the points achievable by a line is achieved by some candidate; one
// canonical representative per induced bipartition, in deterministic order.
inline std::vector<SeparatingLine> candidate_lines(const Instance& inst) {
    if (inst.size() < 2) throw invalid_input_error("need at least two points");
    std::vector<SeparatingLine> out;
    std::map<std::string, bool> seen;
    auto add = [&](const SeparatingLine& line) {
        std::string key = detail::bipartition_key(inst, line);
        if (key.empty()) return;
        if (seen.emplace(key, true).second) out.push_back(line);
    };

    // axis-parallel lines through every coordinate gap
    auto gap_lines = [&](bool vertical) {
        std::vector<Rat> vals;
        for (const Point& p : inst.pts) vals.push_back(vertical ? p.x : p.y);
        std::sort(vals.begin(), vals.end(), [](const Rat& u, const Rat& v) { return cmp(u, v) < 0; });
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (size_t i = 0; i + 1 < vals.size(); ++i) {
            Rat mid = (vals[i] + vals[i + 1]) / 2;
            if (vertical)
                add(detail::make_line(Rat(1), Rat(0), mid));
            else
                add(detail::make_line(Rat(0), Rat(1), mid));
        }
    };
    gap_lines(true);
    gap_lines(false);

    // for every point pair: the through-line, translated and rotated by exact
    // amounts below every other point's clearance
    for (size_t i = 0; i < inst.size(); ++i) {
        for (size_t j = i + 1; j < inst.size(); ++j) {
            const Point& p = inst.pts[i];
            const Point& q = inst.pts[j];
            Rat a = q.y - p.y;
            Rat b = p.x - q.x;
            Rat c = a * p.x + b * p.y;
            Rat dx = q.x - p.x, dy = q.y - p.y;
            Point mid((p.x + q.x) / 2, (p.y + q.y) / 2);

            Rat min_resid(0);
            bool have_resid = false;
            Rat min_ratio(0);
            bool have_ratio = false;
            for (const Point& r : inst.pts) {
                Rat resid = a * r.x + b * r.y - c;
                if (sgn(resid) == 0) {
                    // collinear with the pair: constrains only rotations
                } else {
                    Rat mag = abs(resid);
                    if (!have_resid || cmp(mag, min_resid) < 0) {
                        min_resid = mag;
                        have_resid = true;
                    }
                    Rat swing = dx * (r.x - mid.x) + dy * (r.y - mid.y);
                    if (sgn(swing) != 0) {
                        Rat ratio = mag / abs(swing);
                        if (!have_ratio || cmp(ratio, min_ratio) < 0) {
                            min_ratio = ratio;
                            have_ratio = true;
                        }
                    }
                }
            }
            Rat shift = have_resid ? min_resid / 2 : Rat(1);
            add(detail::make_line(a, b, c + shift));
            add(detail::make_line(a, b, c - shift));
            Rat theta = have_ratio ? min_ratio / 2 : Rat(1);
            for (int dir = 0; dir < 2; ++dir) {
                Rat t = dir == 0 ? theta : -theta;
                Rat ra = a + t * dx;
                Rat rb = b + t * dy;
                Rat rc = ra * mid.x + rb * mid.y;
                add(detail::make_line(ra, rb, rc));
            }
        }
    }
    return out;
}

struct LineGreedyResult {
    std::vector<SeparatingLine> lines;
    std::vector<long long> covered_per_step;  // newly separated bichromatic pairs
};

// Set-cover greedy: each step picks the candidate separating the most not-yet
// separated bichromatic pairs, ties broken by candidate order.
inline LineGreedyResult line_greedy_full(const Instance& inst) {
    LineGreedyResult out;
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < inst.size(); ++i)
        for (size_t j = i + 1; j < inst.size(); ++j)
            if (inst.colors[i] != inst.colors[j]) pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
    if (pairs.empty()) return out;

    std::vector<SeparatingLine> cands = candidate_lines(inst);
    std::vector<std::vector<char>> sides(cands.size(), std::vector<char>(inst.size()));
    for (size_t k = 0; k < cands.size(); ++k)
        for (size_t i = 0; i < inst.size(); ++i) sides[k][i] = cands[k].side(inst.pts[i]) > 0 ? 1 : 0;

    std::vector<char> open(pairs.size(), 1);
    size_t open_count = pairs.size();
    while (open_count > 0) {
        size_t best = cands.size();
        long long best_cover = 0;
        for (size_t k = 0; k < cands.size(); ++k) {
            long long cover = 0;
            for (size_t t = 0; t < pairs.size(); ++t)
                if (open[t] && sides[k][pairs[t].first] != sides[k][pairs[t].second]) ++cover;
            if (cover > best_cover) {
                best_cover = cover;
                best = k;
            }
        }
        if (best == cands.size())
            throw validation_error("candidate family cannot separate a bichromatic pair");
        out.lines.push_back(cands[best]);
        out.covered_per_step.push_back(best_cover);
        for (size_t t = 0; t < pairs.size(); ++t)
            if (open[t] && sides[best][pairs[t].first] != sides[best][pairs[t].second]) {
                open[t] = 0;
                --open_count;
            }
    }
    return out;
}

inline std::vector<SeparatingLine> line_greedy(const Instance& inst) { return line_greedy_full(inst).lines; }

// Groups points by their sign vector; every group must be an island.
inline Partition partition_from_lines(const Instance& inst, const std::vector<SeparatingLine>& lines) {
    std::map<std::vector<int>, std::vector<int>> groups;
    std::vector<std::vector<int>> order;
    for (size_t i = 0; i < inst.size(); ++i) {
        std::vector<int> sig;
        for (const SeparatingLine& line : lines) {
            int s = line.side(inst.pts[i]);
            if (s == 0) throw degeneracy_error("non-generic line");
            sig.push_back(s);
        }
        auto [it, fresh] = groups.emplace(sig, std::vector<int>{});
        if (fresh) order.push_back(sig);
        it->second.push_back(static_cast<int>(i));
    }
    Partition out;
    for (const auto& sig : order) {
        const std::vector<int>& members = groups[sig];
        if (!is_island(members, inst)) throw validation_error("lines do not separate");
        out.parts.push_back(Island::of(inst, members));
    }
    return out;
}

// pass iff every sign-vector group is monochromatic
inline Report verify_separating(const Instance& inst, const std::vector<SeparatingLine>& lines) {
    std::map<std::vector<int>, int> group_color;
    for (size_t i = 0; i < inst.size(); ++i) {
        std::vector<int> sig;
        for (const SeparatingLine& line : lines) {
            int s = line.side(inst.pts[i]);
            if (s == 0) return Report::fail("point " + std::to_string(i) + " lies on a line");
            sig.push_back(s);
        }
        auto [it, fresh] = group_color.emplace(sig, inst.colors[i]);
        if (!fresh && it->second != inst.colors[i])
            return Report::fail("face with two colors contains point " + std::to_string(i));
    }
    return Report::ok();
}

}  // namespace islands

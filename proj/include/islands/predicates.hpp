#pragma once

#include <cmath>
#include <compare>
#include <limits>

#include "islands/rational.hpp"

namespace islands {

enum class Orient { cw = -1, collinear = 0, ccw = 1 };

namespace detail {

// Conservative outward widening for the floating-point filter. The slack is
// orders of magnitude above the accumulated rounding error of the handful of
// operations below, so a sign certified here equals the exact sign.
inline double widen_up(double x) { return x + (std::fabs(x) * 1e-12 + 1e-280); }
inline double widen_down(double x) { return x - (std::fabs(x) * 1e-12 + 1e-280); }

struct DInterval {
    double lo, hi;
    DInterval operator-(const DInterval& o) const { return {widen_down(lo - o.hi), widen_up(hi - o.lo)}; }
    DInterval operator+(const DInterval& o) const { return {widen_down(lo + o.lo), widen_up(hi + o.hi)}; }
    DInterval operator*(const DInterval& o) const {
        double a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        double mn = std::fmin(std::fmin(a, b), std::fmin(c, d));
        double mx = std::fmax(std::fmax(a, b), std::fmax(c, d));
        return {widen_down(mn), widen_up(mx)};
    }
    bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }
};

inline DInterval interval_of(const Rat& q) {
    double d = mpq_get_d(q.get_mpq_t());  // truncated toward zero, < 1 ulp off
    if (!std::isfinite(d)) return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    return {widen_down(d), widen_up(d)};
}

struct Scratch {
    mpz_t a, b, c, d, t1, t2;
    Scratch() { mpz_inits(a, b, c, d, t1, t2, nullptr); }
    ~Scratch() { mpz_clears(a, b, c, d, t1, t2, nullptr); }
};

inline Scratch& scratch() {
    static thread_local Scratch s;
    return s;
}

}  // namespace detail

struct Point {
    Rat x, y;
    // caches for the filtered predicates; hx/hw etc. give x = hx/hw, y = hy/hw with hw > 0
    detail::DInterval ix{}, iy{};
    Int hx, hy, hw;

    Point() : Point(Rat(0), Rat(0)) {}
    Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {
        ix = detail::interval_of(x);
        iy = detail::interval_of(y);
        hx = x.get_num() * y.get_den();
        hy = y.get_num() * x.get_den();
        hw = x.get_den() * y.get_den();
    }
    Point(long px, long py) : Point(make_rat(px), make_rat(py)) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

// (y, x) lexicographic order; the minimum is always a hull vertex.
inline bool yx_less(const Point& a, const Point& b) {
    int c = cmp(a.y, b.y);
    if (c != 0) return c < 0;
    return cmp(a.x, b.x) < 0;
}

inline bool xy_less(const Point& a, const Point& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return cmp(a.y, b.y) < 0;
}

// Sign of cross(q - p, r - p). Certified double filter, exact integer fallback.
inline Orient orientation(const Point& p, const Point& q, const Point& r) {
    using namespace detail;
    DInterval det = (q.ix - p.ix) * (r.iy - p.iy) - (q.iy - p.iy) * (r.ix - p.ix);
    if (det.finite()) {
        if (det.lo > 0) return Orient::ccw;
        if (det.hi < 0) return Orient::cw;
    }
    Scratch& s = scratch();
    // a = qx*pw - px*qw, b = ry*pw - py*rw, c = qy*pw - py*qw, d = rx*pw - px*rw
    mpz_mul(s.t1, q.hx.get_mpz_t(), p.hw.get_mpz_t());
    mpz_mul(s.t2, p.hx.get_mpz_t(), q.hw.get_mpz_t());
    mpz_sub(s.a, s.t1, s.t2);
    mpz_mul(s.t1, r.hy.get_mpz_t(), p.hw.get_mpz_t());
    mpz_mul(s.t2, p.hy.get_mpz_t(), r.hw.get_mpz_t());
    mpz_sub(s.b, s.t1, s.t2);
    mpz_mul(s.t1, q.hy.get_mpz_t(), p.hw.get_mpz_t());
    mpz_mul(s.t2, p.hy.get_mpz_t(), q.hw.get_mpz_t());
    mpz_sub(s.c, s.t1, s.t2);
    mpz_mul(s.t1, r.hx.get_mpz_t(), p.hw.get_mpz_t());
    mpz_mul(s.t2, p.hx.get_mpz_t(), r.hw.get_mpz_t());
    mpz_sub(s.d, s.t1, s.t2);
    mpz_mul(s.t1, s.a, s.b);
    mpz_mul(s.t2, s.c, s.d);
    int sign = mpz_cmp(s.t1, s.t2);
    return sign > 0 ? Orient::ccw : (sign < 0 ? Orient::cw : Orient::collinear);
}

inline bool collinear(const Point& p, const Point& q, const Point& r) {
    return orientation(p, q, r) == Orient::collinear;
}

// Sign of cross(a2 - a1, b2 - b1).
inline Orient cross_sign(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
    using namespace detail;
    DInterval det = (a2.ix - a1.ix) * (b2.iy - b1.iy) - (a2.iy - a1.iy) * (b2.ix - b1.ix);
    if (det.finite()) {
        if (det.lo > 0) return Orient::ccw;
        if (det.hi < 0) return Orient::cw;
    }
    Scratch& s = scratch();
    mpz_mul(s.t1, a2.hx.get_mpz_t(), a1.hw.get_mpz_t());
    mpz_mul(s.t2, a1.hx.get_mpz_t(), a2.hw.get_mpz_t());
    mpz_sub(s.a, s.t1, s.t2);
    mpz_mul(s.t1, b2.hy.get_mpz_t(), b1.hw.get_mpz_t());
    mpz_mul(s.t2, b1.hy.get_mpz_t(), b2.hw.get_mpz_t());
    mpz_sub(s.b, s.t1, s.t2);
    mpz_mul(s.t1, a2.hy.get_mpz_t(), a1.hw.get_mpz_t());
    mpz_mul(s.t2, a1.hy.get_mpz_t(), a2.hw.get_mpz_t());
    mpz_sub(s.c, s.t1, s.t2);
    mpz_mul(s.t1, b2.hx.get_mpz_t(), b1.hw.get_mpz_t());
    mpz_mul(s.t2, b1.hx.get_mpz_t(), b2.hw.get_mpz_t());
    mpz_sub(s.d, s.t1, s.t2);
    mpz_mul(s.t1, s.a, s.b);
    mpz_mul(s.t2, s.c, s.d);
    int sign = mpz_cmp(s.t1, s.t2);
    return sign > 0 ? Orient::ccw : (sign < 0 ? Orient::cw : Orient::collinear);
}

// q strictly inside the open axis-aligned box spanned by p and r is not needed;
// this is the on-segment test for collinear triples.
inline bool between_collinear(const Point& a, const Point& b, const Point& p) {
    // precondition: a, b, p collinear, a != b; true iff p on closed segment [a,b]
    if (cmp(a.x, b.x) != 0) {
        const Rat& lo = cmp(a.x, b.x) < 0 ? a.x : b.x;
        const Rat& hi = cmp(a.x, b.x) < 0 ? b.x : a.x;
        return cmp(p.x, lo) >= 0 && cmp(p.x, hi) <= 0;
    }
    const Rat& lo = cmp(a.y, b.y) < 0 ? a.y : b.y;
    const Rat& hi = cmp(a.y, b.y) < 0 ? b.y : a.y;
    return cmp(p.y, lo) >= 0 && cmp(p.y, hi) <= 0;
}

inline bool on_segment(const Point& a, const Point& b, const Point& p) {
    return collinear(a, b, p) && between_collinear(a, b, p);
}

// Direction comparator over the full circle for vectors (a - o) where directions
// are compared by angle in [0, 2pi) measured from the +x axis.
// half 0: dy > 0 or (dy == 0 and dx > 0); half 1: the rest (excluding zero vector).
inline int direction_half(const Point& o, const Point& a) {
    int cy = cmp(a.y, o.y);
    if (cy > 0) return 0;
    if (cy < 0) return 1;
    return cmp(a.x, o.x) > 0 ? 0 : 1;
}

// true iff direction(a-o) strictly precedes direction(b-o) in [0, 2pi)
inline bool direction_less(const Point& o, const Point& a, const Point& b) {
    int ha = direction_half(o, a), hb = direction_half(o, b);
    if (ha != hb) return ha < hb;
    return orientation(o, a, b) == Orient::ccw;
}

inline Rat squared_distance(const Point& a, const Point& b) {
    Rat dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

}  // namespace islands

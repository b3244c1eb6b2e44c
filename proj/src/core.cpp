#include "lh4/core.hpp"

namespace lh4 {

namespace {

Int gcd_of(std::span<const Int> xs) {
    if (xs.empty()) throw std::invalid_argument("gcd of empty sequence");
    Int g = 0;
    for (const Int& x : xs) {
        g = gcd(g, x);
        // gcd is monotone decreasing; 1 cannot shrink further.
        if (g == 1) break;
    }
    return abs(g);
}

}  // namespace

PositiveOrInfinite gcd_star(std::span<const Int> xs) {
    Int g = gcd_of(xs);
    if (g == 0) return PositiveOrInfinite::infinite();
    return PositiveOrInfinite::finite(std::move(g));
}

PositiveOrInfinite gcd_star(std::initializer_list<Int> xs) {
    return gcd_star(std::span<const Int>(xs.begin(), xs.size()));
}

Int gcd_sub(std::span<const Int> xs) { return gcd_of(xs); }

Int gcd_sub(std::initializer_list<Int> xs) {
    return gcd_sub(std::span<const Int>(xs.begin(), xs.size()));
}

Residue reduce_residue(const Int& v, const Int& m) {
    if (m < 0) throw std::invalid_argument("reduce_residue: negative modulus");
    if (m == 0) return Residue{v, 0};
    return Residue{mod_floor(v, m), m};
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Int mod_floor(const Int& a, const Int& b) {
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) r += b;
    return r;
}

Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    // Iterative extended Euclid on (a, b); invariants r0 = a*x0 + b*y0,
    // r1 = a*x1 + b*y1.
    Int r0 = a, r1 = b;
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int x2 = x0 - q * x1;
        Int y2 = y0 - q * y1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    if (r0 < 0) {
        r0 = -r0;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return r0;
}

}  // namespace lh4

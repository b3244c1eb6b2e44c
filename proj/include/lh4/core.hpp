#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace lh4 {

/// Exact unbounded integer. Every quantity in this library is an Int;
/// verdicts depend on products of tuple entries, so wraparound is never
/// acceptable.
using Int = boost::multiprecision::cpp_int;

/// The clasper standard form of a 4-component link: six parallel-clasp
/// counts c (tetrahedron edges), four counts f (faces), two counts t.
/// Negative entries count twisted clasps. Entries are unconstrained;
/// distinct tuples may describe the same link-homotopy class.
///
/// Edge assignment: c3<->{1,2}, c2<->{1,3}, c1<->{2,3}, c4<->{1,4},
/// c5<->{2,4}, c6<->{3,4}. Face assignment: f4<->{1,2,3}, f3<->{1,2,4},
/// f2<->{1,3,4}, f1<->{2,3,4}.
struct ClasperForm {
    std::array<Int, 6> c{};
    std::array<Int, 4> f{};
    std::array<Int, 2> t{};

    friend bool operator==(const ClasperForm&, const ClasperForm&) = default;
};

/// Levine's 12-tuple parameterization (k, l, r, d, e1..e8) of the same
/// classes. d is normalized into [0, gcd*(k,l,r)) when that gcd is
/// finite; when k = l = r = 0 any integer d is legal.
struct LevineForm {
    Int k{};
    Int l{};
    Int r{};
    Int d{};
    std::array<Int, 8> e{};

    friend bool operator==(const LevineForm&, const LevineForm&) = default;
};

/// Either a positive integer or the distinguished value "infinite"
/// (the gcd* of an all-zero tuple).
class PositiveOrInfinite {
public:
    static PositiveOrInfinite infinite() { return PositiveOrInfinite(); }

    static PositiveOrInfinite finite(Int v) {
        if (v < 1) throw std::invalid_argument("PositiveOrInfinite: finite value must be >= 1");
        PositiveOrInfinite p;
        p.infinite_ = false;
        p.value_ = std::move(v);
        return p;
    }

    bool is_infinite() const { return infinite_; }

    const Int& value() const {
        if (infinite_) throw std::logic_error("PositiveOrInfinite: value() on infinite");
        return value_;
    }

    friend bool operator==(const PositiveOrInfinite&, const PositiveOrInfinite&) = default;

private:
    PositiveOrInfinite() = default;

    bool infinite_ = true;
    Int value_{};
};

/// A value in Z_m. Modulus 0 means "no reduction" (the value lives in Z);
/// otherwise 0 <= value < modulus. Two residues are equal only when both
/// modulus and value agree.
struct Residue {
    Int value{};
    Int modulus{};

    friend bool operator==(const Residue&, const Residue&) = default;
};

/// gcd of the entries, with the all-zero tuple mapped to "infinite".
PositiveOrInfinite gcd_star(std::span<const Int> xs);
PositiveOrInfinite gcd_star(std::initializer_list<Int> xs);

/// gcd of the entries, with the all-zero tuple mapped to 0.
Int gcd_sub(std::span<const Int> xs);
Int gcd_sub(std::initializer_list<Int> xs);

/// Canonical residue of v mod m (m >= 0). m = 0 leaves v unreduced.
Residue reduce_residue(const Int& v, const Int& m);

/// Floor division and the matching non-negative remainder (b != 0).
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);

/// Extended gcd: returns g = gcd(a, b) >= 0 with a*x + b*y = g.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

}  // namespace lh4

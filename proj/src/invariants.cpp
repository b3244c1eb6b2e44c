#include "lh4/invariants.hpp"

#include "lh4/intlin.hpp"

namespace lh4 {

namespace {

Int gcd2(const Int& a, const Int& b) { return abs(gcd(a, b)); }

bool divides(const Int& m, const Int& v) { return m == 0 ? v == 0 : v % m == 0; }

// Every representative of value + modulus*Z shares this gcd.
Int residue_class_gcd(const Residue& r) { return gcd2(r.value, r.modulus); }

}  // namespace

MilnorProfile milnor_profile(const ClasperForm& link) {
    const auto& c = link.c;
    const auto& f = link.f;
    const auto& t = link.t;

    MilnorProfile p{
        .mu12 = -c[2], .mu13 = -c[1], .mu23 = -c[0],
        .mu14 = -c[3], .mu24 = -c[4], .mu34 = -c[5],
    };
    p.mu123 = reduce_residue(f[3], gcd_sub({c[0], c[1], c[2]}));
    p.mu124 = reduce_residue(-f[2], gcd_sub({c[2], c[3], c[4]}));
    p.mu134 = reduce_residue(f[1], gcd_sub({c[1], c[3], c[5]}));
    p.mu234 = reduce_residue(-f[0], gcd_sub({c[0], c[4], c[5]}));

    // Length-4 modulus: gcd over all lower invariants, where a residue
    // class contributes the gcd of its representatives.
    Int delta4 = gcd_sub({p.mu12, p.mu13, p.mu23, p.mu14, p.mu24, p.mu34,
                          residue_class_gcd(p.mu123), residue_class_gcd(p.mu124),
                          residue_class_gcd(p.mu134), residue_class_gcd(p.mu234)});
    p.mu3124 = reduce_residue(-t[1], delta4);
    p.mu2134 = reduce_residue(t[0] + t[1], delta4);
    return p;
}

TripleForm sublink3(const ClasperForm& link, int drop) {
    MilnorProfile p = milnor_profile(link);
    switch (drop) {
        case 4: return {{1, 2, 3}, {p.mu12, p.mu13, p.mu23}, p.mu123};
        case 3: return {{1, 2, 4}, {p.mu12, p.mu14, p.mu24}, p.mu124};
        case 2: return {{1, 3, 4}, {p.mu13, p.mu14, p.mu34}, p.mu134};
        case 1: return {{2, 3, 4}, {p.mu23, p.mu24, p.mu34}, p.mu234};
        default: throw std::invalid_argument("sublink3: drop must be 1..4");
    }
}

TripleForm classify3(const Int& c12, const Int& c13, const Int& c23, const Int& f) {
    return {{1, 2, 3}, {-c12, -c13, -c23}, reduce_residue(f, gcd_sub({c12, c13, c23}))};
}

Int classify2(const Int& c) { return -c; }

std::optional<std::string> family_violation(const ClasperForm& link, std::string_view family) {
    const auto& c = link.c;
    const auto& f = link.f;

    auto all_zero = [&](std::initializer_list<int> idx) {
        for (int i : idx)
            if (c[static_cast<size_t>(i)] != 0) return false;
        return true;
    };
    auto none_zero = [&](std::initializer_list<int> idx) {
        for (int i : idx)
            if (c[static_cast<size_t>(i)] == 0) return false;
        return true;
    };

    if (family == "T41-1") {
        if (!all_zero({0, 1, 2, 3, 4, 5})) return "requires c1 = ... = c6 = 0";
        return std::nullopt;
    }
    if (family == "T41-2") {
        if (!all_zero({0, 1, 2, 3, 4})) return "requires c1 = ... = c5 = 0";
        if (c[5] == 0) return "requires c6 != 0";
        return std::nullopt;
    }
    if (family == "T41-3") {
        if (!all_zero({0, 1, 3, 4})) return "requires c1 = c2 = c4 = c5 = 0";
        if (c[2] == 0 || c[5] == 0) return "requires c3, c6 != 0";
        return std::nullopt;
    }
    if (family == "T41-4") {
        if (gcd2(c[3], c[4]) != 1 || gcd2(c[4], c[5]) != 1 || gcd2(c[3], c[5]) != 1)
            return "requires c4, c5, c6 pairwise relatively prime";
        return std::nullopt;
    }
    if (family == "T41-5") {
        if (gcd2(c[0], c[1]) != 1 || gcd2(c[1], c[2]) != 1 || gcd2(c[0], c[2]) != 1)
            return "requires c1, c2, c3 pairwise relatively prime";
        return std::nullopt;
    }
    if (family == "P43-1") {
        if (!all_zero({1, 3, 4, 5})) return "requires c2 = c4 = c5 = c6 = 0";
        if (c[0] == 0 || c[2] == 0) return "requires c1, c3 != 0";
        if (!divides(c[0], f[0])) return "requires f1 = 0 (mod c1)";
        if (!divides(c[2], f[2])) return "requires f3 = 0 (mod c3)";
        return std::nullopt;
    }
    if (family == "P43-2") {
        if (!all_zero({1, 3, 4, 5})) return "requires c2 = c4 = c5 = c6 = 0";
        if (c[0] == 0 || c[0] != c[2]) return "requires c1 = c3 != 0";
        if (!divides(gcd_sub({c[0], f[1], f[2]}), f[0])) return "requires f1 = 0 (mod gcd(c1, f2, f3))";
        if (!divides(gcd_sub({c[0], f[0], f[1]}), f[2])) return "requires f3 = 0 (mod gcd(c1, f1, f2))";
        return std::nullopt;
    }
    if (family == "P43-3") {
        if (!all_zero({1, 4, 5})) return "requires c2 = c5 = c6 = 0";
        if (!none_zero({0, 2, 3})) return "requires c1, c3, c4 != 0";
        if (gcd2(c[0], c[2]) != 1 || gcd2(c[2], c[3]) != 1)
            return "requires gcd(c1, c3) = gcd(c3, c4) = 1";
        return std::nullopt;
    }
    if (family == "P43-4") {
        if (!all_zero({2, 5})) return "requires c3 = c6 = 0";
        if (!none_zero({0, 1, 3, 4})) return "requires c1, c2, c4, c5 != 0";
        if (gcd2(c[0], c[3]) != 1 || gcd2(c[1], c[4]) != 1)
            return "requires gcd(c1, c4) = gcd(c2, c5) = 1";
        return std::nullopt;
    }
    if (family == "P43-5") {
        if (!all_zero({4, 5})) return "requires c5 = c6 = 0";
        if (!none_zero({0, 1, 2, 3})) return "requires c1, c2, c3, c4 != 0";
        bool first = gcd2(c[0], c[3]) == 1 && gcd2(c[1], c[2]) == 1 && gcd2(c[1], c[3]) == 1;
        bool second = gcd2(c[0], c[2]) == 1 && gcd2(c[1], c[2]) == 1 && gcd2(c[1], c[3]) == 1;
        if (!first && !second)
            return "requires gcd(c1,c4) = gcd(c2,c3) = gcd(c2,c4) = 1 or gcd(c1,c3) = gcd(c2,c3) = gcd(c2,c4) = 1";
        return std::nullopt;
    }
    throw std::invalid_argument("unknown family identifier: " + std::string(family));
}

std::vector<std::string> applicability(const ClasperForm& link) {
    std::vector<std::string> out;
    for (std::string_view id : kFamilyIds) {
        if (!family_violation(link, id)) out.emplace_back(id);
    }
    return out;
}

namespace {

void put(InvariantReport& r, std::string name, Int v) {
    r.values.emplace_back(std::move(name), ReportValue(std::move(v)));
}

void put(InvariantReport& r, std::string name, Residue v) {
    r.values.emplace_back(std::move(name), ReportValue(std::move(v)));
}

// (alpha, beta, gamma) with 0 <= f4 - (alpha c1 + beta c2 + gamma c3)
// < gcd*(c1, c2, c3); all zero when the gcd is infinite.
std::array<Int, 3> theta_offset(const std::array<Int, 6>& c, const Int& f4) {
    Int g123 = gcd_sub({c[0], c[1], c[2]});
    if (g123 == 0) return {0, 0, 0};
    Int x, y, z, u;
    Int g12 = ext_gcd(c[0], c[1], x, y);
    ext_gcd(g12, c[2], u, z);
    x *= u;
    y *= u;
    Int q = floor_div(f4, g123);
    return {q * x, q * y, q * z};
}

}  // namespace

InvariantReport case_invariants(const ClasperForm& link, std::string_view family) {
    if (auto why = family_violation(link, family))
        throw std::invalid_argument("family " + std::string(family) + " not applicable: " + *why);

    const auto& c = link.c;
    const auto& f = link.f;
    const auto& t = link.t;
    InvariantReport rep;
    rep.family = family;

    if (family == "T41-1") {
        put(rep, "f1", f[0]);
        put(rep, "f2", f[1]);
        put(rep, "f3", f[2]);
        put(rep, "f4", f[3]);
        Int g = gcd_sub({f[0], f[1], f[2], f[3]});
        put(rep, "t1", reduce_residue(t[0], g));
        put(rep, "t2", reduce_residue(t[1], g));
    } else if (family == "T41-2") {
        Int m6 = abs(c[5]);
        put(rep, "c6", c[5]);
        put(rep, "f1", reduce_residue(f[0], m6));
        put(rep, "f2", reduce_residue(f[1], m6));
        put(rep, "f3", f[2]);
        put(rep, "f4", f[3]);
        put(rep, "t1", reduce_residue(t[0], gcd_sub({c[5], f[0], f[1], f[2], f[3]})));
        put(rep, "Delta", reduce_residue(f[0] * f[1] + c[5] * t[1], m6 * gcd_sub({f[2], f[3]})));
    } else if (family == "T41-3") {
        Int m3 = abs(c[2]);
        Int m6 = abs(c[5]);
        put(rep, "c3", c[2]);
        put(rep, "c6", c[5]);
        put(rep, "f1", reduce_residue(f[0], m6));
        put(rep, "f2", reduce_residue(f[1], m6));
        put(rep, "f3", reduce_residue(f[2], m3));
        put(rep, "f4", reduce_residue(f[3], m3));
        put(rep, "t1", reduce_residue(t[0], gcd_sub({c[2], c[5], f[0], f[1], f[2], f[3]})));
        put(rep, "DeltaPrime", c[2] * c[5] * t[1] + c[2] * f[0] * f[1] + c[5] * f[2] * f[3]);
    } else if (family == "T41-4") {
        for (int i = 0; i < 6; ++i) put(rep, "c" + std::to_string(i + 1), c[static_cast<size_t>(i)]);
        put(rep, "f4", reduce_residue(f[3], gcd_sub({c[0], c[1], c[2]})));
        auto [alpha, beta, gamma] = theta_offset(c, f[3]);
        Int theta = c[3] * f[0] + c[4] * f[1] + c[5] * f[2] + alpha * c[4] * c[5] +
                    beta * c[3] * c[5] + gamma * c[3] * c[4];
        // Modulus ingredients: the two fixed combinations plus the value
        // of a*c5c6 + b*c4c6 + g*c4c5 over a kernel basis of
        // a*c1 + b*c2 + g*c3 = 0.
        std::vector<Int> parts = {c[0] * c[3] - c[1] * c[4], c[0] * c[3] - c[2] * c[5]};
        IntMatrix row(1, 3);
        row.at(0, 0) = c[0];
        row.at(0, 1) = c[1];
        row.at(0, 2) = c[2];
        for (const auto& v : kernel_lattice_basis(row))
            parts.push_back(v[0] * c[4] * c[5] + v[1] * c[3] * c[5] + v[2] * c[3] * c[4]);
        put(rep, "theta", reduce_residue(theta, gcd_sub(parts)));
    } else if (family == "T41-5") {
        for (int i = 0; i < 6; ++i) put(rep, "c" + std::to_string(i + 1), c[static_cast<size_t>(i)]);
        Int theta = c[0] * c[1] * f[2] + c[0] * c[2] * f[1] + c[1] * c[2] * f[0] + c[1] * c[4] * f[3];
        put(rep, "thetaPrime",
            reduce_residue(theta, gcd_sub({c[0] * c[3] - c[1] * c[4], c[0] * c[3] - c[2] * c[5]})));
    } else if (family == "P43-1") {
        put(rep, "c1", c[0]);
        put(rep, "c3", c[2]);
        put(rep, "f2", f[1]);
        put(rep, "f4", reduce_residue(f[3], gcd_sub({c[0], c[2]})));
        put(rep, "Delta1", reduce_residue(c[0] * t[0] + f[0] * f[3], abs(c[0]) * gcd_sub({c[2], f[1]})));
        put(rep, "Delta2", reduce_residue(c[2] * t[1] + f[2] * f[3], abs(c[2]) * gcd_sub({c[0], f[1]})));
    } else if (family == "P43-2") {
        Int m = abs(c[0]);
        put(rep, "c1", c[0]);
        put(rep, "f1", reduce_residue(f[0], m));
        put(rep, "f3", reduce_residue(f[2], m));
        put(rep, "f2", f[1]);
        put(rep, "f4", reduce_residue(f[3], m));
        Int g = gcd_sub({c[0], f[0], f[1], f[2]});
        put(rep, "Delta1", reduce_residue(c[0] * t[0] + f[0] * f[3], m * g));
        put(rep, "Delta2", reduce_residue(c[0] * t[1] + f[2] * f[3], m * g));
    } else if (family == "P43-3") {
        put(rep, "c1", c[0]);
        put(rep, "c3", c[2]);
        put(rep, "c4", c[3]);
        put(rep, "f1", reduce_residue(f[0], abs(c[0])));
        put(rep, "f2", reduce_residue(f[1], abs(c[3])));
        put(rep, "Delta2",
            reduce_residue(c[2] * t[1] + f[2] * f[3], gcd_sub({c[0], c[3], c[2] * f[0], c[2] * f[1]})));
        put(rep, "Delta3",
            reduce_residue(c[0] * c[3] * t[0] + c[3] * f[0] * f[3] + c[0] * f[1] * f[2], abs(c[2])));
    } else if (family == "P43-4") {
        put(rep, "c1", c[0]);
        put(rep, "c2", c[1]);
        put(rep, "c4", c[3]);
        put(rep, "c5", c[4]);
        put(rep, "f1", reduce_residue(f[0], gcd_sub({c[0], c[4]})));
        put(rep, "f2", reduce_residue(f[1], gcd_sub({c[1], c[3]})));
        put(rep, "f3", reduce_residue(f[2], gcd_sub({c[3], c[4]})));
        put(rep, "f4", reduce_residue(f[3], gcd_sub({c[0], c[1]})));
    } else if (family == "P43-5") {
        put(rep, "c1", c[0]);
        put(rep, "c2", c[1]);
        put(rep, "c3", c[2]);
        put(rep, "c4", c[3]);
        put(rep, "f1", reduce_residue(f[0], abs(c[0])));
        put(rep, "Delta4",
            reduce_residue(c[0] * c[1] * f[2] + c[0] * c[2] * f[1] + c[1] * c[2] * f[0],
                           abs(c[0] * c[3])));
    } else {
        throw std::invalid_argument("unknown family identifier: " + std::string(family));
    }
    return rep;
}

}  // namespace lh4

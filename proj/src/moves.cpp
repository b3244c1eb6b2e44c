#include "lh4/moves.hpp"

#include <string>

namespace lh4 {

namespace {

// One generator row: the two nonzero f-delta entries as
// (f index, c index, sign), plus the t increment data. Indices 0-based.
struct GeneratorRow {
    int i, j;
    int fa, ca, sa;  // f[fa] += sa * c[ca]
    int fb, cb, sb;  // f[fb] += sb * c[cb]
    int t_slot;      // 0 or 1
    int t_sign;
    int f_read;      // 0..3
};

// The move table, in the fixed generator order.
constexpr std::array<GeneratorRow, kGeneratorCount> kRows = {{
    // psi21: f3 += c5, f4 -= c1; t1 += f1
    {2, 1, 2, 4, +1, 3, 0, -1, 0, +1, 0},
    // psi41: f2 += c6, f3 -= c5; t2 -= f1
    {4, 1, 1, 5, +1, 2, 4, -1, 1, -1, 0},
    // psi12: f3 -= c4, f4 += c2; t1 += f2
    {1, 2, 2, 3, -1, 3, 1, +1, 0, +1, 1},
    // psi32: f1 += c6, f4 -= c2; t2 -= f2
    {3, 2, 0, 5, +1, 3, 1, -1, 1, -1, 1},
    // psi43: f1 += c5, f2 -= c4; t1 += f3
    {4, 3, 0, 4, +1, 1, 3, -1, 0, +1, 2},
    // psi23: f1 -= c5, f4 += c3; t2 -= f3
    {2, 3, 0, 4, -1, 3, 2, +1, 1, -1, 2},
    // psi34: f1 -= c1, f2 += c2; t1 += f4
    {3, 4, 0, 0, -1, 1, 1, +1, 0, +1, 3},
    // psi14: f2 -= c2, f3 += c3; t2 -= f4
    {1, 4, 1, 1, -1, 2, 2, +1, 1, -1, 3},
}};

const GeneratorRow& row_of(Generator g) { return kRows[static_cast<size_t>(g)]; }

constexpr std::array<std::string_view, kGeneratorCount> kNames = {
    "psi21", "psi41", "psi12", "psi32", "psi43", "psi23", "psi34", "psi14",
};

}  // namespace

int generator_i(Generator g) { return row_of(g).i; }
int generator_j(Generator g) { return row_of(g).j; }

std::string_view generator_name(Generator g) { return kNames[static_cast<size_t>(g)]; }

std::optional<Generator> generator_from_ij(int i, int j) {
    for (Generator g : kGeneratorOrder) {
        if (row_of(g).i == i && row_of(g).j == j) return g;
    }
    return std::nullopt;
}

GeneratorDelta generator_delta(const std::array<Int, 6>& c, Generator g) {
    const GeneratorRow& r = row_of(g);
    GeneratorDelta d;
    d.f_delta[r.fa] = r.sa * c[r.ca];
    d.f_delta[r.fb] = r.sb * c[r.cb];
    d.t_slot = r.t_slot + 1;
    d.t_sign = r.t_sign;
    d.f_read_index = r.f_read + 1;
    return d;
}

ClasperForm apply_generator(ClasperForm link, Generator g, const Int& exponent) {
    const GeneratorRow& r = row_of(g);
    // f[f_read] is untouched by this generator, so g^e increments t by
    // exactly e * sign * f[f_read].
    link.t[r.t_slot] += exponent * r.t_sign * link.f[r.f_read];
    link.f[r.fa] += exponent * r.sa * link.c[r.ca];
    link.f[r.fb] += exponent * r.sb * link.c[r.cb];
    return link;
}

ClasperForm apply_word(ClasperForm link, const MoveWord& word) {
    for (const WordEntry& e : word) link = apply_generator(std::move(link), e.gen, e.power);
    return link;
}

MoveWord invert_word(const MoveWord& word) {
    MoveWord inv;
    inv.reserve(word.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it) inv.push_back({it->gen, -it->power});
    return inv;
}

MoveWord commutator_word(Generator g, Generator h) {
    return commutator_power_word(g, h, 1);
}

MoveWord commutator_power_word(Generator g, Generator h, const Int& k) {
    if (g == h) throw std::invalid_argument("commutator of a generator with itself");
    return MoveWord{{h, -1}, {g, -k}, {h, 1}, {g, k}};
}

std::pair<Int, Int> commutator_t_effect(const std::array<Int, 6>& c, Generator g, Generator h) {
    for (int idx = 0; idx < 6; ++idx) {
        if (kCommutatorPairs[idx].first == g && kCommutatorPairs[idx].second == h) {
            return commutator_t_effect(c, idx);
        }
    }
    throw std::invalid_argument("commutator_t_effect: pair has no tabulated row");
}

std::pair<Int, Int> commutator_t_effect(const std::array<Int, 6>& c, int pair_index) {
    switch (pair_index) {
        case 0: return {0, c[0]};
        case 1: return {c[1], -c[1]};
        case 2: return {c[2], 0};
        case 3: return {0, c[3]};
        case 4: return {-c[4], c[4]};
        case 5: return {c[5], 0};
        default: throw std::invalid_argument("commutator_t_effect: pair index out of range");
    }
}

MoveWord derived_generator_word(int i, int j) {
    if (i < 1 || i > 4 || j < 1 || j > 4 || i == j)
        throw std::invalid_argument("derived_generator_word: bad component pair");
    if (generator_from_ij(i, j))
        throw std::invalid_argument("derived_generator_word: pair is already a generator");
    // psi_ij = (psi_aj psi_bj)^-1 where {a, b} are the two remaining
    // components; same-target factors commute, so order is free.
    MoveWord word;
    for (int a = 1; a <= 4; ++a) {
        if (a == i || a == j) continue;
        word.push_back({*generator_from_ij(a, j), -1});
    }
    return word;
}

ClasperForm levine_to_clasper(const LevineForm& t) {
    ClasperForm link;
    link.c = {-t.l, -t.r, -t.k, -t.e[0], -t.e[1], -t.e[2]};
    link.f = {-t.e[5], t.e[4], -t.e[3], t.d};
    link.t = {t.e[6] + t.e[7], -t.e[6]};
    return link;
}

std::pair<LevineForm, MoveWord> clasper_to_levine(const ClasperForm& link) {
    MoveWord word;
    PositiveOrInfinite g = gcd_star({link.c[0], link.c[1], link.c[2]});
    if (!g.is_infinite()) {
        // psi21 shifts f4 by -c1, psi32 by -c2, psi23 by +c3. Combine an
        // extended-gcd certificate x*c1 + y*c2 + z*c3 = g to subtract
        // floor(f4/g)*g from f4.
        Int x, y, z, u;
        Int g12 = ext_gcd(link.c[0], link.c[1], x, y);
        Int g123 = ext_gcd(g12, link.c[2], u, z);
        x *= u;
        y *= u;
        Int q = floor_div(link.f[3], g123);
        if (q * x != 0) word.push_back({Generator::Psi21, q * x});
        if (q * y != 0) word.push_back({Generator::Psi32, q * y});
        if (q * z != 0) word.push_back({Generator::Psi23, -q * z});
    }
    ClasperForm moved = apply_word(link, word);
    LevineForm t;
    t.k = -moved.c[2];
    t.l = -moved.c[0];
    t.r = -moved.c[1];
    t.d = moved.f[3];
    t.e[0] = -moved.c[3];
    t.e[1] = -moved.c[4];
    t.e[2] = -moved.c[5];
    t.e[3] = -moved.f[2];
    t.e[4] = moved.f[1];
    t.e[5] = -moved.f[0];
    t.e[6] = -moved.t[1];
    t.e[7] = moved.t[0] + moved.t[1];
    return {t, word};
}

LevineForm phi_move(const LevineForm& t, PhiMove which,
                    const std::optional<std::array<Int, 3>>& abc) {
    // Row increments to (e4..e8), evaluated on the tuple before the move.
    std::array<Int, 5> add{};
    switch (which) {
        case PhiMove::Phi1:
            add = {t.k, t.r, 0, t.d, -t.d};
            break;
        case PhiMove::Phi2:
            add = {-t.k, 0, t.l, -t.d, 0};
            break;
        case PhiMove::Phi3:
            add = {-t.e[0], 0, t.e[2], t.e[4], 0};
            break;
        case PhiMove::Phi4:
            add = {t.e[1], t.e[2], 0, t.e[5], -t.e[5]};
            break;
        case PhiMove::Phi5:
            add = {0, -t.e[0], -t.e[1], 0, t.e[3]};
            break;
        case PhiMove::Phi6: {
            if (!abc) throw std::invalid_argument("phi_move: Phi6 requires parameters (a,b,c)");
            const Int& a = (*abc)[0];
            const Int& b = (*abc)[1];
            const Int& c = (*abc)[2];
            if (a * t.k - b * t.r + c * t.l != 0)
                throw std::invalid_argument("phi_move: Phi6 parameters must satisfy a*k - b*r + c*l = 0");
            add = {c * t.e[1] - b * t.e[0], -a * t.e[0], 0, a * t.e[3],
                   -a * b * t.e[0] - c * t.e[5] + b * t.e[4]};
            break;
        }
        default:
            throw std::invalid_argument("phi_move: unknown relation");
    }
    LevineForm out = t;
    for (int idx = 0; idx < 5; ++idx) out.e[static_cast<size_t>(idx) + 3] += add[static_cast<size_t>(idx)];
    return out;
}

}  // namespace lh4

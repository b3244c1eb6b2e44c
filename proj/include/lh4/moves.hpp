#pragma once

#include "lh4/core.hpp"

#include <optional>
#include <string_view>
#include <utility>

namespace lh4 {

/// The eight primitive moves psi_ij (push component j over the spanning
/// disc of component i), in the fixed order used everywhere a word or a
/// matrix column is indexed by exponent position a1..a8.
enum class Generator : int {
    Psi21 = 0,
    Psi41 = 1,
    Psi12 = 2,
    Psi32 = 3,
    Psi43 = 4,
    Psi23 = 5,
    Psi34 = 6,
    Psi14 = 7,
};

inline constexpr int kGeneratorCount = 8;

inline constexpr std::array<Generator, kGeneratorCount> kGeneratorOrder = {
    Generator::Psi21, Generator::Psi41, Generator::Psi12, Generator::Psi32,
    Generator::Psi43, Generator::Psi23, Generator::Psi34, Generator::Psi14,
};

/// Component whose disc is pushed over (the first subscript).
int generator_i(Generator g);
/// Component being pushed (the second subscript).
int generator_j(Generator g);
std::string_view generator_name(Generator g);

/// The primitive move for subscripts (i, j), if that pair has a row in
/// the move table. The other four pairs are realized by
/// derived_generator_word.
std::optional<Generator> generator_from_ij(int i, int j);

/// One signed power of a generator. A word is applied first entry first,
/// so the product notation "psi_b psi_a" (rightmost factor acting first)
/// is the sequence [psi_a, psi_b].
struct WordEntry {
    Generator gen;
    Int power;

    friend bool operator==(const WordEntry&, const WordEntry&) = default;
};

using MoveWord = std::vector<WordEntry>;

/// How one generator acts at a given c: the f-translation, and which t
/// slot is incremented by (sign * the f coordinate at f_read_index).
/// Structural invariant: f_delta[f_read_index - 1] = 0, i.e. a move
/// never changes the f coordinate its own t-increment reads, which is
/// what makes powers exact.
struct GeneratorDelta {
    std::array<Int, 4> f_delta{};
    int t_slot = 1;      // 1 or 2
    int t_sign = 1;      // +1 or -1
    int f_read_index = 1;  // 1..4
};

GeneratorDelta generator_delta(const std::array<Int, 6>& c, Generator g);

/// Apply g^exponent. The c part never changes; f moves by
/// exponent * f_delta; the t slot moves by exponent * sign * f[read].
ClasperForm apply_generator(ClasperForm link, Generator g, const Int& exponent);

/// Sequential application, first entry first. The empty word is the identity.
ClasperForm apply_word(ClasperForm link, const MoveWord& word);

/// Reversed sequence with negated exponents; the exact inverse map.
MoveWord invert_word(const MoveWord& word);

/// The word acting as the commutator [g, h] = g h g^-1 h^-1
/// (rightmost factor first): sequence [h^-1, g^-1, h, g]. Requires g != h.
MoveWord commutator_word(Generator g, Generator h);

/// Equal-effect realization of [g, h]^k as the 4-entry word
/// [h^-1, g^-k, h, g^k]. Fixes every f and scales the commutator's
/// t-effect linearly in k.
MoveWord commutator_power_word(Generator g, Generator h, const Int& k);

/// The six commutator pairs with a tabulated t-effect, in fixed order:
/// [psi14,psi21], [psi14,psi12], [psi43,psi14], [psi32,psi43],
/// [psi21,psi23], [psi12,psi41].
inline constexpr std::array<std::pair<Generator, Generator>, 6> kCommutatorPairs = {{
    {Generator::Psi14, Generator::Psi21},
    {Generator::Psi14, Generator::Psi12},
    {Generator::Psi43, Generator::Psi14},
    {Generator::Psi32, Generator::Psi43},
    {Generator::Psi21, Generator::Psi23},
    {Generator::Psi12, Generator::Psi41},
}};

/// Closed-form t-effect (dt1, dt2) of a tabulated commutator pair at c:
/// (0,c1), (c2,-c2), (c3,0), (0,c4), (-c5,c5), (c6,0). Independent of f
/// and t. Other pairs are a usage error.
std::pair<Int, Int> commutator_t_effect(const std::array<Int, 6>& c, Generator g, Generator h);

/// Same, by index 0..5 into kCommutatorPairs.
std::pair<Int, Int> commutator_t_effect(const std::array<Int, 6>& c, int pair_index);

/// The word realizing psi_ij for one of the four off-table pairs
/// {(3,1),(1,3),(4,2),(2,4)} via psi_il^-1 = psi_jl psi_kl. Same-target
/// generators commute, so factor order inside the pair is immaterial.
MoveWord derived_generator_word(int i, int j);

/// (k,l,r,d,e1..e8) -> (-l,-r,-k,-e1,-e2,-e3 | -e6,e5,-e4,d | e7+e8,-e7).
ClasperForm levine_to_clasper(const LevineForm& t);

/// Normalizes f4 into [0, gcd*(c1,c2,c3)) by a word of moves (f4 is
/// untouched when the gcd is infinite) and reads the Levine tuple off the
/// result. The returned word w satisfies apply_word(link, w) = the tuple
/// the Levine form was read from.
std::pair<LevineForm, MoveWord> clasper_to_levine(const ClasperForm& link);

/// Levine's relations on (e4..e8). Phi6 takes parameters (a,b,c) with
/// a*k - b*r + c*l = 0.
enum class PhiMove : int { Phi1 = 1, Phi2, Phi3, Phi4, Phi5, Phi6 };

LevineForm phi_move(const LevineForm& t, PhiMove which,
                    const std::optional<std::array<Int, 3>>& abc = std::nullopt);

}  // namespace lh4

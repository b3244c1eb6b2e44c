#pragma once

#include "lh4/intlin.hpp"
#include "lh4/moves.hpp"

#include <optional>

namespace lh4 {

enum class FailureStage : int {
    CMismatch,     // clasp counts differ
    FUnreachable,  // no move word reaches the target f
    TUnreachable,  // no f-fixing word reaches the target t
};

std::string_view failure_stage_name(FailureStage s);

/// Decision output. An equivalent verdict always carries a certificate
/// whose application maps the first tuple exactly onto the second; a
/// negative verdict names the stage that failed.
struct Verdict {
    bool equivalent = false;
    MoveWord certificate;
    std::optional<FailureStage> failure_stage;
};

/// The 4x8 matrix of f-deltas, rows f1..f4, columns in the fixed
/// generator order. Column g equals generator_delta(c, g).f_delta.
IntMatrix build_move_matrix(const std::array<Int, 6>& c);

/// The word with exponents a1..a8 in the fixed generator order
/// (zero entries skipped).
MoveWord word_from_exponents(std::span<const Int> exponents);

/// A word moving the f-part of l1 onto the f-part of l2, if one exists.
/// Requires equal c-parts. Any particular solution is acceptable.
std::optional<MoveWord> step2_word(const ClasperForm& l1, const ClasperForm& l2);

/// One fixed-order word per kernel-lattice basis vector of the move
/// matrix; each returned word fixes the f-part of every tuple with this c.
std::vector<MoveWord> kernel_words(const std::array<Int, 6>& c);

/// Exact t-change of applying w at (c, f, t = 0). For f-fixing words the
/// effect of w^k is k times the effect of w.
std::pair<Int, Int> word_t_effect(const std::array<Int, 6>& c, const std::array<Int, 4>& f,
                                  const MoveWord& w);

/// Generators of the achievable t-change lattice for f-fixing words at a
/// fixed f: the six commutator closed forms at c plus the t-effect of
/// each kernel word evaluated at f.
struct StabilizerBasis {
    std::array<std::pair<Int, Int>, 6> commutator_columns;
    std::vector<std::pair<Int, Int>> kernel_columns;
    std::vector<MoveWord> kernel_word_list;            // aligned with kernel_columns
    std::vector<std::vector<Int>> kernel_exponents;    // exponent vectors a1..a8

    /// All columns as 2-vectors, commutators first.
    std::vector<std::vector<Int>> all_columns() const;
};

StabilizerBasis stabilizer_t_basis(const std::array<Int, 6>& c, const std::array<Int, 4>& f);

/// The full decision: compare c, match f by a Diophantine solve, then
/// match t inside the stabilizer lattice. Certificates are verified by
/// application before returning; a verification failure throws instead
/// of producing a wrong verdict.
Verdict decide_equiv(const ClasperForm& l1, const ClasperForm& l2);

/// Orbit invariant: c, the canonical coset representative of f modulo
/// the move-matrix column lattice, and the canonical representative of
/// the transported t modulo the stabilizer lattice at that f.
struct CanonicalForm {
    std::array<Int, 6> c{};
    std::array<Int, 4> f_star{};
    std::array<Int, 2> t_star{};

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const ClasperForm& link);

}  // namespace lh4

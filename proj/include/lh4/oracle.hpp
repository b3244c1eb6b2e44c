#pragma once

#include "lh4/moves.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace lh4 {

/// Deterministic source of bounded integers for instance generation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform value in [lo, hi] (inclusive); bounds must fit the spread.
    std::int64_t pick(std::int64_t lo, std::int64_t hi);

    Int pick_int(const Int& bound);  // in [-bound, bound]
    Int pick_nonzero(const Int& bound);

private:
    std::mt19937_64 engine_;
};

struct SearchConfig {
    int max_depth = 6;
    Int coord_bound = 32;
    std::uint64_t seed = 0;
};

/// Per-field bounds for random_instance.
struct InstanceProfile {
    Int c_bound = 10;
    Int f_bound = 20;
    Int t_bound = 20;
    int max_word_length = 10;
    Int exponent_bound = 3;
};

/// A seeded random tuple plus an independently drawn word; identical
/// seeds reproduce identical outputs.
std::pair<ClasperForm, MoveWord> random_instance(const SearchConfig& cfg, const InstanceProfile& profile);

/// Breadth-first search over single signed generator steps from l1,
/// pruning states whose f or t coordinates leave [-coord_bound,
/// coord_bound]. Returns a shortest in-bounds word reaching l2 (ties
/// broken by the fixed generator order, +1 before -1), or nothing.
/// Absence is inconclusive; a returned word is a proof.
std::optional<MoveWord> bounded_bfs(const ClasperForm& l1, const ClasperForm& l2, const SearchConfig& cfg);

/// True iff applying w to l1 reproduces l2 in all 12 entries.
bool verify_certificate(const ClasperForm& l1, const MoveWord& w, const ClasperForm& l2);

}  // namespace lh4

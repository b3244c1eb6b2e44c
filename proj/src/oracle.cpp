#include "lh4/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace lh4 {

std::int64_t Rng::pick(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("Rng::pick: empty range");
    // Modulo reduction keeps the stream identical across platforms; the
    // tiny bias is irrelevant for test-instance generation.
    std::uint64_t spread = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % spread);
}

Int Rng::pick_int(const Int& bound) {
    if (bound < 0) throw std::invalid_argument("Rng::pick_int: negative bound");
    if (bound > 1000000000) throw std::invalid_argument("Rng::pick_int: bound too large");
    std::int64_t b = bound.convert_to<std::int64_t>();
    return Int(pick(-b, b));
}

Int Rng::pick_nonzero(const Int& bound) {
    if (bound < 1) throw std::invalid_argument("Rng::pick_nonzero: bound must be positive");
    std::int64_t b = bound.convert_to<std::int64_t>();
    std::int64_t v = pick(1, 2 * b);
    return Int(v <= b ? v : b - v);  // maps to [1,b] then [-1,-b]
}

std::pair<ClasperForm, MoveWord> random_instance(const SearchConfig& cfg, const InstanceProfile& profile) {
    Rng rng(cfg.seed);
    ClasperForm link;
    for (auto& x : link.c) x = rng.pick_int(profile.c_bound);
    for (auto& x : link.f) x = rng.pick_int(profile.f_bound);
    for (auto& x : link.t) x = rng.pick_int(profile.t_bound);

    MoveWord word;
    int len = static_cast<int>(rng.pick(0, profile.max_word_length));
    for (int k = 0; k < len; ++k) {
        Generator g = kGeneratorOrder[static_cast<size_t>(rng.pick(0, kGeneratorCount - 1))];
        word.push_back({g, rng.pick_nonzero(profile.exponent_bound)});
    }
    return {std::move(link), std::move(word)};
}

namespace {

using State = std::array<Int, 6>;  // f1..f4, t1, t2

State state_of(const ClasperForm& link) {
    return {link.f[0], link.f[1], link.f[2], link.f[3], link.t[0], link.t[1]};
}

ClasperForm with_state(const std::array<Int, 6>& c, const State& s) {
    ClasperForm link;
    link.c = c;
    link.f = {s[0], s[1], s[2], s[3]};
    link.t = {s[4], s[5]};
    return link;
}

bool in_bounds(const State& s, const Int& bound) {
    for (const Int& x : s)
        if (abs(x) > bound) return false;
    return true;
}

}  // namespace

std::optional<MoveWord> bounded_bfs(const ClasperForm& l1, const ClasperForm& l2, const SearchConfig& cfg) {
    if (l1.c != l2.c) return std::nullopt;
    const State target = state_of(l2);
    const State start = state_of(l1);
    if (start == target) return MoveWord{};

    struct Edge {
        std::int64_t parent;
        Generator gen;
        int sign;
    };
    std::vector<State> states = {start};
    std::vector<Edge> edges = {{-1, Generator::Psi21, 0}};
    std::map<State, std::int64_t> seen = {{start, 0}};
    std::deque<std::pair<std::int64_t, int>> frontier = {{0, 0}};  // node, depth

    auto reconstruct = [&](std::int64_t node) {
        MoveWord w;
        while (edges[static_cast<size_t>(node)].parent >= 0) {
            w.push_back({edges[static_cast<size_t>(node)].gen, edges[static_cast<size_t>(node)].sign});
            node = edges[static_cast<size_t>(node)].parent;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    while (!frontier.empty()) {
        auto [node, depth] = frontier.front();
        frontier.pop_front();
        if (depth >= cfg.max_depth) continue;
        ClasperForm here = with_state(l1.c, states[static_cast<size_t>(node)]);
        for (Generator g : kGeneratorOrder) {
            for (int sign : {+1, -1}) {
                State next = state_of(apply_generator(here, g, sign));
                if (!in_bounds(next, cfg.coord_bound)) continue;
                if (seen.contains(next)) continue;
                std::int64_t id = static_cast<std::int64_t>(states.size());
                states.push_back(next);
                edges.push_back({node, g, sign});
                seen.emplace(next, id);
                if (next == target) return reconstruct(id);
                frontier.emplace_back(id, depth + 1);
            }
        }
    }
    return std::nullopt;
}

bool verify_certificate(const ClasperForm& l1, const MoveWord& w, const ClasperForm& l2) {
    return apply_word(l1, w) == l2;
}

}  // namespace lh4

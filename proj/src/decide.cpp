#include "lh4/decide.hpp"

namespace lh4 {

std::string_view failure_stage_name(FailureStage s) {
    switch (s) {
        case FailureStage::CMismatch: return "C_MISMATCH";
        case FailureStage::FUnreachable: return "F_UNREACHABLE";
        case FailureStage::TUnreachable: return "T_UNREACHABLE";
    }
    throw std::logic_error("failure_stage_name: bad stage");
}

IntMatrix build_move_matrix(const std::array<Int, 6>& c) {
    IntMatrix a(4, 8);
    for (int col = 0; col < kGeneratorCount; ++col) {
        GeneratorDelta d = generator_delta(c, kGeneratorOrder[static_cast<size_t>(col)]);
        for (int row = 0; row < 4; ++row) a.at(row, col) = d.f_delta[static_cast<size_t>(row)];
    }
    return a;
}

MoveWord word_from_exponents(std::span<const Int> exponents) {
    if (exponents.size() != kGeneratorCount)
        throw std::invalid_argument("word_from_exponents: need 8 exponents");
    MoveWord w;
    for (int idx = 0; idx < kGeneratorCount; ++idx) {
        if (exponents[static_cast<size_t>(idx)] != 0)
            w.push_back({kGeneratorOrder[static_cast<size_t>(idx)], exponents[static_cast<size_t>(idx)]});
    }
    return w;
}

std::optional<MoveWord> step2_word(const ClasperForm& l1, const ClasperForm& l2) {
    if (l1.c != l2.c) throw std::invalid_argument("step2_word: c-parts differ");
    std::array<Int, 4> delta;
    for (size_t i = 0; i < 4; ++i) delta[i] = l2.f[i] - l1.f[i];
    auto sol = solve_diophantine(build_move_matrix(l1.c), delta);
    if (!sol) return std::nullopt;
    return word_from_exponents(sol->particular);
}

std::vector<MoveWord> kernel_words(const std::array<Int, 6>& c) {
    std::vector<MoveWord> words;
    for (const auto& b : kernel_lattice_basis(build_move_matrix(c))) words.push_back(word_from_exponents(b));
    return words;
}

std::pair<Int, Int> word_t_effect(const std::array<Int, 6>& c, const std::array<Int, 4>& f,
                                  const MoveWord& w) {
    ClasperForm probe;
    probe.c = c;
    probe.f = f;
    probe = apply_word(std::move(probe), w);
    return {probe.t[0], probe.t[1]};
}

std::vector<std::vector<Int>> StabilizerBasis::all_columns() const {
    std::vector<std::vector<Int>> cols;
    for (const auto& [x, y] : commutator_columns) cols.push_back({x, y});
    for (const auto& [x, y] : kernel_columns) cols.push_back({x, y});
    return cols;
}

StabilizerBasis stabilizer_t_basis(const std::array<Int, 6>& c, const std::array<Int, 4>& f) {
    StabilizerBasis basis;
    for (int idx = 0; idx < 6; ++idx) basis.commutator_columns[static_cast<size_t>(idx)] = commutator_t_effect(c, idx);
    for (const auto& b : kernel_lattice_basis(build_move_matrix(c))) {
        MoveWord w = word_from_exponents(b);
        basis.kernel_columns.push_back(word_t_effect(c, f, w));
        basis.kernel_word_list.push_back(std::move(w));
        basis.kernel_exponents.push_back(b);
    }
    return basis;
}

namespace {

// Scale a kernel exponent vector and append the resulting word. The
// scaled word has the same f-effect (zero) but its t-effect differs from
// k times the single word's effect by a commutator-lattice element; the
// residual pass below absorbs that.
void append_scaled_kernel_word(MoveWord& cert, std::span<const Int> exponents, const Int& k) {
    std::vector<Int> scaled(exponents.begin(), exponents.end());
    for (Int& e : scaled) e *= k;
    MoveWord w = word_from_exponents(scaled);
    cert.insert(cert.end(), w.begin(), w.end());
}

}  // namespace

Verdict decide_equiv(const ClasperForm& l1, const ClasperForm& l2) {
    if (l1.c != l2.c) return {false, {}, FailureStage::CMismatch};

    auto w2 = step2_word(l1, l2);
    if (!w2) return {false, {}, FailureStage::FUnreachable};
    ClasperForm matched = apply_word(l1, *w2);

    StabilizerBasis basis = stabilizer_t_basis(l1.c, l2.f);
    const int s = static_cast<int>(basis.kernel_columns.size());
    IntMatrix tsys(2, 6 + s);
    for (int idx = 0; idx < 6; ++idx) {
        tsys.at(0, idx) = basis.commutator_columns[static_cast<size_t>(idx)].first;
        tsys.at(1, idx) = basis.commutator_columns[static_cast<size_t>(idx)].second;
    }
    for (int idx = 0; idx < s; ++idx) {
        tsys.at(0, 6 + idx) = basis.kernel_columns[static_cast<size_t>(idx)].first;
        tsys.at(1, 6 + idx) = basis.kernel_columns[static_cast<size_t>(idx)].second;
    }
    std::array<Int, 2> dt = {l2.t[0] - matched.t[0], l2.t[1] - matched.t[1]};
    auto coeffs = solve_diophantine(tsys, dt);
    if (!coeffs) return {false, {}, FailureStage::TUnreachable};

    MoveWord cert = *w2;
    for (int idx = 0; idx < s; ++idx) {
        const Int& k = coeffs->particular[static_cast<size_t>(6 + idx)];
        if (k != 0) append_scaled_kernel_word(cert, basis.kernel_exponents[static_cast<size_t>(idx)], k);
    }

    // The scaled kernel words reach t2 up to a commutator-lattice
    // residual; match it with the constant-effect commutator powers.
    ClasperForm after = apply_word(l1, cert);
    if (after.f != l2.f) throw std::logic_error("decide_equiv: kernel words moved f");
    IntMatrix csys(2, 6);
    for (int idx = 0; idx < 6; ++idx) {
        csys.at(0, idx) = basis.commutator_columns[static_cast<size_t>(idx)].first;
        csys.at(1, idx) = basis.commutator_columns[static_cast<size_t>(idx)].second;
    }
    std::array<Int, 2> residual = {l2.t[0] - after.t[0], l2.t[1] - after.t[1]};
    auto cpow = solve_diophantine(csys, residual);
    if (!cpow) throw std::logic_error("decide_equiv: residual escaped the commutator lattice");
    for (int idx = 0; idx < 6; ++idx) {
        const Int& k = cpow->particular[static_cast<size_t>(idx)];
        if (k != 0) {
            const auto& [g, h] = kCommutatorPairs[static_cast<size_t>(idx)];
            MoveWord w = commutator_power_word(g, h, k);
            cert.insert(cert.end(), w.begin(), w.end());
        }
    }

    if (apply_word(l1, cert) != l2) throw std::logic_error("decide_equiv: certificate failed verification");
    return {true, std::move(cert), std::nullopt};
}

CanonicalForm canonical_form(const ClasperForm& link) {
    IntMatrix a = build_move_matrix(link.c);
    std::vector<std::vector<Int>> move_cols;
    for (int j = 0; j < a.cols(); ++j) move_cols.push_back(a.column(j));

    LatticeReduction fred = lattice_reduce(link.f, move_cols);
    CanonicalForm out;
    out.c = link.c;
    std::copy(fred.representative.begin(), fred.representative.end(), out.f_star.begin());

    std::array<Int, 4> delta;
    for (size_t i = 0; i < 4; ++i) delta[i] = out.f_star[i] - link.f[i];
    auto sol = solve_diophantine(a, delta);
    if (!sol) throw std::logic_error("canonical_form: representative not reachable");
    ClasperForm moved = apply_word(link, word_from_exponents(sol->particular));

    StabilizerBasis basis = stabilizer_t_basis(link.c, out.f_star);
    LatticeReduction tred = lattice_reduce(moved.t, basis.all_columns());
    std::copy(tred.representative.begin(), tred.representative.end(), out.t_star.begin());
    return out;
}

}  // namespace lh4

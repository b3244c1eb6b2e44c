#pragma once

#include "lh4/moves.hpp"

#include <string>
#include <variant>

namespace lh4 {

/// The twelve Milnor link-homotopy invariants readable from a clasper
/// tuple: six linking numbers, four length-3 residues, two length-4
/// residues. Residue moduli follow the lower-order-gcd rule.
struct MilnorProfile {
    Int mu12, mu13, mu23, mu14, mu24, mu34;
    Residue mu123, mu124, mu134, mu234;
    Residue mu3124, mu2134;

    friend bool operator==(const MilnorProfile&, const MilnorProfile&) = default;
};

MilnorProfile milnor_profile(const ClasperForm& link);

/// Complete link-homotopy data of a 3-component (sub)link: the three
/// pairwise linking numbers and the triple residue. Equality of
/// TripleForm is link-homotopy of the sublink.
struct TripleForm {
    std::array<int, 3> components{};
    std::array<Int, 3> linking{};
    Residue triple;

    friend bool operator==(const TripleForm&, const TripleForm&) = default;
};

/// The TripleForm of the 3-component sublink obtained by dropping one
/// component (1..4).
TripleForm sublink3(const ClasperForm& link, int drop);

/// Canonical 3-component classification from raw clasp counts: linking
/// numbers (-c12, -c13, -c23) and f reduced mod gcd_sub(c12, c13, c23).
TripleForm classify3(const Int& c12, const Int& c13, const Int& c23, const Int& f);

/// The 2-component rule: a single clasp count c determines the class via
/// the linking number -c.
Int classify2(const Int& c);

/// Classification families with a complete comparable-invariant set.
inline constexpr std::array<std::string_view, 10> kFamilyIds = {
    "T41-1", "T41-2", "T41-3", "T41-4", "T41-5",
    "P43-1", "P43-2", "P43-3", "P43-4", "P43-5",
};

/// The families whose hypotheses hold for this tuple, in kFamilyIds order.
std::vector<std::string> applicability(const ClasperForm& link);

/// Empty when the family applies; otherwise a description of the first
/// violated hypothesis.
std::optional<std::string> family_violation(const ClasperForm& link, std::string_view family);

using ReportValue = std::variant<Int, Residue>;

/// Named values of one family's complete invariant set. Two reports
/// compare equal iff every named value (and residue modulus) agrees.
struct InvariantReport {
    std::string family;
    std::vector<std::pair<std::string, ReportValue>> values;

    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// The family's invariants for an applicable tuple; throws naming the
/// violated hypothesis otherwise.
InvariantReport case_invariants(const ClasperForm& link, std::string_view family);

}  // namespace lh4

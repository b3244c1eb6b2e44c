#pragma once

#include "lh4/moves.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <variant>

namespace lh4 {

using Json = nlohmann::ordered_json;

/// Malformed document; path points at the offending field ("$.c[2]").
class ParseError : public std::runtime_error {
public:
    ParseError(std::string path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

struct ParsedInstance {
    std::variant<ClasperForm, LevineForm> value;
    std::optional<std::string> label;

    bool is_clasper() const { return std::holds_alternative<ClasperForm>(value); }
    /// The clasper tuple, converting a Levine document on demand.
    ClasperForm as_clasper() const;
};

/// Strict parse of an instance document:
///   {"form":"clasper","c":[6],"f":[4],"t":[2]}  or
///   {"form":"levine","k":..,"l":..,"r":..,"d":..,"e":[8]}
/// plus an optional "label". Integers may be JSON numbers or decimal
/// strings; unknown keys are rejected.
ParsedInstance parse_instance(const std::string& text);
ParsedInstance parse_instance_json(const Json& doc, const std::string& root = "$");

Json instance_to_json(const ClasperForm& link, const std::optional<std::string>& label = std::nullopt);
Json instance_to_json(const LevineForm& form, const std::optional<std::string>& label = std::nullopt);

/// Word document: array of {"i":1..4,"j":1..4,"power":nonzero}. Entries
/// whose (i, j) has no generator row are expanded through
/// derived_generator_word with the power distributed over the factors.
MoveWord parse_word(const std::string& text);
MoveWord parse_word_json(const Json& doc, const std::string& root = "$");

Json word_to_json(const MoveWord& word);

/// Right-to-left product rendering, last-applied factor first:
/// [psi21, psi23] -> "ψ23 ψ21". The identity renders as "1".
std::string pretty_word(const MoveWord& word);

/// Numbers within the double-safe range serialize as JSON numbers,
/// anything larger as a decimal string; parsing accepts both.
Json int_to_json(const Int& v);
Int json_to_int(const Json& node, const std::string& path);

Json residue_to_json(const Residue& r);

}  // namespace lh4

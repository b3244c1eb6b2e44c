#include "lh4/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace lh4 {

namespace {

const Int kDoubleSafe = (Int(1) << 53) - 1;

void expect_keys(const Json& obj, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional, const std::string& path) {
    for (const char* key : required) {
        if (!obj.contains(key)) throw ParseError(path, std::string("missing field \"") + key + "\"");
    }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        auto known = [&](std::initializer_list<const char*> keys) {
            return std::any_of(keys.begin(), keys.end(),
                               [&](const char* k) { return it.key() == k; });
        };
        if (!known(required) && !known(optional))
            throw ParseError(path + "." + it.key(), "unknown field");
    }
}

std::vector<Int> parse_int_array(const Json& node, size_t count, const std::string& path) {
    if (!node.is_array()) throw ParseError(path, "expected an array");
    if (node.size() != count)
        throw ParseError(path, "expected " + std::to_string(count) + " entries, got " + std::to_string(node.size()));
    std::vector<Int> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) out.push_back(json_to_int(node[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

Int json_to_int(const Json& node, const std::string& path) {
    if (node.is_number_integer()) return Int(node.get<std::int64_t>());
    if (node.is_number_unsigned()) return Int(node.get<std::uint64_t>());
    if (node.is_number_float()) {
        double d = node.get<double>();
        // Doubles are only trusted while integers are exactly representable.
        if (d != static_cast<double>(static_cast<std::int64_t>(d)) ||
            std::abs(d) > 9007199254740991.0)
            throw ParseError(path, "number is not an exactly representable integer; use a decimal string");
        return Int(static_cast<std::int64_t>(d));
    }
    if (node.is_string()) {
        const std::string s = node.get<std::string>();
        size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start || !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                                              [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw ParseError(path, "expected a decimal integer string");
        return Int(s);
    }
    throw ParseError(path, "expected an integer (number or decimal string)");
}

Json int_to_json(const Int& v) {
    if (abs(v) <= kDoubleSafe) return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

Json residue_to_json(const Residue& r) {
    Json out = Json::object();
    out["value"] = int_to_json(r.value);
    out["modulus"] = int_to_json(r.modulus);
    return out;
}

ClasperForm ParsedInstance::as_clasper() const {
    if (const auto* link = std::get_if<ClasperForm>(&value)) return *link;
    return levine_to_clasper(std::get<LevineForm>(value));
}

ParsedInstance parse_instance_json(const Json& doc, const std::string& root) {
    if (!doc.is_object()) throw ParseError(root, "expected an object");
    if (!doc.contains("form")) throw ParseError(root + ".form", "missing field");
    if (!doc["form"].is_string()) throw ParseError(root + ".form", "expected \"clasper\" or \"levine\"");
    const std::string form = doc["form"].get<std::string>();

    ParsedInstance out;
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw ParseError(root + ".label", "expected a string");
        out.label = doc["label"].get<std::string>();
    }

    if (form == "clasper") {
        expect_keys(doc, {"form", "c", "f", "t"}, {"label"}, root);
        ClasperForm link;
        auto c = parse_int_array(doc["c"], 6, root + ".c");
        auto f = parse_int_array(doc["f"], 4, root + ".f");
        auto t = parse_int_array(doc["t"], 2, root + ".t");
        std::copy(c.begin(), c.end(), link.c.begin());
        std::copy(f.begin(), f.end(), link.f.begin());
        std::copy(t.begin(), t.end(), link.t.begin());
        out.value = std::move(link);
        return out;
    }
    if (form == "levine") {
        expect_keys(doc, {"form", "k", "l", "r", "d", "e"}, {"label"}, root);
        LevineForm lf;
        lf.k = json_to_int(doc["k"], root + ".k");
        lf.l = json_to_int(doc["l"], root + ".l");
        lf.r = json_to_int(doc["r"], root + ".r");
        lf.d = json_to_int(doc["d"], root + ".d");
        auto e = parse_int_array(doc["e"], 8, root + ".e");
        std::copy(e.begin(), e.end(), lf.e.begin());
        out.value = std::move(lf);
        return out;
    }
    throw ParseError(root + ".form", "unknown form \"" + form + "\"");
}

ParsedInstance parse_instance(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError("$", std::string("invalid JSON: ") + err.what());
    }
    return parse_instance_json(doc);
}

Json instance_to_json(const ClasperForm& link, const std::optional<std::string>& label) {
    Json out = Json::object();
    out["form"] = "clasper";
    out["c"] = Json::array();
    out["f"] = Json::array();
    out["t"] = Json::array();
    for (const Int& x : link.c) out["c"].push_back(int_to_json(x));
    for (const Int& x : link.f) out["f"].push_back(int_to_json(x));
    for (const Int& x : link.t) out["t"].push_back(int_to_json(x));
    if (label) out["label"] = *label;
    return out;
}

Json instance_to_json(const LevineForm& form, const std::optional<std::string>& label) {
    Json out = Json::object();
    out["form"] = "levine";
    out["k"] = int_to_json(form.k);
    out["l"] = int_to_json(form.l);
    out["r"] = int_to_json(form.r);
    out["d"] = int_to_json(form.d);
    out["e"] = Json::array();
    for (const Int& x : form.e) out["e"].push_back(int_to_json(x));
    if (label) out["label"] = *label;
    return out;
}

MoveWord parse_word_json(const Json& doc, const std::string& root) {
    if (!doc.is_array()) throw ParseError(root, "expected an array of moves");
    MoveWord word;
    for (size_t idx = 0; idx < doc.size(); ++idx) {
        const std::string path = root + "[" + std::to_string(idx) + "]";
        const Json& entry = doc[idx];
        if (!entry.is_object()) throw ParseError(path, "expected an object");
        expect_keys(entry, {"i", "j", "power"}, {}, path);
        Int iv = json_to_int(entry["i"], path + ".i");
        Int jv = json_to_int(entry["j"], path + ".j");
        if (iv < 1 || iv > 4) throw ParseError(path + ".i", "component index must be 1..4");
        if (jv < 1 || jv > 4) throw ParseError(path + ".j", "component index must be 1..4");
        int i = iv.convert_to<int>();
        int j = jv.convert_to<int>();
        if (i == j) throw ParseError(path, "indices must differ");
        Int power = json_to_int(entry["power"], path + ".power");
        if (power == 0) throw ParseError(path + ".power", "power must be nonzero");
        if (auto g = generator_from_ij(i, j)) {
            word.push_back({*g, power});
        } else {
            // Same-target factors commute, so a power distributes over
            // the derived pair exactly.
            for (WordEntry e : derived_generator_word(i, j)) {
                e.power *= power;
                word.push_back(std::move(e));
            }
        }
    }
    return word;
}

MoveWord parse_word(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError("$", std::string("invalid JSON: ") + err.what());
    }
    return parse_word_json(doc);
}

Json word_to_json(const MoveWord& word) {
    Json out = Json::array();
    for (const WordEntry& e : word) {
        Json obj = Json::object();
        obj["i"] = generator_i(e.gen);
        obj["j"] = generator_j(e.gen);
        obj["power"] = int_to_json(e.power);
        out.push_back(std::move(obj));
    }
    return out;
}

std::string pretty_word(const MoveWord& word) {
    if (word.empty()) return "1";
    std::string out;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (!out.empty()) out += ' ';
        out += "\xCF\x88";  // psi
        out += std::to_string(generator_i(it->gen));
        out += std::to_string(generator_j(it->gen));
        if (it->power != 1) out += "^" + it->power.str();
    }
    return out;
}

}  // namespace lh4

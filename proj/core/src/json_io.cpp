#include "defectlab/json_io.hpp"

#include <fstream>
#include <memory>

namespace defectlab {

Morphism morphism_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rules") || !j["rules"].is_object())
        throw error(errc::parse_error, "morphism JSON needs a \"rules\" object");
    std::vector<std::pair<std::string, std::string>> rules;
    for (const auto& [letter, image] : j["rules"].items()) {
        if (!image.is_string())
            throw error(errc::parse_error, "morphism image must be a string");
        rules.emplace_back(letter, image.get<std::string>());
    }
    AlphabetPtr codomain;
    if (j.contains("alphabet")) {
        if (!j["alphabet"].is_array())
            throw error(errc::parse_error, "morphism alphabet must be an array");
        std::vector<std::string> tokens;
        for (const auto& t : j["alphabet"]) tokens.push_back(t.get<std::string>());
        codomain = Alphabet::make(std::move(tokens));
    }
    return Morphism::from_rules(rules, std::move(codomain));
}

json morphism_to_json(const Morphism& m) {
    json rules = json::object();
    for (std::size_t a = 0; a < m.domain()->size(); ++a)
        rules[m.domain()->token(static_cast<Symbol>(a))] =
            m.image(static_cast<Symbol>(a)).str();
    json alphabet = json::array();
    for (const auto& t : m.codomain()->tokens()) alphabet.push_back(t);
    return json{{"rules", rules}, {"alphabet", alphabet}};
}

WordSpec wordspec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw error(errc::parse_error, "word spec JSON needs a \"type\"");
    WordSpec spec;
    spec.length = j.value("length", std::int64_t{1});
    const std::string type = j["type"].get<std::string>();
    if (type == "literal") {
        spec.variant = LiteralSpec{Word::parse_new(j.at("text").get<std::string>())};
    } else if (type == "periodic") {
        spec.variant = PeriodicSpec{Word::parse_new(j.at("period").get<std::string>())};
    } else if (type == "fixed_point") {
        spec.variant = FixedPointSpec{morphism_from_json(j.at("morphism")),
                                      j.at("start").get<std::string>()};
    } else if (type == "morphic_image") {
        auto inner = std::make_shared<WordSpec>(wordspec_from_json(j.at("inner")));
        spec.variant = MorphicImageSpec{std::move(inner), morphism_from_json(j.at("morphism"))};
    } else if (type == "closure_sequence") {
        spec.variant = ClosureSequenceSpec{j.value("level", 0)};
    } else {
        throw error(errc::parse_error, "unknown word spec type: " + type);
    }
    return spec;
}

json wordspec_to_json(const WordSpec& spec) {
    json j;
    j["length"] = spec.length;
    if (const auto* lit = std::get_if<LiteralSpec>(&spec.variant)) {
        j["type"] = "literal";
        j["text"] = lit->text.str();
    } else if (const auto* per = std::get_if<PeriodicSpec>(&spec.variant)) {
        j["type"] = "periodic";
        j["period"] = per->period.str();
    } else if (const auto* fp = std::get_if<FixedPointSpec>(&spec.variant)) {
        j["type"] = "fixed_point";
        j["morphism"] = morphism_to_json(fp->morphism);
        j["start"] = fp->start;
    } else if (const auto* mi = std::get_if<MorphicImageSpec>(&spec.variant)) {
        j["type"] = "morphic_image";
        j["inner"] = wordspec_to_json(*mi->inner);
        j["morphism"] = morphism_to_json(mi->morphism);
    } else {
        const auto& cs = std::get<ClosureSequenceSpec>(spec.variant);
        j["type"] = "closure_sequence";
        j["level"] = cs.level;
    }
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::io_error, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw error(errc::parse_error, path + ": " + e.what());
    }
    return j;
}

}  // namespace defectlab

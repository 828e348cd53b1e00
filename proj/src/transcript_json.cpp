// Transcript <-> JSON. Layout:
//   {"m":5,"n":3,
//    "events":[{"i":1,"j":1,"b":0}, ...],
//    "claim":{"kind":"search","u":[1,0,0]}
//         | {"kind":"decision","complete":true,"witness":null}
//         | null,
//    "seed":42}            (seed only present for seeded games)

#include <json.hpp>

#include "diaggames/core.hpp"

namespace diaggames {

using nlohmann::json;

namespace {

json bits_json(const BinaryVector& v) { return json(v.bits()); }

BinaryVector bits_from_json(const json& j) {
    const auto bits = j.get<std::vector<int>>();
    return BinaryVector::from_bits(bits);
}

}  // namespace

std::string to_json(const Transcript& t, int indent) {
    json doc;
    doc["m"] = t.params.m();
    doc["n"] = t.params.n();
    json events = json::array();
    for (const auto& e : t.events) {
        events.push_back({{"i", e.query.row + 1}, {"j", e.query.col + 1}, {"b", e.answer}});
    }
    doc["events"] = std::move(events);
    if (!t.claim) {
        doc["claim"] = nullptr;
    } else if (const auto* s = std::get_if<SearchClaim>(&*t.claim)) {
        doc["claim"] = {{"kind", "search"}, {"u", bits_json(s->u)}};
    } else {
        const auto& d = std::get<DecisionClaim>(*t.claim);
        json c = {{"kind", "decision"}, {"complete", d.complete}};
        c["witness"] = d.witness ? bits_json(*d.witness) : json(nullptr);
        doc["claim"] = std::move(c);
    }
    if (t.seed) doc["seed"] = *t.seed;
    return doc.dump(indent);
}

Transcript transcript_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
        Transcript t(GameParams(doc.at("m").get<int>(), doc.at("n").get<int>()));
        for (const auto& e : doc.at("events")) {
            t.events.push_back(
                {{e.at("i").get<int>() - 1, e.at("j").get<int>() - 1}, e.at("b").get<int>()});
        }
        const auto& c = doc.at("claim");
        if (!c.is_null()) {
            const auto kind = c.at("kind").get<std::string>();
            if (kind == "search") {
                t.claim = SearchClaim{bits_from_json(c.at("u"))};
            } else if (kind == "decision") {
                DecisionClaim d;
                d.complete = c.at("complete").get<bool>();
                if (c.contains("witness") && !c.at("witness").is_null()) {
                    d.witness = bits_from_json(c.at("witness"));
                }
                t.claim = d;
            } else {
                throw GameError("unknown claim kind '" + kind + "'");
            }
        }
        if (doc.contains("seed")) t.seed = doc.at("seed").get<std::uint64_t>();
        t.validate();
        return t;
    } catch (const json::exception& e) {
        throw GameError(std::string("malformed transcript: ") + e.what());
    }
}

}  // namespace diaggames

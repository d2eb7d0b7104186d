#include "hypcli/corpus.hpp"

#include <cstdlib>
#include <fstream>
#include <set>

#include <json.hpp>

#include "hyp/error.hpp"

namespace hypcli {

using hyp::CorpusError;
using nlohmann::json;

namespace {

hyp::Irreducibility parse_flag(const std::string& s, const std::string& id) {
    if (s == "declared_true") return hyp::Irreducibility::DeclaredTrue;
    if (s == "declared_false") return hyp::Irreducibility::DeclaredFalse;
    if (s == "unknown") return hyp::Irreducibility::Unknown;
    throw CorpusError("entry '" + id + "': irreducible must be declared_true, declared_false "
                      "or unknown, got '" + s + "'");
}

template <typename T>
T require_field(const json& j, const char* key, const std::string& id) {
    if (!j.contains(key))
        throw CorpusError("entry '" + id + "': missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw CorpusError("entry '" + id + "': field '" + key + "' has the wrong type");
    }
}

} // namespace

std::vector<CorpusEntry> corpus_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CorpusError("cannot open corpus file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw CorpusError("corpus file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.contains("entries") || !doc["entries"].is_array())
        throw CorpusError("corpus file '" + path + "' must contain an 'entries' array");

    std::vector<CorpusEntry> entries;
    std::set<std::string> ids;
    for (const auto& j : doc["entries"]) {
        std::string id = j.value("id", std::string{});
        if (id.empty()) throw CorpusError("corpus entry without an 'id'");
        if (!ids.insert(id).second) throw CorpusError("duplicate corpus id '" + id + "'");

        CorpusEntry e;
        e.id = id;
        e.nvars = require_field<int>(j, "nvars", id);
        e.degree = require_field<int>(j, "degree", id);
        e.polynomial_text = require_field<std::string>(j, "polynomial", id);
        e.irreducible = parse_flag(require_field<std::string>(j, "irreducible", id), id);
        e.provenance = require_field<std::string>(j, "provenance", id);
        if (j.contains("known_pairs")) {
            if (!j["known_pairs"].is_number_integer())
                throw CorpusError("entry '" + id + "': known_pairs must be an integer");
            e.known_pairs = j["known_pairs"].get<int>();
        }
        if (j.contains("known_factors")) {
            if (!j["known_factors"].is_array())
                throw CorpusError("entry '" + id + "': known_factors must be an array");
            for (const auto& f : j["known_factors"]) e.known_factors.push_back(f.get<std::string>());
        }
        if (e.nvars < 1) throw CorpusError("entry '" + id + "': nvars must be positive");

        try {
            e.poly = hyp::parse_poly(e.polynomial_text, e.nvars);
        } catch (const hyp::Error& err) {
            throw CorpusError("entry '" + id + "': polynomial does not parse: " + err.what());
        }
        int d;
        try {
            d = hyp::homogeneous_degree(e.poly);
        } catch (const hyp::Error& err) {
            throw CorpusError("entry '" + id + "': polynomial is not homogeneous: " + err.what());
        }
        if (d != e.degree)
            throw CorpusError("entry '" + id + "': stated degree " + std::to_string(e.degree) +
                              " but the polynomial has degree " + std::to_string(d));

        if (!e.known_factors.empty()) {
            hyp::MultiPoly prod = hyp::MultiPoly::constant(e.nvars, 1);
            for (const auto& f : e.known_factors) {
                try {
                    prod = prod * hyp::parse_poly(f, e.nvars);
                } catch (const hyp::Error& err) {
                    throw CorpusError("entry '" + id + "': factor '" + f + "' does not parse: " +
                                      err.what());
                }
            }
            if (!(prod == e.poly))
                throw CorpusError("entry '" + id +
                                  "': product of known_factors does not equal the polynomial");
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

const CorpusEntry& corpus_find(const std::vector<CorpusEntry>& entries, const std::string& id) {
    for (const auto& e : entries)
        if (e.id == id) return e;
    throw CorpusError("no corpus entry named '" + id + "'");
}

std::string default_corpus_path() {
    if (const char* env = std::getenv("HYP_CORPUS")) return env;
#ifdef HYP_DEFAULT_CORPUS
    return HYP_DEFAULT_CORPUS;
#else
    return "corpus.json";
#endif
}

} // namespace hypcli

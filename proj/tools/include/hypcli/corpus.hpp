#ifndef HYPCLI_CORPUS_HPP
#define HYPCLI_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyp/multipoly.hpp"
#include "hyp/sections.hpp"

namespace hypcli {

struct CorpusEntry {
    std::string id;
    int nvars = 0;
    int degree = 0;
    std::string polynomial_text;
    hyp::Irreducibility irreducible = hyp::Irreducibility::Unknown;
    std::optional<int> known_pairs;
    std::vector<std::string> known_factors;
    std::string provenance;
    hyp::MultiPoly poly{1};
};

// Loads and validates a corpus file: every polynomial must parse and be
// homogeneous of its stated degree, and declared factors must multiply back
// to the polynomial exactly.
std::vector<CorpusEntry> corpus_load(const std::string& path);

// Single entry by id; throws CorpusError when missing.
const CorpusEntry& corpus_find(const std::vector<CorpusEntry>& entries, const std::string& id);

// HYP_CORPUS env var when set, else the bundled default.
std::string default_corpus_path();

} // namespace hypcli

#endif

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hamc/graph.hpp"
#include "hamc/lps.hpp"
#include "hamc/numtheory.hpp"
#include "hamc/oracle.hpp"
#include "hamc/partial_word.hpp"
#include "hamc/path.hpp"
#include "hamc/pseudorandom.hpp"
#include "hamc/relations.hpp"

namespace hamc {

// Text formats.  Writers are deterministic (no timestamps, fixed ordering)
// so identical inputs produce byte-identical files; readers validate
// headers and counts and raise precondition_error on malformed input.

// `# hampath-family v1` / `n=<int> directed=<0|1> count=<int>` / one path
// per line as space-separated vertex ids.
std::string family_to_text(const PathFamily& f);
PathFamily family_from_text(const std::string& text);

// `# partialword v1` / `length=<int> alphabet=<int> count=<int>` / one word
// per line, blanks as `_`, symbols as 1-based decimals.
std::string words_to_text(const std::vector<PartialWord>& words);
std::vector<PartialWord> words_from_text(const std::string& text);

// `# graph v1 n=<int> m=<int>` / one `u v` line per edge, sorted.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// JSON views of the report types, with stable key sets.
nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const SpectralCertificate& c);
nlohmann::json to_json(const BlockClaims& b);
nlohmann::json to_json(const GoodPair& g);
nlohmann::json to_json(const ScanReport& s);
nlohmann::json to_json(const OracleResult& r, const std::string& relation,
                       const std::string& mode);

} // namespace hamc

#include "hamc/io.hpp"

#include <fstream>
#include <sstream>

#include "hamc/errors.hpp"

namespace hamc {
namespace {

// One line, stripped of a trailing '\r'; false at end of input.
bool next_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

long long parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw precondition_error("");
        return v;
    } catch (const std::exception&) {
        throw precondition_error("malformed " + what + ": '" + s + "'");
    }
}

// Parses `key=value` tokens in the given order from a header line.
std::vector<long long> parse_header_fields(const std::string& line,
                                           const std::vector<std::string>& keys) {
    std::istringstream ss(line);
    std::vector<long long> out;
    std::string tok;
    for (const std::string& key : keys) {
        if (!(ss >> tok) || tok.rfind(key + "=", 0) != 0)
            throw precondition_error("expected '" + key + "=<int>' in header line: " + line);
        out.push_back(parse_int(tok.substr(key.size() + 1), key));
    }
    if (ss >> tok) throw precondition_error("trailing tokens in header line: " + line);
    return out;
}

void expect_header(std::istream& in, const std::string& magic) {
    std::string line;
    if (!next_line(in, line) || line != magic)
        throw precondition_error("missing header '" + magic + "'");
}

} // namespace

std::string family_to_text(const PathFamily& f) {
    std::ostringstream out;
    out << "# hampath-family v1\n";
    out << "n=" << f.n() << " directed=" << (f.directed() ? 1 : 0) << " count=" << f.size()
        << "\n";
    for (const HamPath& p : f.paths()) {
        const std::vector<int>& order = p.order();
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (i > 0) out << ' ';
            out << order[i];
        }
        out << '\n';
    }
    return out.str();
}

PathFamily family_from_text(const std::string& text) {
    std::istringstream in(text);
    expect_header(in, "# hampath-family v1");
    std::string line;
    if (!next_line(in, line)) throw precondition_error("missing family header fields");
    const auto fields = parse_header_fields(line, {"n", "directed", "count"});
    const long long n = fields[0], directed = fields[1], count = fields[2];
    if (n < 1 || n > 1'000'000) throw precondition_error("family n out of range");
    if (directed != 0 && directed != 1) throw precondition_error("directed must be 0 or 1");
    if (count < 0) throw precondition_error("family count negative");

    PathFamily f(static_cast<int>(n), directed == 1);
    long long seen = 0;
    while (next_line(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<int> order;
        std::string tok;
        while (ls >> tok) order.push_back(static_cast<int>(parse_int(tok, "vertex id")));
        if (static_cast<long long>(order.size()) != n)
            throw precondition_error("path line has " + std::to_string(order.size()) +
                                     " vertices, expected " + std::to_string(n));
        f.add(HamPath(std::move(order), directed == 1));
        ++seen;
    }
    if (seen != count)
        throw precondition_error("family count mismatch: header says " + std::to_string(count) +
                                 ", found " + std::to_string(seen));
    return f;
}

std::string words_to_text(const std::vector<PartialWord>& words) {
    std::ostringstream out;
    out << "# partialword v1\n";
    const int length = words.empty() ? 0 : words.front().length();
    const int alphabet = words.empty() ? 0 : words.front().alphabet_size();
    for (const PartialWord& w : words)
        if (w.length() != length || w.alphabet_size() != alphabet)
            throw precondition_error("word list mixes lengths or alphabets");
    out << "length=" << length << " alphabet=" << alphabet << " count=" << words.size() << "\n";
    for (const PartialWord& w : words) {
        for (int i = 0; i < w.length(); ++i) {
            if (i > 0) out << ' ';
            if (w.blank(i))
                out << '_';
            else
                out << w.at(i) + 1; // symbols are 1-based on disk
        }
        out << '\n';
    }
    return out.str();
}

std::vector<PartialWord> words_from_text(const std::string& text) {
    std::istringstream in(text);
    expect_header(in, "# partialword v1");
    std::string line;
    if (!next_line(in, line)) throw precondition_error("missing word header fields");
    const auto fields = parse_header_fields(line, {"length", "alphabet", "count"});
    const long long length = fields[0], alphabet = fields[1], count = fields[2];
    if (length < 0 || alphabet < 0 || count < 0)
        throw precondition_error("word header fields must be nonnegative");

    std::vector<PartialWord> words;
    while (next_line(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<int> entries;
        std::string tok;
        while (ls >> tok) {
            if (tok == "_") {
                entries.push_back(PartialWord::kBlank);
            } else {
                const long long sym = parse_int(tok, "symbol");
                if (sym < 1 || sym > alphabet)
                    throw precondition_error("symbol " + tok + " outside 1..alphabet");
                entries.push_back(static_cast<int>(sym - 1));
            }
        }
        if (static_cast<long long>(entries.size()) != length)
            throw precondition_error("word line has " + std::to_string(entries.size()) +
                                     " coordinates, expected " + std::to_string(length));
        words.emplace_back(std::move(entries), static_cast<int>(alphabet));
    }
    if (static_cast<long long>(words.size()) != count)
        throw precondition_error("word count mismatch: header says " + std::to_string(count) +
                                 ", found " + std::to_string(words.size()));
    return words;
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << "# graph v1 n=" << g.n() << " m=" << g.m() << "\n";
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!next_line(in, line)) throw precondition_error("empty graph file");
    const std::string magic = "# graph v1 ";
    if (line.rfind(magic, 0) != 0) throw precondition_error("missing header '# graph v1'");
    const auto fields = parse_header_fields(line.substr(magic.size()), {"n", "m"});
    const long long n = fields[0], m = fields[1];
    if (n < 0 || n > 10'000'000) throw precondition_error("graph n out of range");
    if (m < 0) throw precondition_error("graph m negative");

    std::vector<std::pair<int, int>> edges;
    bool any_loop = false;
    while (next_line(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra))
            throw precondition_error("edge line must be 'u v': " + line);
        const int u = static_cast<int>(parse_int(a, "vertex id"));
        const int v = static_cast<int>(parse_int(b, "vertex id"));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw precondition_error("edge endpoint out of range: " + line);
        if (u == v) any_loop = true;
        edges.emplace_back(u, v);
    }
    Graph g(static_cast<int>(n), any_loop);
    for (auto [u, v] : edges) g.add_edge(u, v);
    if (g.m() != m)
        throw precondition_error("graph edge count mismatch: header says " + std::to_string(m) +
                                 ", found " + std::to_string(g.m()));
    return g;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw precondition_error("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw precondition_error("cannot write file: " + path);
    out << content;
    if (!out) throw precondition_error("write failed: " + path);
}

nlohmann::json to_json(const VerifyReport& r) {
    return {{"pattern", r.pattern},     {"ways", r.ways},
            {"pairs_checked", r.pairs_checked}, {"ok", r.ok},
            {"violation_i", r.violation_i},     {"violation_j", r.violation_j}};
}

nlohmann::json to_json(const SpectralCertificate& c) {
    nlohmann::json j{{"p", c.p},
                     {"n_vertices", c.n_vertices},
                     {"degree", c.degree},
                     {"blocks_ok", c.blocks_ok},
                     {"c4_free", c.c4_free},
                     {"inf_norm", c.inf_norm},
                     {"lambda_sq_bound", c.lambda_sq_bound},
                     {"connected", c.connected},
                     {"multiplicity_one_certified", c.multiplicity_one_certified}};
    if (c.numeric_lambda2)
        j["numeric_lambda2"] = *c.numeric_lambda2;
    else
        j["numeric_lambda2"] = nullptr;
    return j;
}

nlohmann::json to_json(const BlockClaims& b) {
    return {{"cross_perfect_matchings", b.cross_perfect_matchings},
            {"intra_matching_plus_loop", b.intra_matching_plus_loop},
            {"cross_pairs_one_common", b.cross_pairs_one_common},
            {"intra_pairs_zero_common", b.intra_pairs_zero_common},
            {"all_ok", b.all_ok()}};
}

nlohmann::json to_json(const GoodPair& g) {
    return {{"p", g.p}, {"q", g.q}, {"m", g.m}, {"eps", g.eps}, {"k", g.k}};
}

nlohmann::json to_json(const ScanReport& s) {
    nlohmann::json ranges = nlohmann::json::array();
    for (auto [lo, hi] : s.violation_ranges) ranges.push_back({lo, hi});
    return {{"violations", ranges},
            {"violation_count", s.violation_count},
            {"max_gap_exponent", s.max_gap_exponent}};
}

nlohmann::json to_json(const OracleResult& r, const std::string& relation,
                       const std::string& mode) {
    return {{"value", r.value},
            {"witness_indices", r.witness_indices},
            {"objects_enumerated", r.objects_enumerated},
            {"search_nodes", r.search_nodes},
            {"relation", relation},
            {"mode", mode}};
}

} // namespace hamc

#include "core/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace rb {

const char* oracle_kind_name(OracleKind k) {
    switch (k) {
        case OracleKind::Free: return "free";
        case OracleKind::Dehn: return "dehn";
        case OracleKind::Table: return "table";
    }
    return "?";
}

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Tokenizer {
    const std::string& s;
    int line;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= s.size();
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw PresentationError(msg, line, static_cast<int>(pos) + 1);
    }
};

// Reads one generator token: name or name^-1. Returns (name, inverted).
std::pair<std::string, bool> read_generator_token(Tokenizer& t) {
    t.skip_space();
    std::size_t start = t.pos;
    while (t.pos < t.s.size() && is_name_char(t.s[t.pos])) ++t.pos;
    if (t.pos == start) t.fail("expected generator name");
    std::string name = t.s.substr(start, t.pos - start);
    bool inverted = false;
    if (t.pos + 2 < t.s.size() && t.s[t.pos] == '^' && t.s[t.pos + 1] == '-' &&
        t.s[t.pos + 2] == '1') {
        t.pos += 3;
        inverted = true;
    } else if (t.pos < t.s.size() && t.s[t.pos] == '^') {
        t.fail("only ^-1 exponents are supported");
    }
    return {name, inverted};
}

} // namespace

GroupPresentation GroupPresentation::parse(const std::string& text) {
    GroupPresentation p;
    std::map<std::string, Letter> base; // generator name -> positive letter
    bool saw_gens = false;
    std::vector<std::pair<std::string, int>> relator_lines;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        Tokenizer t{line, lineno};
        if (t.done()) continue;

        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw PresentationError("expected 'key: value' line", lineno, 1);
        std::string key = line.substr(0, colon);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        t.pos = colon + 1;

        if (key == "gens") {
            if (saw_gens) throw PresentationError("duplicate gens line", lineno, 1);
            saw_gens = true;
            // First pass: explicit tokens in order. Inverse tokens may refer to
            // generators appearing anywhere on the line.
            struct Tok { std::string name; bool inverted; };
            std::vector<Tok> toks;
            while (!t.done()) {
                auto [name, invd] = read_generator_token(t);
                toks.push_back({name, invd});
            }
            if (toks.empty()) t.fail("gens line lists no generators");
            std::set<std::string> plain;
            for (auto& tok : toks)
                if (!tok.inverted) plain.insert(tok.name);
            std::set<std::pair<std::string, bool>> seen;
            for (auto& tok : toks) {
                if (!seen.insert({tok.name, tok.inverted}).second)
                    throw PresentationError("generator token repeated: " + tok.name,
                                            lineno, 1);
                if (tok.inverted && !plain.count(tok.name))
                    throw PresentationError(
                        "inverse listed for unknown generator: " + tok.name, lineno, 1);
            }
            // Build alphabet. Implicit inverses go immediately after their
            // generator; explicit ones take their listed position.
            std::set<std::string> explicit_inv;
            for (auto& tok : toks)
                if (tok.inverted) explicit_inv.insert(tok.name);
            std::map<std::string, Letter> pos_letter, neg_letter;
            for (auto& tok : toks) {
                Letter idx = static_cast<Letter>(p.names_.size());
                if (!tok.inverted) {
                    p.names_.push_back(tok.name);
                    pos_letter[tok.name] = idx;
                    if (!explicit_inv.count(tok.name)) {
                        p.names_.push_back(tok.name + "^-1");
                        neg_letter[tok.name] = static_cast<Letter>(idx + 1);
                    }
                } else {
                    p.names_.push_back(tok.name + "^-1");
                    neg_letter[tok.name] = idx;
                }
            }
            p.inv_.assign(p.names_.size(), 0);
            for (auto& [name, l] : pos_letter) {
                Letter il = neg_letter.at(name);
                p.inv_[l] = il;
                p.inv_[il] = l;
            }
            p.rank_ = static_cast<int>(pos_letter.size());
            for (auto& [name, l] : pos_letter) {
                base[name] = l;
                (void)l;
            }
        } else if (key == "rel") {
            std::string rest = line.substr(colon + 1);
            // allow the literal placeholder "(none)"
            std::string stripped = rest;
            stripped.erase(std::remove_if(stripped.begin(), stripped.end(), ::isspace),
                           stripped.end());
            if (stripped == "(none)" || stripped.empty()) continue;
            relator_lines.push_back({rest, lineno});
        } else if (key == "oracle") {
            std::string rest = line.substr(colon + 1);
            std::istringstream os(rest);
            std::string which;
            os >> which;
            if (which == "free")
                p.hint_ = OracleKind::Free;
            else if (which == "dehn")
                p.hint_ = OracleKind::Dehn;
            else if (which == "table") {
                p.hint_ = OracleKind::Table;
                os >> p.table_path_;
                if (p.table_path_.empty())
                    throw PresentationError("oracle: table requires a path", lineno, 1);
            } else
                throw PresentationError("unknown oracle kind: " + which, lineno, 1);
        } else {
            throw PresentationError("unknown key: " + key, lineno, 1);
        }
    }
    if (!saw_gens) throw PresentationError("missing gens line", 1, 1);

    for (auto& [rest, rline] : relator_lines) {
        Tokenizer t{rest, rline};
        Word w;
        auto append_token = [&](const std::string& name, bool inverted) {
            auto it = base.find(name);
            if (it == base.end()) t.fail("unknown generator in relator: " + name);
            Letter l = it->second;
            w.push_back(inverted ? p.inv_[l] : l);
        };
        while (!t.done()) {
            t.skip_space();
            if (t.s[t.pos] == '[') {
                ++t.pos;
                auto [n1, i1] = read_generator_token(t);
                t.skip_space();
                if (t.pos >= t.s.size() || t.s[t.pos] != ',') t.fail("expected ','");
                ++t.pos;
                auto [n2, i2] = read_generator_token(t);
                t.skip_space();
                if (t.pos >= t.s.size() || t.s[t.pos] != ']') t.fail("expected ']'");
                ++t.pos;
                // [x,y] = x y x^-1 y^-1
                append_token(n1, i1);
                append_token(n2, i2);
                append_token(n1, !i1);
                append_token(n2, !i2);
            } else {
                auto [name, invd] = read_generator_token(t);
                append_token(name, invd);
            }
        }
        if (w.empty()) throw PresentationError("empty relator", rline, 1);
        if (!is_freely_reduced(w, p.inv_))
            throw PresentationError("relator is not freely reduced", rline, 1);
        if (!is_cyclically_reduced(w, p.inv_))
            throw PresentationError("relator is not cyclically reduced", rline, 1);
        p.relators_.push_back(std::move(w));
    }

    p.finalize(lineno);
    return p;
}

GroupPresentation GroupPresentation::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PresentationError("cannot open presentation file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

void GroupPresentation::finalize(int line_for_errors) {
    // Symmetrized relator set: distinct cyclic shifts of relators and inverses.
    std::set<Word> sym;
    for (const Word& r : relators_) {
        Word ri = inverse_word_of(r);
        for (std::size_t k = 0; k < r.size(); ++k) sym.insert(rotate(r, k));
        for (std::size_t k = 0; k < ri.size(); ++k) sym.insert(rotate(ri, k));
    }
    symmetrized_.assign(sym.begin(), sym.end());

    if (hint_ == OracleKind::Dehn) {
        std::string why;
        if (!satisfies_c_sixth(&why))
            throw PresentationError("dehn oracle requires C'(1/6): " + why,
                                    line_for_errors, 1);
    }
}

std::string GroupPresentation::word_to_string(WordView w) const {
    if (w.empty()) return "1";
    std::string out;
    bool all_single = true;
    for (Letter l : w)
        if (names_[l].size() != 1) all_single = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && !all_single) out += ' ';
        out += names_[w[i]];
    }
    return out;
}

Word GroupPresentation::word_from_string(const std::string& s) const {
    Word w;
    if (s == "1") return w;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        // longest-match against letter names
        std::size_t best_len = 0;
        Letter best = -1;
        for (std::size_t l = 0; l < names_.size(); ++l) {
            const std::string& n = names_[l];
            if (n.size() > best_len && s.compare(i, n.size(), n) == 0) {
                best_len = n.size();
                best = static_cast<Letter>(l);
            }
        }
        if (best < 0) throw PresentationError("cannot parse word: " + s);
        w.push_back(best);
        i += best_len;
    }
    return w;
}

int GroupPresentation::max_piece_length(Word* witness) const {
    int best = 0;
    for (std::size_t i = 0; i < symmetrized_.size(); ++i) {
        for (std::size_t j = 0; j < symmetrized_.size(); ++j) {
            if (i == j) continue;
            const Word& u = symmetrized_[i];
            const Word& v = symmetrized_[j];
            int k = 0;
            while (k < static_cast<int>(std::min(u.size(), v.size())) &&
                   u[k] == v[k])
                ++k;
            if (k > best) {
                best = k;
                if (witness) witness->assign(u.begin(), u.begin() + k);
            }
        }
    }
    return best;
}

bool GroupPresentation::satisfies_c_sixth(std::string* why) const {
    Word piece;
    int L = max_piece_length(&piece);
    // Pieces are prefixes of symmetrized relators, so the relevant bound is
    // against the shortest relator containing the piece; all relators in the
    // symmetrized orbit of one relator share its length.
    for (const Word& r : symmetrized_) {
        // does this relator start with a piece of length L' with 6 L' >= |r|?
        for (const Word& s : symmetrized_) {
            if (s == r) continue;
            std::size_t k = 0;
            while (k < r.size() && k < s.size() && r[k] == s[k]) ++k;
            if (6 * k >= r.size() && k > 0) {
                if (why) {
                    std::string nm = word_to_string(WordView(r.data(), k));
                    *why = "piece '" + nm + "' of length " + std::to_string(k) +
                           " in relator of length " + std::to_string(r.size());
                }
                return false;
            }
        }
    }
    (void)L;
    return true;
}

std::uint64_t GroupPresentation::content_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (const auto& n : names_) {
        for (char c : n) mix(static_cast<unsigned char>(c));
        mix(0x7f);
    }
    for (Letter l : inv_) mix(static_cast<std::uint64_t>(l));
    for (const auto& r : relators_) {
        for (Letter l : r) mix(static_cast<std::uint64_t>(l));
        mix(0xff);
    }
    mix(static_cast<std::uint64_t>(hint_));
    return h;
}

} // namespace rb

#pragma once

#include "core/word.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rb {

enum class OracleKind { Free, Dehn, Table };

const char* oracle_kind_name(OracleKind k);

/// Parse or validation failure, with the offending location when known.
struct PresentationError : std::runtime_error {
    int line = 0;
    int column = 0;
    PresentationError(const std::string& msg, int line_ = 0, int col_ = 0)
        : std::runtime_error(msg), line(line_), column(col_) {}
};

/// A finitely presented group over a symmetric generating set.
///
/// Letters index the alphabet in shortlex base order. Unless the input file
/// lists inverses explicitly, the formal inverse of each generator sits
/// immediately after it.
class GroupPresentation {
public:
    /// Parse the presentation file grammar:
    ///   gens: a b ...            (order significant; tokens may be g^-1)
    ///   rel: <word>              (juxtaposition of tokens, [x,y] commutator sugar)
    ///   oracle: free|dehn|table <path>
    /// Throws PresentationError with line/column on syntax errors, non-reduced
    /// relators, or a C'(1/6) violation when the dehn oracle is requested.
    static GroupPresentation parse(const std::string& text);

    static GroupPresentation from_file(const std::string& path);

    int alphabet_size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& letter_names() const { return names_; }
    std::span<const Letter> inv() const { return inv_; }
    Letter inverse_of(Letter l) const { return inv_[l]; }
    const std::vector<Word>& relators() const { return relators_; }
    OracleKind oracle_hint() const { return hint_; }
    const std::string& table_path() const { return table_path_; }

    /// Number of base generators before symmetric closure.
    int rank() const { return rank_; }

    std::string word_to_string(WordView w) const;
    /// Inverse of word_to_string; tokens separated by whitespace or, for
    /// single-character names, juxtaposed.
    Word word_from_string(const std::string& s) const;

    Word freely_reduce(WordView w) const { return free_reduce(w, inv_); }
    Word inverse_word_of(WordView w) const { return rb::inverse_word(w, inv_); }

    /// All distinct cyclic shifts of the relators and their inverses.
    const std::vector<Word>& symmetrized_relators() const { return symmetrized_; }

    /// Longest piece (common prefix of two distinct symmetrized relators).
    /// Returns 0 when no relators. Out parameter receives one witness piece.
    int max_piece_length(Word* witness = nullptr) const;

    /// Metric C'(1/6): every piece u in a relator r satisfies 6|u| < |r|.
    bool satisfies_c_sixth(std::string* why = nullptr) const;

    /// Fingerprint of the presentation content (alphabet, relators, oracle).
    std::uint64_t content_hash() const;

private:
    std::vector<std::string> names_;
    std::vector<Letter> inv_;
    std::vector<Word> relators_;
    std::vector<Word> symmetrized_;
    OracleKind hint_ = OracleKind::Free;
    std::string table_path_;
    int rank_ = 0;

    void finalize(int line_for_errors);
};

} // namespace rb

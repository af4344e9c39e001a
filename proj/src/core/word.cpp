#include "core/word.hpp"

#include <algorithm>

namespace rb {

std::string to_string(HalfInt h) {
    if (h.halves % 2 == 0) return std::to_string(h.halves / 2);
    return std::to_string(h.halves) + "/2";
}

Word free_reduce(WordView w, std::span<const Letter> inv) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (!out.empty() && out.back() == inv[l])
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word inverse_word(WordView w, std::span<const Letter> inv) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv[*it]);
    return out;
}

Word concat(WordView a, WordView b) {
    Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool shortlex_less(WordView a, WordView b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool words_equal(WordView a, WordView b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

Word rotate(WordView w, std::size_t k) {
    Word out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(i + k) % w.size()]);
    return out;
}

bool is_freely_reduced(WordView w, std::span<const Letter> inv) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] == inv[w[i]]) return false;
    return true;
}

bool is_cyclically_reduced(WordView w, std::span<const Letter> inv) {
    if (!is_freely_reduced(w, inv)) return false;
    if (w.size() >= 2 && w.front() == inv[w.back()]) return false;
    return true;
}

} // namespace rb

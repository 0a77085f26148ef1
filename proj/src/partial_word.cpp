#include "hamc/partial_word.hpp"

#include "hamc/errors.hpp"

namespace hamc {

PartialWord::PartialWord(std::vector<int> entries, int alphabet_size)
    : entries_(std::move(entries)), alphabet_(alphabet_size) {
    if (alphabet_ < 0) throw precondition_error("PartialWord: negative alphabet");
    std::vector<char> seen(static_cast<std::size_t>(alphabet_), 0);
    for (int e : entries_) {
        if (e == kBlank) continue;
        if (e < 0 || e >= alphabet_)
            throw precondition_error("PartialWord: symbol out of range");
        if (seen[static_cast<std::size_t>(e)])
            throw precondition_error("PartialWord: repeated symbol");
        seen[static_cast<std::size_t>(e)] = 1;
    }
}

int PartialWord::filled_count() const {
    int c = 0;
    for (int e : entries_)
        if (e != kBlank) ++c;
    return c;
}

bool PartialWord::is_permutation() const {
    return alphabet_ == length() && total();
}

int PartialWord::position_of(int symbol) const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] == symbol) return static_cast<int>(i);
    return -1;
}

} // namespace hamc

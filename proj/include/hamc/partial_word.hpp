#pragma once

#include <vector>

namespace hamc {

// A word of fixed length over symbols 0..alphabet_size-1 in which each
// coordinate is either blank or holds a symbol, and no symbol repeats.
// Total injective words double as permutations; words with blanks appear as
// reverse vectors of Hamiltonian paths.
class PartialWord {
public:
    static constexpr int kBlank = -1;

    PartialWord() = default;
    PartialWord(std::vector<int> entries, int alphabet_size);

    int length() const { return static_cast<int>(entries_.size()); }
    int alphabet_size() const { return alphabet_; }
    const std::vector<int>& entries() const { return entries_; }

    int at(int i) const { return entries_[static_cast<std::size_t>(i)]; }
    bool blank(int i) const { return at(i) == kBlank; }

    int filled_count() const;
    bool total() const { return filled_count() == length(); }

    // True iff the word is a bijection of {0..length-1} onto itself.
    bool is_permutation() const;

    // Coordinate holding the symbol, or -1 when the symbol is unused.
    int position_of(int symbol) const;

    bool operator==(const PartialWord& o) const {
        return alphabet_ == o.alphabet_ && entries_ == o.entries_;
    }

private:
    std::vector<int> entries_;
    int alphabet_ = 0;
};

} // namespace hamc

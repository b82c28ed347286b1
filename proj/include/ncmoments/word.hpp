#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "ncmoments/errors.hpp"

namespace ncmoments {

/// Largest label value accepted in a word.  Labels index independent
/// operators (or independent random matrices), so a small alphabet suffices.
inline constexpr int kMaxLabel = 255;

/// One letter of a *-word: an operator label together with a star (adjoint)
/// marker.  `*3` is the starred letter with label 3, `3` the unstarred one.
struct StarLetter {
    bool starred = false;
    int label = 1;

    friend auto operator<=>(const StarLetter&, const StarLetter&) = default;
};

/// A finite *-word.  Positions are 1-based throughout the library, matching
/// the usual combinatorial indexing of the ground set {1, ..., m}.
class StarWord {
public:
    StarWord() = default;
    explicit StarWord(std::vector<StarLetter> letters);

    /// Parses the comma-separated text form, e.g. "*1,1,*1,1".
    /// An empty (or all-whitespace) string yields the empty word.
    static StarWord parse(std::string_view text);

    /// The alternating word (*label, label)^n of length 2n.
    static StarWord tt_power(int n, int label = 1);

    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    /// Letter at 1-based position pos.
    const StarLetter& letter(int pos) const;

    const std::vector<StarLetter>& letters() const { return letters_; }

    /// Comma-separated text form; inverse of parse().
    std::string to_string() const;

    /// The word read right to left with every star flipped.  Taking adjoints
    /// of a product reverses the factors and stars each one, so this is the
    /// word of the adjoint.
    StarWord reversed_flipped() const;

    /// Sorted distinct labels appearing in the word.
    std::vector<int> distinct_labels() const;

    friend auto operator<=>(const StarWord&, const StarWord&) = default;

private:
    std::vector<StarLetter> letters_;
};

}  // namespace ncmoments

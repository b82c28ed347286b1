#include "ncmoments/word.hpp"

#include <algorithm>
#include <set>

namespace ncmoments {

namespace {

void check_label(int label) {
    if (label < 0 || label > kMaxLabel) {
        throw InvalidArgument("StarWord: label " + std::to_string(label) +
                              " outside [0, " + std::to_string(kMaxLabel) + "]");
    }
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

StarWord::StarWord(std::vector<StarLetter> letters) : letters_(std::move(letters)) {
    for (const StarLetter& l : letters_) {
        check_label(l.label);
    }
}

StarWord StarWord::parse(std::string_view text) {
    text = strip(text);
    if (text.empty()) {
        return StarWord();
    }
    std::vector<StarLetter> letters;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        std::string_view tok = strip(text.substr(
            start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        StarLetter l;
        if (!tok.empty() && tok.front() == '*') {
            l.starred = true;
            tok = strip(tok.substr(1));
        }
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                        [](char c) { return c >= '0' && c <= '9'; })) {
            throw InvalidArgument("StarWord: bad token in '" + std::string(text) + "'");
        }
        l.label = 0;
        for (char c : tok) {
            l.label = l.label * 10 + (c - '0');
            if (l.label > kMaxLabel) break;
        }
        check_label(l.label);
        letters.push_back(l);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return StarWord(std::move(letters));
}

StarWord StarWord::tt_power(int n, int label) {
    if (n < 0) {
        throw InvalidArgument("StarWord::tt_power: negative power");
    }
    check_label(label);
    std::vector<StarLetter> letters;
    letters.reserve(2 * static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        letters.push_back({true, label});
        letters.push_back({false, label});
    }
    return StarWord(std::move(letters));
}

const StarLetter& StarWord::letter(int pos) const {
    if (pos < 1 || pos > size()) {
        throw IndexError("StarWord: position " + std::to_string(pos) +
                         " outside [1, " + std::to_string(size()) + "]");
    }
    return letters_[static_cast<size_t>(pos) - 1];
}

std::string StarWord::to_string() const {
    std::string out;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i > 0) out += ',';
        if (letters_[i].starred) out += '*';
        out += std::to_string(letters_[i].label);
    }
    return out;
}

StarWord StarWord::reversed_flipped() const {
    std::vector<StarLetter> letters(letters_.rbegin(), letters_.rend());
    for (StarLetter& l : letters) {
        l.starred = !l.starred;
    }
    return StarWord(std::move(letters));
}

std::vector<int> StarWord::distinct_labels() const {
    std::set<int> labels;
    for (const StarLetter& l : letters_) {
        labels.insert(l.label);
    }
    return {labels.begin(), labels.end()};
}

}  // namespace ncmoments

#include "ncmoments/partition.hpp"

#include <algorithm>

namespace ncmoments {

PairPartition::PairPartition(int m, std::vector<Block> blocks)
    : m_(m), blocks_(std::move(blocks)) {
    if (m_ < 0 || m_ % 2 != 0) {
        throw InvalidWordLength("PairPartition: ground size " + std::to_string(m_) +
                                " is not a non-negative even number");
    }
    if (static_cast<int>(blocks_.size()) * 2 != m_) {
        throw InvalidArgument("PairPartition: " + std::to_string(blocks_.size()) +
                              " blocks cannot pair " + std::to_string(m_) + " points");
    }
    // role[p] = +k if position p is the left leg of block k, -k for the right
    // leg, 0 if unseen.  Detects out-of-range, duplicate and unsorted input.
    std::vector<int> role(static_cast<size_t>(m_) + 1, 0);
    for (int k = 1; k <= size(); ++k) {
        auto [l, r] = blocks_[static_cast<size_t>(k) - 1];
        if (l < 1 || r < 1 || l > m_ || r > m_) {
            throw IndexError("PairPartition: block (" + std::to_string(l) + "," +
                             std::to_string(r) + ") outside ground set");
        }
        if (l >= r) {
            throw InvalidArgument("PairPartition: block legs must satisfy left < right");
        }
        if (k > 1 && blocks_[static_cast<size_t>(k) - 2].first >= l) {
            throw InvalidArgument("PairPartition: blocks not sorted by left leg");
        }
        if (role[static_cast<size_t>(l)] != 0 || role[static_cast<size_t>(r)] != 0) {
            throw InvalidArgument("PairPartition: position covered twice");
        }
        role[static_cast<size_t>(l)] = k;
        role[static_cast<size_t>(r)] = -k;
    }
    // Single left-to-right pass: push on a left leg, pop on a right leg.  The
    // pairing is noncrossing exactly when every right leg closes the block on
    // top of the stack, and the nearest outer block falls out for free.
    outer_.assign(blocks_.size(), 0);
    std::vector<int> stack;
    for (int p = 1; p <= m_; ++p) {
        int k = role[static_cast<size_t>(p)];
        if (k > 0) {
            outer_[static_cast<size_t>(k) - 1] = stack.empty() ? 0 : stack.back();
            stack.push_back(k);
        } else {
            if (stack.empty() || stack.back() != -k) {
                throw InvalidArgument("PairPartition: blocks cross");
            }
            stack.pop_back();
        }
    }
}

const PairPartition::Block& PairPartition::block(int k) const {
    if (k < 1 || k > size()) {
        throw IndexError("PairPartition: block index " + std::to_string(k) +
                         " outside [1, " + std::to_string(size()) + "]");
    }
    return blocks_[static_cast<size_t>(k) - 1];
}

int PairPartition::nearest_outer(int k) const {
    if (k < 1 || k > size()) {
        throw IndexError("PairPartition: block index " + std::to_string(k) +
                         " outside [1, " + std::to_string(size()) + "]");
    }
    return outer_[static_cast<size_t>(k) - 1];
}

int PairPartition::depth(int k) const {
    int d = 0;
    while (k != 0) {
        k = nearest_outer(k);
        ++d;
    }
    return d;
}

std::string PairPartition::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < blocks_.size(); ++i) {
        if (i > 0) out += ',';
        out += '[' + std::to_string(blocks_[i].first) + ',' +
               std::to_string(blocks_[i].second) + ']';
    }
    out += ']';
    return out;
}

namespace {

/// Pairings of the interval [lo, hi], each returned as a block list sorted by
/// left leg, in lexicographic order.  Recursive first-element pairing: lo is
/// paired with each admissible j (an even number of points must sit between
/// them), and the inside and outside sub-intervals are paired independently.
/// Concatenating (lo,j) + inside + outside keeps the block list sorted, and
/// iterating j, then inside, then outside keeps the output lexicographic.
std::vector<std::vector<PairPartition::Block>> pair_interval(int lo, int hi) {
    if (lo > hi) {
        return {{}};
    }
    std::vector<std::vector<PairPartition::Block>> out;
    for (int j = lo + 1; j <= hi; j += 2) {
        const auto inside = pair_interval(lo + 1, j - 1);
        const auto outside = pair_interval(j + 1, hi);
        for (const auto& in : inside) {
            for (const auto& post : outside) {
                std::vector<PairPartition::Block> blocks;
                blocks.reserve(1 + in.size() + post.size());
                blocks.emplace_back(lo, j);
                blocks.insert(blocks.end(), in.begin(), in.end());
                blocks.insert(blocks.end(), post.begin(), post.end());
                out.push_back(std::move(blocks));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<PairPartition> enumerate_nc2(int m, int max_ground) {
    if (m < 0 || m % 2 != 0) {
        throw InvalidWordLength("enumerate_nc2: ground size " + std::to_string(m) +
                                " is not a non-negative even number");
    }
    if (m > max_ground) {
        throw LimitExceeded("enumerate_nc2: ground size " + std::to_string(m) +
                            " exceeds limit " + std::to_string(max_ground));
    }
    std::vector<PairPartition> out;
    for (auto& blocks : pair_interval(1, m)) {
        out.emplace_back(m, std::move(blocks));
    }
    return out;
}

bool is_adapted(const PairPartition& p, const StarWord& w, AdaptednessMode mode) {
    if (p.ground_size() != w.size()) {
        throw LengthMismatch("is_adapted: partition of " + std::to_string(p.ground_size()) +
                             " points vs word of length " + std::to_string(w.size()));
    }
    for (const auto& [l, r] : p.blocks()) {
        const StarLetter& left = w.letter(l);
        const StarLetter& right = w.letter(r);
        if (left.label != right.label) {
            return false;
        }
        if (mode == AdaptednessMode::CreationMode) {
            if (!(left.starred && !right.starred)) {
                return false;
            }
        } else {
            if (left.starred == right.starred) {
                return false;
            }
        }
    }
    return true;
}

std::vector<PairPartition> adapted_partitions(const StarWord& w, AdaptednessMode mode,
                                              int max_ground) {
    if (w.size() % 2 != 0) {
        return {};
    }
    std::vector<PairPartition> out;
    for (auto& p : enumerate_nc2(w.size(), max_ground)) {
        if (is_adapted(p, w, mode)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

BlockPairType classify_block_pair(const PairPartition& p, const StarWord& w, int k) {
    if (p.ground_size() != w.size()) {
        throw LengthMismatch("classify_block_pair: partition of " +
                             std::to_string(p.ground_size()) + " points vs word of length " +
                             std::to_string(w.size()));
    }
    const int o = p.nearest_outer(k);  // also validates k
    if (o == 0) {
        throw NoOuterBlock("classify_block_pair: block " + std::to_string(k) +
                           " is nested directly under the imaginary block");
    }
    auto left_leg_starred = [&](int b) {
        const auto& [l, r] = p.block(b);
        const bool ls = w.letter(l).starred;
        const bool rs = w.letter(r).starred;
        if (ls == rs) {
            throw NotAdapted("classify_block_pair: block " + std::to_string(b) +
                             " does not pair a starred letter with an unstarred one");
        }
        return ls;
    };
    const bool inner_left = left_leg_starred(k);
    const bool outer_left = left_leg_starred(o);
    if (inner_left) {
        return outer_left ? BlockPairType::Type3 : BlockPairType::Type2;
    }
    return outer_left ? BlockPairType::Type1 : BlockPairType::Type4;
}

}  // namespace ncmoments

#pragma once

// Minimum-cardinality set cover over bitmask incidence. Used by the exact
// stabbing solver and the exact disk-cover oracle. Three entry points:
//   min_set_cover      branch-and-bound with a greedy upper bound and a
//                      disjoint-element packing lower bound
//   lex_min_cover      lexicographically smallest optimal index set, built by
//                      per-position feasibility probes (budgeted B&B)
//   sweep_min_cover    literal cardinality sweep k = 1, 2, ...: enumerates
//                      index subsets in lexicographic order
// All are deterministic and single-threaded.

#include <optional>

#include "segstab/core.hpp"

namespace segstab {

class DynBitset {
  public:
    DynBitset() = default;
    explicit DynBitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= (1ull << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1ull; }
    std::size_t size() const { return bits_; }

    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }

    bool contains(const DynBitset& o) const {  // o subset of *this
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (o.words_[w] & ~words_[w]) return false;
        }
        return true;
    }

    bool covers_all() const {
        std::size_t rem = bits_;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            const std::uint64_t expect =
                rem >= 64 ? ~0ull : ((rem == 0) ? 0ull : ((1ull << rem) - 1));
            if (words_[w] != expect) return false;
            rem -= std::min<std::size_t>(rem, 64);
        }
        return true;
    }

    // Lowest index not set, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t first_unset() const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            const std::uint64_t inv = ~words_[w];
            if (inv) {
                const std::size_t i = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(inv));
                return i < bits_ ? i : npos;
            }
        }
        return npos;
    }

    friend bool operator==(const DynBitset& a, const DynBitset& b) {
        return a.words_ == b.words_;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

  private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

namespace detail {

class CoverSearch {
  public:
    CoverSearch(const std::vector<DynBitset>& sets, std::size_t m) : sets_(sets), m_(m) {
        covering_.resize(m_);
        for (std::size_t e = 0; e < m_; ++e) {
            for (std::uint32_t s = 0; s < sets_.size(); ++s) {
                if (sets_[s].test(e)) covering_[e].push_back(s);
            }
        }
        conflict_.assign(m_, DynBitset(m_));
        for (std::size_t e = 0; e < m_; ++e) {
            conflict_[e].set(e);
            for (std::uint32_t s : covering_[e]) conflict_[e] |= sets_[s];
        }
    }

    const std::vector<std::uint32_t>& covering(std::size_t e) const { return covering_[e]; }

    // Greedy cover size starting from `covered`; npos when impossible.
    std::size_t greedy(DynBitset covered, std::vector<std::uint32_t>* out = nullptr) const {
        std::size_t count = 0;
        while (!covered.covers_all()) {
            std::uint32_t best = 0;
            std::size_t best_gain = 0;
            for (std::uint32_t s = 0; s < sets_.size(); ++s) {
                std::size_t gain = 0;
                for (std::size_t w = 0; w < covered.words().size(); ++w) {
                    gain += static_cast<std::size_t>(
                        __builtin_popcountll(sets_[s].words()[w] & ~covered.words()[w]));
                }
                if (gain > best_gain) {
                    best_gain = gain;
                    best = s;
                }
            }
            if (best_gain == 0) return DynBitset::npos;
            covered |= sets_[best];
            if (out) out->push_back(best);
            ++count;
        }
        return count;
    }

    // Disjoint-element packing: no single set covers two picked elements.
    std::size_t lower_bound(const DynBitset& covered) const {
        DynBitset blocked = covered;
        std::size_t count = 0;
        for (std::size_t e = blocked.first_unset(); e != DynBitset::npos;
             e = blocked.first_unset()) {
            ++count;
            blocked |= conflict_[e];
        }
        return count;
    }

    // Optimal cardinality (not exceeding `cap` when given); chosen is sorted.
    std::optional<std::vector<std::uint32_t>> solve(std::optional<std::size_t> cap) {
        DynBitset covered(m_);
        best_.clear();
        best_size_ = DynBitset::npos;
        std::vector<std::uint32_t> greedy_choice;
        const std::size_t g = greedy(covered, &greedy_choice);
        if (g == DynBitset::npos) return std::nullopt;  // some element uncoverable
        best_ = std::move(greedy_choice);
        best_size_ = g;
        limit_ = cap ? std::min(*cap, g) : g;
        std::vector<std::uint32_t> chosen;
        dfs(covered, chosen);
        if (cap && best_size_ > *cap) return std::nullopt;
        std::sort(best_.begin(), best_.end());
        return best_;
    }

    // True iff `covered` completes to full with at most q sets of index >= from.
    bool coverable(const DynBitset& covered, std::uint32_t from, std::size_t q) const {
        if (covered.covers_all()) return true;
        if (q == 0) return false;
        if (lower_bound(covered) > q) return false;
        // Branch on the uncovered element with the fewest admissible sets.
        std::size_t pick = DynBitset::npos;
        std::size_t pick_count = DynBitset::npos;
        for (std::size_t e = 0; e < m_; ++e) {
            if (covered.test(e)) continue;
            std::size_t cnt = 0;
            for (std::uint32_t s : covering_[e]) {
                if (s >= from) ++cnt;
            }
            if (cnt == 0) return false;
            if (cnt < pick_count) {
                pick_count = cnt;
                pick = e;
            }
        }
        for (std::uint32_t s : covering_[pick]) {
            if (s < from) continue;
            DynBitset next = covered;
            next |= sets_[s];
            if (coverable(next, from, q - 1)) return true;
        }
        return false;
    }

  private:
    void dfs(const DynBitset& covered, std::vector<std::uint32_t>& chosen) {
        if (covered.covers_all()) {
            if (chosen.size() < best_size_) {
                best_size_ = chosen.size();
                best_ = chosen;
                limit_ = std::min(limit_, best_size_);
            }
            return;
        }
        if (chosen.size() + lower_bound(covered) > limit_) return;
        std::size_t pick = DynBitset::npos;
        std::size_t pick_count = DynBitset::npos;
        for (std::size_t e = 0; e < m_; ++e) {
            if (!covered.test(e) && covering_[e].size() < pick_count) {
                pick_count = covering_[e].size();
                pick = e;
            }
        }
        for (std::uint32_t s : covering_[pick]) {
            DynBitset next = covered;
            next |= sets_[s];
            chosen.push_back(s);
            dfs(next, chosen);
            chosen.pop_back();
        }
    }

    const std::vector<DynBitset>& sets_;
    std::size_t m_;
    std::vector<std::vector<std::uint32_t>> covering_;
    std::vector<DynBitset> conflict_;
    std::vector<std::uint32_t> best_;
    std::size_t best_size_ = DynBitset::npos;
    std::size_t limit_ = DynBitset::npos;
};

}  // namespace detail

// Minimum-cardinality cover; nullopt when infeasible or above the budget.
inline std::optional<std::vector<std::uint32_t>> min_set_cover(
    const std::vector<DynBitset>& sets, std::size_t m,
    std::optional<std::size_t> budget = std::nullopt) {
    if (m == 0) return std::vector<std::uint32_t>{};
    detail::CoverSearch search(sets, m);
    return search.solve(budget);
}

// Lexicographically smallest index set among all optimal covers of size k_opt.
inline std::vector<std::uint32_t> lex_min_cover(const std::vector<DynBitset>& sets, std::size_t m,
                                                std::size_t k_opt) {
    detail::CoverSearch search(sets, m);
    DynBitset covered(m);
    std::vector<std::uint32_t> chosen;
    std::uint32_t from = 0;
    while (!covered.covers_all()) {
        bool advanced = false;
        for (std::uint32_t idx = from; idx < sets.size(); ++idx) {
            if (covered.contains(sets[idx])) continue;  // adds nothing; never optimal
            DynBitset next = covered;
            next |= sets[idx];
            if (search.coverable(next, idx + 1, k_opt - chosen.size() - 1)) {
                chosen.push_back(idx);
                covered = next;
                from = idx + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("lex_min_cover: k_opt infeasible");
    }
    return chosen;
}

// Literal cardinality sweep: tries each subset of cardinality at most k in
// lexicographic order, for k = 1, 2, .... Returns the same set as
// lex_min_cover at the optimum; kept as a faithful slow mode.
inline std::optional<std::vector<std::uint32_t>> sweep_min_cover(
    const std::vector<DynBitset>& sets, std::size_t m,
    std::optional<std::size_t> budget = std::nullopt) {
    if (m == 0) return std::vector<std::uint32_t>{};
    // Suffix unions prune subtrees that cannot finish the cover.
    std::vector<DynBitset> suffix(sets.size() + 1, DynBitset(m));
    for (std::size_t i = sets.size(); i-- > 0;) {
        suffix[i] = suffix[i + 1];
        suffix[i] |= sets[i];
    }
    DynBitset full(m);
    if (!suffix.empty() && !suffix[0].covers_all()) return std::nullopt;

    std::vector<std::uint32_t> chosen;
    const std::size_t k_max = budget ? *budget : sets.size();

    const auto dfs = [&](auto&& self, const DynBitset& covered, std::uint32_t from,
                         std::size_t k) -> bool {
        if (covered.covers_all()) return true;
        if (k == 0) return false;
        for (std::uint32_t idx = from; idx < sets.size(); ++idx) {
            DynBitset reach = covered;
            reach |= suffix[idx];
            if (!reach.covers_all()) return false;  // no later start can work either
            DynBitset next = covered;
            next |= sets[idx];
            chosen.push_back(idx);
            if (self(self, next, idx + 1, k - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    for (std::size_t k = 1; k <= k_max; ++k) {
        chosen.clear();
        if (dfs(dfs, DynBitset(m), 0, k)) return chosen;
    }
    return std::nullopt;
}

}  // namespace segstab

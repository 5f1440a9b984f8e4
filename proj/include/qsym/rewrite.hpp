#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "qsym/qfield.hpp"

namespace qsym {

using Word = std::vector<int>;

struct WordHash {
    size_t operator()(const Word& w) const noexcept {
        size_t h = 1469598103934665603ull;
        for (int c : w) h = (h ^ static_cast<size_t>(c + 1)) * 1099511628211ull;
        return h;
    }
};

// Degree-lexicographic: shorter words first, then lexicographic with 0 < 1 < ...
struct DegLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using WordPoly = std::map<Word, QRat, DegLex>;
using Terms = std::vector<std::pair<Word, QRat>>;

void add_term(WordPoly& p, const Word& w, const QRat& c);

struct Rule {
    Word lhs;
    Terms rhs;  // lhs = sum rhs, every word below lhs
};

struct CompletionStats {
    int degree_bound = 0;
    int relations = 0;
    int overlaps = 0;
    std::vector<int> rules_per_degree;  // index = degree
};

// Homogeneous noncommutative Buchberger completion, degree by degree.
class RewriteSystem {
public:
    RewriteSystem(int letters, int degree_bound, long long budget = 50'000'000);

    void complete(const std::vector<WordPoly>& relations);

    int letters() const { return letters_; }
    int degree_bound() const { return bound_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const CompletionStats& stats() const { return stats_; }

    bool is_reducible(const Word& w) const;
    // Leftmost occurrence of a left-hand side: (position, rule index) or (-1, -1).
    std::pair<int, int> find_lhs(const Word& w) const;

    // Normal form of a word as a combination of irreducible words (memoized).
    const Terms& normal_form(const Word& w) const;
    WordPoly reduce(WordPoly f) const;

    // Irreducible words with letter content cnt (cnt[a] = number of letters a).
    std::vector<Word> irreducible_words(const std::vector<int>& cnt) const;

    // Recompute every overlap up to the bound and check it resolves to zero.
    bool verify_confluence() const;

private:
    int letters_;
    int bound_;
    long long budget_;
    mutable long long steps_ = 0;
    std::vector<Rule> rules_;
    std::vector<WordPoly> relations_;
    std::unordered_map<Word, int, WordHash> index_;
    std::vector<int> lengths_;  // distinct lhs lengths, ascending
    mutable std::unordered_map<Word, Terms, WordHash> memo_;
    CompletionStats stats_;

    void add_rule(WordPoly f, int degree);
    void charge(long long n) const;
    std::vector<WordPoly> overlaps_of_degree(int d) const;
};

}  // namespace qsym

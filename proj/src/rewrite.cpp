#include "qsym/rewrite.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qsym/errors.hpp"

namespace qsym {

void add_term(WordPoly& p, const Word& w, const QRat& c) {
    if (c.is_zero()) return;
    auto it = p.find(w);
    if (it == p.end()) {
        p.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
}

namespace {

Word concat(const Word& a, const Word& b, const Word& c) {
    Word r;
    r.reserve(a.size() + b.size() + c.size());
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    r.insert(r.end(), c.begin(), c.end());
    return r;
}

}  // namespace

RewriteSystem::RewriteSystem(int letters, int degree_bound, long long budget)
    : letters_(letters), bound_(degree_bound), budget_(budget) {
    stats_.degree_bound = degree_bound;
    stats_.rules_per_degree.assign(degree_bound + 1, 0);
}

void RewriteSystem::charge(long long n) const {
    steps_ += n;
    if (steps_ > budget_)
        throw ResourceError("rewriting budget of " + std::to_string(budget_) + " steps exhausted");
}

std::pair<int, int> RewriteSystem::find_lhs(const Word& w) const {
    int n = static_cast<int>(w.size());
    for (int pos = 0; pos < n; ++pos)
        for (int len : lengths_) {
            if (pos + len > n) break;
            Word f(w.begin() + pos, w.begin() + pos + len);
            auto it = index_.find(f);
            if (it != index_.end()) return {pos, it->second};
        }
    return {-1, -1};
}

bool RewriteSystem::is_reducible(const Word& w) const { return find_lhs(w).first >= 0; }

WordPoly RewriteSystem::reduce(WordPoly f) const {
    Word cur;
    bool first = true;
    while (true) {
        auto it = first ? f.end() : f.lower_bound(cur);
        first = false;
        if (it == f.begin()) break;
        --it;
        Word w = it->first;
        cur = w;
        auto [pos, ri] = find_lhs(w);
        if (pos < 0) continue;
        QRat c = it->second;
        f.erase(it);
        const Rule& r = rules_[ri];
        Word u(w.begin(), w.begin() + pos), v(w.begin() + pos + r.lhs.size(), w.end());
        charge(static_cast<long long>(r.rhs.size()) + 1);
        for (const auto& [rw, rc] : r.rhs) add_term(f, concat(u, rw, v), c * rc);
    }
    return f;
}

void RewriteSystem::add_rule(WordPoly f, int degree) {
    auto lead = std::prev(f.end());
    Word L = lead->first;
    QRat inv = lead->second.inverse();
    Terms rhs;
    for (const auto& [w, c] : f)
        if (w != L) rhs.emplace_back(w, -(c * inv));
    // keep same-degree right-hand sides irreducible
    for (auto& r : rules_) {
        if (static_cast<int>(r.lhs.size()) != degree) continue;
        auto hit = std::find_if(r.rhs.begin(), r.rhs.end(), [&](const auto& t) { return t.first == L; });
        if (hit == r.rhs.end()) continue;
        QRat c = hit->second;
        WordPoly np;
        for (const auto& [w, cc] : r.rhs)
            if (w != L) add_term(np, w, cc);
        for (const auto& [w, cc] : rhs) add_term(np, w, c * cc);
        r.rhs.assign(np.begin(), np.end());
    }
    index_[L] = static_cast<int>(rules_.size());
    rules_.push_back({L, std::move(rhs)});
    if (std::find(lengths_.begin(), lengths_.end(), degree) == lengths_.end()) {
        lengths_.push_back(degree);
        std::sort(lengths_.begin(), lengths_.end());
    }
    ++stats_.rules_per_degree[degree];
    if (rules_.size() > 200000) throw ResourceError("completion exceeded the rule budget at degree " + std::to_string(degree));
}

std::vector<WordPoly> RewriteSystem::overlaps_of_degree(int d) const {
    std::vector<WordPoly> out;
    for (const auto& r1 : rules_)
        for (const auto& r2 : rules_) {
            int a = static_cast<int>(r1.lhs.size()), b = static_cast<int>(r2.lhs.size());
            int k = a + b - d;
            if (k < 1 || k >= a || k >= b) continue;
            if (!std::equal(r1.lhs.end() - k, r1.lhs.end(), r2.lhs.begin())) continue;
            Word u(r1.lhs.begin(), r1.lhs.end() - k), w(r2.lhs.begin() + k, r2.lhs.end());
            WordPoly s;
            for (const auto& [rw, rc] : r1.rhs) add_term(s, concat({}, rw, w), -rc);
            for (const auto& [rw, rc] : r2.rhs) add_term(s, concat(u, rw, {}), rc);
            out.push_back(std::move(s));
        }
    return out;
}

void RewriteSystem::complete(const std::vector<WordPoly>& relations) {
    relations_ = relations;
    steps_ = 0;
    stats_.relations = static_cast<int>(relations.size());
    for (int d = 1; d <= bound_; ++d) {
        std::vector<WordPoly> cands;
        for (const auto& r : relations) {
            if (r.empty()) continue;
            int deg = static_cast<int>(r.begin()->first.size());
            for (const auto& [w, c] : r)
                if (static_cast<int>(w.size()) != deg) throw InternalError("relation is not homogeneous");
            if (deg == d) cands.push_back(r);
        }
        auto ov = overlaps_of_degree(d);
        stats_.overlaps += static_cast<int>(ov.size());
        for (auto& o : ov) cands.push_back(std::move(o));
        for (auto& c : cands) {
            WordPoly f;
            try {
                f = reduce(std::move(c));
            } catch (const ResourceError&) {
                throw ResourceError("completion budget exhausted at degree " + std::to_string(d));
            }
            if (!f.empty()) add_rule(std::move(f), d);
        }
    }
    memo_.clear();
}

const Terms& RewriteSystem::normal_form(const Word& w) const {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    if (static_cast<int>(w.size()) > bound_)
        throw ResourceError("word of length " + std::to_string(w.size()) + " exceeds degree bound " +
                            std::to_string(bound_));
    auto [pos, ri] = find_lhs(w);
    Terms out;
    if (pos < 0) {
        out.emplace_back(w, QRat(1));
    } else {
        const Rule& r = rules_[ri];
        Word u(w.begin(), w.begin() + pos), v(w.begin() + pos + r.lhs.size(), w.end());
        WordPoly acc;
        for (const auto& [rw, rc] : r.rhs) {
            const Terms& sub = normal_form(concat(u, rw, v));
            for (const auto& [z, zc] : sub) add_term(acc, z, rc * zc);
        }
        out.assign(acc.begin(), acc.end());
    }
    return memo_.emplace(w, std::move(out)).first->second;
}

std::vector<Word> RewriteSystem::irreducible_words(const std::vector<int>& cnt0) const {
    std::vector<Word> out;
    std::vector<int> cnt = cnt0;
    for (int c : cnt)
        if (c < 0) return out;
    Word w;
    int total = 0;
    for (int c : cnt) total += c;
    auto suffix_reducible = [&](const Word& x) {
        int n = static_cast<int>(x.size());
        for (int len : lengths_) {
            if (len > n) break;
            Word f(x.end() - len, x.end());
            if (index_.count(f)) return true;
        }
        return false;
    };
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == total) {
            out.push_back(w);
            return;
        }
        for (int a = 0; a < letters_; ++a) {
            if (!cnt[a]) continue;
            w.push_back(a);
            if (!suffix_reducible(w)) {
                --cnt[a];
                self(self);
                ++cnt[a];
            }
            w.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

bool RewriteSystem::verify_confluence() const {
    steps_ = 0;
    for (const auto& r : relations_)
        if (!reduce(r).empty()) return false;
    for (int d = 2; d <= bound_; ++d)
        for (const auto& s : overlaps_of_degree(d))
            if (!reduce(s).empty()) return false;
    return true;
}

}  // namespace qsym

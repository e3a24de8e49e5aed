// Dense bit relations on a finite set: strict order, transitive reduction and
// reachability through an edge list.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace triflag {

class Relation {
public:
    explicit Relation(int n = 0) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

    int size() const { return n_; }
    bool get(int a, int b) const { return (row(a)[b / 64] >> (b % 64)) & 1u; }
    void set(int a, int b) { row(a)[b / 64] |= std::uint64_t{1} << (b % 64); }

    void or_row(int a, int from) {
        for (int w = 0; w < words_; ++w) row(a)[w] |= row(from)[w];
    }
    bool rows_intersect(int a, const Relation& other, int b) const {
        for (int w = 0; w < words_; ++w)
            if (row(a)[w] & other.row(b)[w]) return true;
        return false;
    }
    Relation transpose() const {
        Relation t(n_);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (get(a, b)) t.set(b, a);
        return t;
    }
    bool operator==(const Relation& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    std::uint64_t* row(int a) { return bits_.data() + static_cast<std::size_t>(a) * words_; }
    const std::uint64_t* row(int a) const { return bits_.data() + static_cast<std::size_t>(a) * words_; }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

using Edge = std::pair<int, int>;

// Strict relation a < b from a reflexive partial order predicate.
inline Relation strict_from(int n, const std::function<bool(int, int)>& leq) {
    Relation s(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && leq(a, b)) s.set(a, b);
    return s;
}

// Transitive reduction of a strict partial order, edges in (a,b) lexicographic order.
inline std::vector<Edge> cover_edges(const Relation& strict) {
    const Relation below = strict.transpose();
    std::vector<Edge> out;
    for (int a = 0; a < strict.size(); ++a)
        for (int b = 0; b < strict.size(); ++b)
            if (strict.get(a, b) && !strict.rows_intersect(a, below, b)) out.emplace_back(a, b);
    return out;
}

// Strict reachability along directed edges of an acyclic graph.
inline Relation reachability(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> succ(n);
    for (auto [a, b] : edges) succ[a].push_back(b);
    Relation reach(n);
    std::vector<char> done(n, 0);
    auto visit = [&](auto&& self, int a) -> void {
        if (done[a]) return;
        done[a] = 1;
        for (int b : succ[a]) {
            self(self, b);
            reach.set(a, b);
            reach.or_row(a, b);
        }
    };
    for (int a = 0; a < n; ++a) visit(visit, a);
    return reach;
}

// Length of the longest chain ending at each element (rank for graded posets).
inline std::vector<int> heights(int n, const std::vector<Edge>& covers) {
    std::vector<std::vector<int>> pred(n);
    for (auto [a, b] : covers) pred[b].push_back(a);
    std::vector<int> h(n, -1);
    auto visit = [&](auto&& self, int b) -> int {
        if (h[b] >= 0) return h[b];
        int best = 0;
        for (int a : pred[b]) best = std::max(best, self(self, a) + 1);
        return h[b] = best;
    };
    for (int b = 0; b < n; ++b) visit(visit, b);
    return h;
}

}  // namespace triflag

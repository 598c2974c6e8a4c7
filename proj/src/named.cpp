#include "tourn/named.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tourn {

namespace {

struct Arc {
    int from;  // 1-based
    int to;
};

// Builds a tournament on n vertices from an ordering (1-based labels) and
// the arcs that go backward under it; every other pair points forward.
Tournament from_ordering(int n, std::initializer_list<int> order, std::initializer_list<Arc> backward) {
    Tournament t(n);
    std::vector<int> perm;
    for (int v : order) perm.push_back(v - 1);
    const Ordering o(std::move(perm));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) t.orient(o.vertex_at(i), o.vertex_at(j));
    }
    for (const Arc& a : backward) {
        if (o.position_of(a.from - 1) <= o.position_of(a.to - 1)) {
            throw std::logic_error("named: listed arc is not backward");
        }
        t.orient(a.from - 1, a.to - 1);
    }
    return t;
}

Tournament c5() {
    Tournament t(5);
    const Arc arcs[] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}, {2, 4}, {3, 5}, {4, 1}, {5, 2}};
    for (const Arc& a : arcs) t.orient(a.from - 1, a.to - 1);
    return t;
}

Tournament k6() {
    return from_ordering(6, {1, 2, 3, 4, 5, 6}, {{4, 1}, {6, 3}, {6, 1}, {5, 2}});
}

Tournament l1() {
    return from_ordering(6, {3, 4, 5, 1, 2, 6}, {{1, 3}, {2, 4}, {2, 3}, {6, 5}});
}

Tournament l2() {
    return from_ordering(6, {1, 2, 3, 4, 6, 5}, {{4, 1}, {5, 2}, {5, 1}, {6, 3}});
}

}  // namespace

std::string_view pattern_name(Pattern p) {
    switch (p) {
        case Pattern::K6: return "K6";
        case Pattern::C5: return "C5";
        case Pattern::L1: return "L1";
        case Pattern::L2: return "L2";
        case Pattern::K6c: return "K6c";
        case Pattern::C5c: return "C5c";
        case Pattern::L1c: return "L1c";
        case Pattern::L2c: return "L2c";
    }
    throw std::logic_error("pattern_name: bad enum");
}

Pattern parse_pattern(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (Pattern p : kAllPatterns) {
        std::string candidate(pattern_name(p));
        std::transform(candidate.begin(), candidate.end(), candidate.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (candidate == lower) return p;
    }
    throw std::invalid_argument("unknown pattern name: " + std::string(name));
}

Tournament named(Pattern p) {
    switch (p) {
        case Pattern::K6: return k6();
        case Pattern::C5: return c5();
        case Pattern::L1: return l1();
        case Pattern::L2: return l2();
        case Pattern::K6c: return reverse(k6());
        case Pattern::C5c: return reverse(c5());
        case Pattern::L1c: return reverse(l1());
        case Pattern::L2c: return reverse(l2());
    }
    throw std::logic_error("named: bad enum");
}

Tournament named(std::string_view name) { return named(parse_pattern(name)); }

std::string_view ordering_kind_name(OrderingKind k) {
    return k == OrderingKind::Forest ? "forest" : "cyclic";
}

Ordering named_ordering(Pattern p, OrderingKind kind) {
    std::vector<int> labels;
    if (p == Pattern::L1) {
        labels = kind == OrderingKind::Forest ? std::vector<int>{3, 4, 5, 1, 2, 6}
                                              : std::vector<int>{2, 4, 1, 3, 6, 5};
    } else if (p == Pattern::L2) {
        labels = kind == OrderingKind::Forest ? std::vector<int>{1, 2, 3, 4, 6, 5}
                                              : std::vector<int>{2, 4, 1, 6, 3, 5};
    } else {
        throw std::invalid_argument("named_ordering: only L1 and L2 have forest/cyclic orderings");
    }
    return Ordering::from_one_based(labels);
}

std::vector<std::pair<int, int>> named_backward_positions(Pattern p, OrderingKind kind) {
    return backward_graph(named(p), named_ordering(p, kind)).by_position();
}

Ordering k6_canonical_ordering() { return Ordering::identity(6); }

}  // namespace tourn

#include "tourn/tournament.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>

namespace tourn {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<int> vs) : VertexSet(std::vector<int>(vs)) {}

VertexSet::VertexSet(std::vector<int> vs) : members_(std::move(vs)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.front() < 0) {
        throw std::invalid_argument("VertexSet: negative vertex");
    }
}

VertexSet VertexSet::from_mask(Mask m) {
    std::vector<int> vs;
    while (m != 0) {
        vs.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    VertexSet s;
    s.members_ = std::move(vs);
    return s;
}

VertexSet VertexSet::range(int first, int last) {
    VertexSet s;
    for (int v = first; v < last; ++v) s.members_.push_back(v);
    return s;
}

Mask VertexSet::to_mask() const {
    Mask m = 0;
    for (int v : members_) {
        if (v >= 32) throw std::out_of_range("VertexSet::to_mask: vertex >= 32");
        m |= Mask{1} << v;
    }
    return m;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::disjoint(const VertexSet& other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a; else ++b;
    }
    return true;
}

VertexSet VertexSet::unite(const VertexSet& other) const {
    VertexSet s;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(s.members_));
    return s;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
    VertexSet s;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(s.members_));
    return s;
}

std::string VertexSet::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(members_[i] + 1);
    }
    return out + "}";
}

// ----------------------------------------------------------------- Ordering

Ordering::Ordering(std::vector<int> perm) : perm_(std::move(perm)), pos_(perm_.size(), -1) {
    const int n = static_cast<int>(perm_.size());
    for (int i = 0; i < n; ++i) {
        const int v = perm_[static_cast<std::size_t>(i)];
        if (v < 0 || v >= n || pos_[static_cast<std::size_t>(v)] != -1) {
            throw std::invalid_argument("Ordering: not a permutation");
        }
        pos_[static_cast<std::size_t>(v)] = i;
    }
}

Ordering Ordering::identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return Ordering(std::move(p));
}

Ordering Ordering::from_one_based(std::span<const int> labels) {
    std::vector<int> p;
    p.reserve(labels.size());
    for (int l : labels) p.push_back(l - 1);
    return Ordering(std::move(p));
}

Ordering Ordering::reversed() const {
    return Ordering(std::vector<int>(perm_.rbegin(), perm_.rend()));
}

std::vector<int> Ordering::one_based() const {
    std::vector<int> out;
    out.reserve(perm_.size());
    for (int v : perm_) out.push_back(v + 1);
    return out;
}

// --------------------------------------------------------------- Tournament

Tournament::Tournament(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 1 || n > kMaxVertices) {
        throw std::invalid_argument("Tournament: n out of range 1.." + std::to_string(kMaxVertices));
    }
    out_.assign(static_cast<std::size_t>(n) * words_, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) row_mut(i)[j >> 6] |= std::uint64_t{1} << (j & 63);
    }
}

Tournament Tournament::from_bits(int n, std::string_view bits) {
    Tournament t(n);
    const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (bits.size() != expected) {
        throw ParseError("bit string has length " + std::to_string(bits.size()) + ", expected " +
                         std::to_string(expected));
    }
    std::size_t k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
            const char c = bits[k];
            if (c == '1') continue;
            if (c != '0') throw ParseError("non-binary character in bit string");
            t.orient(j, i);
        }
    }
    return t;
}

void Tournament::orient(int from, int to) {
    if (from == to || from < 0 || to < 0 || from >= n_ || to >= n_) {
        throw std::invalid_argument("Tournament::orient: bad vertex pair");
    }
    row_mut(from)[to >> 6] |= std::uint64_t{1} << (to & 63);
    row_mut(to)[from >> 6] &= ~(std::uint64_t{1} << (from & 63));
}

int Tournament::out_degree(int v) const {
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
}

Mask Tournament::out_mask(int v) const {
    if (n_ > 32) throw std::out_of_range("Tournament::out_mask requires n <= 32");
    return static_cast<Mask>(row(v)[0]);
}

Mask Tournament::in_mask(int v) const {
    return all_mask() & ~out_mask(v) & ~(Mask{1} << v);
}

Mask Tournament::all_mask() const {
    if (n_ > 32) throw std::out_of_range("Tournament::all_mask requires n <= 32");
    return n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
}

std::string Tournament::bits() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) s += edge(i, j) ? '1' : '0';
    }
    return s;
}

// --------------------------------------------------------------------- TRN1

Tournament parse_trn1(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        return s;
    };
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) throw ParseError("TRN1: missing newline after header");
    const std::string_view header = trim(text.substr(0, nl));
    std::string_view rest = text.substr(nl + 1);
    if (!rest.empty() && rest.back() == '\n') rest.remove_suffix(1);
    if (rest.find('\n') != std::string_view::npos) throw ParseError("TRN1: trailing content after bit string");
    rest = trim(rest);

    int n = 0;
    const auto [p, ec] = std::from_chars(header.data(), header.data() + header.size(), n);
    if (header.empty() || ec != std::errc{} || p != header.data() + header.size()) {
        throw ParseError("TRN1: malformed header");
    }
    if (n < 1 || n > kMaxVertices) {
        throw ParseError("TRN1: n out of range 1.." + std::to_string(kMaxVertices));
    }
    return Tournament::from_bits(n, rest);
}

std::string serialize_trn1(const Tournament& t) {
    return std::to_string(t.size()) + "\n" + t.bits() + "\n";
}

// ---------------------------------------------------------------- Operations

Tournament reverse(const Tournament& t) {
    const int n = t.size();
    Tournament r(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (t.edge(i, j)) r.orient(j, i);
        }
    }
    return r;
}

InducedTournament induced(const Tournament& t, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("induced: empty vertex set");
    if (s[s.size() - 1] >= t.size()) throw std::out_of_range("induced: vertex out of range");
    const int k = s.size();
    Tournament sub(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (!t.edge(s[i], s[j])) sub.orient(j, i);
        }
    }
    return {std::move(sub), std::vector<int>(s.begin(), s.end())};
}

std::vector<std::pair<int, int>> BackwardEdgeGraph::by_position() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.emplace_back(ordering.position_of(e.from), ordering.position_of(e.to));
    std::sort(out.begin(), out.end());
    return out;
}

BackwardEdgeGraph backward_graph(const Tournament& t, const Ordering& order) {
    if (order.size() != t.size()) throw std::invalid_argument("backward_graph: ordering size mismatch");
    BackwardEdgeGraph g{order, {}};
    const int n = t.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int a = order.vertex_at(i);
            const int b = order.vertex_at(j);
            if (t.edge(b, a)) g.edges.push_back({b, a});
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Tournament from_backward_positions(int n, std::span<const std::pair<int, int>> backward) {
    Tournament t(n);
    for (auto [from, to] : backward) {
        if (from <= to) throw std::invalid_argument("from_backward_positions: pair is not backward");
        t.orient(from, to);
    }
    return t;
}

std::int64_t count_edges(const Tournament& t, const VertexSet& x, const VertexSet& y) {
    std::int64_t e = 0;
    for (int a : x) {
        for (int b : y) e += t.edge(a, b) ? 1 : 0;
    }
    return e;
}

std::string Density::str() const {
    const std::int64_t g = std::gcd(edges, pairs);
    return std::to_string(edges / g) + "/" + std::to_string(pairs / g);
}

Density density(const Tournament& t, const VertexSet& x, const VertexSet& y) {
    if (x.empty() || y.empty()) throw std::invalid_argument("density: empty side");
    if (!x.disjoint(y)) throw std::invalid_argument("density: sets overlap");
    return {count_edges(t, x, y), static_cast<std::int64_t>(x.size()) * y.size()};
}

bool is_complete_to(const Tournament& t, const VertexSet& from, const VertexSet& to) {
    for (int a : from) {
        for (int b : to) {
            if (!t.edge(a, b)) return false;
        }
    }
    return true;
}

std::optional<std::vector<int>> transitive_order(const Tournament& t, const VertexSet& s) {
    // A tournament is transitive iff its score sequence within s is
    // 0, 1, ..., |s|-1; sorting by descending score gives the order.
    std::vector<std::pair<int, int>> scored;
    scored.reserve(static_cast<std::size_t>(s.size()));
    for (int v : s) {
        int d = 0;
        for (int w : s) d += (w != v && t.edge(v, w)) ? 1 : 0;
        scored.emplace_back(-d, v);
    }
    std::sort(scored.begin(), scored.end());
    const int k = s.size();
    std::vector<int> order;
    order.reserve(scored.size());
    for (int i = 0; i < k; ++i) {
        if (-scored[static_cast<std::size_t>(i)].first != k - 1 - i) return std::nullopt;
        order.push_back(scored[static_cast<std::size_t>(i)].second);
    }
    return order;
}

bool is_transitive(const Tournament& t, const VertexSet& s) {
    return transitive_order(t, s).has_value();
}

Tournament transitive_tournament(int n) { return Tournament(n); }

Tournament substitute(const Tournament& outer, int v, const Tournament& inner) {
    const int n1 = outer.size();
    const int n2 = inner.size();
    if (v < 0 || v >= n1) throw std::out_of_range("substitute: vertex out of range");
    const int n = n1 + n2 - 1;
    // Map from result vertex to (is_copy, original index).
    auto outer_of = [&](int r) { return r < v ? r : (r < v + n2 ? v : r - n2 + 1); };
    auto in_copy = [&](int r) { return r >= v && r < v + n2; };
    Tournament t(n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            bool forward;
            if (in_copy(a) && in_copy(b)) {
                forward = inner.edge(a - v, b - v);
            } else {
                forward = outer.edge(outer_of(a), outer_of(b));
            }
            if (!forward) t.orient(b, a);
        }
    }
    return t;
}

Tournament relabel(const Tournament& t, std::span<const int> p) {
    const int n = t.size();
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("relabel: size mismatch");
    Tournament r(n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const int pa = p[static_cast<std::size_t>(a)];
            const int pb = p[static_cast<std::size_t>(b)];
            if (t.edge(a, b)) r.orient(pa, pb); else r.orient(pb, pa);
        }
    }
    return r;
}

}  // namespace tourn

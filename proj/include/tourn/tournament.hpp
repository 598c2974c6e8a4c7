// Exact tournament representation, orderings, vertex sets and the basic
// operations every other module builds on.
//
// Vertices are 0-based internally. Everything that leaves the process (TRN1,
// JSON, DOT) is 1-based so that output matches the v1..vn labels used in the
// usual figures.

#ifndef TOURN_TOURNAMENT_HPP
#define TOURN_TOURNAMENT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tourn {

/// Bit mask over at most 32 vertices; bit v set means vertex v is a member.
using Mask = std::uint32_t;

inline constexpr int kMaxVertices = 1024;
/// Largest n for which exact subset-DP answers (tr, homogeneous search by
/// mask) are computed.
inline constexpr int kMaxExact = 24;

class Tournament;

/// Sorted set of distinct vertices.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> vs);
    explicit VertexSet(std::vector<int> vs);

    static VertexSet from_mask(Mask m);
    static VertexSet range(int first, int last);  // [first, last)

    [[nodiscard]] Mask to_mask() const;
    [[nodiscard]] bool contains(int v) const;
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] int size() const { return static_cast<int>(members_.size()); }
    [[nodiscard]] std::span<const int> members() const { return members_; }
    [[nodiscard]] int operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] auto begin() const { return members_.begin(); }
    [[nodiscard]] auto end() const { return members_.end(); }

    [[nodiscard]] bool disjoint(const VertexSet& other) const;
    [[nodiscard]] VertexSet unite(const VertexSet& other) const;
    [[nodiscard]] VertexSet minus(const VertexSet& other) const;

    /// 1-based rendering, e.g. "{1,3,4}".
    [[nodiscard]] std::string str() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> members_;
};

/// A vertex ordering: perm[position] = vertex.
class Ordering {
public:
    Ordering() = default;
    explicit Ordering(std::vector<int> perm);

    static Ordering identity(int n);
    /// Builds from 1-based vertex labels.
    static Ordering from_one_based(std::span<const int> labels);

    [[nodiscard]] int size() const { return static_cast<int>(perm_.size()); }
    [[nodiscard]] int vertex_at(int position) const { return perm_[static_cast<std::size_t>(position)]; }
    [[nodiscard]] int position_of(int vertex) const { return pos_[static_cast<std::size_t>(vertex)]; }
    [[nodiscard]] std::span<const int> perm() const { return perm_; }
    [[nodiscard]] Ordering reversed() const;
    [[nodiscard]] std::vector<int> one_based() const;

    friend bool operator==(const Ordering& a, const Ordering& b) { return a.perm_ == b.perm_; }

private:
    std::vector<int> perm_;
    std::vector<int> pos_;
};

/// Complete orientation on n labeled vertices. Constructed as the transitive
/// tournament 0 -> 1 -> ... -> n-1; edges are then re-oriented with orient().
class Tournament {
public:
    explicit Tournament(int n);

    /// Builds from TRN1-style bits: pairs (i,j), i<j, lexicographic; '1'
    /// means i -> j.
    static Tournament from_bits(int n, std::string_view bits);

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] bool edge(int from, int to) const {
        return ((row(from)[to >> 6] >> (to & 63)) & 1U) != 0;
    }
    void orient(int from, int to);

    [[nodiscard]] int out_degree(int v) const;
    [[nodiscard]] int in_degree(int v) const { return n_ - 1 - out_degree(v); }
    /// Requires n <= 32.
    [[nodiscard]] Mask out_mask(int v) const;
    [[nodiscard]] Mask in_mask(int v) const;
    [[nodiscard]] Mask all_mask() const;

    /// Out-neighbour row as 64-bit words (n bits used).
    [[nodiscard]] std::span<const std::uint64_t> row(int v) const {
        return {out_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }
    [[nodiscard]] int words() const { return words_; }

    [[nodiscard]] std::string bits() const;

    friend bool operator==(const Tournament& a, const Tournament& b) {
        return a.n_ == b.n_ && a.out_ == b.out_;
    }

private:
    [[nodiscard]] std::uint64_t* row_mut(int v) {
        return out_.data() + static_cast<std::size_t>(v) * words_;
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> out_;
};

/// Thrown for malformed TRN1 input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Tournament parse_trn1(std::string_view text);
/// Canonical whitespace: "n\n<bits>\n".
std::string serialize_trn1(const Tournament& t);

Tournament reverse(const Tournament& t);

struct InducedTournament {
    Tournament tournament;
    /// labels[i] = original vertex of new vertex i (ascending).
    std::vector<int> labels;
};
InducedTournament induced(const Tournament& t, const VertexSet& s);

/// Unordered backward pairs, stored as (later, earlier) in the order they
/// are found scanning positions.
struct BackwardEdge {
    int from;  // later position
    int to;    // earlier position
    friend bool operator==(const BackwardEdge&, const BackwardEdge&) = default;
    friend auto operator<=>(const BackwardEdge&, const BackwardEdge&) = default;
};

struct BackwardEdgeGraph {
    Ordering ordering;
    std::vector<BackwardEdge> edges;  // sorted

    /// Edges as (from position, to position), both 0-based, sorted.
    [[nodiscard]] std::vector<std::pair<int, int>> by_position() const;
};
BackwardEdgeGraph backward_graph(const Tournament& t, const Ordering& order);

/// Ordering from a list of edges: every pair forward except the listed
/// backward pairs (given as (from position, to position), 0-based).
Tournament from_backward_positions(int n, std::span<const std::pair<int, int>> backward);

/// Number of edges x -> y with x in X, y in Y.
std::int64_t count_edges(const Tournament& t, const VertexSet& x, const VertexSet& y);

struct Density {
    std::int64_t edges;
    std::int64_t pairs;  // |X||Y|
    [[nodiscard]] std::string str() const;
};
/// Directed density d(X,Y) as an unreduced exact pair.
Density density(const Tournament& t, const VertexSet& x, const VertexSet& y);

bool is_complete_to(const Tournament& t, const VertexSet& from, const VertexSet& to);
bool is_transitive(const Tournament& t, const VertexSet& s);
/// Transitive ordering of s (source first); nullopt if s has a cycle.
std::optional<std::vector<int>> transitive_order(const Tournament& t, const VertexSet& s);

Tournament transitive_tournament(int n);

/// Replaces vertex v of outer by a copy of inner. The copy occupies labels
/// v .. v+|inner|-1; outer vertices after v shift up.
Tournament substitute(const Tournament& outer, int v, const Tournament& inner);

/// Applies a relabeling: result has edge p[a] -> p[b] iff t has a -> b.
Tournament relabel(const Tournament& t, std::span<const int> p);

}  // namespace tourn

#endif

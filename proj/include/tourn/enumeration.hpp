// Canonical forms, isomorphism, enumeration up to isomorphism and pattern
// containment.

#ifndef TOURN_ENUMERATION_HPP
#define TOURN_ENUMERATION_HPP

#include "tourn/tournament.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tourn {

inline constexpr int kMaxCanonical = 8;
inline constexpr int kMaxEnumerate = 7;

/// Lexicographically minimal TRN1 bit string over all relabelings.
struct CanonicalForm {
    int n = 0;
    std::string bits;

    [[nodiscard]] Tournament tournament() const { return Tournament::from_bits(n, bits); }
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
    CanonicalForm form;
    /// perm[position] = vertex of the input placed at that position.
    Ordering ordering;
};

/// Exact minimiser. Candidates for each position come only from the first
/// cell of an ordered partition refined by the vertices already placed, which
/// keeps the exact minimum while avoiding the full n! scan.
CanonicalLabeling canonical_labeling(const Tournament& t);
CanonicalForm canonical_form(const Tournament& t);

struct IsomorphismResult {
    bool isomorphic = false;
    /// map[v] = image in the second tournament of vertex v of the first.
    std::vector<int> map;
};
IsomorphismResult is_isomorphic(const Tournament& a, const Tournament& b);

/// One representative (the canonical form) per class, sorted by bits. Built
/// by vertex extension from the classes on n-1 vertices.
std::vector<CanonicalForm> enumerate_classes(int n);

/// Same result by canonicalising every labeled tournament on n vertices;
/// the labeled space is split across `jobs` threads.
std::vector<CanonicalForm> enumerate_classes_exhaustive(int n, int jobs = 1);

struct Embedding {
    Tournament pattern;
    Tournament host;
    std::vector<int> map;  // pattern vertex -> host vertex
};

/// Checks the Embedding invariant edge by edge.
bool verify_embedding(const Embedding& e);

/// First embedding in lexicographic order of (map[0], map[1], ...), or
/// nullopt when the host is pattern-free.
std::optional<Embedding> find_embedding(const Tournament& host, const Tournament& pattern);

}  // namespace tourn

#endif

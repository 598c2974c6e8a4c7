// Homogeneous sets, star decompositions of backward-edge graphs, galaxy and
// forest orderings, and the five-outcome classifier for six-vertex
// tournaments.

#ifndef TOURN_STRUCTURE_HPP
#define TOURN_STRUCTURE_HPP

#include "tourn/enumeration.hpp"
#include "tourn/tournament.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tourn {

/// Smallest nontrivial homogeneous set, ties broken lexicographically on the
/// sorted member list; nullopt iff t is prime.
std::optional<VertexSet> find_homogeneous(const Tournament& t);
bool is_homogeneous(const Tournament& t, const VertexSet& s);
inline bool is_prime(const Tournament& t) { return !find_homogeneous(t).has_value(); }

enum class ComponentKind { Singleton, LeftStar, RightStar, Other };
std::string_view component_kind_name(ComponentKind k);

struct Component {
    ComponentKind kind = ComponentKind::Other;
    std::vector<int> vertices;  // sorted by position
    int center = -1;            // stars only
    std::vector<int> leaves;    // stars only, sorted by position
};

struct StarDecomposition {
    Ordering ordering;
    std::vector<Component> components;  // ordered by minimum position
    bool is_star_ordering = false;
    bool is_galaxy_ordering = false;
    bool is_forest_ordering = false;
};

/// Components with a single edge are stars with either endpoint as centre;
/// the reported centre is the one that satisfies the galaxy condition when
/// possible, preferring the earlier vertex (left star).
StarDecomposition analyze_ordering(const Tournament& t, const Ordering& order);

/// First galaxy ordering in lexicographic permutation order; n <= 8.
std::optional<Ordering> find_galaxy_ordering(const Tournament& t);

struct ForestOrderings {
    long count = 0;
    std::vector<Ordering> orderings;  // lexicographic
};
/// All orderings whose backward-edge graph is acyclic; n <= 8.
ForestOrderings count_forest_orderings(const Tournament& t, bool keep_list = true);

// ------------------------------------------------------------ classify6

/// Witness for outcome (2): deleting `vertex` leaves a copy of C5 in which
/// `vertex` has exactly one in- or out-neighbour.
struct C5Witness {
    int vertex = -1;
    std::vector<int> c5_map;  // C5 vertex -> host vertex
    bool one_in = false;
    bool one_out = false;
};

/// Witness for outcome (4): an ordering (a..f) of T (or of T reversed when
/// `reversed`) whose backward edges are exactly (f,a),(e,a),(d,b),(f,c).
struct Outcome4Witness {
    Ordering ordering;
    bool reversed = false;
};

struct ClassificationRecord {
    CanonicalForm cls;
    std::array<bool, 6> holds{};  // index 1..5
    std::optional<Ordering> galaxy;           // (1)
    std::optional<C5Witness> c5;              // (2)
    std::optional<VertexSet> homogeneous;     // (3)
    std::optional<Outcome4Witness> ordering4; // (4)
    std::optional<std::vector<int>> k6_map;   // (5): K6 vertex -> host vertex

    [[nodiscard]] std::vector<int> outcomes() const;
};

/// Backward edges of outcome (4) by position (0-based): (f,a),(e,a),(d,b),(f,c).
std::vector<std::pair<int, int>> outcome4_positions();

/// Tests all five outcomes independently; requires |t| = 6. The record is
/// computed for t as given (cls is its canonical form).
ClassificationRecord classify6(const Tournament& t);

/// Re-checks every witness in the record against t. Returns an empty string
/// when all witnesses hold, otherwise a description of the first failure.
std::string recheck_classification(const Tournament& t, const ClassificationRecord& r);

/// Classifies every six-vertex class; output in canonical-form order.
std::vector<ClassificationRecord> classify_all6(int jobs = 1);

}  // namespace tourn

#endif

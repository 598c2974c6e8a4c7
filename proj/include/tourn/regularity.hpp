// Regularity tools: epsilon-criticality, (c, lambda, w)-structures and their
// smooth refinement, backward matchings with Konig covers, and transitive
// merging.

#ifndef TOURN_REGULARITY_HPP
#define TOURN_REGULARITY_HPP

#include "tourn/rational.hpp"
#include "tourn/tournament.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tourn {

// ------------------------------------------------------------- thresholds

struct EpsilonThresholds {
    double merge_bound;     // log_c(1 - f)
    double matching_bound;  // log_{c/2}(1/2)
    double size_bound;      // log_N(2)
};

/// Comparisons against these values use this tolerance; they are reported,
/// never used to decide anything exactly.
inline constexpr double kThresholdTolerance = 1e-12;

/// Requires 0 < c < 1, 0 < f < 1, N >= 2.
EpsilonThresholds epsilon_thresholds(const Rational& c, const Rational& f, long long n);

// ------------------------------------------------------------- criticality

inline constexpr int kMaxCritical = 20;

struct CriticalityResult {
    bool critical = false;
    int tr = 0;
    /// Set showing why t is not critical: the whole vertex set when
    /// tr(T) >= n^eps, otherwise the first proper subset (by mask) with
    /// tr(S) < |S|^eps.
    std::optional<VertexSet> violation;
};

/// Exact test with eps = p/q: tr^q compared with size^p in big integers.
CriticalityResult is_epsilon_critical(const Tournament& t, const Rational& eps);

/// Exact tr^q >= size^p for eps = p/q > 0.
bool tr_meets_power(int tr, int size, const Rational& eps);

// ------------------------------------------------------------ structures

struct StructureSpec {
    std::vector<int> w;  // entries 0 (linear) or 1 (transitive)
    Rational c;
    Rational lambda;

    /// Throws std::invalid_argument unless |w| >= 1, entries are 0/1,
    /// c > 0 and 0 < lambda < 1.
    void validate() const;
};

struct ChainStructure {
    std::vector<VertexSet> sets;
    StructureSpec spec;
};

struct StructureCheck {
    bool ok = true;
    std::string violation;
    explicit operator bool() const { return ok; }
};

/// tr(T) for n <= kMaxExact, otherwise the bound n. The transitive-size
/// clause |S_i| >= c tr(T) is checked against this value.
int transitive_size_reference(const Tournament& t);

/// Non-smooth mode checks set sizes, transitivity and pairwise densities;
/// smooth mode adds the per-vertex density conditions. Throws
/// std::invalid_argument when sets overlap or leave the vertex range.
StructureCheck verify_structure(const Tournament& t, const ChainStructure& chain, bool smooth);

/// Bad^M(i, j): vertices of A_i with more than M lambda0 |A_j| backward
/// neighbours in A_j.
VertexSet bad_set(const Tournament& t, const ChainStructure& chain, int i, int j, int m);

/// Removes every Bad^{2k}(i, j) from A_i (k = |w|). The input must verify in
/// non-smooth mode; the result carries c/2 and 4 k lambda.
ChainStructure smooth_refine(const Tournament& t, const ChainStructure& chain);

/// Heuristic search; a nullopt result does not prove that no structure
/// exists. Any returned chain passes verify_structure(t, chain, smooth).
std::optional<ChainStructure> find_structure(const Tournament& t, const StructureSpec& spec, bool smooth = false);

// --------------------------------------------------------------- matching

struct MatchingOutcome {
    /// True when a matching of size >= m exists; `pairs` then holds m pairs.
    bool matched = false;
    std::vector<std::pair<int, int>> pairs;  // (x, y) with y -> x
    int maximum = 0;                         // maximum matching size
    VertexSet cover_x;                       // Konig cover, when !matched
    VertexSet cover_y;
    VertexSet complete_x;  // X \ C_X, complete to complete_y
    VertexSet complete_y;  // Y \ C_Y
    bool half_sizes = false;  // |X'| >= |X|/2 and |Y'| >= |Y|/2
};

struct MaximumMatching {
    std::vector<std::pair<int, int>> pairs;  // sorted by x
    VertexSet cover_x;
    VertexSet cover_y;
};

/// Maximum matching of the bipartite graph {x, y : y -> x} with a minimum
/// vertex cover from alternating reachability.
MaximumMatching max_backward_matching(const Tournament& t, const VertexSet& x, const VertexSet& y);

MatchingOutcome backward_matching(const Tournament& t, const VertexSet& x, const VertexSet& y, int m);

// ----------------------------------------------------------------- merging

struct MergedTransitive {
    VertexSet set;
    std::vector<int> order;  // transitive order of the union
};

/// Union of two transitive sets, one complete to the other. Throws
/// std::invalid_argument when either condition fails.
MergedTransitive merge_transitive(const Tournament& t, const VertexSet& a, const VertexSet& b);

enum class MergeDirection { BulkToTransitive, TransitiveToBulk };
std::string_view merge_direction_name(MergeDirection d);

struct MergeCertificate {
    VertexSet transitive_part;
    VertexSet bulk;
    MergeDirection direction = MergeDirection::BulkToTransitive;
    /// Transitive subset of bulk: maximum when |bulk| <= kMaxExact,
    /// otherwise greedy (bulk_witness_exact = false).
    VertexSet bulk_witness;
    bool bulk_witness_exact = true;
    int claimed_gain = 0;  // |bulk_witness| + |transitive_part|
};

MergeCertificate make_merge_certificate(const Tournament& t, VertexSet transitive_part, VertexSet bulk,
                                        MergeDirection direction);

StructureCheck verify_merge_certificate(const Tournament& t, const MergeCertificate& cert);

}  // namespace tourn

#endif

// Maximum transitive subtournaments.

#ifndef TOURN_TRANSITIVE_HPP
#define TOURN_TRANSITIVE_HPP

#include "tourn/tournament.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace tourn {

/// tr(S) for every subset S of a tournament with at most kMaxExact vertices,
/// via m(S) = max over v in S of 1 + m(S & out(v)). Entries are filled on
/// demand. Not thread-safe; use one table per thread.
class TransitiveTable {
public:
    explicit TransitiveTable(const Tournament& t);

    [[nodiscard]] int size() const { return n_; }
    int tr(Mask s);
    /// A transitive subset of s of size tr(s), in transitive order. Ties go
    /// to the smallest source vertex.
    std::vector<int> witness(Mask s);
    /// Fills every entry; afterwards tr() never recurses.
    void fill_all();

private:
    int lookup(Mask s);
    void store(Mask s, int value);

    int n_;
    std::vector<Mask> out_;
    bool dense_;
    std::vector<std::int8_t> dense_memo_;
    std::unordered_map<Mask, std::int8_t> sparse_memo_;
};

struct TransitiveResult {
    int size = 0;
    VertexSet witness;
    std::vector<int> order;  // witness in transitive order
};

/// Exact tr(T); requires n <= kMaxExact.
TransitiveResult max_transitive(const Tournament& t);
/// Exact tr(T|S); requires |S| <= kMaxExact (T itself may be larger).
TransitiveResult max_transitive(const Tournament& t, const VertexSet& s);
/// Exact when |S| <= kMaxExact; otherwise a greedy transitive subset (the
/// vertex with most out-neighbours among the remaining candidates is taken
/// first). The flag says which.
TransitiveResult best_transitive(const Tournament& t, const VertexSet& s, bool* exact = nullptr);

}  // namespace tourn

#endif

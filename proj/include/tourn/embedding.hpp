// Replay of the L1/L2 embedding case analyses on concrete tournaments with a
// smooth chain structure, plus generators for test instances.
//
// A replay either assembles six host vertices that induce the pattern in its
// forest or cyclic ordering, or stops at a branch where no such vertices are
// available and emits the merge certificate that branch yields.

#ifndef TOURN_EMBEDDING_HPP
#define TOURN_EMBEDDING_HPP

#include "tourn/named.hpp"
#include "tourn/regularity.hpp"
#include "tourn/tournament.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tourn {

/// The largest lambda replay accepts.
Rational replay_lambda_limit();  // 1/12

struct TraceStep {
    std::string name;    // fixed vocabulary, see replay()
    std::string detail;  // chosen sets/vertices, 1-based
};

struct PatternEmbedding {
    Pattern pattern = Pattern::L2;
    OrderingKind ordering = OrderingKind::Forest;
    std::vector<int> vertices;  // six host vertices in position order
};

struct ReplayOutcome {
    std::variant<PatternEmbedding, MergeCertificate> result;
    std::vector<TraceStep> trace;

    [[nodiscard]] bool is_embedding() const { return std::holds_alternative<PatternEmbedding>(result); }
    [[nodiscard]] const PatternEmbedding& embedding() const { return std::get<PatternEmbedding>(result); }
    [[nodiscard]] const MergeCertificate& merge() const { return std::get<MergeCertificate>(result); }
    [[nodiscard]] std::vector<std::string> step_names() const;
};

/// Expected w: (0,0,1,0,0,0) for L2, (0,0,1,0,0,0,0) for L1.
std::vector<int> replay_shape(Pattern pattern);

/// Runs the case analysis. Trace step names, in the order they can occur:
///   trim, split, match, merge-complete-pair, merge-x-wrong, merge-y-wrong,
///   pick-j, case-BOTH | case-U | case-V, forest-assemble, backward-edge,
///   merge-no-backward-edge, pick-s, cyclic-assemble.
/// Throws std::invalid_argument for a wrong pattern or w shape, a chain that
/// is not smooth, lambda > 1/12, or a transitive set with fewer than three
/// vertices. Throws std::logic_error if an assembled tuple fails to induce
/// the pattern.
ReplayOutcome replay(const Tournament& t, const ChainStructure& chain, Pattern pattern);

struct OutcomeCheck {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

/// Embeddings: the six vertices induce the pattern and their order has the
/// named ordering's backward edges. Merges: verify_merge_certificate. The
/// trace is not inspected.
OutcomeCheck verify_outcome(const Tournament& t, const ReplayOutcome& outcome, Pattern pattern);

enum class PlantCase { Both, MirrorU, MirrorV };
std::string_view plant_case_name(PlantCase c);
PlantCase parse_plant_case(std::string_view name);

struct PlantedInstance {
    Tournament tournament;
    ChainStructure chain;
};

/// Default set sizes: 24 everywhere, the smallest uniform size that lets
/// every forced backward edge sit inside the lambda = 1/12 budget.
std::vector<int> default_plant_sizes(Pattern pattern);

/// Builds a host whose chain (lambda = 1/12) is smooth and whose replay is
/// steered into the requested case. Deterministic in seed. Throws
/// std::invalid_argument when the sizes cannot carry the forced edges.
PlantedInstance plant_instance(Pattern pattern, PlantCase c, const std::vector<int>& sizes, std::uint64_t seed);

/// Each pair oriented by one draw of std::mt19937_64 seeded with `seed`
/// (top bit of the draw; 1 means i -> j), pairs in TRN1 order.
Tournament random_tournament(int n, std::uint64_t seed);

}  // namespace tourn

#endif

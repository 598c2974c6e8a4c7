#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "tourn/embedding.hpp"
#include "tourn/enumeration.hpp"

using namespace tourn;

namespace {

// Transitive host cut into consecutive blocks of 24, chain at lambda 1/12.
struct Host {
    Tournament t;
    ChainStructure chain;
};

Host transitive_host(Pattern p) {
    const auto w = replay_shape(p);
    const int n = 24 * static_cast<int>(w.size());
    Host h{transitive_tournament(n), {{}, {w, Rational(24, n), Rational(1, 12)}}};
    for (std::size_t i = 0; i < w.size(); ++i) {
        h.chain.sets.push_back(VertexSet::range(24 * static_cast<int>(i), 24 * static_cast<int>(i) + 24));
    }
    return h;
}

int first(const Host& h, std::size_t set) { return h.chain.sets[set][0]; }

std::vector<std::string> names(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("replay shapes and preconditions") {
    CHECK(replay_shape(Pattern::L2) == std::vector<int>{0, 0, 1, 0, 0, 0});
    CHECK(replay_shape(Pattern::L1) == std::vector<int>{0, 0, 1, 0, 0, 0, 0});
    CHECK_THROWS_AS(replay_shape(Pattern::K6), std::invalid_argument);

    auto h = transitive_host(Pattern::L2);
    CHECK_THROWS_AS(replay(h.t, h.chain, Pattern::L1), std::invalid_argument);
    auto loose = h.chain;
    loose.spec.lambda = Rational(1, 10);
    CHECK_THROWS_AS(replay(h.t, loose, Pattern::L2), std::invalid_argument);
    auto tiny = h.chain;
    tiny.sets[2] = VertexSet{48, 49};
    tiny.spec.c = Rational(2, 144);
    CHECK_THROWS_AS(replay(h.t, tiny, Pattern::L2), std::invalid_argument);
    auto rough = h.t;
    for (int v = 120; v < 125; ++v) rough.orient(v, 0);  // five backward edges into one vertex
    CHECK_THROWS_AS(replay(rough, h.chain, Pattern::L2), std::invalid_argument);
}

TEST_CASE("A1 complete to A5 gives a merge at the matching step") {
    for (auto p : {Pattern::L1, Pattern::L2}) {
        const auto h = transitive_host(p);
        const auto out = replay(h.t, h.chain, p);
        REQUIRE_FALSE(out.is_embedding());
        CHECK(out.step_names() == names({"trim", "split", "match", "merge-complete-pair"}));
        CHECK(out.merge().bulk == h.chain.sets[0]);
        CHECK(out.merge().direction == MergeDirection::BulkToTransitive);
        CHECK(out.merge().transitive_part == h.chain.sets[5]);
        CHECK(verify_outcome(h.t, out, p).ok);
    }
}

TEST_CASE("wrong ends give merges") {
    auto h = transitive_host(Pattern::L2);
    const int x = first(h, 0);
    const int y = first(h, 5);
    h.t.orient(y, x);
    // x complete to T3 and T1 complete to y: both wrong, X preferred on ties.
    auto out = replay(h.t, h.chain, Pattern::L2);
    REQUIRE_FALSE(out.is_embedding());
    CHECK(out.step_names().back() == "merge-x-wrong");
    CHECK(out.merge().bulk == VertexSet{x});
    CHECK(out.merge().transitive_part == VertexSet::range(64, 72));
    CHECK(verify_outcome(h.t, out, Pattern::L2).ok);

    // One vertex of T3 beats x: only y stays wrong.
    h.t.orient(70, x);
    out = replay(h.t, h.chain, Pattern::L2);
    REQUIRE_FALSE(out.is_embedding());
    CHECK(out.step_names().back() == "merge-y-wrong");
    CHECK(out.merge().bulk == VertexSet{y});
    CHECK(out.merge().transitive_part == VertexSet::range(48, 56));
    CHECK(out.merge().direction == MergeDirection::TransitiveToBulk);
    CHECK(verify_outcome(h.t, out, Pattern::L2).ok);
}

TEST_CASE("case BOTH without a backward edge gives a merge") {
    auto h = transitive_host(Pattern::L2);
    const int x = first(h, 0);
    const int y = first(h, 5);
    const int u = 50;  // in T1
    const int v = 70;  // in T3
    h.t.orient(y, x);
    h.t.orient(y, u);
    h.t.orient(v, x);
    const auto out = replay(h.t, h.chain, Pattern::L2);
    REQUIRE_FALSE(out.is_embedding());
    CHECK(out.step_names() == names({"trim", "split", "match", "pick-j", "case-BOTH", "merge-no-backward-edge"}));
    CHECK(out.merge().transitive_part == VertexSet::range(56, 64));
    CHECK(out.merge().bulk == h.chain.sets[3]);
    CHECK(verify_outcome(h.t, out, Pattern::L2).ok);

    // Adding z -> w completes the forest ordering.
    h.t.orient(80, 60);
    const auto emb = replay(h.t, h.chain, Pattern::L2);
    REQUIRE(emb.is_embedding());
    CHECK(emb.embedding().vertices == std::vector<int>{x, u, 60, v, 80, y});
    CHECK(emb.embedding().ordering == OrderingKind::Forest);
}

TEST_CASE("planted instances replay into the intended case") {
    struct Expect {
        PlantCase c;
        const char* step;
        OrderingKind kind;
    };
    const std::vector<Expect> cases{{PlantCase::Both, "case-BOTH", OrderingKind::Forest},
                                    {PlantCase::MirrorU, "case-U", OrderingKind::Cyclic},
                                    {PlantCase::MirrorV, "case-V", OrderingKind::Cyclic}};
    for (auto p : {Pattern::L1, Pattern::L2}) {
        for (const auto& e : cases) {
            for (std::uint64_t seed = 1; seed <= 15; ++seed) {
                const auto inst = plant_instance(p, e.c, default_plant_sizes(p), seed);
                CHECK(verify_structure(inst.tournament, inst.chain, true).ok);
                const auto out = replay(inst.tournament, inst.chain, p);
                REQUIRE(out.is_embedding());
                CHECK(verify_outcome(inst.tournament, out, p).ok);
                CHECK(out.embedding().ordering == e.kind);
                const auto steps = out.step_names();
                CHECK(std::find(steps.begin(), steps.end(), e.step) != steps.end());
                if (e.c == PlantCase::Both) {
                    CHECK(steps == names({"trim", "split", "match", "pick-j", "case-BOTH", "forest-assemble"}));
                } else {
                    CHECK(steps.back() == "cyclic-assemble");
                }
                // Deterministic.
                const auto again = replay(inst.tournament, inst.chain, p);
                CHECK(again.step_names() == steps);
                CHECK(again.embedding().vertices == out.embedding().vertices);
                // Cross-module agreement.
                CHECK(find_embedding(inst.tournament, named(p)).has_value());
            }
        }
    }
}

TEST_CASE("tuple layout per case") {
    // The traced vertices sit where the named orderings put them.
    const auto inst = plant_instance(Pattern::L2, PlantCase::Both, default_plant_sizes(Pattern::L2), 1);
    const auto out = replay(inst.tournament, inst.chain, Pattern::L2);
    const auto& v = out.embedding().vertices;
    CHECK(inst.chain.sets[0].contains(v[0]));
    CHECK(inst.chain.sets[2].contains(v[1]));
    CHECK(inst.chain.sets[2].contains(v[2]));
    CHECK(inst.chain.sets[2].contains(v[3]));
    CHECK(inst.chain.sets[3].contains(v[4]));
    CHECK(inst.chain.sets[5].contains(v[5]));

    const auto l1 = plant_instance(Pattern::L1, PlantCase::MirrorU, default_plant_sizes(Pattern::L1), 7);
    const auto o1 = replay(l1.tournament, l1.chain, Pattern::L1);
    const auto& w = o1.embedding().vertices;
    CHECK(l1.chain.sets[1].contains(w[1]));
    CHECK(l1.chain.sets[2].contains(w[2]));
    CHECK(l1.chain.sets[2].contains(w[2]));
    CHECK(l1.chain.sets[3].contains(w[3]));
    CHECK(l1.chain.sets[4].contains(w[4]));

    const auto l2 = plant_instance(Pattern::L2, PlantCase::MirrorU, default_plant_sizes(Pattern::L2), 2);
    const auto o2 = replay(l2.tournament, l2.chain, Pattern::L2);
    const auto& s = o2.embedding().vertices;
    CHECK(l2.chain.sets[3].contains(s[3]));
    CHECK(l2.chain.sets[4].contains(s[4]));
}

TEST_CASE("verify_outcome rejects corrupted witnesses") {
    const auto inst = plant_instance(Pattern::L2, PlantCase::Both, default_plant_sizes(Pattern::L2), 3);
    const auto out = replay(inst.tournament, inst.chain, Pattern::L2);
    REQUIRE(out.is_embedding());
    auto flipped = inst.tournament;
    const auto& v = out.embedding().vertices;
    if (flipped.edge(v[0], v[1])) flipped.orient(v[1], v[0]); else flipped.orient(v[0], v[1]);
    CHECK_FALSE(verify_outcome(flipped, out, Pattern::L2).ok);
    CHECK_FALSE(verify_outcome(inst.tournament, out, Pattern::L1).ok);
    auto swapped = out;
    std::get<PatternEmbedding>(swapped.result).ordering = OrderingKind::Cyclic;
    CHECK_FALSE(verify_outcome(inst.tournament, swapped, Pattern::L2).ok);

    const auto h = transitive_host(Pattern::L2);
    const auto merge = replay(h.t, h.chain, Pattern::L2);
    auto broken = h.t;
    broken.orient(h.chain.sets[5][3], h.chain.sets[0][2]);  // bulk vertex now beaten by the transitive side
    CHECK_FALSE(verify_outcome(broken, merge, Pattern::L2).ok);
}

TEST_CASE("plant_instance preconditions and determinism") {
    CHECK_THROWS_AS(plant_instance(Pattern::L2, PlantCase::Both, {6, 6, 6, 6, 6, 6}, 7), std::invalid_argument);
    CHECK_THROWS_AS(plant_instance(Pattern::L1, PlantCase::MirrorU, {6, 6, 9, 6, 6, 6, 6}, 7), std::invalid_argument);
    CHECK_THROWS_AS(plant_instance(Pattern::L2, PlantCase::Both, {24, 24, 3, 24, 24, 24}, 7), std::invalid_argument);
    CHECK_THROWS_AS(plant_instance(Pattern::L2, PlantCase::Both, {24, 24, 24}, 7), std::invalid_argument);
    CHECK_THROWS_AS(plant_instance(Pattern::L2, PlantCase::Both, {3, 24, 24, 24, 24, 24}, 7), std::invalid_argument);
    const auto a = plant_instance(Pattern::L1, PlantCase::MirrorV, default_plant_sizes(Pattern::L1), 9);
    const auto b = plant_instance(Pattern::L1, PlantCase::MirrorV, default_plant_sizes(Pattern::L1), 9);
    CHECK(a.tournament == b.tournament);
    CHECK(a.chain.sets == b.chain.sets);
    CHECK_FALSE(a.tournament == plant_instance(Pattern::L1, PlantCase::MirrorV, default_plant_sizes(Pattern::L1), 10).tournament);
    CHECK(parse_plant_case("mirror-u") == PlantCase::MirrorU);
    CHECK(plant_case_name(PlantCase::MirrorV) == "MIRROR-V");
    CHECK_THROWS_AS(parse_plant_case("sideways"), std::invalid_argument);
    // Larger, uneven sizes.
    const auto big = plant_instance(Pattern::L2, PlantCase::MirrorU, {30, 26, 37, 24, 28, 25}, 4);
    CHECK(replay(big.tournament, big.chain, Pattern::L2).is_embedding());
}

TEST_CASE("random tournaments") {
    CHECK(random_tournament(1, 5).size() == 1);
    CHECK(random_tournament(12, 42) == random_tournament(12, 42));
    CHECK_FALSE(random_tournament(12, 42) == random_tournament(12, 43));
    CHECK_THROWS_AS(random_tournament(0, 1), std::invalid_argument);
    // The documented draw: top bit of one mt19937_64 output per pair.
    std::mt19937_64 rng(77);
    const auto t = random_tournament(5, 77);
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) CHECK(t.edge(i, j) == ((rng() >> 63) == 1));
    }
}

// Acceptance suite. Usage: acceptance [criterion...]; with no arguments every
// criterion runs. Prints one "criterion N: PASS|FAIL - detail" line each and
// exits nonzero if any criterion fails.

#include "support/oracles.hpp"
#include "tourn/embedding.hpp"
#include "tourn/enumeration.hpp"
#include "tourn/named.hpp"
#include "tourn/regularity.hpp"
#include "tourn/structure.hpp"
#include "tourn/transitive.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <sys/wait.h>
#include <thread>

using namespace tourn;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (!pass) detail << "; ";
            pass = false;
            detail << what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int jobs() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

std::uint32_t full_mask(int n) { return (1U << n) - 1; }

// Tournament on v1..v6 (0-based labels) laid out in `order`: every pair is
// forward except the listed backward arcs (from, to), given as labels.
Tournament from_quoted_ordering(const std::vector<int>& order, const std::set<std::pair<int, int>>& backward) {
    const int n = static_cast<int>(order.size());
    Tournament t(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int a = order[static_cast<std::size_t>(i)] - 1;
            const int b = order[static_cast<std::size_t>(j)] - 1;
            if (backward.contains({b + 1, a + 1})) t.orient(b, a); else t.orient(a, b);
        }
    }
    return t;
}

// Backward arcs of `t` under `order` (labels 1-based), as label pairs.
std::set<std::pair<int, int>> backward_labels(const Tournament& t, const std::vector<int>& order) {
    std::set<std::pair<int, int>> out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            if (t.edge(order[j] - 1, order[i] - 1)) out.insert({order[j], order[i]});
        }
    }
    return out;
}

// Backward arcs under an ordering, as (from position, to position).
std::set<std::pair<int, int>> backward_positions(const Tournament& t, std::span<const int> perm) {
    std::set<std::pair<int, int>> out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (t.edge(perm[j], perm[i])) out.insert({static_cast<int>(j), static_cast<int>(i)});
        }
    }
    return out;
}

// The named orderings as quoted: (labels in position order, backward arcs).
struct Quoted {
    std::vector<int> order;
    std::set<std::pair<int, int>> backward;
};

const Quoted kK6{{1, 2, 3, 4, 5, 6}, {{4, 1}, {6, 3}, {6, 1}, {5, 2}}};
const Quoted kL1Forest{{3, 4, 5, 1, 2, 6}, {{1, 3}, {2, 4}, {2, 3}, {6, 5}}};
const Quoted kL1Cyclic{{2, 4, 1, 3, 6, 5}, {{1, 2}, {5, 1}, {5, 2}, {3, 4}}};
const Quoted kL2Forest{{1, 2, 3, 4, 6, 5}, {{4, 1}, {5, 2}, {5, 1}, {6, 3}}};
const Quoted kL2Cyclic{{2, 4, 1, 6, 3, 5}, {{1, 2}, {5, 1}, {5, 2}, {3, 4}}};

// Regular five-vertex tournament: i -> i+1, i+2 (mod 5).
Tournament rotational_c5() {
    Tournament t(5);
    for (int i = 0; i < 5; ++i) {
        t.orient(i, (i + 1) % 5);
        t.orient(i, (i + 2) % 5);
    }
    return t;
}

Tournament delete_vertex(const Tournament& t, int v) {
    std::vector<int> keep;
    for (int u = 0; u < t.size(); ++u) {
        if (u != v) keep.push_back(u);
    }
    return induced(t, VertexSet(keep)).tournament;
}

bool maps_pattern(const Tournament& host, const Tournament& pattern, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != pattern.size()) return false;
    std::set<int> seen;
    for (int v : map) {
        if (v < 0 || v >= host.size() || !seen.insert(v).second) return false;
    }
    for (int a = 0; a < pattern.size(); ++a) {
        for (int b = 0; b < pattern.size(); ++b) {
            if (a != b && pattern.edge(a, b) != host.edge(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)])) return false;
        }
    }
    return true;
}

// Independent check of one claimed outcome witness.
std::string check_witness(const Tournament& t, const ClassificationRecord& r, int k) {
    const int n = t.size();
    switch (k) {
        case 1: {
            if (!r.galaxy) return "no ordering";
            const std::vector<int> perm(r.galaxy->perm().begin(), r.galaxy->perm().end());
            return oracle::galaxy_ordering(t, perm) ? "" : "ordering is not a galaxy ordering";
        }
        case 2: {
            if (!r.c5) return "no c5 witness";
            const auto& w = *r.c5;
            if (std::find(w.c5_map.begin(), w.c5_map.end(), w.vertex) != w.c5_map.end()) return "vertex inside its C5";
            if (!maps_pattern(t, rotational_c5(), w.c5_map)) return "map does not induce C5";
            int out = 0;
            for (int v : w.c5_map) out += t.edge(w.vertex, v) ? 1 : 0;
            return (out == 1 || out == 4) ? "" : "vertex has neither one in- nor one outneighbour";
        }
        case 3: {
            if (!r.homogeneous) return "no set";
            const auto s = r.homogeneous->size();
            if (s <= 1 || s >= n) return "trivial set";
            return oracle::homogeneous_mask(t, r.homogeneous->to_mask()) ? "" : "set is not homogeneous";
        }
        case 4: {
            if (!r.ordering4) return "no ordering";
            const auto h = r.ordering4->reversed ? reverse(t) : t;
            // (f,a), (e,a), (d,b), (f,c) with a..f at positions 0..5.
            const std::set<std::pair<int, int>> want{{5, 0}, {4, 0}, {3, 1}, {5, 2}};
            return backward_positions(h, r.ordering4->ordering.perm()) == want ? "" : "backward arcs differ";
        }
        case 5: {
            if (!r.k6_map) return "no map";
            return maps_pattern(t, from_quoted_ordering(kK6.order, kK6.backward), *r.k6_map) ? "" : "map does not induce K6";
        }
        default:
            return "unknown outcome";
    }
}

struct CliRun {
    int status = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(TOURN_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

// -------------------------------------------------------------- criteria

Verdict enumeration_counts() {
    Verdict v;
    const std::vector<std::size_t> expected{1, 1, 2, 4, 12, 56, 456};
    double n7 = 0;
    for (int n = 1; n <= 7; ++n) {
        const auto start = Clock::now();
        const auto orderly = enumerate_classes(n);
        const auto dedup = enumerate_classes_exhaustive(n, jobs());
        if (n == 7) n7 = seconds_since(start);
        const auto want = expected[static_cast<std::size_t>(n - 1)];
        v.require(orderly.size() == want, "n=" + std::to_string(n) + " orderly count " + std::to_string(orderly.size()));
        v.require(orderly == dedup, "n=" + std::to_string(n) + " generators disagree");
        v.require(oracle::burnside_classes(n) == want, "n=" + std::to_string(n) + " Burnside count differs");
    }
    // Orderly classes are canonical under the full permutation scan.
    for (int n = 1; n <= 6; ++n) {
        for (const auto& c : enumerate_classes(n)) v.require(oracle::canonical_bits(c.tournament()) == c.bits, "non-canonical " + c.bits);
    }
    v.require(n7 <= 60.0, "n=7 took too long");
    if (v.pass) v.detail << "counts 1,1,2,4,12,56,456 from both generators and Burnside; n=7 in " << n7 << " s";
    return v;
}

Verdict lemma_exhaustive() {
    Verdict v;
    const auto start = Clock::now();
    const auto records = classify_all6(jobs());
    v.require(records.size() == 56, "expected 56 records, got " + std::to_string(records.size()));
    std::set<std::string> classes;
    int claimed = 0;
    for (const auto& r : records) {
        classes.insert(r.cls.bits);
        const auto t = r.cls.tournament();
        v.require(!r.outcomes().empty(), "class " + r.cls.bits + " has no outcome");
        for (int k : r.outcomes()) {
            ++claimed;
            const auto why = check_witness(t, r, k);
            v.require(why.empty(), "class " + r.cls.bits + " outcome " + std::to_string(k) + ": " + why);
        }
    }
    v.require(classes.size() == 56, "classes repeat");
    const double took = seconds_since(start);
    const auto cli = run_cli("verify-lemma22");
    v.require(cli.status == 0, "verify-lemma22 exited " + std::to_string(cli.status));
    v.require(took <= 120.0, "classification took too long");
    if (v.pass) v.detail << "56 classes nonempty; " << claimed << " witnesses rechecked by brute force in " << took << " s; verify-lemma22 exit 0";
    return v;
}

Verdict exceptional_classes() {
    Verdict v;
    const auto k6 = oracle::canonical_bits(from_quoted_ordering(kK6.order, kK6.backward));
    std::set<std::string> failing;
    for (const auto& c : enumerate_classes(6)) {
        const auto t = c.tournament();
        const bool o1 = oracle::is_galaxy(t);
        const bool o3 = oracle::first_homogeneous(t).has_value();
        const bool o5 = oracle::canonical_bits(t) == k6;
        if (!o1 && !o3 && !o5) failing.insert(oracle::canonical_bits(t));
    }
    const auto l1 = from_quoted_ordering(kL1Forest.order, kL1Forest.backward);
    const auto l2 = from_quoted_ordering(kL2Forest.order, kL2Forest.backward);
    const std::set<std::string> want{oracle::canonical_bits(l1), oracle::canonical_bits(reverse(l1)),
                                     oracle::canonical_bits(l2), oracle::canonical_bits(reverse(l2))};
    v.require(want.size() == 4, "L1, L1^c, L2, L2^c not pairwise distinct");
    v.require(failing == want, "failing set has " + std::to_string(failing.size()) + " classes and differs");
    // The library's classification agrees.
    std::set<std::string> lib;
    for (const auto& r : classify_all6(jobs())) {
        if (!r.holds[1] && !r.holds[3] && !r.holds[5]) lib.insert(r.cls.bits);
    }
    v.require(lib == want, "library classification differs");
    if (v.pass) v.detail << "exactly the 4 classes of L1, L1^c, L2, L2^c fail outcomes 1, 3 and 5";
    return v;
}

Verdict k6_facts() {
    Verdict v;
    const auto k6 = from_quoted_ordering(kK6.order, kK6.backward);
    v.require(k6 == named(Pattern::K6), "named K6 differs from its quoted canonical ordering");
    const long forests = oracle::forest_count(k6);
    const auto lib = count_forest_orderings(k6);
    v.require(lib.count == forests, "library forest count differs from brute force");
    const bool galaxy = oracle::is_galaxy(k6) || find_galaxy_ordering(k6).has_value();
    const bool prime = !oracle::first_homogeneous(k6).has_value() && is_prime(k6);
    const bool self_reverse = oracle::canonical_bits(k6) == oracle::canonical_bits(reverse(k6));
    v.require(forests == 1, "forest orderings: " + std::to_string(forests) + " of 720, expected exactly 1");
    v.require(!galaxy, "K6 has a galaxy ordering");
    v.require(prime, "K6 is not prime");
    v.require(self_reverse, "K6 is not isomorphic to its reversal");
    // Context for the forest count: minimum backward-edge orderings and automorphisms.
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    int automorphisms = 0;
    do {
        if (oracle::bits_under(k6, perm) == k6.bits()) ++automorphisms;
    } while (std::next_permutation(perm.begin(), perm.end()));
    v.detail << (v.pass ? "" : " | ") << "forest orderings " << forests << "/720, |Aut(K6)| = " << automorphisms
             << ", canonical ordering is a forest ordering: "
             << (oracle::acyclic_backward(k6, {0, 1, 2, 3, 4, 5}) ? "yes" : "no") << ", galaxy: " << (galaxy ? "yes" : "no")
             << ", prime: " << (prime ? "yes" : "no") << ", self-reverse: " << (self_reverse ? "yes" : "no");
    return v;
}

Verdict c5_facts() {
    Verdict v;
    const auto c5 = rotational_c5();
    v.require(named(Pattern::C5).size() == 5 && oracle::canonical_bits(named(Pattern::C5)) == oracle::canonical_bits(c5),
              "named C5 is not the regular five-vertex tournament");
    v.require(!oracle::first_homogeneous(c5).has_value() && is_prime(named(Pattern::C5)), "C5 not prime");
    v.require(!oracle::is_galaxy(c5) && !find_galaxy_ordering(named(Pattern::C5)).has_value(), "C5 is a galaxy");
    for (int x = 0; x < 5; ++x) {
        v.require(named(Pattern::C5).out_degree(x) == 2 && named(Pattern::C5).in_degree(x) == 2, "degree not (2,2)");
    }
    v.require(oracle::canonical_bits(c5) == oracle::canonical_bits(reverse(c5)), "C5 not self-reverse");
    const int tr = oracle::tr_mask(c5, full_mask(5));
    v.require(tr == 3, "tr(C5) = " + std::to_string(tr));
    v.require(max_transitive(named(Pattern::C5)).size == tr, "library tr(C5) differs");
    int prime_nongalaxy = 0;
    for (const auto& c : enumerate_classes(5)) {
        const auto t = c.tournament();
        if (!oracle::first_homogeneous(t) && !oracle::is_galaxy(t)) {
            ++prime_nongalaxy;
            v.require(oracle::canonical_bits(t) == oracle::canonical_bits(c5), "prime non-galaxy class is not C5");
        }
    }
    v.require(prime_nongalaxy == 1, std::to_string(prime_nongalaxy) + " prime non-galaxies among five-vertex classes");
    if (v.pass) v.detail << "prime, non-galaxy, regular, self-reverse, tr = 3, unique prime non-galaxy of 12 classes";
    return v;
}

Verdict named_coherence() {
    Verdict v;
    const auto c5 = oracle::canonical_bits(rotational_c5());
    const auto l1 = from_quoted_ordering(kL1Forest.order, kL1Forest.backward);
    const auto l2 = from_quoted_ordering(kL2Forest.order, kL2Forest.backward);
    v.require(l1 == named(Pattern::L1), "named L1 differs from its quoted forest ordering");
    v.require(l2 == named(Pattern::L2), "named L2 differs from its quoted forest ordering");

    v.require(oracle::canonical_bits(delete_vertex(l1, 5)) == c5, "L1 - v6 is not C5");
    v.require(l1.out_degree(5) == 1, "v6 in L1 has out-degree " + std::to_string(l1.out_degree(5)));
    v.require(oracle::canonical_bits(delete_vertex(l2, 5)) == c5, "L2 - v6 is not C5");
    std::uint32_t in6 = 0;
    for (int u = 0; u < 5; ++u) {
        if (l2.edge(u, 5)) in6 |= 1U << u;
    }
    v.require(std::popcount(in6) == 3 && !oracle::transitive_mask(l2, in6), "inneighbours of v6 in L2 are not a cyclic triangle");

    const std::vector<std::tuple<Pattern, OrderingKind, const Quoted*>> quoted{
        {Pattern::L1, OrderingKind::Forest, &kL1Forest},
        {Pattern::L1, OrderingKind::Cyclic, &kL1Cyclic},
        {Pattern::L2, OrderingKind::Forest, &kL2Forest},
        {Pattern::L2, OrderingKind::Cyclic, &kL2Cyclic}};
    for (const auto& [p, kind, q] : quoted) {
        const auto t = named(p);
        const std::string tag = std::string(pattern_name(p)) + " " + std::string(ordering_kind_name(kind));
        v.require(backward_labels(t, q->order) == q->backward, tag + ": quoted backward arcs do not hold");
        std::vector<int> perm;
        for (int label : q->order) perm.push_back(label - 1);
        v.require(named_ordering(p, kind) == Ordering(perm), tag + ": ordering differs");
        const auto lib = named_backward_positions(p, kind);
        v.require(std::set<std::pair<int, int>>(lib.begin(), lib.end()) == backward_positions(t, perm) && lib.size() == 4,
                  tag + ": backward positions differ");
    }
    if (v.pass) v.detail << "L1 and L2 match their quoted orderings; deletions give C5; four backward sets reproduced";
    return v;
}

Verdict degree_profile() {
    Verdict v;
    int qualifying = 0;
    for (const auto& c : enumerate_classes(6)) {
        const auto t = c.tournament();
        bool ok = true;
        int n32 = 0;
        int n23 = 0;
        for (int x = 0; x < 6; ++x) {
            const int out = t.out_degree(x);
            const int in = 5 - out;
            ok = ok && out <= 3 && in <= 3;
            n32 += (out == 3 && in == 2) ? 1 : 0;
            n23 += (out == 2 && in == 3) ? 1 : 0;
        }
        if (!ok) continue;
        ++qualifying;
        v.require(n32 == 3 && n23 == 3, "class " + c.bits + " has n32=" + std::to_string(n32) + " n23=" + std::to_string(n23));
    }
    v.require(qualifying > 0, "no qualifying classes");
    if (v.pass) v.detail << qualifying << " qualifying classes, all with n32 = n23 = 3";
    return v;
}

Verdict regularity_algorithms() {
    Verdict v;
    std::mt19937_64 rng(20260101);
    int mismatches = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const int nx = 1 + static_cast<int>(rng() % 8);
        const int ny = 1 + static_cast<int>(rng() % 8);
        const auto g = oracle::random_tournament(nx + ny, rng);
        const auto xs = VertexSet::range(0, nx);
        const auto ys = VertexSet::range(nx, nx + ny);
        oracle::Bipartite bip(static_cast<std::size_t>(nx));
        for (int x = 0; x < nx; ++x) {
            for (int y = 0; y < ny; ++y) {
                if (g.edge(nx + y, x)) bip[static_cast<std::size_t>(x)].push_back(y);
            }
        }
        const auto mm = max_backward_matching(g, xs, ys);
        const int size = static_cast<int>(mm.pairs.size());
        bool good = size == oracle::brute_matching(bip, ny) && size == oracle::brute_cover(bip, ny) &&
                    mm.cover_x.size() + mm.cover_y.size() == size;
        for (int x = 0; x < nx; ++x) {
            for (int y = nx; y < nx + ny; ++y) {
                if (g.edge(y, x) && !mm.cover_x.contains(x) && !mm.cover_y.contains(y)) good = false;
            }
        }
        if (!good) ++mismatches;
    }
    v.require(mismatches == 0, std::to_string(mismatches) + " matching/cover mismatches");

    int refine_failures = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const int k = 2 + static_cast<int>(rng() % 3);
        const int n = 120 + static_cast<int>(rng() % 120);
        const auto inst = oracle::random_chain(n, k, Rational(1, 100), rng);
        if (!verify_structure(inst.tournament, inst.chain, false).ok) {
            ++refine_failures;
            continue;
        }
        const auto out = smooth_refine(inst.tournament, inst.chain);
        bool good = out.spec.lambda == Rational(4 * k, 100) && verify_structure(inst.tournament, out, true).ok;
        for (std::size_t i = 0; i < out.sets.size(); ++i) {
            good = good && 2 * out.sets[i].size() >= inst.chain.sets[i].size();
            for (int x : out.sets[i]) good = good && inst.chain.sets[i].contains(x);
        }
        if (!good) ++refine_failures;
    }
    v.require(refine_failures == 0, std::to_string(refine_failures) + " refinement failures");
    if (v.pass) v.detail << "1000 matching instances and 200 refinements, zero mismatches";
    return v;
}

// Transitive host split into blocks of 24, relabeled at random, with the
// merge branch selected by `variant`.
struct MergeHost {
    Tournament t;
    ChainStructure chain;
};

MergeHost merge_host(int variant, std::mt19937_64& rng) {
    const auto w = replay_shape(Pattern::L2);
    const int n = 144;
    auto t = transitive_tournament(n);
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo)); };
    const int x = pick(0, 24);
    const int y = pick(120, 144);
    if (variant >= 1) t.orient(y, x);
    if (variant == 2) t.orient(pick(64, 72), x);
    if (variant == 3) {
        t.orient(y, pick(48, 56));
        t.orient(pick(64, 72), x);
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    MergeHost h{relabel(t, perm), {{}, {w, Rational(24, n), Rational(1, 12)}}};
    for (int i = 0; i < 6; ++i) {
        std::vector<int> members;
        for (int u = 24 * i; u < 24 * i + 24; ++u) members.push_back(perm[static_cast<std::size_t>(u)]);
        h.chain.sets.emplace_back(members);
    }
    return h;
}

Verdict replay_soundness() {
    Verdict v;
    const auto start = Clock::now();
    const std::array<PlantCase, 3> cases{PlantCase::Both, PlantCase::MirrorU, PlantCase::MirrorV};
    int embeddings = 0;
    int merges = 0;
    int failures = 0;
    for (auto p : {Pattern::L1, Pattern::L2}) {
        for (int i = 0; i < 500; ++i) {
            const auto c = cases[static_cast<std::size_t>(i % 3)];
            const auto seed = static_cast<std::uint64_t>(1000 + i);
            try {
                const auto inst = plant_instance(p, c, default_plant_sizes(p), seed);
                const auto out = replay(inst.tournament, inst.chain, p);
                if (!verify_outcome(inst.tournament, out, p).ok) {
                    ++failures;
                    continue;
                }
                if (out.is_embedding()) {
                    ++embeddings;
                    const auto& e = out.embedding();
                    const auto sub = induced(inst.tournament, VertexSet(e.vertices)).tournament;
                    if (!find_embedding(inst.tournament, named(p)) || !find_embedding(sub, named(p))) ++failures;
                } else {
                    ++merges;
                    if (!verify_merge_certificate(inst.tournament, out.merge()).ok) ++failures;
                }
            } catch (const std::exception& ex) {
                ++failures;
                v.detail << (failures == 1 ? "" : "; ") << pattern_name(p) << " seed " << seed << ": " << ex.what();
            }
        }
    }
    // Merge branches on relabeled transitive hosts.
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        const auto h = merge_host(i % 4, rng);
        const auto out = replay(h.t, h.chain, Pattern::L2);
        if (out.is_embedding() || !verify_outcome(h.t, out, Pattern::L2).ok || !verify_merge_certificate(h.t, out.merge()).ok) {
            ++failures;
        } else {
            ++merges;
        }
    }
    const double took = seconds_since(start);
    v.require(failures == 0, std::to_string(failures) + " failures");
    v.require(took <= 300.0, "took too long");
    if (v.pass) v.detail << embeddings << " planted embeddings verified and cross-confirmed, " << merges << " merge certificates re-verified, " << took << " s";
    return v;
}

Verdict criticality() {
    Verdict v;
    const std::array<Rational, 3> eps{Rational(1, 2), Rational(2, 3), Rational(5, 6)};
    int checked = 0;
    int critical_seen = 0;
    int disagreements = 0;
    auto compare = [&](const Tournament& t) {
        for (const auto& e : eps) {
            const bool want = oracle::critical(t, e.num(), e.den());
            const bool got = is_epsilon_critical(t, e).critical;
            ++checked;
            critical_seen += want ? 1 : 0;
            if (want != got) ++disagreements;
        }
    };
    for (int n = 1; n <= 7; ++n) {
        for (const auto& c : enumerate_classes(n)) compare(c.tournament());
    }
    std::mt19937_64 rng(10);
    for (int rep = 0; rep < 100; ++rep) compare(oracle::random_tournament(10, rng));
    v.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    if (v.pass) v.detail << checked << " comparisons (532 classes and 100 random n=10, three eps), " << critical_seen << " critical";
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Verdict()>> criteria{enumeration_counts, lemma_exhaustive, exceptional_classes,
                                                         k6_facts,           c5_facts,         named_coherence,
                                                         degree_profile,     regularity_algorithms,
                                                         replay_soundness,   criticality};
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int k = std::atoi(argv[i]);
        if (k < 1 || k > static_cast<int>(criteria.size())) {
            std::cerr << "unknown criterion " << argv[i] << "\n";
            return 2;
        }
        selected.push_back(k);
    }
    if (selected.empty()) {
        for (int k = 1; k <= static_cast<int>(criteria.size()); ++k) selected.push_back(k);
    }
    bool all = true;
    for (int k : selected) {
        Verdict v;
        try {
            v = criteria[static_cast<std::size_t>(k - 1)]();
        } catch (const std::exception& ex) {
            v.pass = false;
            v.detail << "exception: " << ex.what();
        }
        all = all && v.pass;
        std::cout << "criterion " << k << ": " << (v.pass ? "PASS" : "FAIL") << " - " << v.detail.str() << std::endl;
    }
    return all ? 0 : 1;
}

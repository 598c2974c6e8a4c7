#include "tourn/embedding.hpp"

#include "tourn/enumeration.hpp"
#include "tourn/transitive.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace tourn {

Rational replay_lambda_limit() { return Rational(1, 12); }

std::vector<std::string> ReplayOutcome::step_names() const {
    std::vector<std::string> names;
    names.reserve(trace.size());
    for (const auto& s : trace) names.push_back(s.name);
    return names;
}

std::vector<int> replay_shape(Pattern pattern) {
    switch (pattern) {
        case Pattern::L2: return {0, 0, 1, 0, 0, 0};
        case Pattern::L1: return {0, 0, 1, 0, 0, 0, 0};
        default: throw std::invalid_argument("replay: pattern must be L1 or L2");
    }
}

namespace {

// Chain slots shared by both shapes.
constexpr std::size_t kA1 = 0;
constexpr std::size_t kA2 = 1;
constexpr std::size_t kT0 = 2;
constexpr std::size_t kA3 = 3;
constexpr std::size_t kA4 = 4;
constexpr std::size_t kA5 = 5;
constexpr std::size_t kA6 = 6;

std::string label(int v) { return "v" + std::to_string(v + 1); }

VertexSet filter(const VertexSet& s, const std::function<bool(int)>& keep) {
    std::vector<int> out;
    for (int v : s) {
        if (keep(v)) out.push_back(v);
    }
    return VertexSet(std::move(out));
}

// First backward edge z -> w with z in zs, w in ws, lexicographic in (z, w).
std::optional<std::pair<int, int>> first_backward(const Tournament& t, const VertexSet& zs, const VertexSet& ws) {
    for (int z : zs) {
        for (int w : ws) {
            if (t.edge(z, w)) return std::make_pair(z, w);
        }
    }
    return std::nullopt;
}

void require_nonempty(const VertexSet& s, const char* name) {
    if (s.empty()) {
        throw std::logic_error(std::string("replay: ") + name + " is empty although the chain is smooth");
    }
}

class Replayer {
public:
    Replayer(const Tournament& t, const ChainStructure& chain, Pattern pattern)
        : t_(t), chain_(chain), pattern_(pattern) {}

    ReplayOutcome run() {
        // (a) trim the transitive set to a multiple of three.
        const auto order = transitive_order(t_, set(kT0));
        if (!order) throw std::invalid_argument("replay: transitive set is not transitive");
        const int s = static_cast<int>(order->size()) / 3 * 3;
        step("trim", "|T0|=" + std::to_string(order->size()) + " |S|=" + std::to_string(s));

        // (b) thirds by transitive position.
        const int third = s / 3;
        t1_ = VertexSet(std::vector<int>(order->begin(), order->begin() + third));
        t2_ = VertexSet(std::vector<int>(order->begin() + third, order->begin() + 2 * third));
        t3_ = VertexSet(std::vector<int>(order->begin() + 2 * third, order->begin() + s));
        step("split", "T1=" + t1_.str() + " T2=" + t2_.str() + " T3=" + t3_.str());

        // (c) backward pairs y -> x between A1 and A5.
        const auto matching = max_backward_matching(t_, set(kA1), set(kA5));
        step("match", "k=" + std::to_string(matching.pairs.size()));
        if (matching.pairs.empty()) {
            const auto target = best_transitive(t_, set(kA5)).witness;
            return merge("merge-complete-pair", "A1 complete to A5",
                         make_merge_certificate(t_, target, set(kA1), MergeDirection::BulkToTransitive));
        }

        // (d) wrong ends.
        std::vector<int> x_wrong;
        std::vector<int> y_wrong;
        std::optional<std::pair<int, int>> chosen;
        for (const auto& [x, y] : matching.pairs) {
            const bool xw = is_complete_to(t_, VertexSet{x}, t3_);
            const bool yw = is_complete_to(t_, t1_, VertexSet{y});
            if (xw) x_wrong.push_back(x);
            if (yw) y_wrong.push_back(y);
            if (!xw && !yw && !chosen) chosen = std::make_pair(x, y);
        }
        if (!chosen) {
            if (x_wrong.size() >= y_wrong.size()) {
                return merge("merge-x-wrong", "X_wrong=" + VertexSet(x_wrong).str(),
                             make_merge_certificate(t_, t3_, VertexSet(x_wrong), MergeDirection::BulkToTransitive));
            }
            return merge("merge-y-wrong", "Y_wrong=" + VertexSet(y_wrong).str(),
                         make_merge_certificate(t_, t1_, VertexSet(y_wrong), MergeDirection::TransitiveToBulk));
        }

        // (e) x_j, y_j, u, v.
        x_ = chosen->first;
        y_ = chosen->second;
        u_ = *std::find_if(t1_.begin(), t1_.end(), [&](int a) { return t_.edge(y_, a); });
        v_ = *std::find_if(t3_.begin(), t3_.end(), [&](int a) { return t_.edge(a, x_); });
        step("pick-j", "x=" + label(x_) + " y=" + label(y_) + " u=" + label(u_) + " v=" + label(v_));

        // (f) case split.
        if (t_.edge(x_, u_) && t_.edge(v_, y_)) {
            step("case-BOTH", "x->u, v->y");
            return forest_case();
        }
        if (t_.edge(u_, x_)) {
            step("case-U", "u->x");
            return cyclic_case(u_);
        }
        step("case-V", "y->v");
        return cyclic_case(v_);
    }

private:
    const VertexSet& set(std::size_t i) const { return chain_.sets[i]; }

    void step(std::string name, std::string detail) { trace_.push_back({std::move(name), std::move(detail)}); }

    ReplayOutcome merge(std::string name, std::string detail, MergeCertificate cert) {
        step(std::move(name), std::move(detail));
        return {std::move(cert), std::move(trace_)};
    }

    bool to(int a, int b) const { return t_.edge(a, b); }

    ReplayOutcome forest_case() {
        const VertexSet t2s = filter(t2_, [&](int a) { return to(x_, a) && to(a, y_); });
        VertexSet zs;
        if (pattern_ == Pattern::L2) {
            zs = filter(set(kA3), [&](int a) { return to(x_, a) && to(u_, a) && to(v_, a) && to(a, y_); });
        } else {
            zs = filter(set(kA6), [&](int a) { return to(x_, a) && to(u_, a) && to(v_, a) && to(y_, a); });
        }
        require_nonempty(t2s, "T2*");
        require_nonempty(zs, pattern_ == Pattern::L2 ? "A3*" : "A6*");
        const auto edge = first_backward(t_, zs, t2s);
        if (!edge) {
            return merge("merge-no-backward-edge", "T2* complete to " + zs.str(),
                         make_merge_certificate(t_, t2s, zs, MergeDirection::TransitiveToBulk));
        }
        const auto [z, w] = *edge;
        step("forest-assemble", "z=" + label(z) + " w=" + label(w));
        const std::vector<int> tuple = pattern_ == Pattern::L2 ? std::vector<int>{x_, u_, w, v_, z, y_}
                                                               : std::vector<int>{x_, u_, w, v_, y_, z};
        return finish(tuple, OrderingKind::Forest);
    }

    // `m` is u (case U) or v (case V); the construction is the same with m in
    // the third position.
    ReplayOutcome cyclic_case(int m) {
        const VertexSet a2s = filter(set(kA2), [&](int a) { return to(x_, a) && to(a, m) && to(a, y_); });
        const std::size_t z_slot = pattern_ == Pattern::L2 ? kA4 : kA3;
        const std::size_t s_slot = pattern_ == Pattern::L2 ? kA3 : kA4;
        const VertexSet zs = filter(set(z_slot), [&](int a) { return to(x_, a) && to(m, a) && to(a, y_); });
        require_nonempty(a2s, "A2*");
        require_nonempty(zs, z_slot == kA4 ? "A4*" : "A3*");
        const auto edge = first_backward(t_, zs, a2s);
        if (!edge) {
            const auto target = best_transitive(t_, zs).witness;
            return merge("merge-no-backward-edge", "A2* complete to " + zs.str(),
                         make_merge_certificate(t_, target, a2s, MergeDirection::BulkToTransitive));
        }
        const auto [z, w] = *edge;
        step("backward-edge", "z=" + label(z) + " w=" + label(w));
        VertexSet ss;
        if (pattern_ == Pattern::L2) {
            ss = filter(set(s_slot), [&](int a) { return to(x_, a) && to(w, a) && to(m, a) && to(a, z) && to(a, y_); });
        } else {
            ss = filter(set(s_slot), [&](int a) { return to(x_, a) && to(w, a) && to(m, a) && to(z, a) && to(a, y_); });
        }
        require_nonempty(ss, s_slot == kA3 ? "A3*" : "A4*");
        const int s = ss[0];
        step("pick-s", "s=" + label(s));
        step("cyclic-assemble", "");
        const std::vector<int> tuple = pattern_ == Pattern::L2 ? std::vector<int>{x_, w, m, s, z, y_}
                                                               : std::vector<int>{x_, w, m, z, s, y_};
        return finish(tuple, OrderingKind::Cyclic);
    }

    ReplayOutcome finish(const std::vector<int>& tuple, OrderingKind kind) {
        PatternEmbedding e{pattern_, kind, tuple};
        ReplayOutcome out{e, std::move(trace_)};
        if (auto check = verify_outcome(t_, out, pattern_); !check) {
            throw std::logic_error("replay: assembled tuple fails verification: " + check.reason);
        }
        return out;
    }

    const Tournament& t_;
    const ChainStructure& chain_;
    Pattern pattern_;
    std::vector<TraceStep> trace_;
    VertexSet t1_, t2_, t3_;
    int x_ = -1, y_ = -1, u_ = -1, v_ = -1;
};

}  // namespace

ReplayOutcome replay(const Tournament& t, const ChainStructure& chain, Pattern pattern) {
    const auto shape = replay_shape(pattern);
    if (chain.spec.w != shape) throw std::invalid_argument("replay: chain has the wrong w shape for this pattern");
    if (chain.spec.lambda > replay_lambda_limit()) throw std::invalid_argument("replay: lambda exceeds 1/12");
    if (auto check = verify_structure(t, chain, true); !check) {
        throw std::invalid_argument("replay: chain is not smooth: " + check.violation);
    }
    if (chain.sets[kT0].size() < 3) throw std::invalid_argument("replay: transitive set needs at least 3 vertices");
    return Replayer(t, chain, pattern).run();
}

OutcomeCheck verify_outcome(const Tournament& t, const ReplayOutcome& outcome, Pattern pattern) {
    if (!outcome.is_embedding()) {
        const auto check = verify_merge_certificate(t, outcome.merge());
        return {check.ok, check.violation};
    }
    const auto& e = outcome.embedding();
    if (e.pattern != pattern) return {false, "embedding is for a different pattern"};
    if (e.vertices.size() != 6) return {false, "embedding must have six vertices"};
    for (int v : e.vertices) {
        if (v < 0 || v >= t.size()) return {false, "vertex out of range"};
    }
    if (VertexSet(e.vertices).size() != 6) return {false, "vertices are not distinct"};
    // Position order -> induced tournament on positions 0..5.
    Tournament local(6);
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            if (t.edge(e.vertices[static_cast<std::size_t>(j)], e.vertices[static_cast<std::size_t>(i)])) local.orient(j, i);
        }
    }
    if (backward_graph(local, Ordering::identity(6)).by_position() != named_backward_positions(pattern, e.ordering)) {
        return {false, std::string("backward edges differ from the ") + std::string(ordering_kind_name(e.ordering)) +
                           " ordering"};
    }
    if (!is_isomorphic(local, named(pattern)).isomorphic) return {false, "vertices do not induce the pattern"};
    return {};
}

// ------------------------------------------------------------------ planting

std::string_view plant_case_name(PlantCase c) {
    switch (c) {
        case PlantCase::Both: return "BOTH";
        case PlantCase::MirrorU: return "MIRROR-U";
        case PlantCase::MirrorV: return "MIRROR-V";
    }
    return "BOTH";
}

PlantCase parse_plant_case(std::string_view name) {
    std::string up(name);
    std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (up == "BOTH") return PlantCase::Both;
    if (up == "MIRROR-U" || up == "U") return PlantCase::MirrorU;
    if (up == "MIRROR-V" || up == "V") return PlantCase::MirrorV;
    throw std::invalid_argument("unknown plant case: " + std::string(name));
}

std::vector<int> default_plant_sizes(Pattern pattern) {
    return std::vector<int>(replay_shape(pattern).size(), 24);
}

namespace {

// Oriented backward edges per (vertex, set) must stay within lambda |set|.
struct Budget {
    const Tournament& t;
    const std::vector<VertexSet>& sets;
    const std::vector<int>& set_of;
    Rational lambda;

    // Backward neighbours of v inside set j.
    int backward(int v, std::size_t j) const {
        const auto i = static_cast<std::size_t>(set_of[static_cast<std::size_t>(v)]);
        int count = 0;
        for (int a : sets[j]) count += (i < j ? t.edge(a, v) : t.edge(v, a)) ? 1 : 0;
        return count;
    }
    bool within(int v, std::size_t j) const {
        const auto size = sets[j].size();
        return at_least(size - backward(v, j), Rational(1) - lambda, size);
    }
};

}  // namespace

PlantedInstance plant_instance(Pattern pattern, PlantCase c, const std::vector<int>& sizes, std::uint64_t seed) {
    const auto shape = replay_shape(pattern);
    if (sizes.size() != shape.size()) {
        throw std::invalid_argument("plant_instance: expected " + std::to_string(shape.size()) + " set sizes");
    }
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (shape[i] == 1 && sizes[i] < 9) throw std::invalid_argument("plant_instance: transitive set needs >= 9 vertices");
        if (shape[i] == 0 && sizes[i] < 4) throw std::invalid_argument("plant_instance: linear sets need >= 4 vertices");
    }
    const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (n > kMaxVertices) throw std::invalid_argument("plant_instance: too many vertices");
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int count) {
        return lo + static_cast<int>(std::uniform_int_distribution<int>(0, count - 1)(rng));
    };

    std::vector<VertexSet> sets;
    std::vector<int> set_of(static_cast<std::size_t>(n));
    std::vector<int> offset;
    for (std::size_t i = 0, start = 0; i < sizes.size(); ++i) {
        offset.push_back(static_cast<int>(start));
        sets.push_back(VertexSet::range(static_cast<int>(start), static_cast<int>(start) + sizes[i]));
        for (int v = static_cast<int>(start); v < static_cast<int>(start) + sizes[i]; ++v) set_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
        start += static_cast<std::size_t>(sizes[i]);
    }

    // Forward between sets, transitive inside T0 (ascending labels), random
    // inside linear sets.
    Tournament t(n);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (shape[i] == 1) continue;
        for (int a : sets[i]) {
            for (int b : sets[i]) {
                if (a < b && (rng() >> 63) == 0) t.orient(b, a);
            }
        }
    }

    const int t0 = offset[kT0];
    const int third = sizes[kT0] / 3;
    const int x = pick(offset[kA1], sizes[kA1]);
    const int y = pick(offset[kA5], sizes[kA5]);
    const int u = pick(t0, third);
    const int w_t2 = pick(t0 + third, third);
    const int v = pick(t0 + 2 * third, third);
    t.orient(y, x);
    t.orient(y, u);
    t.orient(v, x);
    int z = -1;
    int w = -1;
    if (c == PlantCase::Both) {
        w = w_t2;
        const std::size_t zs = pattern == Pattern::L2 ? kA3 : kA6;
        z = pick(offset[zs], sizes[zs]);
    } else {
        if (c == PlantCase::MirrorU) t.orient(u, x); else t.orient(y, v);
        w = pick(offset[kA2], sizes[kA2]);
        const std::size_t zs = pattern == Pattern::L2 ? kA4 : kA3;
        z = pick(offset[zs], sizes[zs]);
    }
    t.orient(z, w);

    const Rational lambda = replay_lambda_limit();
    const Budget budget{t, sets, set_of, lambda};
    for (int a = 0; a < n; ++a) {
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (j == static_cast<std::size_t>(set_of[static_cast<std::size_t>(a)])) continue;
            if (!budget.within(a, j)) {
                throw std::invalid_argument("plant_instance: sizes too small to force the case (" + label(a) +
                                            " has too many backward neighbours in set " + std::to_string(j + 1) + ")");
            }
        }
    }

    // Sparse backward noise away from the designated vertices and from the
    // A1/T0/A5 triangle, reverted where it breaks the budget.
    const std::array<int, 6> designated{x, y, u, v, w, z};
    auto is_designated = [&](int a) { return std::find(designated.begin(), designated.end(), a) != designated.end(); };
    auto protected_pair = [&](std::size_t i, std::size_t j) {
        return (i == kA1 && (j == kA5 || j == kT0)) || (i == kT0 && j == kA5);
    };
    std::vector<std::pair<int, int>> noise;  // (later-set vertex, earlier-set vertex)
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const auto i = static_cast<std::size_t>(set_of[static_cast<std::size_t>(a)]);
            const auto j = static_cast<std::size_t>(set_of[static_cast<std::size_t>(b)]);
            if (i == j) continue;
            const bool draw = std::uniform_int_distribution<int>(0, 63)(rng) == 0;
            if (!draw || protected_pair(i, j) || is_designated(a) || is_designated(b)) continue;
            t.orient(b, a);
            noise.emplace_back(b, a);
        }
    }
    for (auto it = noise.rbegin(); it != noise.rend(); ++it) {
        const auto [b, a] = *it;
        const auto sa = static_cast<std::size_t>(set_of[static_cast<std::size_t>(a)]);
        const auto sb = static_cast<std::size_t>(set_of[static_cast<std::size_t>(b)]);
        if (!budget.within(a, sb) || !budget.within(b, sa)) t.orient(a, b);
    }
    // Reverting in reverse order can leave an earlier edge over budget only
    // if a later one was kept; sweep once more to be certain.
    for (const auto& [b, a] : noise) {
        if (!t.edge(b, a)) continue;
        const auto sa = static_cast<std::size_t>(set_of[static_cast<std::size_t>(a)]);
        const auto sb = static_cast<std::size_t>(set_of[static_cast<std::size_t>(b)]);
        if (!budget.within(a, sb) || !budget.within(b, sa)) t.orient(a, b);
    }

    // Random relabeling.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    PlantedInstance out{relabel(t, perm), {}};
    int min_size = n;
    for (const auto& s : sets) {
        std::vector<int> mapped;
        for (int a : s) mapped.push_back(perm[static_cast<std::size_t>(a)]);
        out.chain.sets.emplace_back(std::move(mapped));
        min_size = std::min(min_size, s.size());
    }
    out.chain.spec = {shape, Rational(min_size, n), lambda};
    if (auto check = verify_structure(out.tournament, out.chain, true); !check) {
        throw std::logic_error("plant_instance: produced chain is not smooth: " + check.violation);
    }
    return out;
}

Tournament random_tournament(int n, std::uint64_t seed) {
    if (n < 1 || n > kMaxVertices) throw std::invalid_argument("random_tournament: n out of range");
    std::mt19937_64 rng(seed);
    Tournament t(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if ((rng() >> 63) == 0) t.orient(j, i);
        }
    }
    return t;
}

}  // namespace tourn

#include "tourn/structure.hpp"

#include "tourn/named.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace tourn {

// ------------------------------------------------------------ homogeneous sets

bool is_homogeneous(const Tournament& t, const VertexSet& s) {
    for (int v = 0; v < t.size(); ++v) {
        if (s.contains(v)) continue;
        int out = 0;
        for (int w : s) out += t.edge(v, w) ? 1 : 0;
        if (out != 0 && out != s.size()) return false;
    }
    return true;
}

namespace {

// Smallest homogeneous set containing a and b: keep adding any outside
// vertex that distinguishes two members.
std::vector<int> homogeneous_closure(const Tournament& t, int a, int b) {
    const int n = t.size();
    std::vector<char> member(static_cast<std::size_t>(n), 0);
    std::vector<int> out_count(static_cast<std::size_t>(n), 0);  // edges v -> S
    std::vector<int> members;
    std::vector<int> queue;
    std::vector<char> queued(static_cast<std::size_t>(n), 0);
    auto add = [&](int w) {
        member[static_cast<std::size_t>(w)] = 1;
        members.push_back(w);
        for (int v = 0; v < n; ++v) {
            if (member[static_cast<std::size_t>(v)]) continue;
            if (t.edge(v, w)) ++out_count[static_cast<std::size_t>(v)];
        }
    };
    add(a);
    add(b);
    for (;;) {
        queue.clear();
        for (int v = 0; v < n; ++v) {
            if (member[static_cast<std::size_t>(v)] || queued[static_cast<std::size_t>(v)]) continue;
            const int c = out_count[static_cast<std::size_t>(v)];
            if (c != 0 && c != static_cast<int>(members.size())) queue.push_back(v);
        }
        if (queue.empty()) break;
        for (int v : queue) add(v);
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

std::optional<VertexSet> find_homogeneous(const Tournament& t) {
    const int n = t.size();
    std::optional<std::vector<int>> best;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            auto c = homogeneous_closure(t, a, b);
            if (static_cast<int>(c.size()) == n) continue;
            if (!best || c.size() < best->size() || (c.size() == best->size() && c < *best)) best = std::move(c);
        }
    }
    if (!best) return std::nullopt;
    return VertexSet(std::move(*best));
}

// ----------------------------------------------------------- star decompositions

std::string_view component_kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::Singleton: return "singleton";
        case ComponentKind::LeftStar: return "left-star";
        case ComponentKind::RightStar: return "right-star";
        case ComponentKind::Other: return "other";
    }
    return "other";
}

namespace {

struct LeafSpan {
    int lo;
    int hi;
};

bool strictly_inside(int pos, const LeafSpan& s) { return s.lo < pos && pos < s.hi; }

}  // namespace

StarDecomposition analyze_ordering(const Tournament& t, const Ordering& order) {
    const int n = t.size();
    if (order.size() != n) throw std::invalid_argument("analyze_ordering: ordering size mismatch");
    const auto bg = backward_graph(t, order);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& e : bg.edges) {
        adj[static_cast<std::size_t>(e.from)].push_back(e.to);
        adj[static_cast<std::size_t>(e.to)].push_back(e.from);
    }

    StarDecomposition d;
    d.ordering = order;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int edge_total = static_cast<int>(bg.edges.size());
    int component_count = 0;
    for (int p = 0; p < n; ++p) {
        const int root = order.vertex_at(p);
        if (seen[static_cast<std::size_t>(root)]) continue;
        ++component_count;
        Component c;
        std::vector<int> stack{root};
        seen[static_cast<std::size_t>(root)] = 1;
        int degree_sum = 0;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            c.vertices.push_back(v);
            degree_sum += static_cast<int>(adj[static_cast<std::size_t>(v)].size());
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(c.vertices.begin(), c.vertices.end(),
                  [&](int a, int b) { return order.position_of(a) < order.position_of(b); });
        const int size = static_cast<int>(c.vertices.size());
        const int edges = degree_sum / 2;
        if (size == 1) {
            c.kind = ComponentKind::Singleton;
        } else if (edges == size - 1) {
            int center = -1;
            for (int v : c.vertices) {
                if (static_cast<int>(adj[static_cast<std::size_t>(v)].size()) == size - 1) {
                    center = v;
                    break;  // earliest by position
                }
            }
            if (center >= 0) {
                c.center = center;
                for (int v : c.vertices) {
                    if (v != center) c.leaves.push_back(v);
                }
                const int cp = order.position_of(center);
                const int lo = order.position_of(c.leaves.front());
                const int hi = order.position_of(c.leaves.back());
                if (cp < lo) {
                    c.kind = ComponentKind::LeftStar;
                } else if (cp > hi) {
                    c.kind = ComponentKind::RightStar;
                } else {
                    c.kind = ComponentKind::Other;
                }
            }
        }
        d.components.push_back(std::move(c));
    }

    d.is_forest_ordering = edge_total == n - component_count;
    d.is_star_ordering = std::none_of(d.components.begin(), d.components.end(),
                                      [](const Component& c) { return c.kind == ComponentKind::Other; });
    if (!d.is_star_ordering) return d;

    // Betweenness only involves stars with at least two leaves; a one-leaf
    // star may take either endpoint as its centre.
    std::vector<std::pair<std::size_t, LeafSpan>> spans;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        const auto& c = d.components[i];
        if (c.leaves.size() >= 2) {
            spans.push_back({i, {order.position_of(c.leaves.front()), order.position_of(c.leaves.back())}});
        }
    }
    auto center_ok = [&](std::size_t self, int pos) {
        for (const auto& [idx, span] : spans) {
            if (idx != self && strictly_inside(pos, span)) return false;
        }
        return true;
    };
    bool galaxy = true;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        auto& c = d.components[i];
        if (c.kind == ComponentKind::Singleton) continue;
        if (c.leaves.size() >= 2) {
            galaxy = galaxy && center_ok(i, order.position_of(c.center));
            continue;
        }
        const int first = c.vertices[0];
        const int second = c.vertices[1];
        if (center_ok(i, order.position_of(first))) {
            c.center = first;
            c.leaves = {second};
            c.kind = ComponentKind::LeftStar;
        } else if (center_ok(i, order.position_of(second))) {
            c.center = second;
            c.leaves = {first};
            c.kind = ComponentKind::RightStar;
        } else {
            galaxy = false;
        }
    }
    d.is_galaxy_ordering = galaxy;
    return d;
}

namespace {

// True when the backward graph on the placed prefix already rules out every
// galaxy completion.
bool prefix_dead(const Tournament& t, const std::vector<int>& prefix) {
    const int k = static_cast<int>(prefix.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));  // by position
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (t.edge(prefix[static_cast<std::size_t>(j)], prefix[static_cast<std::size_t>(i)])) {
                adj[static_cast<std::size_t>(i)].push_back(j);
                adj[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    }
    std::vector<int> comp(static_cast<std::size_t>(k), -1);
    std::vector<LeafSpan> spans;
    std::vector<int> centers;
    int ncomp = 0;
    for (int s = 0; s < k; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> members{s};
        comp[static_cast<std::size_t>(s)] = ncomp;
        for (std::size_t q = 0; q < members.size(); ++q) {
            for (int w : adj[static_cast<std::size_t>(members[q])]) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = ncomp;
                    members.push_back(w);
                }
            }
        }
        ++ncomp;
        const int size = static_cast<int>(members.size());
        if (size <= 2) continue;
        int edges = 0;
        int center = -1;
        for (int v : members) {
            edges += static_cast<int>(adj[static_cast<std::size_t>(v)].size());
            if (static_cast<int>(adj[static_cast<std::size_t>(v)].size()) == size - 1) center = v;
        }
        edges /= 2;
        if (edges != size - 1 || center < 0) return true;  // contains a P4 or a cycle
        int lo = k;
        int hi = -1;
        for (int v : members) {
            if (v == center) continue;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (lo < center && center < hi) return true;  // centre between its own leaves
        spans.push_back({lo, hi});
        centers.push_back(center);
    }
    for (std::size_t a = 0; a < centers.size(); ++a) {
        for (std::size_t b = 0; b < spans.size(); ++b) {
            if (a != b && strictly_inside(centers[a], spans[b])) return true;
        }
    }
    return false;
}

}  // namespace

std::optional<Ordering> find_galaxy_ordering(const Tournament& t) {
    const int n = t.size();
    if (n > kMaxCanonical) throw std::invalid_argument("find_galaxy_ordering: n exceeds 8");
    std::vector<int> prefix;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::optional<Ordering> found;
    auto recurse = [&](auto&& self) -> bool {
        if (static_cast<int>(prefix.size()) == n) {
            Ordering o(prefix);
            if (analyze_ordering(t, o).is_galaxy_ordering) {
                found = std::move(o);
                return true;
            }
            return false;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            prefix.push_back(v);
            if (!prefix_dead(t, prefix) && self(self)) return true;
            prefix.pop_back();
            used[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    recurse(recurse);
    return found;
}

ForestOrderings count_forest_orderings(const Tournament& t, bool keep_list) {
    const int n = t.size();
    if (n > kMaxCanonical) throw std::invalid_argument("count_forest_orderings: n exceeds 8");
    ForestOrderings result;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> parent(static_cast<std::size_t>(n));
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    do {
        std::iota(parent.begin(), parent.end(), 0);
        bool acyclic = true;
        for (int i = 0; i < n && acyclic; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const int a = perm[static_cast<std::size_t>(i)];
                const int b = perm[static_cast<std::size_t>(j)];
                if (!t.edge(b, a)) continue;
                const int ra = find(a);
                const int rb = find(b);
                if (ra == rb) {
                    acyclic = false;
                    break;
                }
                parent[static_cast<std::size_t>(ra)] = rb;
            }
        }
        if (acyclic) {
            ++result.count;
            if (keep_list) result.orderings.emplace_back(perm);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

// -------------------------------------------------------------------- classify6

std::vector<int> ClassificationRecord::outcomes() const {
    std::vector<int> out;
    for (int i = 1; i <= 5; ++i) {
        if (holds[static_cast<std::size_t>(i)]) out.push_back(i);
    }
    return out;
}

std::vector<std::pair<int, int>> outcome4_positions() {
    // a..f are positions 0..5
    std::vector<std::pair<int, int>> p{{5, 0}, {4, 0}, {3, 1}, {5, 2}};
    std::sort(p.begin(), p.end());
    return p;
}

namespace {

std::optional<Ordering> find_outcome4_ordering(const Tournament& t) {
    const auto target = outcome4_positions();
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Ordering o(perm);
        if (backward_graph(t, o).by_position() == target) return o;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::optional<C5Witness> find_c5_witness(const Tournament& t) {
    const Tournament c5 = named(Pattern::C5);
    for (int v = 0; v < 6; ++v) {
        const int outdeg = t.out_degree(v);
        const bool one_out = outdeg == 1;
        const bool one_in = outdeg == 4;
        if (!one_out && !one_in) continue;
        std::vector<int> rest;
        for (int w = 0; w < 6; ++w) {
            if (w != v) rest.push_back(w);
        }
        const auto sub = induced(t, VertexSet(rest));
        const auto iso = is_isomorphic(c5, sub.tournament);
        if (!iso.isomorphic) continue;
        C5Witness w;
        w.vertex = v;
        w.one_in = one_in;
        w.one_out = one_out;
        for (int x : iso.map) w.c5_map.push_back(sub.labels[static_cast<std::size_t>(x)]);
        return w;
    }
    return std::nullopt;
}

bool map_embeds(const Tournament& pattern, const Tournament& host, const std::vector<int>& map) {
    return verify_embedding(Embedding{pattern, host, map});
}

}  // namespace

ClassificationRecord classify6(const Tournament& t) {
    if (t.size() != 6) throw std::invalid_argument("classify6: tournament must have 6 vertices");
    ClassificationRecord r;
    r.cls = canonical_form(t);

    r.galaxy = find_galaxy_ordering(t);
    r.holds[1] = r.galaxy.has_value();

    r.c5 = find_c5_witness(t);
    r.holds[2] = r.c5.has_value();

    r.homogeneous = find_homogeneous(t);
    r.holds[3] = r.homogeneous.has_value();

    if (auto o = find_outcome4_ordering(t)) {
        r.ordering4 = Outcome4Witness{*o, false};
    } else if (auto oc = find_outcome4_ordering(reverse(t))) {
        r.ordering4 = Outcome4Witness{*oc, true};
    }
    r.holds[4] = r.ordering4.has_value();

    const auto iso = is_isomorphic(named(Pattern::K6), t);
    if (iso.isomorphic) r.k6_map = iso.map;
    r.holds[5] = iso.isomorphic;
    return r;
}

std::string recheck_classification(const Tournament& t, const ClassificationRecord& r) {
    if (t.size() != 6) return "not a six-vertex tournament";
    if (canonical_form(t) != r.cls) return "class does not match tournament";
    if (r.holds[1] != r.galaxy.has_value()) return "outcome 1 flag/witness mismatch";
    if (r.galaxy && !analyze_ordering(t, *r.galaxy).is_galaxy_ordering) return "outcome 1: not a galaxy ordering";

    if (r.holds[2] != r.c5.has_value()) return "outcome 2 flag/witness mismatch";
    if (r.c5) {
        const auto& w = *r.c5;
        if (w.vertex < 0 || w.vertex >= 6) return "outcome 2: bad vertex";
        if (std::find(w.c5_map.begin(), w.c5_map.end(), w.vertex) != w.c5_map.end()) return "outcome 2: map uses v";
        if (!map_embeds(named(Pattern::C5), t, w.c5_map)) return "outcome 2: map is not a C5 copy";
        const int outdeg = t.out_degree(w.vertex);
        if (!((w.one_out && outdeg == 1) || (w.one_in && outdeg == 4))) return "outcome 2: degree condition fails";
    }

    if (r.holds[3] != r.homogeneous.has_value()) return "outcome 3 flag/witness mismatch";
    if (r.homogeneous) {
        const auto& s = *r.homogeneous;
        if (s.size() <= 1 || s.size() >= 6 || !is_homogeneous(t, s)) return "outcome 3: not a nontrivial homogeneous set";
    }

    if (r.holds[4] != r.ordering4.has_value()) return "outcome 4 flag/witness mismatch";
    if (r.ordering4) {
        const Tournament& host = r.ordering4->reversed ? reverse(t) : t;
        if (backward_graph(host, r.ordering4->ordering).by_position() != outcome4_positions()) {
            return "outcome 4: backward edges differ";
        }
    }

    if (r.holds[5] != r.k6_map.has_value()) return "outcome 5 flag/witness mismatch";
    if (r.k6_map && !map_embeds(named(Pattern::K6), t, *r.k6_map)) return "outcome 5: map is not an isomorphism";
    return {};
}

std::vector<ClassificationRecord> classify_all6(int jobs) {
    const auto classes = enumerate_classes(6);
    std::vector<ClassificationRecord> out(classes.size());
    jobs = std::max(1, jobs);
    auto worker = [&](int id) {
        for (std::size_t i = static_cast<std::size_t>(id); i < classes.size(); i += static_cast<std::size_t>(jobs)) {
            out[i] = classify6(classes[i].tournament());
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (int id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    }
    return out;
}

}  // namespace tourn

#include "tourn/regularity.hpp"

#include "tourn/transitive.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tourn {

// ------------------------------------------------------------- thresholds

EpsilonThresholds epsilon_thresholds(const Rational& c, const Rational& f, long long n) {
    const Rational zero(0);
    const Rational one(1);
    if (!(zero < c && c < one)) throw std::invalid_argument("epsilon_thresholds: need 0 < c < 1");
    if (!(zero < f && f < one)) throw std::invalid_argument("epsilon_thresholds: need 0 < f < 1");
    if (n < 2) throw std::invalid_argument("epsilon_thresholds: need N >= 2");
    const double cd = c.to_double();
    const double fd = f.to_double();
    return {std::log1p(-fd) / std::log(cd), std::log(0.5) / std::log(cd / 2.0),
            std::log(2.0) / std::log(static_cast<double>(n))};
}

// ------------------------------------------------------------- criticality

bool tr_meets_power(int tr, int size, const Rational& eps) {
    if (eps <= Rational(0)) throw std::invalid_argument("epsilon must be positive");
    constexpr std::int64_t kMaxExponent = 1 << 16;
    if (eps.num() > kMaxExponent || eps.den() > kMaxExponent) {
        throw std::invalid_argument("epsilon numerator/denominator too large for exact comparison");
    }
    using boost::multiprecision::cpp_int;
    const cpp_int lhs = boost::multiprecision::pow(cpp_int(tr), static_cast<unsigned>(eps.den()));
    const cpp_int rhs = boost::multiprecision::pow(cpp_int(size), static_cast<unsigned>(eps.num()));
    return lhs >= rhs;
}

CriticalityResult is_epsilon_critical(const Tournament& t, const Rational& eps) {
    const int n = t.size();
    if (n > kMaxCritical) throw std::invalid_argument("is_epsilon_critical: n exceeds " + std::to_string(kMaxCritical));
    // meets[tr][size]
    std::vector<std::vector<char>> meets(static_cast<std::size_t>(n) + 1, std::vector<char>(static_cast<std::size_t>(n) + 1));
    for (int a = 0; a <= n; ++a) {
        for (int s = 1; s <= n; ++s) meets[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)] = tr_meets_power(a, s, eps);
    }
    TransitiveTable table(t);
    table.fill_all();
    const Mask full = t.all_mask();
    CriticalityResult r;
    r.tr = table.tr(full);
    if (meets[static_cast<std::size_t>(r.tr)][static_cast<std::size_t>(n)]) {
        r.violation = VertexSet::from_mask(full);
        return r;
    }
    for (Mask s = 1; s < full; ++s) {
        const int size = std::popcount(s);
        if (!meets[static_cast<std::size_t>(table.tr(s))][static_cast<std::size_t>(size)]) {
            r.violation = VertexSet::from_mask(s);
            return r;
        }
    }
    r.critical = true;
    return r;
}

// ------------------------------------------------------------ structures

void StructureSpec::validate() const {
    if (w.empty()) throw std::invalid_argument("structure spec: w must be nonempty");
    for (int x : w) {
        if (x != 0 && x != 1) throw std::invalid_argument("structure spec: w entries must be 0 or 1");
    }
    if (c <= Rational(0)) throw std::invalid_argument("structure spec: c must be positive");
    if (lambda <= Rational(0) || lambda >= Rational(1)) {
        throw std::invalid_argument("structure spec: lambda must lie in (0, 1)");
    }
}

int transitive_size_reference(const Tournament& t) {
    return t.size() <= kMaxExact ? max_transitive(t).size : t.size();
}

namespace {

void check_sets(const Tournament& t, const ChainStructure& chain) {
    chain.spec.validate();
    if (chain.sets.size() != chain.spec.w.size()) throw std::invalid_argument("structure: |sets| != |w|");
    std::vector<char> used(static_cast<std::size_t>(t.size()), 0);
    for (const auto& s : chain.sets) {
        for (int v : s) {
            if (v < 0 || v >= t.size()) throw std::invalid_argument("structure: vertex out of range");
            if (used[static_cast<std::size_t>(v)]) throw std::invalid_argument("structure: sets overlap");
            used[static_cast<std::size_t>(v)] = 1;
        }
    }
}

// Edges from v into s (out = true) or from s into v.
int edges_with(const Tournament& t, int v, const VertexSet& s, bool out) {
    int e = 0;
    for (int w : s) e += (out ? t.edge(v, w) : t.edge(w, v)) ? 1 : 0;
    return e;
}

std::string set_name(std::size_t i) { return "S" + std::to_string(i + 1); }

}  // namespace

StructureCheck verify_structure(const Tournament& t, const ChainStructure& chain, bool smooth) {
    check_sets(t, chain);
    const auto& spec = chain.spec;
    const std::int64_t n = t.size();
    const Rational one_minus = Rational(1) - spec.lambda;
    std::optional<int> tr_ref;
    for (std::size_t i = 0; i < chain.sets.size(); ++i) {
        const auto& s = chain.sets[i];
        if (s.empty()) return {false, set_name(i) + " is empty"};
        if (spec.w[i] == 0) {
            if (!at_least(s.size(), spec.c, n)) return {false, set_name(i) + " (linear) smaller than c*n"};
        } else {
            if (!is_transitive(t, s)) return {false, set_name(i) + " is not transitive"};
            if (!tr_ref) tr_ref = transitive_size_reference(t);
            if (!at_least(s.size(), spec.c, *tr_ref)) return {false, set_name(i) + " (transitive) smaller than c*tr(T)"};
        }
    }
    for (std::size_t i = 0; i < chain.sets.size(); ++i) {
        for (std::size_t j = i + 1; j < chain.sets.size(); ++j) {
            const auto& a = chain.sets[i];
            const auto& b = chain.sets[j];
            const auto e = count_edges(t, a, b);
            if (!at_least(e, one_minus, static_cast<std::int64_t>(a.size()) * b.size())) {
                return {false, "d(" + set_name(i) + "," + set_name(j) + ") < 1 - lambda"};
            }
            if (!smooth) continue;
            for (int v : a) {
                if (!at_least(edges_with(t, v, b, true), one_minus, b.size())) {
                    return {false, "d({v" + std::to_string(v + 1) + "}," + set_name(j) + ") < 1 - lambda"};
                }
            }
            for (int v : b) {
                if (!at_least(edges_with(t, v, a, false), one_minus, a.size())) {
                    return {false, "d(" + set_name(i) + ",{v" + std::to_string(v + 1) + "}) < 1 - lambda"};
                }
            }
        }
    }
    return {};
}

VertexSet bad_set(const Tournament& t, const ChainStructure& chain, int i, int j, int m) {
    const auto& ai = chain.sets[static_cast<std::size_t>(i)];
    const auto& aj = chain.sets[static_cast<std::size_t>(j)];
    const Rational threshold = Rational(m) * chain.spec.lambda;
    std::vector<int> bad;
    for (int v : ai) {
        // i < j: v is adjacent from too many of A_j; i > j: adjacent to too many.
        const int backward = edges_with(t, v, aj, i > j);
        if (more_than(backward, threshold, aj.size())) bad.push_back(v);
    }
    return VertexSet(std::move(bad));
}

ChainStructure smooth_refine(const Tournament& t, const ChainStructure& chain) {
    if (auto check = verify_structure(t, chain, false); !check) {
        throw std::invalid_argument("smooth_refine: input is not a structure: " + check.violation);
    }
    const int k = static_cast<int>(chain.sets.size());
    const int m = 2 * k;
    ChainStructure out;
    out.spec.w = chain.spec.w;
    out.spec.c = chain.spec.c / Rational(2);
    out.spec.lambda = Rational(2 * m) * chain.spec.lambda;
    for (int i = 0; i < k; ++i) {
        VertexSet kept = chain.sets[static_cast<std::size_t>(i)];
        for (int j = 0; j < k; ++j) {
            if (j != i) kept = kept.minus(bad_set(t, chain, i, j, m));
        }
        out.sets.push_back(std::move(kept));
    }
    return out;
}

// ------------------------------------------------------- structure search

namespace {

struct Candidate {
    std::vector<VertexSet> sets;
};

// Number of backward edges between v (in set i) and the other sets.
int backward_load(const Tournament& t, const std::vector<VertexSet>& sets, std::size_t i, int v) {
    int load = 0;
    for (std::size_t j = 0; j < sets.size(); ++j) {
        if (j == i) continue;
        load += edges_with(t, v, sets[j], i > j);
    }
    return load;
}

std::optional<ChainStructure> try_order(const Tournament& t, const StructureSpec& spec, bool smooth,
                                        const std::vector<int>& order, int tr_ref) {
    const int n = t.size();
    const int k = static_cast<int>(spec.w.size());
    if (k > n) return std::nullopt;
    std::vector<VertexSet> sets;
    int start = 0;
    for (int b = 0; b < k; ++b) {
        const int len = n / k + (b < n % k ? 1 : 0);
        VertexSet block(std::vector<int>(order.begin() + start, order.begin() + start + len));
        start += len;
        if (spec.w[static_cast<std::size_t>(b)] == 1) block = best_transitive(t, block).witness;
        sets.push_back(std::move(block));
    }
    auto min_size = [&](std::size_t i) {
        // Smallest size meeting the clause for set i.
        const std::int64_t total = spec.w[i] == 0 ? n : tr_ref;
        std::int64_t s = 0;
        while (!at_least(s, spec.c, total)) ++s;
        return std::max<std::int64_t>(s, 1);
    };
    ChainStructure chain{sets, spec};
    for (;;) {
        chain.sets = sets;
        if (verify_structure(t, chain, smooth)) return chain;
        // Drop the vertex carrying the most backward edges from a set that
        // can still afford to lose one.
        int best_load = 0;
        std::size_t best_set = 0;
        int best_v = -1;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (sets[i].size() <= min_size(i)) continue;
            for (int v : sets[i]) {
                const int load = backward_load(t, sets, i, v);
                if (load > best_load) {
                    best_load = load;
                    best_set = i;
                    best_v = v;
                }
            }
        }
        if (best_v < 0) return std::nullopt;
        sets[best_set] = sets[best_set].minus(VertexSet{best_v});
    }
}

}  // namespace

std::optional<ChainStructure> find_structure(const Tournament& t, const StructureSpec& spec, bool smooth) {
    spec.validate();
    if (spec.c > Rational(1)) return std::nullopt;
    const int n = t.size();
    const int tr_ref = transitive_size_reference(t);
    std::vector<int> by_degree(static_cast<std::size_t>(n));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return t.out_degree(a) > t.out_degree(b); });
    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    for (const auto* order : {&by_degree, &identity}) {
        if (auto found = try_order(t, spec, smooth, *order, tr_ref)) return found;
    }
    return std::nullopt;
}

// --------------------------------------------------------------- matching

MaximumMatching max_backward_matching(const Tournament& t, const VertexSet& x, const VertexSet& y) {
    if (!x.disjoint(y)) throw std::invalid_argument("backward_matching: X and Y overlap");
    const int nx = x.size();
    const int ny = y.size();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nx));
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            if (t.edge(y[j], x[i])) adj[static_cast<std::size_t>(i)].push_back(j);
        }
    }
    std::vector<int> match_x(static_cast<std::size_t>(nx), -1);
    std::vector<int> match_y(static_cast<std::size_t>(ny), -1);
    std::vector<int> visited(static_cast<std::size_t>(ny), -1);
    auto augment = [&](auto&& self, int i, int stamp) -> bool {
        for (int j : adj[static_cast<std::size_t>(i)]) {
            if (visited[static_cast<std::size_t>(j)] == stamp) continue;
            visited[static_cast<std::size_t>(j)] = stamp;
            if (match_y[static_cast<std::size_t>(j)] < 0 || self(self, match_y[static_cast<std::size_t>(j)], stamp)) {
                match_x[static_cast<std::size_t>(i)] = j;
                match_y[static_cast<std::size_t>(j)] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < nx; ++i) augment(augment, i, i);

    // Alternating reachability from unmatched X vertices.
    std::vector<char> reach_x(static_cast<std::size_t>(nx), 0);
    std::vector<char> reach_y(static_cast<std::size_t>(ny), 0);
    std::vector<int> queue;
    for (int i = 0; i < nx; ++i) {
        if (match_x[static_cast<std::size_t>(i)] < 0) {
            reach_x[static_cast<std::size_t>(i)] = 1;
            queue.push_back(i);
        }
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (int j : adj[static_cast<std::size_t>(queue[q])]) {
            if (reach_y[static_cast<std::size_t>(j)]) continue;
            reach_y[static_cast<std::size_t>(j)] = 1;
            const int back = match_y[static_cast<std::size_t>(j)];
            if (back >= 0 && !reach_x[static_cast<std::size_t>(back)]) {
                reach_x[static_cast<std::size_t>(back)] = 1;
                queue.push_back(back);
            }
        }
    }
    MaximumMatching r;
    std::vector<int> cx;
    std::vector<int> cy;
    for (int i = 0; i < nx; ++i) {
        if (match_x[static_cast<std::size_t>(i)] >= 0) r.pairs.emplace_back(x[i], y[match_x[static_cast<std::size_t>(i)]]);
        if (!reach_x[static_cast<std::size_t>(i)]) cx.push_back(x[i]);
    }
    for (int j = 0; j < ny; ++j) {
        if (reach_y[static_cast<std::size_t>(j)]) cy.push_back(y[j]);
    }
    r.cover_x = VertexSet(std::move(cx));
    r.cover_y = VertexSet(std::move(cy));
    return r;
}

MatchingOutcome backward_matching(const Tournament& t, const VertexSet& x, const VertexSet& y, int m) {
    if (m <= 0) throw std::invalid_argument("backward_matching: m must be positive");
    auto mm = max_backward_matching(t, x, y);
    MatchingOutcome out;
    out.maximum = static_cast<int>(mm.pairs.size());
    if (out.maximum >= m) {
        out.matched = true;
        out.pairs.assign(mm.pairs.begin(), mm.pairs.begin() + m);
        return out;
    }
    out.pairs = std::move(mm.pairs);
    out.cover_x = std::move(mm.cover_x);
    out.cover_y = std::move(mm.cover_y);
    out.complete_x = x.minus(out.cover_x);
    out.complete_y = y.minus(out.cover_y);
    out.half_sizes = 2 * out.complete_x.size() >= x.size() && 2 * out.complete_y.size() >= y.size();
    return out;
}

// ----------------------------------------------------------------- merging

MergedTransitive merge_transitive(const Tournament& t, const VertexSet& a, const VertexSet& b) {
    if (!a.disjoint(b)) throw std::invalid_argument("merge_transitive: sets overlap");
    const auto oa = transitive_order(t, a);
    const auto ob = transitive_order(t, b);
    if (!oa || !ob) throw std::invalid_argument("merge_transitive: a part is not transitive");
    MergedTransitive r;
    if (is_complete_to(t, a, b)) {
        r.order = *oa;
        r.order.insert(r.order.end(), ob->begin(), ob->end());
    } else if (is_complete_to(t, b, a)) {
        r.order = *ob;
        r.order.insert(r.order.end(), oa->begin(), oa->end());
    } else {
        throw std::invalid_argument("merge_transitive: neither part is complete to the other");
    }
    r.set = a.unite(b);
    return r;
}

std::string_view merge_direction_name(MergeDirection d) {
    return d == MergeDirection::BulkToTransitive ? "bulk-complete-to-transitive" : "transitive-complete-to-bulk";
}

MergeCertificate make_merge_certificate(const Tournament& t, VertexSet transitive_part, VertexSet bulk,
                                        MergeDirection direction) {
    MergeCertificate cert;
    cert.transitive_part = std::move(transitive_part);
    cert.bulk = std::move(bulk);
    cert.direction = direction;
    bool exact = true;
    cert.bulk_witness = best_transitive(t, cert.bulk, &exact).witness;
    cert.bulk_witness_exact = exact;
    cert.claimed_gain = cert.bulk_witness.size() + cert.transitive_part.size();
    return cert;
}

StructureCheck verify_merge_certificate(const Tournament& t, const MergeCertificate& cert) {
    if (cert.transitive_part.empty()) return {false, "transitive part is empty"};
    if (!cert.bulk.disjoint(cert.transitive_part)) return {false, "bulk and transitive part overlap"};
    if (!is_transitive(t, cert.transitive_part)) return {false, "transitive part is not transitive"};
    const bool complete = cert.direction == MergeDirection::BulkToTransitive
                              ? is_complete_to(t, cert.bulk, cert.transitive_part)
                              : is_complete_to(t, cert.transitive_part, cert.bulk);
    if (!complete) return {false, "completeness fails"};
    if (cert.bulk_witness.minus(cert.bulk).size() != 0) return {false, "bulk witness leaves the bulk"};
    if (cert.claimed_gain != cert.bulk_witness.size() + cert.transitive_part.size()) {
        return {false, "claimed gain does not match part sizes"};
    }
    try {
        const auto merged = merge_transitive(t, cert.bulk_witness, cert.transitive_part);
        if (merged.set.size() != cert.claimed_gain || !is_transitive(t, merged.set)) {
            return {false, "merged set is not transitive at the claimed size"};
        }
    } catch (const std::invalid_argument& e) {
        return {false, e.what()};
    }
    return {};
}

}  // namespace tourn

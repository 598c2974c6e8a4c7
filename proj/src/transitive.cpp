#include "tourn/transitive.hpp"

#include <bit>

namespace tourn {

namespace {
constexpr int kDenseLimit = 20;
}

TransitiveTable::TransitiveTable(const Tournament& t) : n_(t.size()), dense_(t.size() <= kDenseLimit) {
    if (n_ > kMaxExact) throw std::invalid_argument("TransitiveTable: n exceeds " + std::to_string(kMaxExact));
    out_.reserve(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out_.push_back(t.out_mask(v));
    if (dense_) dense_memo_.assign(std::size_t{1} << n_, -1);
}

int TransitiveTable::lookup(Mask s) {
    if (dense_) return dense_memo_[s];
    auto it = sparse_memo_.find(s);
    return it == sparse_memo_.end() ? -1 : it->second;
}

void TransitiveTable::store(Mask s, int value) {
    if (dense_) {
        dense_memo_[s] = static_cast<std::int8_t>(value);
    } else {
        sparse_memo_.emplace(s, static_cast<std::int8_t>(value));
    }
}

int TransitiveTable::tr(Mask s) {
    if (s == 0) return 0;
    if ((s & (s - 1)) == 0) return 1;
    if (const int known = lookup(s); known >= 0) return known;
    int best = 0;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const Mask next = s & out_[static_cast<std::size_t>(v)];
        // An upper bound on what v can give is 1 + |next|.
        if (1 + std::popcount(next) <= best) continue;
        best = std::max(best, 1 + tr(next));
    }
    store(s, best);
    return best;
}

std::vector<int> TransitiveTable::witness(Mask s) {
    std::vector<int> order;
    while (s != 0) {
        const int target = tr(s);
        for (Mask rest = s; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const Mask next = s & out_[static_cast<std::size_t>(v)];
            if (1 + tr(next) == target) {
                order.push_back(v);
                s = next;
                break;
            }
        }
    }
    return order;
}

void TransitiveTable::fill_all() {
    if (!dense_) {
        throw std::logic_error("TransitiveTable::fill_all: only supported for n <= 20");
    }
    dense_memo_[0] = 0;
    const Mask full = static_cast<Mask>((std::uint64_t{1} << n_) - 1);
    for (Mask s = 1; s != 0 && s <= full; ++s) {
        if ((s & (s - 1)) == 0) {
            dense_memo_[s] = 1;
            continue;
        }
        int best = 0;
        for (Mask rest = s; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            best = std::max(best, 1 + dense_memo_[s & out_[static_cast<std::size_t>(v)]]);
        }
        dense_memo_[s] = static_cast<std::int8_t>(best);
        if (s == full) break;
    }
}

TransitiveResult max_transitive(const Tournament& t) {
    return max_transitive(t, VertexSet::range(0, t.size()));
}

TransitiveResult max_transitive(const Tournament& t, const VertexSet& s) {
    if (s.size() > kMaxExact) {
        throw std::invalid_argument("max_transitive: more than " + std::to_string(kMaxExact) + " vertices");
    }
    if (s.empty()) return {};
    const auto sub = induced(t, s);
    TransitiveTable table(sub.tournament);
    const auto local = table.witness(sub.tournament.all_mask());
    TransitiveResult r;
    r.size = static_cast<int>(local.size());
    for (int v : local) r.order.push_back(sub.labels[static_cast<std::size_t>(v)]);
    r.witness = VertexSet(r.order);
    return r;
}

TransitiveResult best_transitive(const Tournament& t, const VertexSet& s, bool* exact) {
    if (s.size() <= kMaxExact) {
        if (exact) *exact = true;
        return max_transitive(t, s);
    }
    if (exact) *exact = false;
    std::vector<int> cand(s.begin(), s.end());
    TransitiveResult r;
    while (!cand.empty()) {
        int best_v = -1;
        int best_d = -1;
        for (int v : cand) {
            int d = 0;
            for (int w : cand) d += (w != v && t.edge(v, w)) ? 1 : 0;
            if (d > best_d) {
                best_d = d;
                best_v = v;
            }
        }
        r.order.push_back(best_v);
        std::vector<int> next;
        for (int w : cand) {
            if (w != best_v && t.edge(best_v, w)) next.push_back(w);
        }
        cand = std::move(next);
    }
    r.size = static_cast<int>(r.order.size());
    r.witness = VertexSet(r.order);
    return r;
}

}  // namespace tourn

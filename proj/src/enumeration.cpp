#include "tourn/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <thread>

namespace tourn {

namespace {

class Canonicalizer {
public:
    explicit Canonicalizer(const Tournament& t) : n_(t.size()) {
        for (int v = 0; v < n_; ++v) out_[static_cast<std::size_t>(v)] = t.out_mask(v);
    }

    CanonicalLabeling run() {
        std::vector<Mask> cells;
        if (n_ > 0) cells.push_back(static_cast<Mask>((1U << n_) - 1));
        search(0, cells);
        CanonicalLabeling out;
        out.form.n = n_;
        for (int k = 0; k + 1 < n_; ++k) {
            const int len = n_ - 1 - k;
            for (int b = len - 1; b >= 0; --b) {
                out.form.bits += ((best_rows_[static_cast<std::size_t>(k)] >> b) & 1U) ? '1' : '0';
            }
        }
        out.ordering = Ordering(std::vector<int>(best_perm_.begin(), best_perm_.begin() + n_));
        return out;
    }

private:
    // Row of vertex v placed at position k, given the cells that follow it.
    // Within each cell in-neighbours come first (0 bits), then out-neighbours.
    std::uint32_t row_value(int v, const std::vector<Mask>& cells, Mask first_rest) const {
        std::uint32_t r = 0;
        auto append = [&](Mask c) {
            const int zeros = std::popcount(c & ~out_[static_cast<std::size_t>(v)]);
            const int ones = std::popcount(c & out_[static_cast<std::size_t>(v)]);
            r <<= zeros;
            r = (r << ones) | ((1U << ones) - 1U);
        };
        if (first_rest) append(first_rest);
        for (std::size_t i = 1; i < cells.size(); ++i) append(cells[i]);
        return r;
    }

    // -1: current path is lexicographically smaller than best, 0 equal, 1 larger.
    int compare_prefix(int upto) const {
        if (!have_best_) return -1;
        for (int k = 0; k <= upto; ++k) {
            const auto a = rows_[static_cast<std::size_t>(k)];
            const auto b = best_rows_[static_cast<std::size_t>(k)];
            if (a != b) return a < b ? -1 : 1;
        }
        return 0;
    }

    void search(int k, const std::vector<Mask>& cells) {
        if (k == n_) {
            if (compare_prefix(n_ - 1) < 0) {
                best_rows_ = rows_;
                best_perm_ = perm_;
                have_best_ = true;
            }
            return;
        }
        const Mask first = cells.front();
        std::uint32_t min_row = ~0U;
        std::array<std::uint32_t, kMaxCanonical> values{};
        for (Mask m = first; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            values[static_cast<std::size_t>(v)] = row_value(v, cells, first & ~(1U << v));
            min_row = std::min(min_row, values[static_cast<std::size_t>(v)]);
        }
        rows_[static_cast<std::size_t>(k)] = min_row;
        if (compare_prefix(k) > 0) return;
        for (Mask m = first; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (values[static_cast<std::size_t>(v)] != min_row) continue;
            // Refine every remaining cell by v: in-neighbours first.
            std::vector<Mask> next;
            next.reserve(cells.size() * 2);
            auto split = [&](Mask c) {
                const Mask in = c & ~out_[static_cast<std::size_t>(v)];
                const Mask out = c & out_[static_cast<std::size_t>(v)];
                if (in) next.push_back(in);
                if (out) next.push_back(out);
            };
            split(first & ~(1U << v));
            for (std::size_t i = 1; i < cells.size(); ++i) split(cells[i]);
            perm_[static_cast<std::size_t>(k)] = v;
            rows_[static_cast<std::size_t>(k)] = min_row;
            search(k + 1, next);
        }
    }

    int n_;
    std::array<Mask, kMaxCanonical> out_{};
    std::array<std::uint32_t, kMaxCanonical> rows_{};
    std::array<std::uint32_t, kMaxCanonical> best_rows_{};
    std::array<int, kMaxCanonical> perm_{};
    std::array<int, kMaxCanonical> best_perm_{};
    bool have_best_ = false;
};

void check_canonical_size(const Tournament& t) {
    if (t.size() > kMaxCanonical) {
        throw std::invalid_argument("canonical form: n = " + std::to_string(t.size()) +
                                    " exceeds exhaustive limit " + std::to_string(kMaxCanonical));
    }
}

std::vector<CanonicalForm> sorted_forms(const std::set<std::string>& bits, int n) {
    std::vector<CanonicalForm> out;
    out.reserve(bits.size());
    for (const auto& b : bits) out.push_back({n, b});
    return out;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Tournament& t) {
    check_canonical_size(t);
    return Canonicalizer(t).run();
}

CanonicalForm canonical_form(const Tournament& t) { return canonical_labeling(t).form; }

IsomorphismResult is_isomorphic(const Tournament& a, const Tournament& b) {
    if (a.size() != b.size()) return {};
    const auto la = canonical_labeling(a);
    const auto lb = canonical_labeling(b);
    if (la.form != lb.form) return {};
    IsomorphismResult r{true, std::vector<int>(static_cast<std::size_t>(a.size()))};
    for (int i = 0; i < a.size(); ++i) r.map[static_cast<std::size_t>(la.ordering.vertex_at(i))] = lb.ordering.vertex_at(i);
    return r;
}

std::vector<CanonicalForm> enumerate_classes(int n) {
    if (n < 1 || n > kMaxEnumerate) {
        throw std::invalid_argument("enumerate_classes: n must be in 1.." + std::to_string(kMaxEnumerate));
    }
    std::set<std::string> current{""};
    for (int m = 2; m <= n; ++m) {
        std::set<std::string> next;
        for (const auto& bits : current) {
            const Tournament base = Tournament::from_bits(m - 1, bits);
            for (Mask out = 0; out < (Mask{1} << (m - 1)); ++out) {
                Tournament t(m);
                for (int a = 0; a < m - 1; ++a) {
                    for (int b = a + 1; b < m - 1; ++b) {
                        if (!base.edge(a, b)) t.orient(b, a);
                    }
                    // new vertex m-1 -> a when bit a of `out` is set
                    if ((out >> a) & 1U) t.orient(m - 1, a);
                }
                next.insert(canonical_form(t).bits);
            }
        }
        current = std::move(next);
    }
    return sorted_forms(current, n);
}

std::vector<CanonicalForm> enumerate_classes_exhaustive(int n, int jobs) {
    if (n < 1 || n > kMaxEnumerate) {
        throw std::invalid_argument("enumerate_classes_exhaustive: n must be in 1.." + std::to_string(kMaxEnumerate));
    }
    jobs = std::max(1, jobs);
    const int m = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << m;
    std::vector<std::set<std::string>> partial(static_cast<std::size_t>(jobs));
    auto worker = [&](int id) {
        auto& seen = partial[static_cast<std::size_t>(id)];
        std::string bits(static_cast<std::size_t>(m), '0');
        for (std::uint64_t code = static_cast<std::uint64_t>(id); code < total; code += static_cast<std::uint64_t>(jobs)) {
            for (int i = 0; i < m; ++i) bits[static_cast<std::size_t>(i)] = ((code >> (m - 1 - i)) & 1U) ? '1' : '0';
            seen.insert(canonical_form(Tournament::from_bits(n, bits)).bits);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (int id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
    }
    std::set<std::string> merged;
    for (auto& s : partial) merged.insert(s.begin(), s.end());
    return sorted_forms(merged, n);
}

bool verify_embedding(const Embedding& e) {
    const int k = e.pattern.size();
    if (static_cast<int>(e.map.size()) != k) return false;
    for (int i = 0; i < k; ++i) {
        const int hi = e.map[static_cast<std::size_t>(i)];
        if (hi < 0 || hi >= e.host.size()) return false;
        for (int j = i + 1; j < k; ++j) {
            const int hj = e.map[static_cast<std::size_t>(j)];
            if (hi == hj) return false;
            if (e.pattern.edge(i, j) != e.host.edge(hi, hj)) return false;
        }
    }
    return true;
}

std::optional<Embedding> find_embedding(const Tournament& host, const Tournament& pattern) {
    const int k = pattern.size();
    const int n = host.size();
    if (k > kMaxCanonical) throw std::invalid_argument("find_embedding: pattern exceeds 8 vertices");
    if (k > n) return std::nullopt;
    const int words = host.words();

    // cand[level][i * words ...]: candidates for pattern vertex i given the
    // assignments of vertices 0..level-1.
    std::vector<std::vector<std::uint64_t>> cand(static_cast<std::size_t>(k) + 1,
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(k) * words, 0));
    for (int i = 0; i < k; ++i) {
        for (int v = 0; v < n; ++v) cand[0][static_cast<std::size_t>(i) * words + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    }
    std::vector<int> map(static_cast<std::size_t>(k), -1);

    auto recurse = [&](auto&& self, int level) -> bool {
        if (level == k) return true;
        const auto& cur = cand[static_cast<std::size_t>(level)];
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = cur[static_cast<std::size_t>(level) * words + w];
            while (bits) {
                const int h = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                map[static_cast<std::size_t>(level)] = h;
                auto& nxt = cand[static_cast<std::size_t>(level) + 1];
                const auto row = host.row(h);
                bool dead = false;
                for (int i = level + 1; i < k && !dead; ++i) {
                    const bool out = pattern.edge(level, i);
                    std::uint64_t any = 0;
                    for (int ww = 0; ww < words; ++ww) {
                        std::uint64_t nb = out ? row[static_cast<std::size_t>(ww)] : ~row[static_cast<std::size_t>(ww)];
                        if (ww == (h >> 6)) nb &= ~(std::uint64_t{1} << (h & 63));
                        const auto val = cur[static_cast<std::size_t>(i) * words + ww] & nb;
                        nxt[static_cast<std::size_t>(i) * words + ww] = val;
                        any |= val;
                    }
                    if (!any) dead = true;
                }
                if (!dead && self(self, level + 1)) return true;
            }
        }
        return false;
    };
    if (!recurse(recurse, 0)) return std::nullopt;
    return Embedding{pattern, host, map};
}

}  // namespace tourn

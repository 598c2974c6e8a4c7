// tourn: command-line front end. Machine-readable output goes to stdout,
// diagnostics to stderr. Exit codes: 0 success, 1 negative answer or failed
// verification, 2 usage or input error.

#include "tourn/embedding.hpp"
#include "tourn/enumeration.hpp"
#include "tourn/io.hpp"
#include "tourn/named.hpp"
#include "tourn/regularity.hpp"
#include "tourn/structure.hpp"
#include "tourn/transitive.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace tourn;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

Json read_json(const std::string& path) {
    try {
        return Json::parse(read_text(path));
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void print(const Json& j) { std::cout << j.dump() << '\n'; }

// Comma-separated 1-based labels.
std::vector<int> parse_labels(const std::string& text, int n) {
    Json list = Json::array();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            list.push_back(v);
        } catch (const std::logic_error&) {
            throw UsageError("bad vertex label: " + item);
        }
    }
    return vertex_list_from_json(list, n);
}

VertexSet parse_set(const std::string& text, int n) { return VertexSet(parse_labels(text, n)); }

Ordering parse_ordering(const std::string& text, int n) {
    auto perm = parse_labels(text, n);
    if (static_cast<int>(perm.size()) != n) throw UsageError("ordering must list all " + std::to_string(n) + " vertices");
    return Ordering(std::move(perm));
}

Rational parse_rational(const std::string& text) { return Rational::parse(text); }

// TRN1 files (positional) and --named patterns, combined in command-line order.
class Inputs {
public:
    explicit Inputs(CLI::App* app, std::size_t min_count, std::size_t max_count) : app_(app), min_(min_count), max_(max_count) {
        files_ = app->add_option("input", file_values_, "TRN1 file ('-' for stdin)");
        named_ = app->add_option("--named", named_values_, "named tournament (K6, C5, L1, L2, K6c, C5c, L1c, L2c)");
    }

    std::vector<Tournament> get() const {
        std::vector<Tournament> out;
        std::size_t fi = 0;
        std::size_t ni = 0;
        for (const CLI::Option* opt : app_->parse_order()) {
            if (opt == files_) out.push_back(parse_trn1(read_text(file_values_.at(fi++))));
            if (opt == named_) out.push_back(named(named_values_.at(ni++)));
        }
        if (out.size() < min_ || out.size() > max_) {
            throw UsageError(app_->get_name() + " expects " +
                             (min_ == max_ ? std::to_string(min_) : std::to_string(min_) + ".." + std::to_string(max_)) +
                             " tournament input(s), got " + std::to_string(out.size()));
        }
        return out;
    }
    Tournament one() const { return get().at(0); }

private:
    CLI::App* app_;
    std::size_t min_;
    std::size_t max_;
    CLI::Option* files_;
    CLI::Option* named_;
    std::vector<std::string> file_values_;
    std::vector<std::string> named_values_;
};

using Handler = std::function<int()>;

struct Registry {
    CLI::App& app;
    std::vector<std::pair<CLI::App*, Handler>> handlers;
    std::vector<std::unique_ptr<Inputs>> inputs;

    CLI::App* add(const std::string& name, const std::string& help) { return app.add_subcommand(name, help); }
    Inputs& inputs_for(CLI::App* sub, std::size_t lo, std::size_t hi) {
        inputs.push_back(std::make_unique<Inputs>(sub, lo, hi));
        return *inputs.back();
    }
    void on(CLI::App* sub, Handler h) { handlers.emplace_back(sub, std::move(h)); }
};

// ------------------------------------------------------------ subcommands

void add_enumerate(Registry& r) {
    auto* sub = r.add("enumerate", "list isomorphism classes of n-vertex tournaments");
    auto n = std::make_shared<int>(0);
    auto format = std::make_shared<std::string>("trn1");
    auto method = std::make_shared<std::string>("extension");
    auto jobs = std::make_shared<int>(1);
    sub->add_option("--n", *n, "vertex count (1..7)")->required();
    sub->add_option("--format", *format, "trn1 | jsonl")->check(CLI::IsMember({"trn1", "jsonl"}));
    sub->add_option("--method", *method, "extension | exhaustive")->check(CLI::IsMember({"extension", "exhaustive"}));
    sub->add_option("--jobs", *jobs, "worker threads for the exhaustive method")->check(CLI::PositiveNumber);
    r.on(sub, [=] {
        const auto classes = *method == "extension" ? enumerate_classes(*n) : enumerate_classes_exhaustive(*n, *jobs);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (*format == "jsonl") {
                print(Json{{"n", classes[i].n}, {"bits", classes[i].bits}, {"index", i}});
            } else {
                std::cout << serialize_trn1(classes[i].tournament());
            }
        }
        return kOk;
    });
}

void add_canon(Registry& r) {
    auto* sub = r.add("canon", "canonical form");
    auto& in = r.inputs_for(sub, 1, 1);
    auto json = std::make_shared<bool>(false);
    sub->add_flag("--json", *json, "print {n, bits, ordering}");
    r.on(sub, [&in, json] {
        const auto lab = canonical_labeling(in.one());
        if (*json) {
            print(Json{{"n", lab.form.n}, {"bits", lab.form.bits}, {"ordering", to_json(lab.ordering)}});
        } else {
            std::cout << serialize_trn1(lab.form.tournament());
        }
        return kOk;
    });
}

void add_iso(Registry& r) {
    auto* sub = r.add("iso", "isomorphism test of two tournaments");
    auto& in = r.inputs_for(sub, 2, 2);
    r.on(sub, [&in] {
        const auto ts = in.get();
        const auto res = is_isomorphic(ts[0], ts[1]);
        Json out = {{"isomorphic", res.isomorphic}};
        out["map"] = res.isomorphic ? vertex_list_json(res.map) : Json(nullptr);
        print(out);
        return res.isomorphic ? kOk : kNegative;
    });
}

void add_contains(Registry& r) {
    auto* sub = r.add("contains", "find a copy of the second tournament (pattern) in the first (host)");
    auto& in = r.inputs_for(sub, 2, 2);
    r.on(sub, [&in] {
        const auto ts = in.get();
        const auto e = find_embedding(ts[0], ts[1]);
        print(Json{{"found", e.has_value()}, {"map", e ? vertex_list_json(e->map) : Json(nullptr)}});
        return e ? kOk : kNegative;
    });
}

void add_tr(Registry& r) {
    auto* sub = r.add("tr", "maximum transitive subtournament");
    auto& in = r.inputs_for(sub, 1, 1);
    auto set = std::make_shared<std::string>();
    sub->add_option("--set", *set, "restrict to these vertices (comma-separated, 1-based)");
    r.on(sub, [&in, set] {
        const auto t = in.one();
        const auto res = set->empty() ? max_transitive(t) : max_transitive(t, parse_set(*set, t.size()));
        print(Json{{"tr", res.size}, {"witness", vertex_list_json(res.order)}});
        return kOk;
    });
}

void add_homog(Registry& r) {
    auto* sub = r.add("homog", "smallest nontrivial homogeneous set");
    auto& in = r.inputs_for(sub, 1, 1);
    r.on(sub, [&in] {
        const auto s = find_homogeneous(in.one());
        print(Json{{"prime", !s.has_value()}, {"set", s ? to_json(*s) : Json(nullptr)}});
        return s ? kOk : kNegative;
    });
}

void add_galaxy(Registry& r) {
    auto* sub = r.add("galaxy", "search for a galaxy ordering, or analyze a given ordering");
    auto& in = r.inputs_for(sub, 1, 1);
    auto ordering = std::make_shared<std::string>();
    sub->add_option("--ordering", *ordering, "analyze this ordering (comma-separated vertices)");
    r.on(sub, [&in, ordering] {
        const auto t = in.one();
        if (!ordering->empty()) {
            const auto d = analyze_ordering(t, parse_ordering(*ordering, t.size()));
            print(to_json(d));
            return d.is_galaxy_ordering ? kOk : kNegative;
        }
        const auto g = find_galaxy_ordering(t);
        print(Json{{"galaxy", g.has_value()}, {"ordering", g ? to_json(*g) : Json(nullptr)}});
        return g ? kOk : kNegative;
    });
}

void add_forest_count(Registry& r) {
    auto* sub = r.add("forest-count", "count orderings with an acyclic backward-edge graph");
    auto& in = r.inputs_for(sub, 1, 1);
    auto list = std::make_shared<bool>(false);
    sub->add_flag("--list", *list, "also list the orderings");
    r.on(sub, [&in, list] {
        const auto res = count_forest_orderings(in.one(), *list);
        Json out = {{"count", res.count}};
        if (*list) {
            Json os = Json::array();
            for (const auto& o : res.orderings) os.push_back(to_json(o));
            out["orderings"] = os;
        }
        print(out);
        return kOk;
    });
}

void add_classify6(Registry& r) {
    auto* sub = r.add("classify6", "five-outcome classification of six-vertex tournaments");
    auto& in = r.inputs_for(sub, 0, 1);
    auto all = std::make_shared<bool>(false);
    auto report = std::make_shared<std::string>();
    auto jobs = std::make_shared<int>(1);
    sub->add_flag("--all", *all, "classify every isomorphism class");
    sub->add_option("--report", *report, "write JSON lines here instead of stdout");
    sub->add_option("--jobs", *jobs, "worker threads for --all")->check(CLI::PositiveNumber);
    r.on(sub, [&in, all, report, jobs] {
        const auto inputs = in.get();
        if (*all == !inputs.empty()) throw UsageError("classify6 needs exactly one of --all or an input");
        std::vector<ClassificationRecord> records;
        if (*all) {
            records = classify_all6(*jobs);
        } else {
            const auto& t = inputs[0];
            if (t.size() != 6) throw UsageError("classify6 needs a six-vertex tournament");
            // Report on the canonical representative so witnesses match the bits.
            records.push_back(classify6(canonical_form(t).tournament()));
        }
        std::string text;
        bool nonempty = true;
        for (const auto& rec : records) {
            text += to_json(rec).dump() + "\n";
            nonempty = nonempty && !rec.outcomes().empty();
        }
        if (report->empty()) {
            std::cout << text;
        } else {
            write_text(*report, text);
            print(Json{{"records", records.size()}, {"all_nonempty", nonempty}, {"report", *report}});
        }
        return nonempty ? kOk : kNegative;
    });
}

void add_verify_lemma22(Registry& r) {
    auto* sub = r.add("verify-lemma22", "check every six-vertex class against the five outcomes");
    auto jobs = std::make_shared<int>(1);
    auto report = std::make_shared<std::string>();
    sub->add_option("--jobs", *jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--report", *report, "also write the classification JSON lines");
    r.on(sub, [jobs, report] {
        const auto records = classify_all6(*jobs);
        int nonempty = 0;
        Json failures = Json::array();
        std::string text;
        for (const auto& rec : records) {
            if (!rec.outcomes().empty()) ++nonempty;
            const auto why = recheck_classification(rec.cls.tournament(), rec);
            if (!why.empty()) failures.push_back({{"bits", rec.cls.bits}, {"reason", why}});
            text += to_json(rec).dump() + "\n";
        }
        if (!report->empty()) write_text(*report, text);
        const bool ok = nonempty == static_cast<int>(records.size()) && failures.empty();
        print(Json{{"classes", records.size()}, {"nonempty", nonempty}, {"witness_failures", failures}, {"ok", ok}});
        return ok ? kOk : kNegative;
    });
}

void add_density(Registry& r) {
    auto* sub = r.add("density", "directed density d(X,Y)");
    auto& in = r.inputs_for(sub, 1, 1);
    auto x = std::make_shared<std::string>();
    auto y = std::make_shared<std::string>();
    sub->add_option("--x", *x, "X (comma-separated)")->required();
    sub->add_option("--y", *y, "Y (comma-separated)")->required();
    r.on(sub, [&in, x, y] {
        const auto t = in.one();
        const auto d = density(t, parse_set(*x, t.size()), parse_set(*y, t.size()));
        print(Json{{"edges", d.edges}, {"pairs", d.pairs}, {"density", Rational(d.edges, d.pairs).str()}});
        return kOk;
    });
}

void add_critical(Registry& r) {
    auto* sub = r.add("critical", "exact epsilon-criticality test");
    auto& in = r.inputs_for(sub, 1, 1);
    auto eps = std::make_shared<std::string>();
    auto c = std::make_shared<std::string>();
    auto f = std::make_shared<std::string>();
    sub->add_option("--eps", *eps, "epsilon as p/q")->required();
    sub->add_option("--c", *c, "also report the threshold formulas for this c (needs --f)");
    sub->add_option("--f", *f, "f for the merge threshold");
    r.on(sub, [&in, eps, c, f] {
        const auto t = in.one();
        const auto res = is_epsilon_critical(t, parse_rational(*eps));
        Json out = {{"critical", res.critical}, {"tr", res.tr}, {"violation", res.violation ? to_json(*res.violation) : Json(nullptr)}};
        if (!c->empty() || !f->empty()) {
            if (c->empty() || f->empty()) throw UsageError("--c and --f go together");
            const auto th = epsilon_thresholds(parse_rational(*c), parse_rational(*f), t.size());
            out["thresholds"] = {{"merge_bound", th.merge_bound}, {"matching_bound", th.matching_bound}, {"size_bound", th.size_bound}};
        }
        print(out);
        return res.critical ? kOk : kNegative;
    });
}

void add_verify_structure(Registry& r) {
    auto* sub = r.add("verify-structure", "check a (c, lambda, w)-structure");
    auto& in = r.inputs_for(sub, 1, 1);
    auto chain = std::make_shared<std::string>();
    auto smooth = std::make_shared<bool>(false);
    sub->add_option("--chain", *chain, "ChainStructure JSON file")->required();
    sub->add_flag("--smooth", *smooth, "also check the per-vertex conditions");
    r.on(sub, [&in, chain, smooth] {
        const auto t = in.one();
        const auto check = verify_structure(t, chain_from_json(read_json(*chain), t.size()), *smooth);
        print(Json{{"ok", check.ok}, {"violation", check.ok ? Json(nullptr) : Json(check.violation)}});
        return check.ok ? kOk : kNegative;
    });
}

void add_refine(Registry& r) {
    auto* sub = r.add("refine", "smooth refinement of a structure");
    auto& in = r.inputs_for(sub, 1, 1);
    auto chain = std::make_shared<std::string>();
    sub->add_option("--chain", *chain, "ChainStructure JSON file")->required();
    r.on(sub, [&in, chain] {
        const auto t = in.one();
        print(to_json(smooth_refine(t, chain_from_json(read_json(*chain), t.size()))));
        return kOk;
    });
}

void add_match(Registry& r) {
    auto* sub = r.add("match", "backward matching between X and Y (edges y -> x)");
    auto& in = r.inputs_for(sub, 1, 1);
    auto x = std::make_shared<std::string>();
    auto y = std::make_shared<std::string>();
    auto m = std::make_shared<int>(0);
    sub->add_option("--x", *x, "X (comma-separated)")->required();
    sub->add_option("--y", *y, "Y (comma-separated)")->required();
    sub->add_option("--m", *m, "target matching size (default: min(|X|,|Y|))");
    r.on(sub, [&in, x, y, m] {
        const auto t = in.one();
        const auto xs = parse_set(*x, t.size());
        const auto ys = parse_set(*y, t.size());
        const int target = *m > 0 ? *m : std::max(1, std::min(xs.size(), ys.size()));
        const auto out = backward_matching(t, xs, ys, target);
        print(to_json(out));
        return kOk;
    });
}

void add_merge(Registry& r) {
    auto* sub = r.add("merge", "merge two transitive sets, or re-verify a merge certificate");
    auto& in = r.inputs_for(sub, 1, 1);
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    auto cert = std::make_shared<std::string>();
    sub->add_option("--a", *a, "first transitive set");
    sub->add_option("--b", *b, "second transitive set");
    sub->add_option("--certificate", *cert, "merge certificate JSON (as in a replay report's sets)");
    r.on(sub, [&in, a, b, cert] {
        const auto t = in.one();
        if (!cert->empty()) {
            if (!a->empty() || !b->empty()) throw UsageError("--certificate excludes --a/--b");
            const auto check = verify_merge_certificate(t, merge_from_json(read_json(*cert), t.size()));
            print(Json{{"ok", check.ok}, {"violation", check.ok ? Json(nullptr) : Json(check.violation)}});
            return check.ok ? kOk : kNegative;
        }
        if (a->empty() || b->empty()) throw UsageError("merge needs --a and --b, or --certificate");
        try {
            const auto m = merge_transitive(t, parse_set(*a, t.size()), parse_set(*b, t.size()));
            print(Json{{"size", m.set.size()}, {"set", to_json(m.set)}, {"order", vertex_list_json(m.order)}});
            return kOk;
        } catch (const std::invalid_argument& e) {
            // Not mergeable: a negative answer, not a usage error.
            print(Json{{"size", nullptr}, {"error", e.what()}});
            return kNegative;
        }
    });
}

std::vector<int> parse_w(const std::string& text) {
    std::vector<int> w;
    for (char ch : text) {
        if (ch == '0' || ch == '1') w.push_back(ch - '0');
        else if (ch != ',' && ch != ' ') throw UsageError("w must be a list of 0/1");
    }
    return w;
}

void add_find_structure(Registry& r) {
    auto* sub = r.add("find-structure", "heuristic search for a (c, lambda, w)-structure");
    auto& in = r.inputs_for(sub, 1, 1);
    auto w = std::make_shared<std::string>();
    auto c = std::make_shared<std::string>();
    auto lambda = std::make_shared<std::string>();
    auto smooth = std::make_shared<bool>(false);
    sub->add_option("--w", *w, "e.g. 0,0,1,0,0,0")->required();
    sub->add_option("--c", *c, "c as p/q")->required();
    sub->add_option("--lambda", *lambda, "lambda as p/q")->required();
    sub->add_flag("--smooth", *smooth, "require the smooth conditions");
    r.on(sub, [&in, w, c, lambda, smooth] {
        StructureSpec spec{parse_w(*w), parse_rational(*c), parse_rational(*lambda)};
        spec.validate();
        const auto found = find_structure(in.one(), spec, *smooth);
        if (!found) {
            print(Json(nullptr));
            return kNegative;
        }
        print(to_json(*found));
        return kOk;
    });
}

void add_replay(Registry& r) {
    auto* sub = r.add("replay", "run the L1/L2 case analysis on a smooth structure");
    auto& in = r.inputs_for(sub, 1, 1);
    auto chain = std::make_shared<std::string>();
    auto pattern = std::make_shared<std::string>();
    auto report = std::make_shared<std::string>();
    sub->add_option("--chain", *chain, "ChainStructure JSON file")->required();
    sub->add_option("--pattern", *pattern, "L1 | L2")->required();
    sub->add_option("--report", *report, "also write the report here");
    r.on(sub, [&in, chain, pattern, report] {
        const auto t = in.one();
        const auto p = parse_pattern(*pattern);
        const auto outcome = replay(t, chain_from_json(read_json(*chain), t.size()), p);
        const auto j = to_json(outcome, p);
        if (!report->empty()) write_text(*report, j.dump(2) + "\n");
        print(j);
        return verify_outcome(t, outcome, p) ? kOk : kNegative;
    });
}

void add_plant(Registry& r) {
    auto* sub = r.add("plant", "generate a host with a smooth structure steering replay into one case");
    auto pattern = std::make_shared<std::string>();
    auto kase = std::make_shared<std::string>("BOTH");
    auto seed = std::make_shared<std::uint64_t>(0);
    auto sizes = std::make_shared<std::string>();
    auto tout = std::make_shared<std::string>();
    auto cout_ = std::make_shared<std::string>();
    sub->add_option("--pattern", *pattern, "L1 | L2")->required();
    sub->add_option("--case", *kase, "BOTH | MIRROR-U | MIRROR-V");
    sub->add_option("--seed", *seed, "PRNG seed")->required();
    sub->add_option("--sizes", *sizes, "set sizes, comma-separated (default 24 each)");
    sub->add_option("--tournament-out", *tout, "write the TRN1 here");
    sub->add_option("--chain-out", *cout_, "write the ChainStructure JSON here");
    r.on(sub, [=] {
        const auto p = parse_pattern(*pattern);
        std::vector<int> sz;
        if (sizes->empty()) {
            sz = default_plant_sizes(p);
        } else {
            std::stringstream ss(*sizes);
            std::string item;
            while (std::getline(ss, item, ',')) sz.push_back(std::stoi(item));
        }
        const auto inst = plant_instance(p, parse_plant_case(*kase), sz, *seed);
        if (!tout->empty()) write_text(*tout, serialize_trn1(inst.tournament));
        if (!cout_->empty()) write_text(*cout_, to_json(inst.chain).dump() + "\n");
        if (tout->empty() && cout_->empty()) {
            print(Json{{"tournament", serialize_trn1(inst.tournament)}, {"chain", to_json(inst.chain)}});
        }
        return kOk;
    });
}

void add_random(Registry& r) {
    auto* sub = r.add("random", "uniform random tournament (std::mt19937_64)");
    auto n = std::make_shared<int>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    sub->add_option("--n", *n, "vertex count")->required();
    sub->add_option("--seed", *seed, "PRNG seed")->required();
    r.on(sub, [n, seed] {
        std::cout << serialize_trn1(random_tournament(*n, *seed));
        return kOk;
    });
}

void add_export_dot(Registry& r) {
    auto* sub = r.add("export-dot", "DOT rendering, optionally laid out along an ordering");
    auto& in = r.inputs_for(sub, 1, 1);
    auto ordering = std::make_shared<std::string>();
    auto canonical = std::make_shared<bool>(false);
    sub->add_option("--ordering", *ordering, "vertex ordering (comma-separated)");
    sub->add_flag("--identity", *canonical, "use the ordering v1..vn");
    r.on(sub, [&in, ordering, canonical] {
        const auto t = in.one();
        std::optional<Ordering> o;
        if (!ordering->empty()) o = parse_ordering(*ordering, t.size());
        else if (*canonical) o = Ordering::identity(t.size());
        std::cout << export_dot(t, o);
        return kOk;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tournament verification toolkit", "tourn"};
    app.require_subcommand(1);
    Registry reg{app, {}, {}};
    add_enumerate(reg);
    add_canon(reg);
    add_iso(reg);
    add_contains(reg);
    add_tr(reg);
    add_homog(reg);
    add_galaxy(reg);
    add_forest_count(reg);
    add_classify6(reg);
    add_verify_lemma22(reg);
    add_density(reg);
    add_critical(reg);
    add_verify_structure(reg);
    add_refine(reg);
    add_match(reg);
    add_merge(reg);
    add_find_structure(reg);
    add_replay(reg);
    add_plant(reg);
    add_random(reg);
    add_export_dot(reg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        for (const auto& [sub, handler] : reg.handlers) {
            if (sub->parsed()) return handler();
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return kNegative;
    }
    return kUsage;
}

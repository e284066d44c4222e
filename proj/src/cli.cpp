#include "netmap/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "netmap/hurwitz.hpp"
#include "netmap/io.hpp"
#include "netmap/modular.hpp"
#include "netmap/slope.hpp"

namespace netmap {

namespace {

using nlohmann::json;

json to_json(Vec2 v) { return json::array({v.x, v.y}); }
json to_json(AElement h) { return json::array({h.x, h.y}); }
json to_json(const IntMatrix2& m) { return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}); }

json to_json(const HurwitzStructureSet& hs) {
    json pairs = json::array();
    for (AElement h : hs.pairs) pairs.push_back(to_json(h));
    return {{"m", hs.divisors.m}, {"n", hs.divisors.n}, {"pairs", pairs}};
}

json to_json(const NetMapPresentation& p) {
    json arcs = json::array();
    for (const Arc& arc : p.arcs) arcs.push_back({{"initial", to_json(arc.initial)}, {"terminal", to_json(arc.terminal)}});
    return {{"matrix", to_json(p.a)}, {"translation", to_json(p.b)}, {"arcs", arcs}};
}

std::string partition_string(const std::vector<int>& part) {
    std::string s = "{";
    for (std::size_t i = 0; i < part.size(); ++i) s += (i ? "," : "") + std::to_string(part[i]);
    return s + "}";
}

class Runner {
public:
    Runner(const RunConfig& config, std::ostream& out) : c_(config), out_(out) {}

    void run() {
        if (c_.workers < 1) throw Error(ErrorKind::usage, "--workers must be positive");
        if (c_.format == OutputFormat::dot && c_.command != "portrait")
            throw Error(ErrorKind::usage, "--format dot is only available for 'portrait'");
        const std::string& cmd = c_.command;
        if (cmd == "ed") return ed();
        if (cmd == "snf") return snf();
        if (cmd == "hurwitz-invariant") return hurwitz_invariant();
        if (cmd == "hurwitz-equal") return hurwitz_equal();
        if (cmd == "enumerate-hurwitz") return enumerate_hurwitz();
        if (cmd == "count-hurwitz") return count_hurwitz();
        if (cmd == "deck") return deck();
        if (cmd == "liftable") return liftable();
        if (cmd == "vme") return vme();
        if (cmd == "portrait") return portrait();
        if (cmd == "from-portrait") return from_portrait();
        if (cmd == "realizable") return realizable();
        if (cmd == "count-portraits") return count_portraits();
        if (cmd == "index-bound") return index_bound();
        throw Error(ErrorKind::usage, "unknown command '" + cmd + "'");
    }

private:
    const RunConfig& c_;
    std::ostream& out_;

    bool json_out() const { return c_.format == OutputFormat::json; }
    void emit(const json& j) { out_ << j.dump(2) << '\n'; }

    const std::string& input(std::size_t i) const {
        if (c_.inputs.size() <= i) throw Error(ErrorKind::usage, c_.command + ": missing input file");
        return c_.inputs[i];
    }
    NetMapPresentation presentation(std::size_t i = 0) const { return parse_presentation(read_file(input(i))); }
    DynamicPortrait portrait_file() const { return parse_portrait_json(read_file(input(0))); }

    IntMatrix2 matrix_option() const {
        if (c_.matrix.size() != 4) throw Error(ErrorKind::usage, c_.command + ": --matrix needs four integers");
        return {c_.matrix[0], c_.matrix[1], c_.matrix[2], c_.matrix[3]};
    }
    Vec2 translation_option() const {
        if (c_.translation.empty()) return {};
        if (c_.translation.size() != 2) throw Error(ErrorKind::usage, "--translation needs two integers");
        return {c_.translation[0], c_.translation[1]};
    }
    // --matrix when given, else the matrix of the presentation file
    IntMatrix2 lattice_matrix() const { return c_.matrix.empty() ? presentation().a : matrix_option(); }

    int degree_option() const {
        if (!c_.degree || *c_.degree < 1) throw Error(ErrorKind::usage, c_.command + ": --degree must be positive");
        check_cap(*c_.degree);
        return *c_.degree;
    }
    void check_cap(Int degree) const {
        if (degree > kDefaultDegreeCap && !c_.allow_large)
            throw Error(ErrorKind::usage, "degree " + std::to_string(degree) + " exceeds the cap of " +
                                              std::to_string(kDefaultDegreeCap) + "; pass --allow-large-degree");
    }
    std::pair<Int, Int> divisors_option() const {
        if (!c_.m || !c_.n || *c_.m < 1 || *c_.n < 1)
            throw Error(ErrorKind::usage, c_.command + ": --m and --n must be positive");
        if (*c_.m % *c_.n != 0) throw Error(ErrorKind::domain, "elementary divisors need n | m");
        return {*c_.m, *c_.n};
    }

    void ed() {
        ElementaryDivisors e = elementary_divisors(lattice_matrix());
        if (json_out()) return emit({{"m", e.m}, {"n", e.n}});
        out_ << "m=" << e.m << " n=" << e.n << '\n';
    }

    void snf() {
        Snf s = snf2(lattice_matrix());
        if (json_out()) return emit({{"q", to_json(s.q)}, {"d", to_json(s.d)}, {"r", to_json(s.r)}});
        out_ << "Q = " << to_string(s.q) << "\nD = " << to_string(s.d) << "\nR = " << to_string(s.r) << '\n';
    }

    void hurwitz_invariant() {
        HurwitzStructureSet hs = canonical_hurwitz_invariant(hs_from_presentation(presentation()));
        if (json_out()) return emit(to_json(hs));
        out_ << to_string(hs) << '\n';
    }

    void hurwitz_equal() {
        bool eq = hurwitz_equivalent(presentation(0), presentation(1));
        if (json_out()) return emit({{"equivalent", eq}});
        out_ << (eq ? "true" : "false") << '\n';
    }

    void enumerate_hurwitz() {
        auto [m, n] = divisors_option();
        check_cap(checked_mul(m, n));
        auto classes = enumerate_hurwitz_classes(m, n, c_.workers);
        if (json_out()) {
            json list = json::array();
            for (const auto& hs : classes) list.push_back(to_json(hs));
            return emit({{"m", m}, {"n", n}, {"count", classes.size()}, {"classes", list}});
        }
        for (const auto& hs : classes) out_ << to_string(hs) << '\n';
    }

    void count_hurwitz() {
        int d = degree_option();
        if (d < 2) throw Error(ErrorKind::domain, "degree must be at least 2");
        json by_divisors = json::array();
        std::size_t total = 0;
        for (Int n = 1; n * n <= d; ++n) {
            if (d % (n * n) != 0) continue;
            Int m = d / n;
            std::size_t count = enumerate_hurwitz_classes(m, n, c_.workers).size();
            by_divisors.push_back({{"m", m}, {"n", n}, {"count", count}});
            total += count;
        }
        if (json_out()) return emit({{"degree", d}, {"count", total}, {"by_divisors", by_divisors}});
        out_ << total << '\n';
    }

    void deck() {
        DeckGroup g = deck_group(hs_from_presentation(presentation()));
        if (json_out()) {
            json gens = json::array(), elems = json::array();
            for (AElement h : g.generators) gens.push_back(to_json(h));
            for (AElement h : g.elements) elems.push_back(to_json(h));
            return emit({{"order", g.order}, {"generators", gens}, {"elements", elems}});
        }
        out_ << "order: " << g.order << "\ngenerators:";
        for (AElement h : g.generators) out_ << ' ' << to_string(h);
        out_ << '\n';
    }

    void liftable() {
        NetMapPresentation p = presentation();
        ModularElement e{matrix_option(), translation_option()};
        if (c_.pure) {
            bool ok = is_pure_liftable(p, e);
            if (json_out()) return emit({{"pure_liftable", ok}});
            out_ << (ok ? "pure-liftable" : "not pure-liftable") << '\n';
            return;
        }
        auto reps = liftable_representatives(p, e);
        if (json_out()) {
            json list = json::array();
            for (const auto& psi : reps) list.push_back({{"matrix", to_json(psi.m)}, {"translation", to_json(psi.t)}});
            return emit({{"liftable", !reps.empty()}, {"representatives", list}});
        }
        out_ << (reps.empty() ? "not liftable" : "liftable") << '\n';
        for (const auto& psi : reps) out_ << "  x -> " << to_string(psi.m) << "x + " << to_string(psi.t) << '\n';
    }

    void vme() {
        NetMapPresentation p = presentation();
        if (c_.slopes_path.empty()) throw Error(ErrorKind::usage, "vme: --slopes is required");
        SlopeOracle oracle = parse_slope_oracle(read_file(c_.slopes_path));
        ModularElement e{matrix_option(), translation_option()};
        auto values = virtual_multiendomorphism(p, e, oracle);
        if (json_out()) {
            json list = json::array();
            for (const auto& v : values)
                list.push_back({{"linear", to_json(v.q)},
                                {"translation", to_json(v.tau)},
                                {"action", teichmuller_action({v.q, v.tau}).to_string()}});
            return emit({{"values", list}});
        }
        for (const auto& v : values)
            out_ << "linear part " << to_string(v.q) << " translation " << to_string(v.tau) << "  "
                 << teichmuller_action({v.q, v.tau}).to_string() << '\n';
    }

    void portrait() {
        PresentationPortrait pp = portrait_from_presentation(presentation());
        if (c_.format == OutputFormat::json) {
            out_ << serialize_portrait_json(pp.portrait);
            return;
        }
        if (c_.format == OutputFormat::dot) {
            out_ << portrait_to_dot(pp.portrait);
            return;
        }
        out_ << "phi:\n";
        for (const auto& [from, to] : pp.phi) out_ << "  " << from << " -> " << to << '\n';
        out_ << "portrait:\n";
        for (const auto& v : pp.portrait.vertices) out_ << "  " << v.id << " -> " << v.to << " w=" << v.weight << '\n';
        for (const auto& x : pp.portrait.extra_critical)
            out_ << "  " << x.count << " critical -> " << x.to << " w=2\n";
        out_ << "adjoined critical: " << pp.adjoined_critical << '\n';
    }

    void from_portrait() {
        auto [m, n] = divisors_option();
        NetMapPresentation p = presentation_from_portrait(compact(portrait_file()), m, n, c_.policy);
        if (json_out()) return emit(to_json(p));
        out_ << serialize_presentation(p);
    }

    void realizable() {
        CompactPortrait g = compact(portrait_file());
        Mod2Divisors md = mod2_divisors(g);
        BranchData bd = branch_data(g);
        bool exceptional = exceptional_ok(g);
        std::optional<bool> with;
        if (c_.m || c_.n) {
            auto [m, n] = divisors_option();
            with = realizable_with(g, m, n);
        }
        if (json_out()) {
            json j{{"degree", g.degree},
                   {"mod2_divisors", json::array({md.m, md.n})},
                   {"exceptional_ok", exceptional},
                   {"branch_data", bd.partitions},
                   {"branch_data_realizable", branch_data_realizable(bd)}};
            if (with) j["realizable_with"] = *with;
            return emit(j);
        }
        out_ << "degree: " << g.degree << "\nmod-2 divisors: (" << md.m << ',' << md.n << ")\nexceptional condition: "
             << (exceptional ? "ok" : "violated") << "\nbranch data:";
        for (const auto& part : bd.partitions) out_ << ' ' << partition_string(part);
        out_ << "\nbranch data realizable: " << (branch_data_realizable(bd) ? "true" : "false") << '\n';
        if (with) out_ << "realizable with (" << *c_.m << ',' << *c_.n << "): " << (*with ? "true" : "false") << '\n';
    }

    void count_portraits() {
        int d = degree_option();
        if (d < 2) throw Error(ErrorKind::domain, "degree must be at least 2");
        std::size_t count = enumerate_portraits(d, c_.workers).size();
        if (json_out()) return emit({{"degree", d}, {"count", count}});
        out_ << count << '\n';
    }

    void index_bound() {
        if (!c_.degree || *c_.degree < 1) throw Error(ErrorKind::usage, "index-bound: --degree must be positive");
        Int bound = liftable_index_bound(*c_.degree);
        if (json_out()) return emit({{"degree", *c_.degree}, {"bound", bound}});
        out_ << bound << '\n';
    }
};

}  // namespace

void run(const RunConfig& config, std::ostream& out) { Runner(config, out).run(); }

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact computations for NET maps", "netmap"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--workers", cfg.workers, "Worker threads for enumerations")->check(CLI::PositiveNumber);
    app.add_flag("--allow-large-degree", cfg.allow_large, "Lift the enumeration degree cap");

    auto files = [&](CLI::App* sub, const std::string& what, bool required = true) {
        auto* opt = sub->add_option("inputs", cfg.inputs, what);
        if (required) opt->required();
    };
    auto matrix = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--matrix", cfg.matrix, "Matrix entries a b c d of [[a,b],[c,d]]")->expected(4);
        opt->allow_extra_args(false);
        if (required) opt->required();
    };
    auto translation = [&](CLI::App* sub) {
        sub->add_option("--translation", cfg.translation, "Translation x y")->expected(2);
    };
    auto degree = [&](CLI::App* sub) { sub->add_option("--degree", cfg.degree, "Degree")->required(); };
    auto divisors = [&](CLI::App* sub, bool required) {
        auto* m = sub->add_option("--m", cfg.m, "First elementary divisor");
        auto* n = sub->add_option("--n", cfg.n, "Second elementary divisor");
        if (required) {
            m->required();
            n->required();
        }
    };

    auto* ed = app.add_subcommand("ed", "Elementary divisors of a presentation or matrix");
    files(ed, "Presentation file", false);
    matrix(ed, false);
    auto* snf = app.add_subcommand("snf", "Smith normal form Q D R");
    files(snf, "Presentation file", false);
    matrix(snf, false);
    files(app.add_subcommand("hurwitz-invariant", "Canonical Hurwitz invariant"), "Presentation file");
    auto* heq = app.add_subcommand("hurwitz-equal", "Compare two presentations up to Hurwitz equivalence");
    heq->add_option("inputs", cfg.inputs, "Two presentation files")->required()->expected(2);
    divisors(app.add_subcommand("enumerate-hurwitz", "List Hurwitz classes for given divisors"), true);
    degree(app.add_subcommand("count-hurwitz", "Count Hurwitz classes of a degree"));
    files(app.add_subcommand("deck", "Deck group of a presentation"), "Presentation file");
    auto* lift = app.add_subcommand("liftable", "Liftability of a modular group element");
    files(lift, "Presentation file");
    matrix(lift, true);
    translation(lift);
    lift->add_flag("--pure", cfg.pure, "Use the pure modular group test");
    auto* vme = app.add_subcommand("vme", "Virtual multi-endomorphism value");
    files(vme, "Presentation file");
    matrix(vme, true);
    translation(vme);
    vme->add_option("--slopes", cfg.slopes_path, "Slope oracle file")->required();
    files(app.add_subcommand("portrait", "Dynamic portrait of a presentation"), "Presentation file");
    auto* fp = app.add_subcommand("from-portrait", "Presentation realizing a portrait");
    files(fp, "Portrait JSON file");
    divisors(fp, true);
    bool alternative_choices = false;
    fp->add_flag("--paper-choices", alternative_choices, "Use the alternative corner ordering");
    auto* real = app.add_subcommand("realizable", "Realizability data of a portrait");
    files(real, "Portrait JSON file");
    divisors(real, false);
    degree(app.add_subcommand("count-portraits", "Count portraits of a degree"));
    degree(app.add_subcommand("index-bound", "Index bound of the liftable subgroup"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error[" << kind_name(ErrorKind::usage) << "]: " << e.what() << '\n';
        return exit_code(ErrorKind::usage);
    }
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format == "json" ? OutputFormat::json : format == "dot" ? OutputFormat::dot : OutputFormat::text;
    cfg.policy = alternative_choices ? ChoicePolicy::alternative : ChoicePolicy::standard;

    try {
        std::ostringstream buffer;
        run(cfg, buffer);
        out << buffer.str();
        return 0;
    } catch (const Error& e) {
        err << "error[" << kind_name(e.kind()) << "]: " << e.what() << '\n';
        return exit_code(e.kind());
    }
}

}  // namespace netmap

#include "gmetric/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmetric/align.hpp"
#include "gmetric/axioms.hpp"
#include "gmetric/catalog.hpp"
#include "gmetric/derive.hpp"
#include "gmetric/fixedpoint.hpp"
#include "gmetric/maps.hpp"
#include "gmetric/sequences.hpp"
#include "gmetric/space_json.hpp"
#include "gmetric/topology.hpp"

namespace gmetric {

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

std::string kind_display(const MetricKind& k) {
    switch (k.family) {
    case Family::Metric: return "metric";
    case Family::PartialMetric: return "partial metric";
    case Family::StrongPartialMetric: return "strong partial metric";
    case Family::NMetric: return std::to_string(k.arity) + "-Metric";
    case Family::PartialNMetric:
        return "partial " + std::to_string(k.arity) + "-Metric";
    case Family::StrongPartialNMetric:
        return "strong partial " + std::to_string(k.arity) + "-Metric";
    }
    return "metric";
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

json witness_json(const AxiomWitness& w) {
    json j{{"tuple", w.tuple}, {"margin", w.margin}};
    if (w.pivot)
        j["pivot"] = *w.pivot;
    return j;
}

json report_json(const FiniteSpace& space, const AxiomReport& report, double tol) {
    json axioms = json::array();
    for (const auto& e : report.entries) {
        json a{{"id", e.id},
               {"holds", e.holds},
               {"representational", e.representational},
               {"derived", e.derived}};
        if (e.witness)
            a["witness"] = witness_json(*e.witness);
        axioms.push_back(a);
    }
    return json{{"kind", family_name(space.kind().family)},
                {"arity", space.arity()},
                {"elements", space.elements()},
                {"tolerance", tol},
                {"axioms", axioms},
                {"overall", report.overall}};
}

void print_report(std::ostream& out, const FiniteSpace& space,
                  const AxiomReport& report) {
    for (const auto& e : report.entries) {
        out << "  " << e.id << (e.holds ? "  pass" : "  FAIL");
        if (e.representational)
            out << " (representational)";
        if (e.derived)
            out << " (derived)";
        if (e.witness) {
            out << "  witness (";
            for (std::size_t i = 0; i < e.witness->tuple.size(); ++i)
                out << (i ? "," : "") << e.witness->tuple[i];
            if (e.witness->pivot)
                out << " | pivot " << *e.witness->pivot;
            out << "), violation " << e.witness->margin;
        }
        out << "\n";
    }
    if (report.overall)
        out << "all axioms pass (" << kind_display(space.kind()) << ")\n";
    else
        out << "axiom failures detected (" << kind_display(space.kind()) << ")\n";
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item);
    return out;
}

FiniteSpace space_from_flags(const std::string& path) {
    if (path.empty())
        throw CLI::ValidationError("--space", "a space file is required");
    return load_space(path);
}

void write_or_print(std::ostream& out, const json& doc, const std::string& path) {
    if (path.empty()) {
        emit_json(out, doc);
    } else {
        std::ofstream f(path);
        if (!f)
            throw std::runtime_error("cannot write: " + path);
        f << doc.dump(2) << "\n";
    }
}

json solve_json(const SolveResult& r) {
    json points = json::array();
    for (const auto& p : r.points)
        points.push_back(p.str());
    return json{{"status", status_name(r.status)},
                {"points", points},
                {"residuals", r.residuals},
                {"iterations", r.iterations},
                {"checks", r.checks},
                {"assumed", r.assumed},
                {"reason", r.reason}};
}

void print_solve(std::ostream& out, const SolveResult& r) {
    out << "status: " << status_name(r.status) << "\n";
    if (!r.points.empty()) {
        out << "point(s):";
        for (const auto& p : r.points)
            out << " " << p.str();
        out << "\n";
    }
    out << "iterations: " << r.iterations << "\n";
    for (const auto& [name, ok] : r.checks)
        out << "  check " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    for (const auto& [name, v] : r.residuals)
        out << "  residual " << name << ": " << v << "\n";
    for (const auto& a : r.assumed)
        out << "  assumed: " << a << "\n";
    if (!r.reason.empty())
        out << "reason: " << r.reason << "\n";
}

// Sequence input: JSON array file of point labels, or a generator.
std::vector<Point> sequence_points(const std::string& seq_path,
                                   const std::string& generator, double ratio,
                                   double value, double value2, int count,
                                   bool labels_only) {
    std::vector<Point> pts;
    if (!seq_path.empty()) {
        std::ifstream in(seq_path);
        if (!in)
            throw std::runtime_error("cannot open sequence file: " + seq_path);
        json doc = json::parse(in);
        if (!doc.is_array())
            throw std::runtime_error("sequence file must hold a JSON array");
        for (const auto& item : doc) {
            const std::string s =
                item.is_string() ? item.get<std::string>() : item.dump();
            pts.push_back(labels_only ? Point(s) : Point::parse(s));
        }
        return pts;
    }
    if (count < 1)
        throw CLI::ValidationError("--count", "need a positive count");
    if (generator == "geometric") {
        double x = 1.0;
        for (int i = 1; i <= count; ++i) {
            x *= ratio;
            pts.push_back(Point(x));
        }
    } else if (generator == "constant") {
        pts.assign((std::size_t)count, Point(value));
    } else if (generator == "alternating") {
        for (int i = 0; i < count; ++i)
            pts.push_back(Point(i % 2 ? value2 : value));
    } else {
        throw CLI::ValidationError("--generator",
                                   "unknown generator '" + generator + "'");
    }
    return pts;
}

int run_catalog(std::ostream& out, bool as_json, const std::string& emit,
                const std::vector<double>& points, int arity, int count, double lo,
                double hi, int grid, const std::string& out_path) {
    if (!emit.empty()) {
        CatalogSpec spec;
        spec.name = catalog_name_from_string(emit);
        spec.arity = arity;
        spec.count = count;
        spec.points = points;
        FiniteSpace space = grid > 0 ? sample_real_space(spec.name, lo, hi, grid, arity)
                                     : build_space(spec);
        write_or_print(out, space_to_json(space), out_path);
        return kExitPass;
    }
    json entries = json::array();
    for (const auto& info : catalog_list())
        entries.push_back({{"name", info.name}, {"params", info.params},
                           {"kind", info.kind}});
    for (const auto& info : map_list())
        entries.push_back({{"name", info.name}, {"params", info.params},
                           {"kind", "map"}});
    if (as_json) {
        emit_json(out, entries);
        return kExitPass;
    }
    out << "spaces:\n";
    for (const auto& info : catalog_list())
        out << "  " << std::left << std::setw(24) << info.name << " kind "
            << info.kind << "; params: " << info.params << "\n";
    out << "maps:\n";
    for (const auto& info : map_list())
        out << "  " << std::left << std::setw(24) << info.name << " "
            << info.description
            << (info.params.empty() ? "" : "; params: " + info.params) << "\n";
    return kExitPass;
}

struct SolveCliArgs {
    std::string problem = "fixed";
    std::string map1 = "identity", map2, selector;
    double p1 = 0, p2 = 0, q1 = 0, q2 = 0, s1 = 0, s2 = 0;
    std::string eval1 = "abs_metric", eval2;
    int arity = 2;
    double eval_param = 0;
    std::string x0, y0;
    double c = 0.5, r = 0, A = 0;
    bool r_given = false;
    std::string route = "";
    std::string config;
};

void load_solve_config(SolveCliArgs& a) {
    std::ifstream in(a.config);
    if (!in)
        throw std::runtime_error("cannot open config: " + a.config);
    json doc = json::parse(in);
    auto get = [&](const char* key, auto& slot) {
        if (doc.contains(key))
            slot = doc.at(key).get<std::decay_t<decltype(slot)>>();
    };
    get("problem", a.problem);
    auto get_point = [&](const char* key, std::string& slot) {
        if (!doc.contains(key))
            return;
        const auto& v = doc.at(key);
        slot = v.is_string() ? v.get<std::string>() : v.dump();
    };
    if (doc.contains("map")) {
        a.map1 = doc["map"].value("name", a.map1);
        a.p1 = doc["map"].value("p1", a.p1);
        a.p2 = doc["map"].value("p2", a.p2);
    }
    if (doc.contains("map2")) {
        a.map2 = doc["map2"].value("name", a.map2);
        a.q1 = doc["map2"].value("p1", a.q1);
        a.q2 = doc["map2"].value("p2", a.q2);
    }
    if (doc.contains("selector")) {
        a.selector = doc["selector"].value("name", a.selector);
        a.s1 = doc["selector"].value("p1", a.s1);
        a.s2 = doc["selector"].value("p2", a.s2);
    }
    if (doc.contains("eval")) {
        a.eval1 = doc["eval"].value("name", a.eval1);
        a.arity = doc["eval"].value("arity", a.arity);
        a.eval_param = doc["eval"].value("param", a.eval_param);
    }
    if (doc.contains("eval2"))
        a.eval2 = doc["eval2"].value("name", a.eval2);
    get_point("x0", a.x0);
    get_point("y0", a.y0);
    get("c", a.c);
    if (doc.contains("r")) {
        a.r = doc["r"].get<double>();
        a.r_given = true;
    }
    get("A", a.A);
    get("route", a.route);
}

int run_solve(std::ostream& out, const SolveCliArgs& args_in, double tol, int window,
              int max_iter, bool as_json) {
    SolveCliArgs a = args_in;
    if (!a.config.empty())
        load_solve_config(a);
    if (a.x0.empty())
        throw CLI::ValidationError("--x0", "a start point is required");

    SolveOptions opts;
    opts.max_iter = max_iter;
    opts.tol = Tolerance(tol);
    opts.window = window;
    if (a.route.empty())
        a.route = a.problem == "coincidence" ? "strong" : "partial";
    if (a.route != "strong" && a.route != "partial")
        throw CLI::ValidationError("--route", "unknown route '" + a.route + "'");
    opts.route = a.route == "strong" ? Route::strong_partial : Route::partial;

    const auto eval = evaluator_by_name(a.eval1, a.arity, a.eval_param);
    const MapSpec f = map_by_name(a.map1, a.p1, a.p2);
    const Point x0 = Point::parse(a.x0);

    SolveResult result;
    if (a.problem == "fixed") {
        result = find_fixed_point(f, x0, *eval, opts);
    } else if (a.problem == "common") {
        if (a.map2.empty())
            throw CLI::ValidationError("--map2", "common needs a second map");
        const MapSpec g = map_by_name(a.map2, a.q1, a.q2);
        const Point y0 = Point::parse(a.y0.empty() ? a.x0 : a.y0);
        result = find_common_fixed_point(f, g, x0, y0, *eval, opts);
    } else if (a.problem == "coincidence") {
        if (a.map2.empty() || a.selector.empty())
            throw CLI::ValidationError("--map2/--selector",
                                       "coincidence needs a second map and a selector");
        const MapSpec g = map_by_name(a.map2, a.q1, a.q2);
        const MapSpec sel = map_by_name(a.selector, a.s1, a.s2);
        const auto eval2 = a.eval2.empty()
                               ? eval
                               : evaluator_by_name(a.eval2, a.arity, a.eval_param);
        ContractionSpec spec;
        spec.mode = ContractionMode::mutual_c;
        spec.c = a.c;
        spec.r = a.r;
        spec.r_supplied = a.r_given;
        spec.A = a.A;
        result = find_coincidence_point(f, g, sel, *eval, *eval2, x0, spec, opts);
    } else {
        throw CLI::ValidationError("--problem", "unknown problem '" + a.problem + "'");
    }

    if (as_json)
        emit_json(out, solve_json(result));
    else
        print_solve(out, result);
    return result.status == SolveStatus::no_certificate ? kExitNegative : kExitPass;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"generalized metric structures: verification, construction, "
                 "alignment scoring, finite topology, sequences and solvers"};
    app.require_subcommand(1);

    double tol = 1e-9;
    bool as_json = false;
    int window = 0;
    int max_iter = 60;
    app.add_option("--tol", tol, "absolute tolerance for every numeric verdict");
    app.add_flag("--json", as_json, "emit one JSON document instead of text");
    app.add_option("--window", window, "tail window (0: last third, min 5)");
    app.add_option("--max-iter", max_iter, "iteration budget for solvers");
    app.fallthrough();

    // check
    auto* cmd_check = app.add_subcommand("check", "verify the axioms of a space file");
    std::string check_space;
    cmd_check->add_option("--space", check_space, "space JSON file")->required();

    // derive
    auto* cmd_derive =
        app.add_subcommand("derive", "constructions: induce, lift, shift, margin");
    std::string derive_space, derive_op, derive_out, margin_xs, margin_ys;
    int lift_n = 3, margin_t = 1;
    double shift_r = 0;
    cmd_derive->add_option("--space", derive_space, "space JSON file")->required();
    cmd_derive->add_option("--op", derive_op, "induce | lift | shift | margin")
        ->required();
    cmd_derive->add_option("--n", lift_n, "target arity for lift");
    cmd_derive->add_option("--r", shift_r, "shift constant");
    cmd_derive->add_option("--out", derive_out, "write the derived space here");
    cmd_derive->add_option("--xs", margin_xs, "margin: comma-separated tuple");
    cmd_derive->add_option("--ys", margin_ys, "margin: comma-separated tuple");
    cmd_derive->add_option("--t", margin_t, "margin: replacement count");

    // align
    auto* cmd_align = app.add_subcommand("align", "scoring-scheme operations");
    std::string align_scheme, words_file, space_out;
    std::vector<std::string> align_words;
    bool do_validate = false;
    int align_arity = 2;
    cmd_align->add_option("--scheme", align_scheme, "scheme JSON file")->required();
    cmd_align->add_option("words", align_words, "words to score");
    cmd_align->add_option("--words-file", words_file, "one word per line");
    cmd_align->add_flag("--validate", do_validate, "only validate the scheme");
    cmd_align->add_option("--arity", align_arity, "tuple size for --space-out");
    cmd_align->add_option("--space-out", space_out,
                          "write the word space as a space file");

    // topology
    auto* cmd_topo =
        app.add_subcommand("topology", "open sets and separation report");
    std::string topo_space, topo_ball, topo_closure;
    double topo_eps = 0;
    bool topo_gilded = false;
    cmd_topo->add_option("--space", topo_space, "space JSON file")->required();
    cmd_topo->add_option("--ball", topo_ball, "center element; prints one ball");
    cmd_topo->add_option("--eps", topo_eps, "ball radius");
    cmd_topo->add_flag("--gilded", topo_gilded, "non-strict ball");
    cmd_topo->add_option("--closure", topo_closure,
                         "comma-separated subset; prints its closure");

    // sequence
    auto* cmd_seq = app.add_subcommand("sequence", "Cauchy / limit verdicts");
    std::string seq_space, seq_eval, seq_file, seq_file2, seq_gen = "geometric";
    std::string seq_op = "cauchy", seq_candidate;
    int seq_arity = 2, seq_count = 30;
    double seq_ratio = 0.5, seq_value = 0, seq_value2 = 1, seq_param = 0;
    cmd_seq->add_option("--space", seq_space, "finite space JSON file");
    cmd_seq->add_option("--eval", seq_eval, "closed-form carrier name");
    cmd_seq->add_option("--arity", seq_arity, "carrier arity");
    cmd_seq->add_option("--param", seq_param, "carrier parameter");
    cmd_seq->add_option("--seq", seq_file, "JSON array of point labels");
    cmd_seq->add_option("--seq2", seq_file2, "second sequence (pair verdicts)");
    cmd_seq->add_option("--generator", seq_gen, "geometric | constant | alternating");
    cmd_seq->add_option("--ratio", seq_ratio, "geometric ratio");
    cmd_seq->add_option("--value", seq_value, "constant/alternating value");
    cmd_seq->add_option("--value2", seq_value2, "alternating second value");
    cmd_seq->add_option("--count", seq_count, "generated prefix length");
    cmd_seq->add_option("--op", seq_op, "cauchy | limit | special | pair");
    cmd_seq->add_option("--candidate", seq_candidate, "limit candidate point");

    // solve
    auto* cmd_solve = app.add_subcommand("solve", "fixed/common/coincidence points");
    SolveCliArgs sa;
    cmd_solve->add_option("--problem", sa.problem, "fixed | common | coincidence");
    cmd_solve->add_option("--map", sa.map1, "map name");
    cmd_solve->add_option("--p1", sa.p1, "map parameter 1");
    cmd_solve->add_option("--p2", sa.p2, "map parameter 2");
    cmd_solve->add_option("--map2", sa.map2, "second map name");
    cmd_solve->add_option("--q1", sa.q1, "second map parameter 1");
    cmd_solve->add_option("--q2", sa.q2, "second map parameter 2");
    cmd_solve->add_option("--selector", sa.selector, "coincidence step selector");
    cmd_solve->add_option("--s1", sa.s1, "selector parameter 1");
    cmd_solve->add_option("--s2", sa.s2, "selector parameter 2");
    cmd_solve->add_option("--eval", sa.eval1, "carrier name");
    cmd_solve->add_option("--arity", sa.arity, "carrier arity");
    cmd_solve->add_option("--param", sa.eval_param, "carrier parameter");
    cmd_solve->add_option("--eval2", sa.eval2, "codomain carrier (coincidence)");
    cmd_solve->add_option("--x0", sa.x0, "start point");
    cmd_solve->add_option("--y0", sa.y0, "second start point");
    auto* copt = cmd_solve->add_option("--c", sa.c, "contraction constant");
    auto* ropt = cmd_solve->add_option("--r", sa.r, "target central distance");
    cmd_solve->add_option("--A", sa.A, "mutual-mode constant");
    cmd_solve->add_option("--route", sa.route, "partial | strong");
    cmd_solve->add_option("--config", sa.config, "JSON configuration file");
    (void)copt;

    // catalog
    auto* cmd_catalog =
        app.add_subcommand("catalog", "list or emit the built-in spaces and maps");
    std::string emit_name, catalog_out;
    std::vector<std::string> emit_points;
    int cat_arity = 3, cat_count = 3, cat_grid = 0;
    double cat_lo = 0, cat_hi = 1;
    cmd_catalog->add_option("--emit", emit_name, "space to materialize");
    cmd_catalog->add_option("--points", emit_points, "comma-separated sample points");
    cmd_catalog->add_option("--arity", cat_arity, "arity for the n-ary families");
    cmd_catalog->add_option("--count", cat_count, "element count");
    cmd_catalog->add_option("--grid", cat_grid, "sample a grid of this many points");
    cmd_catalog->add_option("--lo", cat_lo, "grid lower end");
    cmd_catalog->add_option("--hi", cat_hi, "grid upper end");
    cmd_catalog->add_option("--out", catalog_out, "write the space here");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const Tolerance tolerance(tol);

        if (cmd_check->parsed()) {
            const FiniteSpace space = space_from_flags(check_space);
            const AxiomReport report = check_axioms(space, tolerance);
            if (as_json)
                emit_json(out, report_json(space, report, tol));
            else
                print_report(out, space, report);
            return report.overall ? kExitPass : kExitNegative;
        }

        if (cmd_derive->parsed()) {
            const FiniteSpace space = space_from_flags(derive_space);
            if (derive_op == "induce") {
                write_or_print(out, space_to_json(induce_metric(space)), derive_out);
            } else if (derive_op == "lift") {
                write_or_print(out, space_to_json(lift_to_n(space, lift_n)),
                               derive_out);
            } else if (derive_op == "shift") {
                write_or_print(out, space_to_json(shift_by_constant(space, shift_r)),
                               derive_out);
            } else if (derive_op == "margin") {
                auto to_indices = [&](const std::string& csv) {
                    std::vector<int> idx;
                    for (const auto& l : split_commas(csv))
                        idx.push_back(space.require_index(l));
                    return idx;
                };
                const auto xs = to_indices(margin_xs), ys = to_indices(margin_ys);
                const double margin =
                    term_replacement_margin(space, xs, ys, margin_t);
                if (as_json)
                    emit_json(out, json{{"margin", margin}});
                else
                    out << "margin: " << margin << "\n";
                return margin >= -tol ? kExitPass : kExitNegative;
            } else {
                throw CLI::ValidationError("--op", "unknown op '" + derive_op + "'");
            }
            return kExitPass;
        }

        if (cmd_align->parsed()) {
            const ScoringScheme scheme = load_scheme(align_scheme);
            const SchemeVerdict verdict = validate_scheme(scheme);
            if (do_validate) {
                if (as_json)
                    emit_json(out, json{{"valid", verdict.valid},
                                        {"violations", verdict.violations}});
                else if (verdict.valid)
                    out << "scheme valid\n";
                else {
                    out << "scheme invalid:\n";
                    for (const auto& v : verdict.violations)
                        out << "  violated: " << v << "\n";
                }
                return verdict.valid ? kExitPass : kExitNegative;
            }

            std::vector<std::string> words = align_words;
            if (!words_file.empty()) {
                std::ifstream in(words_file);
                if (!in)
                    throw std::runtime_error("cannot open words file: " + words_file);
                std::string line;
                while (std::getline(in, line))
                    if (!line.empty())
                        words.push_back(line);
            }
            if (!verdict.valid)
                err << "warning: scheme fails validation; scores need not form a "
                       "strong partial metric\n";

            if (!space_out.empty()) {
                const FiniteSpace space =
                    space_from_words(words, scheme, align_arity);
                write_or_print(out, space_to_json(space), space_out);
                return kExitPass;
            }
            if (words.size() == 2) {
                const AlignmentResult res =
                    best_alignment(words[0], words[1], scheme);
                if (as_json) {
                    emit_json(out, json{{"score", res.score},
                                        {"aligned_x", res.aligned_x},
                                        {"aligned_y", res.aligned_y},
                                        {"column_scores", res.column_scores}});
                } else {
                    out << "score " << res.score << "\n"
                        << res.aligned_x << "\n"
                        << res.aligned_y << "\n";
                    out << "columns:";
                    for (double c : res.column_scores)
                        out << " " << c;
                    out << "\n";
                }
                return kExitPass;
            }
            if (words.size() > 2) {
                const double total = multi_score(words, scheme);
                if (as_json)
                    emit_json(out, json{{"score", total}, {"words", words}});
                else
                    out << "score " << total << " over " << words.size()
                        << " words\n";
                return kExitPass;
            }
            throw CLI::ValidationError("words", "need at least two words");
        }

        if (cmd_topo->parsed()) {
            const FiniteSpace space = space_from_flags(topo_space);
            if (!topo_ball.empty()) {
                const auto mask = ball(space, topo_ball, topo_eps, topo_gilded);
                const auto labels = subset_labels(space, mask);
                if (as_json)
                    emit_json(out, json{{"ball", labels}});
                else {
                    out << (topo_gilded ? "gilded ball:" : "open ball:");
                    for (const auto& l : labels)
                        out << " " << l;
                    out << "\n";
                }
                return kExitPass;
            }
            if (!topo_closure.empty()) {
                const auto subset =
                    subset_from_labels(space, split_commas(topo_closure));
                const auto labels = subset_labels(space, closure_of(space, subset));
                if (as_json)
                    emit_json(out, json{{"closure", labels}});
                else {
                    out << "closure:";
                    for (const auto& l : labels)
                        out << " " << l;
                    out << "\n";
                }
                return kExitPass;
            }
            const TopologyReport rep = generate_topology(space);
            if (as_json) {
                json opens = json::array();
                for (auto mask : rep.open_sets)
                    opens.push_back(subset_labels(space, mask));
                auto pairs = [](const auto& w) {
                    json a = json::array();
                    for (const auto& [x, y] : w)
                        a.push_back({x, y});
                    return a;
                };
                emit_json(out, json{{"open_sets", opens},
                                    {"t0", rep.t0},
                                    {"t1", rep.t1},
                                    {"t2", rep.t2},
                                    {"t0_witnesses", pairs(rep.t0_witnesses)},
                                    {"t1_witnesses", pairs(rep.t1_witnesses)},
                                    {"t2_witnesses", pairs(rep.t2_witnesses)}});
            } else {
                out << "open sets (" << rep.open_sets.size() << "):\n";
                for (auto mask : rep.open_sets) {
                    out << "  {";
                    const auto labels = subset_labels(space, mask);
                    for (std::size_t i = 0; i < labels.size(); ++i)
                        out << (i ? ", " : "") << labels[i];
                    out << "}\n";
                }
                auto sep_line = [&](const char* name, bool v, const auto& wit) {
                    out << name << ": " << (v ? "true" : "false");
                    if (!v && !wit.empty())
                        out << "  witness (" << wit.front().first << ", "
                            << wit.front().second << ")";
                    out << "\n";
                };
                sep_line("T0", rep.t0, rep.t0_witnesses);
                sep_line("T1", rep.t1, rep.t1_witnesses);
                sep_line("T2", rep.t2, rep.t2_witnesses);
            }
            return kExitPass;
        }

        if (cmd_seq->parsed()) {
            EvaluatorPtr eval;
            bool labels_only = false;
            if (!seq_space.empty()) {
                eval = make_space_evaluator(load_space(seq_space));
                labels_only = true;
            } else if (!seq_eval.empty()) {
                eval = evaluator_by_name(seq_eval, seq_arity, seq_param);
            } else {
                throw CLI::ValidationError("--space/--eval",
                                           "a carrier is required");
            }
            const auto pts = sequence_points(seq_file, seq_gen, seq_ratio, seq_value,
                                             seq_value2, seq_count, labels_only);
            const int w = window > 0 ? window : default_window(pts.size());

            if (seq_op == "cauchy") {
                const auto v = classify_cauchy(*eval, pts, tolerance, w);
                if (as_json)
                    emit_json(out, json{{"is_cauchy", v.is_cauchy},
                                        {"central_distance", v.central_distance},
                                        {"max_tail_deviation", v.max_tail_deviation},
                                        {"window", v.window}});
                else
                    out << (v.is_cauchy ? "Cauchy" : "not Cauchy")
                        << ", central distance " << v.central_distance
                        << ", max tail deviation " << v.max_tail_deviation
                        << " (window " << v.window << "; numerical evidence, "
                        << "not proof)\n";
                return v.is_cauchy ? kExitPass : kExitNegative;
            }
            if (seq_op == "limit" || seq_op == "special") {
                if (seq_candidate.empty())
                    throw CLI::ValidationError("--candidate",
                                               "a candidate point is required");
                const Point cand = labels_only ? Point(seq_candidate)
                                               : Point::parse(seq_candidate);
                const bool ok =
                    seq_op == "limit"
                        ? check_limit(*eval, pts, cand, tolerance, w)
                        : check_special_limit(*eval, pts, cand, tolerance, w);
                if (as_json)
                    emit_json(out, json{{"holds", ok}, {"candidate", cand.str()}});
                else
                    out << (seq_op == "limit" ? "limit " : "special limit ")
                        << cand.str() << ": " << (ok ? "pass" : "FAIL")
                        << " (tail window evidence)\n";
                return ok ? kExitPass : kExitNegative;
            }
            if (seq_op == "pair") {
                if (seq_file2.empty())
                    throw CLI::ValidationError("--seq2",
                                               "pair verdicts need two sequences");
                const auto pts2 = sequence_points(seq_file2, "", 0, 0, 0, 0,
                                                  labels_only);
                const auto v = check_cauchy_pair(*eval, pts, pts2, tolerance, w);
                if (as_json)
                    emit_json(out, json{{"is_cauchy", v.is_cauchy},
                                        {"central_distance", v.central_distance},
                                        {"max_tail_deviation", v.max_tail_deviation},
                                        {"window", v.window}});
                else
                    out << (v.is_cauchy ? "Cauchy pair" : "not a Cauchy pair")
                        << ", central distance " << v.central_distance << "\n";
                return v.is_cauchy ? kExitPass : kExitNegative;
            }
            throw CLI::ValidationError("--op", "unknown op '" + seq_op + "'");
        }

        if (cmd_solve->parsed()) {
            sa.r_given = ropt->count() > 0;
            return run_solve(out, sa, tol, window, max_iter, as_json);
        }

        if (cmd_catalog->parsed()) {
            std::vector<double> pts;
            for (const auto& chunk : emit_points)
                for (const auto& item : split_commas(chunk))
                    pts.push_back(std::stod(item));
            return run_catalog(out, as_json, emit_name, pts, cat_arity, cat_count,
                               cat_lo, cat_hi, cat_grid, catalog_out);
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

} // namespace gmetric

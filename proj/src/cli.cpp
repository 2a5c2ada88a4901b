#include "rph/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "format.hpp"
#include "rph/bottleneck.hpp"
#include "rph/error.hpp"
#include "rph/experiments.hpp"
#include "rph/io.hpp"
#include "rph/pdb.hpp"
#include "rph/rips.hpp"
#include "rph/rips_persistence.hpp"
#include "rph/selection.hpp"
#include "rph/synth.hpp"
#include "rph/trimming.hpp"

namespace rph {

namespace {

// Writes through `body` to `path`, or to `fallback` when path is empty.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(fallback);
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError("cannot write '" + path + "'");
    body(f);
    if (!f) throw InputError("write to '" + path + "' failed");
}

void emit_json(const std::string& path, std::ostream& fallback, const nlohmann::json& j) {
    emit(path, fallback, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

// "0-19" or "1,5,9" or a mix: "0-3,10".
std::vector<std::uint64_t> parse_seeds(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const auto dash = item.find('-');
            if (dash == std::string::npos) {
                out.push_back(std::stoull(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            } else {
                const auto lo = std::stoull(item.substr(0, dash), &used);
                if (used != dash) throw std::invalid_argument(item);
                const auto hi = std::stoull(item.substr(dash + 1), &used);
                if (used != item.size() - dash - 1 || hi < lo) throw std::invalid_argument(item);
                for (auto v = lo; v <= hi; ++v) out.push_back(v);
            }
        } catch (const std::logic_error&) {
            throw InputError("bad seed list '" + s + "'");
        }
    }
    if (out.empty()) throw InputError("empty seed list");
    return out;
}

// "a1:a2,a1:a2"
std::vector<TrimSpec> parse_grid(const std::string& s) {
    std::vector<TrimSpec> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw InputError("grid entries are alpha1:alpha2, got '" + item + "'");
        try {
            std::size_t u1 = 0, u2 = 0;
            const std::string a = item.substr(0, colon), b = item.substr(colon + 1);
            TrimSpec t{std::stod(a, &u1), std::stod(b, &u2)};
            if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument(item);
            t.validate();
            out.push_back(t);
        } catch (const std::logic_error&) {
            throw InputError("bad grid entry '" + item + "'");
        }
    }
    if (out.empty()) throw InputError("empty trimming grid");
    return out;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoul(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw InputError("bad size list '" + s + "'");
        }
    }
    return out;
}

// --input points.csv or --distances matrix.csv
struct Source {
    std::string points, distances;

    void add(CLI::App* cmd) {
        auto* p = cmd->add_option("-i,--input", points, "Point CSV");
        auto* d = cmd->add_option("--distances", distances, "Distance-matrix CSV");
        p->excludes(d);
        d->excludes(p);
    }
    DistanceMatrix matrix() const {
        if (!points.empty()) return distance_matrix(load_points(points));
        if (!distances.empty()) return load_distances(distances);
        throw InputError("one of --input or --distances is required");
    }
};

std::optional<double> auto_or(double v) { return v > 0.0 ? std::optional<double>(v) : std::nullopt; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Robust persistent homology via trimming", "rph"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    // Deferred action of the chosen subcommand.
    std::function<void()> action;

    // trim
    auto* trim = app.add_subcommand("trim", "Trim by average pairwise distance; prints TrimResult JSON");
    Source trim_src;
    trim_src.add(trim);
    double t_a1 = 0.0, t_a2 = 0.0;
    bool t_one = false;
    std::string t_out, t_points;
    trim->add_option("--alpha1", t_a1, "Proportion trimmed from the top (largest averages)");
    trim->add_option("--alpha2", t_a2, "Proportion trimmed from the bottom (smallest averages)");
    trim->add_flag("--one-sided", t_one, "Trim only the top, by --alpha1 in [0, 1)");
    trim->add_option("-o,--out", t_out, "JSON output file");
    trim->add_option("--kept-points", t_points, "Also write the kept points as CSV (needs --input)");
    trim->callback([&] {
        action = [&] {
            const auto d = trim_src.matrix();
            if (t_one && t_a2 != 0.0) throw InputError("--one-sided takes only --alpha1");
            const auto r = t_one ? trim_one_sided(d, t_a1) : trim_asymmetric(d, {t_a1, t_a2});
            emit_json(t_out, out, to_json(r));
            if (!t_points.empty()) {
                if (trim_src.points.empty()) throw InputError("--kept-points needs --input");
                const auto kept = load_points(trim_src.points).subset(r.kept);
                emit(t_points, out, [&](std::ostream& os) { write_points_csv(os, kept); });
            }
        };
    });

    // rips
    auto* rips = app.add_subcommand("rips", "Dump the Rips filtration as 'value dim v0 v1 ...' lines");
    Source rips_src;
    rips_src.add(rips);
    std::size_t r_max_dim = 2, r_budget = kDefaultSimplexBudget;
    double r_thr = 0.0;
    std::string r_out;
    rips->add_option("--max-dim", r_max_dim, "Largest simplex dimension")->capture_default_str();
    rips->add_option("--threshold", r_thr, "Edge-length cap (default: enclosing radius)");
    rips->add_option("--budget", r_budget, "Simplex budget")->capture_default_str();
    rips->add_option("-o,--out", r_out, "Output file");
    rips->callback([&] {
        action = [&] {
            const auto f = rips_filtration(rips_src.matrix(), r_max_dim, auto_or(r_thr), r_budget);
            emit(r_out, out, [&](std::ostream& os) { write_filtration(os, f); });
            err << "simplices: " << f.simplices.size() << '\n';
        };
    });

    // ph
    auto* ph = app.add_subcommand("ph", "Persistence diagram of the (optionally trimmed) Rips filtration");
    Source ph_src;
    ph_src.add(ph);
    std::size_t p_max_dim = 2;
    std::optional<std::size_t> p_hom;
    double p_thr = 0.0, p_a1 = 0.0, p_a2 = 0.0;
    std::string p_engine = "implicit", p_format = "csv", p_out;
    ph->add_option("--max-dim", p_max_dim, "Largest Rips simplex dimension")->capture_default_str();
    ph->add_option("--hom-dim", p_hom, "Largest homology dimension (default: max-dim - 1)");
    ph->add_option("--threshold", p_thr, "Edge-length cap (default: enclosing radius)");
    ph->add_option("--alpha1", p_a1, "Trim this proportion of largest averages first");
    ph->add_option("--alpha2", p_a2, "Trim this proportion of smallest averages first");
    ph->add_option("--engine", p_engine, "implicit (cohomology) or explicit (boundary matrix)")
        ->check(CLI::IsMember({"implicit", "explicit"}))
        ->capture_default_str();
    ph->add_option("--format", p_format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    ph->add_option("-o,--out", p_out, "Output file");
    ph->callback([&] {
        action = [&] {
            if (p_max_dim < 1) throw InputError("--max-dim must be at least 1");
            const std::size_t hom = p_hom.value_or(p_max_dim - 1);
            if (p_max_dim < hom + 1) throw InputError("--max-dim must be at least --hom-dim + 1");
            auto d = ph_src.matrix();
            if (p_a1 != 0.0 || p_a2 != 0.0) d = d.subset(trim_asymmetric(d, {p_a1, p_a2}).kept);
            const auto dgm = p_engine == "explicit"
                                 ? persistent_homology(rips_filtration(d, p_max_dim, auto_or(p_thr)), hom)
                                 : rips_persistence(d, hom, auto_or(p_thr));
            if (p_format == "json") emit_json(p_out, out, to_json(dgm));
            else emit(p_out, out, [&](std::ostream& os) { write_diagram_csv(os, dgm); });
        };
    });

    // bottleneck
    auto* bn = app.add_subcommand("bottleneck", "Bottleneck distance between two diagram CSV files");
    std::string b_a, b_b;
    std::size_t b_dim = 1;
    bool b_json = false;
    bn->add_option("a", b_a, "First diagram CSV")->required();
    bn->add_option("b", b_b, "Second diagram CSV")->required();
    bn->add_option("--dim", b_dim, "Homology dimension")->capture_default_str();
    bn->add_flag("--json", b_json, "Print value and achieving matching as JSON");
    bn->callback([&] {
        action = [&] {
            const auto r = bottleneck(load_diagram(b_a), load_diagram(b_b), b_dim);
            if (b_json) out << to_json(r).dump(2) << '\n';
            else out << format_double(r.value) << '\n';
        };
    });

    // hausdorff
    auto* hd = app.add_subcommand("hausdorff", "Hausdorff distance between two point CSV files");
    std::string h_a, h_b;
    hd->add_option("a", h_a, "First point CSV")->required();
    hd->add_option("b", h_b, "Second point CSV")->required();
    hd->callback([&] { action = [&] { out << format_double(hausdorff(load_points(h_a), load_points(h_b))) << '\n'; }; });

    // select
    auto* sel = app.add_subcommand("select", "Data-driven choice of trimming proportions");
    std::string s_input, s_mode = "asym", s_out;
    SelectionConfig s_cfg;
    double s_thr = 0.0;
    sel->add_option("-i,--input", s_input, "Point CSV")->required();
    sel->add_option("--mode", s_mode, "asym or one")->check(CLI::IsMember({"asym", "one"}))->capture_default_str();
    sel->add_option("--alpha1", s_cfg.alpha1_init, "Initial top proportion (the single alpha in one-sided mode)");
    sel->add_option("--alpha2", s_cfg.alpha2_init, "Initial bottom proportion");
    sel->add_option("--step1", s_cfg.step1, "Decrement of alpha1")->capture_default_str();
    sel->add_option("--step2", s_cfg.step2, "Decrement of alpha2")->capture_default_str();
    sel->add_option("--tau-min", s_cfg.tau_min, "Persistence threshold (edge-length units)")->required();
    sel->add_option("--dim", s_cfg.hom_dim, "Homology dimension")->capture_default_str();
    sel->add_option("--max-iter", s_cfg.max_iter, "Iteration cap T")->capture_default_str();
    sel->add_option("--max-dim", s_cfg.max_dim, "Largest Rips simplex dimension")->capture_default_str();
    sel->add_option("--threshold", s_thr, "Edge-length cap (default: enclosing radius)");
    sel->add_option("-o,--out", s_out, "JSON output file");
    sel->callback([&] {
        action = [&] {
            s_cfg.rips_threshold = auto_or(s_thr);
            const auto cloud = load_points(s_input);
            if (s_mode == "one" && s_cfg.alpha2_init != 0.0) throw InputError("one-sided mode takes only --alpha1");
            const auto o = s_mode == "one" ? select_one_sided(cloud, s_cfg) : select_asymmetric(cloud, s_cfg);
            emit_json(s_out, out, to_json(o));
        };
    });

    // gen
    auto* gen = app.add_subcommand("gen", "Generate synthetic point clouds");
    gen->require_subcommand(1, 1);
    std::uint64_t g_seed = 0;
    std::size_t g_n = 100;
    std::string g_out, g_labels;
    auto gen_common = [&](CLI::App* c) {
        c->add_option("--seed", g_seed, "Random seed")->capture_default_str();
        c->add_option("-o,--out", g_out, "Point CSV output");
        c->add_option("--labels", g_labels, "Label sidecar CSV (0 = signal, k = cluster k)");
    };
    auto gen_emit = [&](const LabeledCloud& lc) {
        emit(g_out, out, [&](std::ostream& os) { write_points_csv(os, lc.cloud); });
        if (!g_labels.empty())
            emit(g_labels, out, [&](std::ostream& os) {
                os << "# label\n";
                for (auto l : lc.labels) os << l << '\n';
            });
    };
    auto* g1 = gen->add_subcommand("case1", "200 points: noisy circle plus five Gaussian clusters");
    gen_common(g1);
    g1->callback([&] { action = [&] { gen_emit(gen_mixture(case_study_1_spec(), g_seed)); }; });
    auto* g2 = gen->add_subcommand("case2", "400 points: noisy sphere plus nine Gaussian clusters");
    gen_common(g2);
    g2->callback([&] { action = [&] { gen_emit(gen_mixture(case_study_2_spec(), g_seed)); }; });
    auto* gc = gen->add_subcommand("circle", "Uniform sample of the unit circle");
    gen_common(gc);
    gc->add_option("--n", g_n, "Number of points")->capture_default_str();
    gc->callback([&] {
        action = [&] {
            const auto c = gen_uniform_circle(g_n, g_seed);
            gen_emit({c, std::vector<std::size_t>(c.size(), 0)});
        };
    });

    // exp
    auto* exp = app.add_subcommand("exp", "Run the case studies, convergence and stability experiments");
    exp->require_subcommand(1, 1);
    std::string e_seeds, e_grid, e_out, e_csv;
    auto exp_common = [&](CLI::App* c, const std::string& seeds, const std::string& grid) {
        c->add_option("--seeds", e_seeds, "Seed list, e.g. 0-19 or 1,4,9")->default_str(seeds);
        c->add_option("--grid", e_grid, "Trimming grid, e.g. 0.3:0.08,0.1:0.01")->default_str(grid);
        c->add_option("--out", e_out, "Report JSON file");
        c->add_option("--csv", e_csv, "Table CSV file");
    };
    auto exp_emit = [&](const CaseStudyReport& r) {
        emit_json(e_out, out, to_json(r));
        if (!e_csv.empty()) emit(e_csv, out, [&](std::ostream& os) { write_case_study_csv(os, r); });
    };
    auto* e1 = exp->add_subcommand("case1", "Dominant H1 with and without trimming over seeds");
    exp_common(e1, "0-19", "0.3:0.08,0.1:0.01");
    e1->callback([&] {
        action = [&] {
            exp_emit(run_case_study_1(parse_seeds(e_seeds.empty() ? "0-19" : e_seeds),
                                      parse_grid(e_grid.empty() ? "0.3:0.08,0.1:0.01" : e_grid)));
        };
    });
    auto* e2 = exp->add_subcommand("case2", "Dominant H2 with and without trimming over seeds (slow)");
    exp_common(e2, "0-9", "0.2:0.04,0.4:0.04");
    e2->callback([&] {
        action = [&] {
            exp_emit(run_case_study_2(parse_seeds(e_seeds.empty() ? "0-9" : e_seeds),
                                      parse_grid(e_grid.empty() ? "0.2:0.04,0.4:0.04" : e_grid)));
        };
    });
    std::string pr_pdb;
    char pr_chain = 'A';
    double pr_thr = 13.0;
    auto* epr = exp->add_subcommand("protein", "Dominant H2 of one PDB chain (slow)");
    epr->add_option("--pdb", pr_pdb, "PDB file")->required();
    epr->add_option("--chain", pr_chain, "Chain id")->capture_default_str();
    epr->add_option("--threshold", pr_thr, "Edge-length cap in angstrom")->capture_default_str();
    epr->add_option("--grid", e_grid, "Trimming grid")->default_str("0.3:0.05");
    epr->add_option("--out", e_out, "Report JSON file");
    epr->add_option("--csv", e_csv, "Table CSV file");
    epr->callback([&] {
        action = [&] {
            const auto atoms = parse_pdb_heavy_atoms(read_file(pr_pdb), pr_chain);
            err << "heavy atoms: " << atoms.size() << '\n';
            exp_emit(run_protein_study(atoms, parse_grid(e_grid.empty() ? "0.3:0.05" : e_grid), pr_thr));
        };
    });
    ConvergenceConfig cv;
    std::uint64_t cv_seed = 0;
    std::string cv_sizes;
    auto* ecv = exp->add_subcommand("convergence", "Hausdorff convergence rate of the trimmed support");
    ecv->add_option("--seed", cv_seed, "Master seed")->capture_default_str();
    ecv->add_option("--sizes", cv_sizes, "Sample sizes")->default_str("100,200,400,800,1600");
    ecv->add_option("--reps", cv.reps, "Repetitions per size")->capture_default_str();
    ecv->add_option("--alpha1", cv.spec.alpha1, "Top proportion")->capture_default_str();
    ecv->add_option("--alpha2", cv.spec.alpha2, "Bottom proportion")->capture_default_str();
    ecv->add_option("--reference-size", cv.reference_size, "Reference sample size")->capture_default_str();
    ecv->add_option("--b", cv.b, "Mass-scaling exponent")->capture_default_str();
    ecv->add_option("--out", e_out, "Report JSON file");
    ecv->callback([&] {
        action = [&] {
            if (!cv_sizes.empty()) cv.sample_sizes = parse_sizes(cv_sizes);
            emit_json(e_out, out, to_json(convergence_experiment(cv, cv_seed)));
        };
    });
    std::size_t st_trials = 50;
    std::uint64_t st_seed = 0;
    double st_noise = 0.1;
    auto* est = exp->add_subcommand("stability", "Check W <= 2 d_H on random perturbations");
    est->add_option("--trials", st_trials, "Number of cloud pairs")->capture_default_str();
    est->add_option("--seed", st_seed, "Master seed")->capture_default_str();
    est->add_option("--max-noise", st_noise, "Largest perturbation standard deviation")->capture_default_str();
    est->add_option("--out", e_out, "Report JSON file");
    est->callback([&] {
        action = [&] {
            const auto r = stability_suite(st_trials, st_seed, st_noise);
            emit_json(e_out, out, to_json(r));
            if (!r.all_pass) throw DataError("stability inequality violated");
        };
    });

    // pdb
    auto* pdb = app.add_subcommand("pdb", "Fetch or parse PDB structures");
    pdb->require_subcommand(1, 1);
    std::string pd_id, pd_out, pd_file;
    char pd_chain = 'A';
    auto* pf = pdb->add_subcommand("fetch", "Download <ID>.pdb (base URL from RPH_PDB_BASE_URL)");
    pf->add_option("id", pd_id, "Four-character structure id")->required();
    pf->add_option("-o,--out", pd_out, "Destination (default: <id>.pdb)");
    pf->callback([&] {
        action = [&] {
            std::string dest = pd_out;
            if (dest.empty()) {
                dest = pd_id + ".pdb";
                std::transform(dest.begin(), dest.end(), dest.begin(), [](unsigned char c) { return std::tolower(c); });
            }
            fetch_structure(pd_id, dest);
            err << "saved " << dest << '\n';
        };
    });
    auto* pp = pdb->add_subcommand("parse", "Heavy-atom coordinates of one chain as point CSV");
    pp->add_option("file", pd_file, "PDB file")->required();
    pp->add_option("--chain", pd_chain, "Chain id")->capture_default_str();
    pp->add_option("-o,--out", pd_out, "Point CSV output");
    pp->callback([&] {
        action = [&] {
            const auto atoms = parse_pdb_heavy_atoms(read_file(pd_file), pd_chain);
            emit(pd_out, out, [&](std::ostream& os) { write_points_csv(os, atoms); });
            err << "heavy atoms: " << atoms.size() << '\n';
        };
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (action) action();
    } catch (const NetworkError& e) {
        err << "network error: " << e.what() << '\n';
        return kExitNetwork;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return run(args, out, err);
}

}  // namespace rph

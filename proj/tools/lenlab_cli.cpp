// lenlab: command-line front end for the length-function laboratory.
//
// Exit codes: 0 success/pass, 1 not-found/fail (a mathematical verdict, not an
// error), 2 configuration or usage errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <unordered_set>

#include "lenlab/gstar.hpp"
#include "lenlab/json_io.hpp"
#include "lenlab/kernels.hpp"

using namespace lenlab;
using io::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitConfig = 2;

std::size_t budget_from_env() {
    if (const char* s = std::getenv("LENLAB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw Error(Errc::ConfigError, "LENLAB_BUDGET must be a positive integer");
    }
    return groups::kDefaultBallCap;
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw Error(Errc::ConfigError, "cannot open output file " + out_path);
    f << payload;
}

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::ConfigError, "cannot open " + path);
    json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw Error(Errc::ParseError, std::string("bad JSON in ") + path + ": " + e.what());
    }
    return j;
}

/// Seeded symmetric subset of the radius-2 ball (identity-free), size <= want.
std::vector<groups::Element> seeded_window(const groups::GroupSpec& G, const groups::GeneratingSet& X,
                                           int want, std::mt19937_64& rng) {
    auto pool = groups::ball(G, X, 2);
    std::vector<groups::Element> out;
    std::unordered_set<std::string> used;
    std::uniform_int_distribution<std::size_t> pick(1, pool.size() - 1); // skip identity at 0
    int guard = 0;
    while (static_cast<int>(out.size()) < want && guard++ < 1000) {
        const auto& e = pool[pick(rng)];
        if (used.count(e.token())) continue;
        groups::Element inv = groups::inverse(e);
        used.insert(e.token());
        out.push_back(e);
        if (!(inv == e) && static_cast<int>(out.size()) < want + 1) {
            used.insert(inv.token());
            out.push_back(inv);
        }
    }
    return out;
}

int report_exit(const kernels::ConstructionReport& rep, const std::string& format,
                const std::string& out_path) {
    if (format == "json") emit(out_path, io::to_json(rep).dump(2));
    else emit(out_path, io::render_report(rep));
    if (rep.status == kernels::KernelStatus::NotFoundWithinRadius || !rep.overall) return kExitNotFound;
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"length-function laboratory"};
    app.require_subcommand(1);

    std::string group_token = "free:2";
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out_path;
    app.add_option("--group", group_token, "group token, e.g. free:2, cyclic:4, vc, abtorsion:2")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized sampling")->capture_default_str();
    app.add_option("--format", format, "output format: json | dot | text")->capture_default_str();
    app.add_option("--out", out_path, "output file (default stdout)");

    // length
    auto* c_length = app.add_subcommand("length", "induced length table from a weight function");
    std::string weights_path;
    int radius = 3;
    std::int64_t cap = 0;
    c_length->add_option("--weights", weights_path, "WeightSpec JSON file")->required();
    c_length->add_option("--radius", radius, "domain = ball of this radius")->capture_default_str();
    c_length->add_option("--cap", cap, "exactness cap (default: constant base, or 3x ramp base)");

    // cayley
    auto* c_cayley = app.add_subcommand("cayley", "Cayley ball of the word length");
    int c_radius = 2;
    c_cayley->add_option("--radius", c_radius, "ball radius")->capture_default_str();

    // ep
    auto* c_ep = app.add_subcommand("ep", "extension-property witness in a graph");
    std::string graph_path;
    std::vector<int> tuple, dists;
    c_ep->add_option("--graph", graph_path, "graph JSON file")->required();
    c_ep->add_option("--tuple", tuple, "vertex indices")->required();
    c_ep->add_option("--dists", dists, "target distances")->required();

    // moss
    auto* c_moss = app.add_subcommand("moss", "bounded approximant of the universal graph");
    int tmax = 2, dmax = 3, rounds = 3;
    c_moss->add_option("--tmax", tmax, "max tuple size")->capture_default_str();
    c_moss->add_option("--dmax", dmax, "max demanded distance")->capture_default_str();
    c_moss->add_option("--rounds", rounds, "closure rounds")->capture_default_str();

    // mif
    auto* c_mif = app.add_subcommand("mif", "witness that the given words are no mixed identities");
    std::vector<std::string> word_texts;
    int mif_radius = 4;
    c_mif->add_option("--word", word_texts, "word over the group and x, e.g. 'x^-1 a^-1 x a'")->required();
    c_mif->add_option("--radius", mif_radius, "search radius")->capture_default_str();

    // lemD
    auto* c_lemd = app.add_subcommand("lemD", "density kernel: realize a distance vector");
    std::vector<std::string> a_tokens;
    std::vector<int> d_values;
    int lemd_radius = 8, f_radius = 2;
    c_lemd->add_option("--a", a_tokens, "tuple of element tokens")->required();
    c_lemd->add_option("--d", d_values, "target distances")->required();
    c_lemd->add_option("--radius", lemd_radius, "candidate search radius")->capture_default_str();
    c_lemd->add_option("--f-radius", f_radius, "window F = ball of this radius")->capture_default_str();

    // tt
    auto* c_tt = app.add_subcommand("tt", "transitivity kernel on a seeded window");
    int f_size = 4, tt_radius = 8;
    c_tt->add_option("--f-size", f_size, "target window size")->capture_default_str();
    c_tt->add_option("--radius", tt_radius, "candidate search radius")->capture_default_str();

    // compare
    auto* c_cmp = app.add_subcommand("compare", "Lipschitz comparison of two length tables");
    std::string t1_path, t2_path;
    std::int64_t cmp_c = 2;
    c_cmp->add_option("--t1", t1_path, "first LengthTable JSON file")->required();
    c_cmp->add_option("--t2", t2_path, "second LengthTable JSON file")->required();
    c_cmp->add_option("-C,--constant", cmp_c, "Lipschitz constant")->capture_default_str();

    // examples
    auto* c_ex = app.add_subcommand("examples", "worked obstruction examples");
    std::string which = "vc";
    int ex_k = 2, alpha_bound = 20;
    c_ex->add_option("--which", which, "ab | vc")->capture_default_str();
    c_ex->add_option("--k", ex_k, "torsion factor count for ab")->capture_default_str();
    c_ex->add_option("--alpha-bound", alpha_bound, "alpha range for vc")->capture_default_str();

    // shared options (--group, --seed, --format, --out) may follow the subcommand
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        std::size_t budget = budget_from_env();
        groups::GroupSpec G = groups::GroupSpec::parse(group_token);
        auto X = groups::GeneratingSet::standard(G);
        std::mt19937_64 rng(seed);

        if (*c_length) {
            auto w = io::weight_from_json(load_json(weights_path));
            if (!(w.group == G) && c_length->count("--weights")) G = w.group;
            auto domain = groups::ball(w.group, groups::GeneratingSet::standard(w.group), radius, budget);
            if (cap <= 0) cap = w.rule.proper ? 3 * w.rule.base : w.rule.base;
            auto t = lengths::length_from_weight(w, domain, cap);
            emit(out_path, io::to_json(t).dump(2));
            return kExitPass;
        }
        if (*c_cayley) {
            auto t = lengths::word_length_table(X, 2 * c_radius, budget);
            auto g = graphs::cayley_ball(t, c_radius);
            emit(out_path, format == "dot" ? g.to_dot() : io::to_json(g).dump(2));
            return kExitPass;
        }
        if (*c_ep) {
            auto g = io::graph_from_json(load_json(graph_path));
            auto w = graphs::ep_witness(g, tuple, dists);
            if (!w) {
                emit(out_path, json{{"witness", nullptr}}.dump(2));
                return kExitNotFound;
            }
            emit(out_path, json{{"witness", *w}, {"name", g.vertex_names()[*w]}}.dump(2));
            return kExitPass;
        }
        if (*c_moss) {
            auto res = graphs::moss_approximant(tmax, dmax, rounds, budget);
            if (format == "dot") {
                emit(out_path, res.graph.to_dot());
            } else {
                json rj = json::array();
                for (const auto& r : res.rounds)
                    rj.push_back(json{{"round", r.round},
                                      {"vertices_added", r.vertices_added},
                                      {"demands_unmet", r.demands_unmet}});
                int met = 0;
                for (const auto& d : res.final_demands) met += d.met;
                emit(out_path, json{{"graph", io::to_json(res.graph)},
                                    {"rounds", rj},
                                    {"demands_met", met},
                                    {"demands_total", res.final_demands.size()}}
                                   .dump(2));
            }
            return kExitPass;
        }
        if (*c_mif) {
            std::vector<gstar::GStarWord> I;
            for (const auto& t : word_texts) I.push_back(gstar::GStarWord::parse(G, t));
            auto w = gstar::mif_witness(G, I, X, mif_radius);
            if (!w) {
                emit(out_path, json{{"witness", nullptr}, {"radius", mif_radius}}.dump(2));
                return kExitNotFound;
            }
            emit(out_path, json{{"witness", w->token()}, {"radius", mif_radius}}.dump(2));
            return kExitPass;
        }
        if (*c_lemd) {
            std::vector<groups::Element> a;
            for (const auto& t : a_tokens) a.push_back(groups::Element::parse(G, t));
            auto F = groups::ball(G, X, f_radius);
            std::unordered_set<std::string> in_f;
            int need = f_radius;
            for (const auto& f : F) in_f.insert(f.token());
            for (const auto& ai : a)
                for (const auto& aj : a) {
                    groups::Element p = groups::multiply(groups::inverse(ai), aj);
                    if (in_f.insert(p.token()).second) F.push_back(p);
                    groups::Element pi = groups::inverse(p);
                    if (in_f.insert(pi.token()).second) F.push_back(pi);
                }
            for (const auto& f : F)
                if (auto wl = groups::word_length(X, f, 64, budget)) need = std::max(need, *wl);
            auto base = lengths::word_length_table(X, need, budget);
            auto rep = kernels::lemD_kernel(base, F, a, d_values, X, lemd_radius);
            return report_exit(rep, format, out_path);
        }
        if (*c_tt) {
            auto F = seeded_window(G, X, f_size, rng);
            auto base = lengths::word_length_table(X, 4, budget);
            std::uniform_int_distribution<std::int64_t> scale(1, 3);
            std::int64_t m0 = scale(rng), m1 = scale(rng);
            lengths::LengthTable t0(G, base.exact_radius()), t1(G, base.exact_radius());
            for (const auto& e : base.domain()) {
                auto v = base.exact(e);
                if (!v) continue;
                t0.add(e, {*v * m0, false});
                t1.add(e, {*v * m1, false});
            }
            auto rep = kernels::tt_kernel(t0, t1, F, X, tt_radius);
            return report_exit(rep, format, out_path);
        }
        if (*c_cmp) {
            auto t1 = io::table_from_json(load_json(t1_path));
            auto t2 = io::table_from_json(load_json(t2_path));
            auto res = lengths::lipschitz_compare(t1, t2, cmp_c);
            json j{{"bounded", res.bounded},
                   {"witness", res.witness ? json(res.witness->token()) : json(nullptr)}};
            emit(out_path, j.dump(2));
            return res.bounded ? kExitPass : kExitNotFound;
        }
        if (*c_ex) {
            kernels::ConstructionReport rep;
            if (which == "ab") rep = kernels::ex_ab_exhaustive(ex_k);
            else if (which == "vc") rep = kernels::ex_vc_checks(alpha_bound);
            else throw Error(Errc::ConfigError, "--which must be ab or vc");
            return report_exit(rep, format, out_path);
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.code()) {
            case Errc::ParseError:
            case Errc::ConfigError:
            case Errc::BudgetExceeded:
            case Errc::InsufficientDomain:
                return kExitConfig;
            default:
                return kExitNotFound;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}

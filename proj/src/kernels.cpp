#include "lenlab/kernels.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace lenlab::kernels {

using groups::BallEnumerator;


using lengths::DefaultRule;
using lengths::LengthValue;

void ConstructionReport::add_check(const std::string& desc, const std::string& expected,
                                   const std::string& actual) {
    checks.push_back({desc, expected, actual, expected == actual});
}

void ConstructionReport::finalize() {
    overall = status != KernelStatus::NotFoundWithinRadius &&
              std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

std::string join_tokens(const std::vector<Element>& es) {
    std::string s;
    for (const auto& e : es) {
        if (!s.empty()) s += ", ";
        s += e.token();
    }
    return s;
}

std::string join_ints(const std::vector<int>& ds) {
    std::string s;
    for (int d : ds) {
        if (!s.empty()) s += ", ";
        s += std::to_string(d);
    }
    return s;
}

} // namespace

ConstructionReport lemD_kernel(const LengthTable& base, const std::vector<Element>& F,
                               const std::vector<Element>& a, const graphs::DistanceVector& d,
                               const GeneratingSet& X, int search_radius) {
    ConstructionReport rep;
    rep.kernel = "lemD";
    rep.inputs = {{"F", join_tokens(F)}, {"a", join_tokens(a)}, {"d", join_ints(d)},
                  {"search_radius", std::to_string(search_radius)}};
    if (a.size() != d.size()) throw Error(Errc::LengthMismatch, "tuple/distance arity mismatch");

    std::unordered_set<std::string> ftokens;
    for (const auto& f : F) ftokens.insert(f.token());
    if (!ftokens.count(Element::identity(base.group()).token()))
        throw Error(Errc::PreconditionFailed, "F must contain the identity");
    for (const auto& f : F)
        if (!ftokens.count(groups::inverse(f).token()))
            throw Error(Errc::PreconditionFailed, "F must be symmetric");
    for (const auto& ai : a)
        for (const auto& aj : a)
            if (!ftokens.count(groups::multiply(groups::inverse(ai), aj).token()))
                throw Error(Errc::PreconditionFailed, "F must contain all a_i^-1 a_j");

    if (!graphs::check_consistent(base, a, d)) {
        rep.status = KernelStatus::VacuouslyInD;
        rep.add_check("d inconsistent for (ell, a): membership in D is vacuous", "vacuous", "vacuous");
        rep.finalize();
        return rep;
    }

    std::int64_t M = 0;
    for (const auto& f : F) M = std::max(M, *base.exact(f));
    for (int di : d) M = std::max<std::int64_t>(M, di);
    M += 1;

    BallEnumerator it(X);
    while (auto cand = it.next()) {
        if (cand->second > search_radius) break;
        const Element& g = cand->first;
        Element gi = groups::inverse(g);

        // Assemble omega_g's support; reject candidates whose prescribed
        // values collide, since no single weight can satisfy both.
        std::unordered_map<std::string, std::int64_t> weights;
        std::vector<std::pair<Element, std::int64_t>> support;
        bool bad = false;
        std::string reason;
        auto put = [&](const Element& e, std::int64_t v) {
            auto [pos, inserted] = weights.emplace(e.token(), v);
            if (!inserted && pos->second != v) {
                bad = true;
                reason = "conflicting weight at " + e.token();
                return;
            }
            if (inserted) support.emplace_back(e, v);
        };
        std::vector<Element> K;
        for (std::size_t i = 0; i < a.size() && !bad; ++i) {
            Element k = groups::multiply(gi, a[i]);
            if (d[i] == 0) {
                if (!k.is_identity()) {
                    bad = true;
                    reason = "d_i = 0 but g != a_i";
                }
                continue;
            }
            if (k.is_identity()) {
                bad = true;
                reason = "g = a_i but d_i != 0";
                continue;
            }
            if (ftokens.count(k.token()) || ftokens.count(groups::inverse(k).token())) {
                bad = true;
                reason = "K meets F at " + k.token();
                continue;
            }
            K.push_back(k);
            put(k, d[i]);
            if (!bad) put(groups::inverse(k), d[i]);
        }
        for (const auto& f : F) {
            if (bad) break;
            if (f.is_identity()) continue;
            put(f, *base.exact(f));
        }
        if (bad) {
            rep.rejected.emplace_back(g.token(), reason);
            continue;
        }

        auto omega = WeightSpec::make(base.group(), support, DefaultRule::constant(M), X);
        std::vector<Element> domain{Element::identity(base.group())};
        domain.insert(domain.end(), F.begin(), F.end());
        domain.insert(domain.end(), K.begin(), K.end());
        LengthTable lw = lengths::length_from_weight(omega, domain, M, true);

        bool all_ok = true;
        std::vector<Check> checks;
        for (const auto& f : F) {
            std::int64_t got = *lw.exact(f);
            checks.push_back({"ell_w(" + f.token() + ") = ell(" + f.token() + ")",
                              std::to_string(*base.exact(f)), std::to_string(got),
                              got == *base.exact(f)});
            all_ok &= got == *base.exact(f);
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            Element k = groups::multiply(gi, a[i]);
            std::int64_t got = k.is_identity() ? 0 : *lw.exact(k);
            checks.push_back({"ell_w(g^-1 " + a[i].token() + ") = d_" + std::to_string(i + 1),
                              std::to_string(d[i]), std::to_string(got), got == d[i]});
            all_ok &= got == d[i];
        }
        if (all_ok) {
            rep.status = KernelStatus::Accepted;
            rep.witness = g;
            rep.weight = omega;
            rep.checks = std::move(checks);
            rep.finalize();
            return rep;
        }
        auto fail = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
        rep.rejected.emplace_back(g.token(), fail->description);
    }
    rep.status = KernelStatus::NotFoundWithinRadius;
    rep.finalize();
    return rep;
}

ConstructionReport tt_kernel(const LengthTable& ell0, const LengthTable& ell1,
                             const std::vector<Element>& F, const GeneratingSet& X, int search_radius) {
    ConstructionReport rep;
    rep.kernel = "tt";
    rep.inputs = {{"F", join_tokens(F)}, {"search_radius", std::to_string(search_radius)}};
    if (!(ell0.group() == ell1.group())) throw Error(Errc::GroupMismatch, "ell0 and ell1 over different groups");

    std::unordered_set<std::string> ftokens;
    for (const auto& f : F) {
        if (f.is_identity()) throw Error(Errc::PreconditionFailed, "F must avoid the identity");
        ftokens.insert(f.token());
    }
    for (const auto& f : F)
        if (!ftokens.count(groups::inverse(f).token()))
            throw Error(Errc::PreconditionFailed, "F must be symmetric");

    std::int64_t N = 0;
    for (const auto& f : F) {
        auto v0 = ell0.exact(f);
        auto v1 = ell1.exact(f);
        if (!v0 || !v1) throw Error(Errc::InsufficientDomain, "no exact values on F at " + f.token());
        N = std::max({N, *v0, *v1});
    }

    BallEnumerator it(X);
    while (auto cand = it.next()) {
        if (cand->second > search_radius) break;
        const Element& g = cand->first;

        std::vector<Element> conj; // F^{g^-1} = { g f g^-1 }
        bool disjoint = true;
        for (const auto& f : F) {
            Element c = groups::conjugate(f, groups::inverse(g));
            if (ftokens.count(c.token())) {
                disjoint = false;
                break;
            }
            conj.push_back(c);
        }
        if (!disjoint) {
            rep.rejected.emplace_back(g.token(), "F^{g^-1} meets F");
            continue;
        }

        std::vector<std::pair<Element, std::int64_t>> support;
        std::unordered_map<std::string, std::int64_t> weights;
        bool bad = false;
        auto put = [&](const Element& e, std::int64_t v) {
            auto [pos, inserted] = weights.emplace(e.token(), v);
            if (!inserted && pos->second != v) bad = true;
            else if (inserted) support.emplace_back(e, v);
        };
        for (std::size_t i = 0; i < F.size(); ++i) {
            put(F[i], *ell0.exact(F[i]));
            put(conj[i], *ell1.exact(F[i]));
        }
        if (bad) {
            rep.rejected.emplace_back(g.token(), "conflicting weights");
            continue;
        }

        auto omega = WeightSpec::make(ell0.group(), support, DefaultRule::constant(N + 1), X);
        std::vector<Element> domain{Element::identity(ell0.group())};
        domain.insert(domain.end(), F.begin(), F.end());
        domain.insert(domain.end(), conj.begin(), conj.end());
        LengthTable lw = lengths::length_from_weight(omega, domain, N + 1, true);

        bool all_ok = true;
        std::vector<Check> checks;
        for (std::size_t i = 0; i < F.size(); ++i) {
            std::int64_t got0 = *lw.exact(F[i]);
            checks.push_back({"ell_w(" + F[i].token() + ") = ell0", std::to_string(*ell0.exact(F[i])),
                              std::to_string(got0), got0 == *ell0.exact(F[i])});
            all_ok &= got0 == *ell0.exact(F[i]);
            // (g^-1 o ell_w)(f) = ell_w(g f g^-1) = ell_w(f^{g^-1})
            std::int64_t got1 = *lw.exact(conj[i]);
            checks.push_back({"(g^-1 o ell_w)(" + F[i].token() + ") = ell1",
                              std::to_string(*ell1.exact(F[i])), std::to_string(got1),
                              got1 == *ell1.exact(F[i])});
            all_ok &= got1 == *ell1.exact(F[i]);
        }
        if (all_ok) {
            rep.status = KernelStatus::Accepted;
            rep.witness = g;
            rep.weight = omega;
            rep.checks = std::move(checks);
            rep.finalize();
            return rep;
        }
        auto fail = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
        rep.rejected.emplace_back(g.token(), fail->description);
    }
    rep.status = KernelStatus::NotFoundWithinRadius;
    rep.finalize();
    return rep;
}

ConstructionReport icc_invariant_split(const LengthTable& t, const Element& x, const GeneratingSet& X,
                                       int r, int sample_radius) {
    ConstructionReport rep;
    rep.kernel = "icc_invariant_split";
    rep.inputs = {{"x", x.token()}, {"r", std::to_string(r)}};
    auto cls = groups::conjugacy_class_in_ball(t.group(), x, X, r);
    auto cls_next = groups::conjugacy_class_in_ball(t.group(), x, X, r + 1);
    if (cls.size() != cls_next.size())
        throw Error(Errc::ClassNotStabilized, "class still grows at radius " + std::to_string(r + 1));
    rep.status = KernelStatus::Accepted;

    auto in_u = [&](const LengthTable& tab) -> std::optional<bool> {
        bool all_one = true;
        for (const auto& y : cls) {
            auto v = tab.exact(y);
            if (!v) return std::nullopt;
            all_one &= *v == 1;
        }
        return all_one;
    };
    auto base_member = in_u(t);
    if (!base_member) throw Error(Errc::InsufficientDomain, "class not covered by the table domain");
    rep.add_check("t in U = { ell : ell = 1 on x^G }", *base_member ? "true" : "false",
                  *base_member ? "true" : "false");

    for (const auto& g : groups::ball(t.group(), X, sample_radius)) {
        LengthTable conj = lengths::conjugate_length(g, t, cls);
        auto m = in_u(conj);
        rep.add_check("membership preserved under conjugation by " + g.token(),
                      *base_member ? "true" : "false", m && *m == *base_member ? (*base_member ? "true" : "false") : (m ? (*m ? "true" : "false") : "unknown"));
    }
    rep.finalize();
    return rep;
}

std::optional<Element> separating_conjugator(const std::vector<Element>& A, const std::vector<Element>& B,
                                             const GeneratingSet& X, int r) {
    for (const auto& e : A)
        if (e.is_identity()) throw Error(Errc::PreconditionFailed, "A must avoid the identity");
    for (const auto& e : B)
        if (e.is_identity()) throw Error(Errc::PreconditionFailed, "B must avoid the identity");
    std::unordered_set<std::string> btokens;
    for (const auto& b : B) btokens.insert(b.token());
    BallEnumerator it(X);
    while (auto cand = it.next()) {
        if (cand->second > r) break;
        bool disjoint = true;
        for (const auto& a : A) {
            if (btokens.count(groups::conjugate(a, cand->first).token())) {
                disjoint = false;
                break;
            }
        }
        if (disjoint) return cand->first;
    }
    return std::nullopt;
}

ConstructionReport ex_ab_exhaustive(int k, std::size_t subset_budget) {
    ConstructionReport rep;
    rep.kernel = "ex_ab";
    rep.inputs = {{"k", std::to_string(k)}};
    if (k < 1 || k > 3) throw Error(Errc::ConfigError, "k must be in [1, 3]");
    GroupSpec G = GroupSpec::ab_torsion(k);
    std::int64_t order = *G.order();

    // Full element census in lexicographic exponent order.
    std::vector<Element> all;
    for (std::int64_t code = 0; code < order; ++code) {
        Element::ExpVec e(k + 1, 0);
        std::int64_t c = code;
        e[0] = c % 4;
        c /= 4;
        for (int i = 1; i <= k; ++i) {
            e[i] = c % 2;
            c /= 2;
        }
        all.push_back(Element::from_exponents(G, e));
    }
    Element id = Element::identity(G);
    Element::ExpVec g0e(k + 1, 0);
    g0e[0] = 2;
    Element g0 = Element::from_exponents(G, g0e);

    // Inverse classes: self-inverse singletons and {e, e^-1} pairs.
    std::vector<std::vector<Element>> classes;
    std::unordered_set<std::string> used{id.token()};
    for (const auto& e : all) {
        if (used.count(e.token())) continue;
        Element inv = groups::inverse(e);
        used.insert(e.token());
        if (inv == e) {
            classes.push_back({e});
        } else {
            used.insert(inv.token());
            classes.push_back({e, inv});
        }
    }
    if (classes.size() >= 63 || (std::size_t{1} << classes.size()) > subset_budget)
        throw Error(Errc::BudgetExceeded, "too many symmetric subsets");

    // The constant-3 length function is a valid length function.
    LengthTable const3(G, 0);
    for (const auto& e : all) const3.add(e, LengthValue{e.is_identity() ? 0 : 3, false});
    bool const3_valid = lengths::validate_length_axioms(const3).ok();
    rep.add_check("ell = 3 off identity satisfies the length axioms", "valid", const3_valid ? "valid" : "invalid");

    std::size_t n_subsets = std::size_t{1} << classes.size();
    std::size_t generating = 0, skipped = 0;
    bool all_le2 = true, all_valid = true, all_in_12 = true;
    for (std::size_t mask = 1; mask < n_subsets; ++mask) {
        std::vector<Element> xs;
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (mask & (std::size_t{1} << c))
                for (const auto& e : classes[c]) xs.push_back(e);
        auto X = GeneratingSet::from_elements(G, xs);
        if (!X.verify()) {
            ++skipped;
            continue;
        }
        ++generating;
        LengthTable kx = lengths::word_length_table(X, static_cast<int>(order));
        auto v = kx.exact(g0);
        all_le2 &= v && *v <= 2;
        all_in_12 &= v && (*v == 1 || *v == 2);
        all_valid &= lengths::validate_length_axioms(kx).ok();
    }
    rep.status = KernelStatus::Accepted;
    rep.inputs.emplace_back("generating_sets", std::to_string(generating));
    rep.inputs.emplace_back("non_generating_skipped", std::to_string(skipped));
    rep.add_check("k_X((2,0,...)) <= 2 for every generating X", "true", all_le2 ? "true" : "false");
    rep.add_check("k_X((2,0,...)) in {1, 2}", "true", all_in_12 ? "true" : "false");
    rep.add_check("every k_X satisfies the length axioms", "true", all_valid ? "true" : "false");
    rep.add_check("no word length agrees with ell = 3 at (2,0,...)", "true",
                  all_le2 ? "true" : "false");
    rep.finalize();
    return rep;
}

ConstructionReport ex_vc_checks(int alpha_bound, int ball_radius) {
    ConstructionReport rep;
    rep.kernel = "ex_vc";
    rep.inputs = {{"alpha_bound", std::to_string(alpha_bound)}, {"ball_radius", std::to_string(ball_radius)}};
    GroupSpec G = GroupSpec::vc();
    Element b = Element::from_vc(G, 0, 1);
    Element b2 = Element::from_vc(G, 0, 2);

    // (1) Algebraic identities behind Eq. of the obstruction.
    int tested = 0;
    bool algebra_ok = true;
    for (std::int64_t alpha = -alpha_bound; alpha <= alpha_bound; ++alpha) {
        for (int beta = 0; beta < 4; ++beta) {
            Element g = Element::from_vc(G, alpha, beta);
            ++tested;
            if (beta % 2 == 1) {
                algebra_ok &= groups::multiply(g, g) == b2;
            } else {
                Element lhs = groups::multiply(groups::multiply(b, g), groups::inverse(b));
                algebra_ok &= lhs == groups::inverse(g);
            }
        }
    }
    rep.inputs.emplace_back("elements_tested", std::to_string(tested));
    rep.add_check("g^2 = b^2 (odd beta) / b g b^-1 = g^-1 (even beta)", "true",
                  algebra_ok ? "true" : "false");

    // (2) Extension-graph certificate on the word-length Cayley ball.
    auto X = GeneratingSet::standard(G);
    LengthTable t = lengths::word_length_table(X, 2 * ball_radius);
    graphs::FiniteGraph delta = graphs::cayley_ball(t, ball_radius);
    int v1 = *delta.index_of(Element::identity(G).token());
    int v2 = *delta.index_of(b.token());
    int v3 = *delta.index_of(b2.token());
    int v4 = *delta.index_of(groups::inverse(b).token()); // b^3
    int m = delta.distance(v1, v2);
    rep.inputs.emplace_back("m", std::to_string(m));

    std::vector<int> fresh;
    graphs::FiniteGraph gamma = graphs::vc_extension_graph(delta, v1, v2, m, &fresh);
    int w0 = fresh.front();

    bool preserved = true;
    for (std::size_t i = 0; i < delta.size(); ++i)
        for (std::size_t j = 0; j < delta.size(); ++j)
            preserved &= delta.distance(static_cast<int>(i), static_cast<int>(j)) ==
                         gamma.distance(static_cast<int>(i), static_cast<int>(j));
    rep.add_check("old-vertex distances preserved", "true", preserved ? "true" : "false");

    graphs::VertexTuple in_delta{&delta, {v1, v2, v3, v4}};
    graphs::VertexTuple in_gamma{&gamma, {v1, v2, v3, v4}};
    rep.add_check("(1, b, b^2, b^3) congruent in Delta and Gamma", "true",
                  graphs::tuples_congruent(in_delta, in_gamma) ? "true" : "false");
    rep.add_check("d(w0, 1) = 1", "1", std::to_string(gamma.distance(w0, v1)));
    rep.add_check("d(w0, 1) < d(w0, b^2)", "true",
                  gamma.distance(w0, v1) < gamma.distance(w0, v3) ? "true" : "false");
    rep.add_check("d(w0, b) <= m", "true", gamma.distance(w0, v2) <= m ? "true" : "false");
    rep.add_check("m < d(w0, b^3)", "true", m < gamma.distance(w0, v4) ? "true" : "false");

    rep.status = KernelStatus::Accepted;
    rep.finalize();
    return rep;
}

} // namespace lenlab::kernels

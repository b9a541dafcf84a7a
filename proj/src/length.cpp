#include "lenlab/length.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>
#include <unordered_set>

namespace lenlab::lengths {

using groups::BallEnumerator;



// ---------------------------------------------------------------------------
// LengthTable

void LengthTable::add(const Element& e, LengthValue v) {
    if (!(e.group() == group_)) throw Error(Errc::GroupMismatch, "table entry from a different group");
    auto [it, inserted] = values_.emplace(e.token(), v);
    if (inserted) {
        domain_.push_back(e);
    } else {
        it->second = v;
    }
}

bool LengthTable::contains(const Element& e) const { return values_.count(e.token()) > 0; }

std::optional<LengthValue> LengthTable::get(const Element& e) const {
    auto it = values_.find(e.token());
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::int64_t> LengthTable::exact(const Element& e) const {
    auto v = get(e);
    if (!v || v->capped) return std::nullopt;
    return v->value;
}

// ---------------------------------------------------------------------------
// WeightSpec

WeightSpec WeightSpec::make(const GroupSpec& g, std::vector<std::pair<Element, std::int64_t>> support,
                            DefaultRule rule, GeneratingSet enumeration) {
    if (rule.base < 1) throw Error(Errc::ConfigError, "default weight must be >= 1");
    WeightSpec w{g, {}, rule, std::move(enumeration)};
    std::unordered_map<std::string, std::int64_t> seen;
    auto add = [&](const Element& e, std::int64_t v) {
        if (e.is_identity()) throw Error(Errc::ConfigError, "identity cannot carry a weight");
        if (!(e.group() == g)) throw Error(Errc::GroupMismatch, "support element from a different group");
        if (v < 1) throw Error(Errc::ConfigError, "support weights must be >= 1");
        // The constant-default closed form min(d_supp, M) needs every support
        // weight to stay within M.
        if (!rule.proper && v > rule.base)
            throw Error(Errc::ConfigError, "support weight above the constant default at " + e.token());
        auto [it, inserted] = seen.emplace(e.token(), v);
        if (!inserted) {
            if (it->second != v) throw Error(Errc::ConfigError, "conflicting weights for " + e.token());
            return;
        }
        w.support.emplace_back(e, v);
    };
    for (const auto& [e, v] : support) {
        add(e, v);
        add(groups::inverse(e), v); // symmetric closure
    }
    return w;
}

std::optional<std::int64_t> WeightSpec::support_weight(const Element& e) const {
    std::string t = e.token();
    for (const auto& [s, v] : support)
        if (s.token() == t) return v;
    return std::nullopt;
}

std::vector<std::pair<Element, std::int64_t>> WeightSpec::ramp_generators(std::int64_t cap) const {
    if (!rule.proper) throw Error(Errc::ConfigError, "ramp_generators on a Constant default");
    std::vector<std::pair<Element, std::int64_t>> out;
    std::unordered_set<std::string> supp_tokens, assigned;
    for (const auto& [s, v] : support) supp_tokens.insert(s.token());
    std::int64_t i = 0;
    BallEnumerator it(enumeration);
    while (auto e = it.next()) {
        const Element& el = e->first;
        if (el.is_identity()) continue;
        std::string tok = el.token();
        if (supp_tokens.count(tok) || assigned.count(tok)) continue;
        ++i;
        std::int64_t wv = rule.base + i;
        if (wv > cap) break;
        Element inv = groups::inverse(el);
        assigned.insert(tok);
        out.emplace_back(el, wv);
        if (assigned.insert(inv.token()).second) out.emplace_back(inv, wv);
    }
    return out;
}

std::int64_t WeightSpec::weight_of(const Element& e, std::size_t probe_budget) const {
    if (e.is_identity()) return 0;
    if (auto v = support_weight(e)) return *v;
    if (!rule.proper) return rule.base;
    std::string target = e.token();
    std::unordered_set<std::string> supp_tokens, assigned;
    for (const auto& [s, v] : support) supp_tokens.insert(s.token());
    std::int64_t i = 0;
    BallEnumerator it(enumeration, probe_budget);
    while (auto n = it.next()) {
        const Element& el = n->first;
        if (el.is_identity()) continue;
        std::string tok = el.token();
        if (supp_tokens.count(tok) || assigned.count(tok)) continue;
        ++i;
        Element inv = groups::inverse(el);
        if (tok == target || inv.token() == target) return rule.base + i;
        assigned.insert(tok);
        assigned.insert(inv.token());
    }
    throw Error(Errc::BudgetExceeded, "ramp enumeration did not reach " + target);
}

// ---------------------------------------------------------------------------
// Axioms

ValidationReport validate_length_axioms(const LengthTable& t) {
    ValidationReport rep;
    const Element id = Element::identity(t.group());
    auto idv = t.get(id);
    if (!idv) {
        rep.violations.push_back({"L1", "identity missing from domain"});
    } else if (idv->capped || idv->value != 0) {
        rep.violations.push_back({"L1", "identity value is not 0"});
    }
    std::unordered_set<std::string> pair_done;
    for (const auto& g : t.domain()) {
        auto v = t.exact(g);
        if (!g.is_identity() && v && *v == 0) rep.violations.push_back({"L1", "zero value at " + g.token()});
        Element gi = groups::inverse(g);
        std::string a = g.token(), b = gi.token();
        std::string key = a < b ? a + "|" + b : b + "|" + a;
        if (pair_done.insert(key).second) {
            auto vi = t.exact(gi);
            if (v && vi && *v != *vi)
                rep.violations.push_back({"L2", g.token() + " vs " + gi.token()});
            if (v && !t.contains(gi))
                rep.violations.push_back({"L2", "domain not inverse-closed at " + g.token()});
        }
    }
    for (const auto& g : t.domain()) {
        auto vg = t.exact(g);
        if (!vg) continue;
        for (const auto& h : t.domain()) {
            auto vh = t.exact(h);
            if (!vh) continue;
            Element gh = groups::multiply(g, h);
            auto vgh = t.get(gh);
            if (!vgh) continue;
            std::int64_t bound = *vg + *vh;
            if (!vgh->capped && vgh->value > bound)
                rep.violations.push_back({"L3", g.token() + " * " + h.token()});
            if (vgh->capped && vgh->value >= bound)
                rep.violations.push_back({"L3", "capped entry above bound at " + g.token() + " * " + h.token()});
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Weighted shortest paths

namespace {

struct NodeInfo {
    std::int64_t dist = 0;
    int hops = 0;
};

std::unordered_map<std::string, NodeInfo> weighted_distances(
    const GroupSpec& g, const std::vector<std::pair<Element, std::int64_t>>& gens, std::int64_t max_cost,
    std::size_t node_budget) {
    using Entry = std::tuple<std::int64_t, int, std::uint64_t>; // dist, hops, seq
    struct Cmp {
        bool operator()(const std::pair<Entry, Element>& a, const std::pair<Entry, Element>& b) const {
            return a.first > b.first;
        }
    };
    std::priority_queue<std::pair<Entry, Element>, std::vector<std::pair<Entry, Element>>, Cmp> pq;
    std::unordered_map<std::string, NodeInfo> settled;
    std::uint64_t seq = 0;
    pq.push({{0, 0, seq++}, Element::identity(g)});
    while (!pq.empty()) {
        auto [entry, el] = pq.top();
        pq.pop();
        auto [dist, hops, _] = entry;
        std::string tok = el.token();
        if (settled.count(tok)) continue;
        settled.emplace(tok, NodeInfo{dist, hops});
        if (settled.size() > node_budget) throw Error(Errc::BudgetExceeded, "shortest-path frontier too large");
        for (const auto& [x, wv] : gens) {
            std::int64_t nd = dist + wv;
            if (nd > max_cost) continue;
            Element n = groups::multiply(el, x);
            if (!settled.count(n.token())) pq.push({{nd, hops + 1, seq++}, std::move(n)});
        }
    }
    return settled;
}

} // namespace

LengthTable length_from_weight(const WeightSpec& w, const std::vector<Element>& domain, std::int64_t cap,
                               bool require_exact, std::unordered_map<std::string, int>* factor_count) {
    if (cap < 1) throw Error(Errc::ConfigError, "cap must be >= 1");
    std::vector<std::pair<Element, std::int64_t>> gens = w.support;
    std::int64_t max_cost;
    if (w.rule.proper) {
        auto ramp = w.ramp_generators(cap);
        gens.insert(gens.end(), ramp.begin(), ramp.end());
        max_cost = cap;
    } else {
        max_cost = std::min<std::int64_t>(w.rule.base - 1, cap);
    }
    auto dm = weighted_distances(w.group, gens, max_cost, groups::kDefaultBallCap);

    LengthTable t(w.group, 0);
    for (const auto& e : domain) {
        if (!(e.group() == w.group)) throw Error(Errc::GroupMismatch, "domain element from a different group");
        std::string tok = e.token();
        LengthValue val;
        int factors = 0;
        if (e.is_identity()) {
            val = {0, false};
        } else if (auto it = dm.find(tok); it != dm.end()) {
            val = {it->second.dist, false};
            factors = it->second.hops;
        } else if (!w.rule.proper && w.rule.base <= cap) {
            val = {w.rule.base, false}; // single off-support factor
            factors = 1;
        } else {
            val = {cap, true};
        }
        if (val.capped && require_exact)
            throw Error(Errc::CapTooSmall, "no exact value for " + tok + " within cap " + std::to_string(cap));
        t.add(e, val);
        if (factor_count) (*factor_count)[tok] = factors;
    }
    return t;
}

std::optional<std::int64_t> brute_force_length(const WeightSpec& w, const Element& g, int max_factors,
                                               const std::vector<Element>& candidates, std::int64_t cap) {
    if (max_factors < 1 || max_factors > 5) throw Error(Errc::ConfigError, "max_factors must be in [1, 5]");
    // Per-candidate weights; candidates above the cap are excluded.
    std::unordered_map<std::string, std::int64_t> ramp_w;
    if (w.rule.proper)
        for (const auto& [e, v] : w.ramp_generators(cap)) ramp_w.emplace(e.token(), v);
    std::vector<std::pair<Element, std::int64_t>> pool;
    std::unordered_set<std::string> pool_seen;
    for (const auto& c : candidates) {
        if (c.is_identity()) continue;
        std::string tok = c.token();
        if (!pool_seen.insert(tok).second) continue;
        std::int64_t wv;
        if (auto sv = w.support_weight(c)) {
            wv = *sv;
        } else if (w.rule.proper) {
            auto it = ramp_w.find(tok);
            if (it == ramp_w.end()) continue; // ramp weight exceeds cap
            wv = it->second;
        } else {
            wv = w.rule.base;
        }
        if (wv > cap) continue;
        pool.emplace_back(c, wv);
    }
    if (g.is_identity()) return 0;

    // Meet in the middle: all products of <= k factors, with minimal weight.
    auto expand = [&](int k) {
        std::unordered_map<std::string, std::pair<std::int64_t, Element>> acc;
        Element id = Element::identity(w.group);
        acc.emplace(id.token(), std::make_pair(std::int64_t{0}, id));
        std::vector<std::pair<Element, std::int64_t>> frontier{{id, 0}};
        for (int step = 0; step < k; ++step) {
            std::vector<std::pair<Element, std::int64_t>> next;
            for (const auto& [el, dist] : frontier) {
                for (const auto& [x, wv] : pool) {
                    Element n = groups::multiply(el, x);
                    std::int64_t nd = dist + wv;
                    auto it = acc.find(n.token());
                    if (it == acc.end() || nd < it->second.first) {
                        acc[n.token()] = {nd, n};
                        next.emplace_back(n, nd);
                    }
                }
            }
            frontier = std::move(next);
        }
        return acc;
    };
    int left = (max_factors + 1) / 2;
    int right = max_factors - left;
    auto A = expand(left);
    auto B = right > 0 ? expand(right) : decltype(A){};
    if (right == 0) {
        Element id = Element::identity(w.group);
        B.emplace(id.token(), std::make_pair(std::int64_t{0}, id));
    }

    std::optional<std::int64_t> best;
    for (const auto& [tok, entry] : A) {
        const auto& [wa, u] = entry;
        Element rest = groups::multiply(groups::inverse(u), g);
        auto it = B.find(rest.token());
        if (it == B.end()) continue;
        std::int64_t total = wa + it->second.first;
        if (!best || total < *best) best = total;
    }
    return best;
}

LengthTable word_length_table(const GeneratingSet& X, int r, std::size_t budget_cap) {
    LengthTable t(X.group, r);
    BallEnumerator it(X, budget_cap);
    while (auto e = it.next()) {
        if (e->second > r) break;
        t.add(e->first, {e->second, false});
    }
    return t;
}

WeightSpec wm_construction(const LengthTable& base, const std::vector<Element>& F, DefaultRule rule,
                           const GeneratingSet& enumeration) {
    std::unordered_set<std::string> ftokens;
    for (const auto& f : F) ftokens.insert(f.token());
    if (!ftokens.count(Element::identity(base.group()).token()))
        throw Error(Errc::PreconditionFailed, "F must contain the identity");
    std::int64_t max_f = 0;
    std::vector<std::pair<Element, std::int64_t>> support;
    std::unordered_set<std::string> added;
    for (const auto& f : F) {
        if (!ftokens.count(groups::inverse(f).token()))
            throw Error(Errc::PreconditionFailed, "F must be symmetric; missing inverse of " + f.token());
        auto v = base.exact(f);
        if (!v) throw Error(Errc::InsufficientDomain, "no exact base value for " + f.token());
        max_f = std::max(max_f, *v);
        if (!f.is_identity() && added.insert(f.token()).second) support.emplace_back(f, *v);
    }
    if (rule.base <= max_f)
        throw Error(Errc::DefaultTooSmall, "default " + std::to_string(rule.base) +
                                               " must exceed max ell(F) = " + std::to_string(max_f));
    return WeightSpec::make(base.group(), std::move(support), rule, enumeration);
}

LengthTable conjugate_length(const Element& g, const LengthTable& t, const std::vector<Element>& requested,
                             std::vector<Element>* dropped) {
    LengthTable out(t.group(), 0);
    Element gi = groups::inverse(g);
    bool any = false;
    for (const auto& x : requested) {
        Element c = groups::multiply(groups::multiply(gi, x), g);
        if (auto v = t.get(c)) {
            out.add(x, *v);
            any = true;
        } else if (dropped) {
            dropped->push_back(x);
        }
    }
    if (!any) throw Error(Errc::EmptyDomain, "no requested point is computable");
    return out;
}

Reconstruction reconstruct_word_length(const LengthTable& t) {
    Reconstruction rec;
    for (const auto& x : t.domain())
        if (auto v = t.exact(x); v && *v == 1) rec.generators.push_back(x);
    std::int64_t certified = t.exact_radius() > 0 ? t.exact_radius() : std::numeric_limits<std::int64_t>::max();
    for (const auto& g : t.domain()) {
        if (g.is_identity()) continue;
        auto vg = t.exact(g);
        if (!vg || *vg > certified) continue;
        bool found = false;
        for (const auto& h : t.domain()) {
            auto vh = t.exact(h);
            if (!vh || *vh != *vg - 1) continue;
            Element step = groups::multiply(groups::inverse(h), g);
            if (auto vs = t.exact(step); vs && *vs == 1) {
                found = true;
                break;
            }
        }
        if (!found) {
            rec.is_word_length = false;
            rec.failing = g;
            return rec;
        }
    }
    rec.is_word_length = true;
    return rec;
}

LipschitzResult lipschitz_compare(const LengthTable& t1, const LengthTable& t2, std::int64_t C) {
    if (!(t1.group() == t2.group())) throw Error(Errc::GroupMismatch, "comparing tables over different groups");
    if (C < 1) throw Error(Errc::ConfigError, "C must be >= 1");
    for (const auto& g : t1.domain()) {
        if (g.is_identity()) continue;
        auto v1 = t1.exact(g);
        auto v2 = t2.exact(g);
        if (!v1 || !v2) continue;
        if (*v1 > C * *v2) return {false, g};
    }
    return {true, std::nullopt};
}

} // namespace lenlab::lengths

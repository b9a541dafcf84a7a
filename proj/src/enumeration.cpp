#include "lenlab/enumeration.hpp"

#include <unordered_set>

namespace lenlab::groups {

GeneratingSet GeneratingSet::standard(const GroupSpec& g) {
    std::vector<Element> els;
    switch (g.variant) {
        case Variant::FreeGroup:
            for (int i = 0; i < g.param; ++i) {
                els.push_back(Element::from_letters(g, {{i, 1}}));
                els.push_back(Element::from_letters(g, {{i, -1}}));
            }
            break;
        case Variant::FreeAbelian:
            for (int i = 0; i < g.param; ++i) {
                Element::ExpVec e(g.param, 0);
                e[i] = 1;
                els.push_back(Element::from_exponents(g, e));
                e[i] = -1;
                els.push_back(Element::from_exponents(g, e));
            }
            break;
        case Variant::CyclicFinite:
            els.push_back(Element::from_cyclic(g, 1));
            if (g.param > 2) els.push_back(Element::from_cyclic(g, g.param - 1));
            break;
        case Variant::VcGroup:
            els.push_back(Element::from_vc(g, 1, 0));
            els.push_back(Element::from_vc(g, -1, 0));
            els.push_back(Element::from_vc(g, 0, 1));
            els.push_back(Element::from_vc(g, 0, 3));
            break;
        case Variant::AbTorsion: {
            Element::ExpVec e(g.param + 1, 0);
            e[0] = 1;
            els.push_back(Element::from_exponents(g, e));
            e[0] = 3;
            els.push_back(Element::from_exponents(g, e));
            e[0] = 0;
            for (int i = 1; i <= g.param; ++i) {
                e[i] = 1;
                els.push_back(Element::from_exponents(g, e));
                e[i] = 0;
            }
            break;
        }
        case Variant::DirectProduct: {
            for (std::size_t i = 0; i < g.factors.size(); ++i) {
                auto sub = standard(g.factors[i]);
                for (const auto& x : sub.elements) {
                    Element::Components cs;
                    for (std::size_t j = 0; j < g.factors.size(); ++j)
                        cs.push_back(j == i ? x : Element::identity(g.factors[j]));
                    els.push_back(Element::from_components(g, cs));
                }
            }
            break;
        }
        case Variant::FreeProduct: {
            for (std::size_t i = 0; i < g.factors.size(); ++i) {
                auto sub = standard(g.factors[i]);
                for (const auto& x : sub.elements)
                    els.push_back(Element::from_syllables(g, {{static_cast<int>(i), x}}));
            }
            break;
        }
    }
    GeneratingSet X{g, std::move(els), true};
    return X;
}

GeneratingSet GeneratingSet::from_elements(const GroupSpec& g, const std::vector<Element>& els) {
    GeneratingSet X{g, {}, false};
    std::unordered_set<std::string> seen;
    auto add = [&](const Element& e) {
        if (e.is_identity()) return;
        if (!(e.group() == g)) throw Error(Errc::GroupMismatch, "generator from a different group");
        if (seen.insert(e.token()).second) X.elements.push_back(e);
    };
    for (const auto& e : els) {
        add(e);
        add(inverse(e));
    }
    return X;
}

bool GeneratingSet::verify(std::size_t budget) {
    auto ord = group.order();
    if (!ord) {
        // No finite certificate for infinite variants; only the structural
        // standard sets are pre-verified.
        return is_verified_generating;
    }
    std::size_t count = 0;
    BallEnumerator it(*this, budget);
    while (it.next()) ++count;
    is_verified_generating = count == static_cast<std::size_t>(*ord);
    return is_verified_generating;
}

BallEnumerator::BallEnumerator(GeneratingSet X, std::size_t node_budget)
    : gens_(std::move(X)), budget_(node_budget) {
    Element id = Element::identity(gens_.group);
    seen_.insert(id.token());
    queue_.emplace_back(std::move(id), 0);
}

std::optional<std::pair<Element, int>> BallEnumerator::next() {
    if (queue_.empty()) return std::nullopt;
    auto [el, dist] = queue_.front();
    queue_.pop_front();
    for (const auto& x : gens_.elements) {
        Element n = multiply(el, x);
        if (seen_.insert(n.token()).second) {
            if (seen_.size() > budget_)
                throw Error(Errc::BudgetExceeded, "ball enumeration past " + std::to_string(budget_) + " nodes");
            queue_.emplace_back(std::move(n), dist + 1);
        }
    }
    return std::make_pair(std::move(el), dist);
}

std::vector<Element> ball(const GroupSpec& G, const GeneratingSet& X, int r, std::size_t budget_cap) {
    if (!(X.group == G)) throw Error(Errc::GroupMismatch, "generating set for a different group");
    if (r < 0) throw Error(Errc::ConfigError, "negative radius");
    std::vector<Element> out;
    BallEnumerator it(X, budget_cap);
    while (auto e = it.next()) {
        if (e->second > r) break;
        out.push_back(std::move(e->first));
        if (out.size() > budget_cap) throw Error(Errc::BudgetExceeded, "ball larger than cap");
    }
    return out;
}

std::vector<Element> conjugacy_class_in_ball(const GroupSpec& G, const Element& a,
                                             const GeneratingSet& X, int r) {
    if (a.is_identity()) throw Error(Errc::PreconditionFailed, "conjugacy class of the identity");
    std::vector<Element> out;
    std::unordered_set<std::string> seen;
    for (const auto& t : ball(G, X, r)) {
        Element c = conjugate(a, t);
        if (seen.insert(c.token()).second) out.push_back(std::move(c));
    }
    return out;
}

std::optional<int> word_length(const GeneratingSet& X, const Element& g, int r_max,
                               std::size_t budget_cap) {
    std::string target = g.token();
    BallEnumerator it(X, budget_cap);
    while (auto e = it.next()) {
        if (e->second > r_max) break;
        if (e->first.token() == target) return e->second;
    }
    return std::nullopt;
}

} // namespace lenlab::groups

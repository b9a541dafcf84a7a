#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lenlab/enumeration.hpp"
#include "lenlab/group.hpp"

namespace lenlab::lengths {

using groups::Element;
using groups::GeneratingSet;
using groups::GroupSpec;

/// A table entry. capped means the true value exceeds `value` (== the cap the
/// entry was computed under); capped entries are never treated as exact.
struct LengthValue {
    std::int64_t value = 0;
    bool capped = false;

    bool operator==(const LengthValue&) const = default;
};

/// Finite partial length function on an explicit domain.
class LengthTable {
public:
    LengthTable() = default;
    LengthTable(GroupSpec g, int exact_radius) : group_(std::move(g)), exact_radius_(exact_radius) {}

    const GroupSpec& group() const { return group_; }
    const std::vector<Element>& domain() const { return domain_; }
    int exact_radius() const { return exact_radius_; }

    void add(const Element& e, LengthValue v);
    bool contains(const Element& e) const;
    std::optional<LengthValue> get(const Element& e) const;
    /// Value if present and not capped.
    std::optional<std::int64_t> exact(const Element& e) const;

private:
    GroupSpec group_;
    std::vector<Element> domain_;
    std::unordered_map<std::string, LengthValue> values_;
    int exact_radius_ = 0;
};

struct DefaultRule {
    bool proper = false;   // false: Constant(base); true: ProperRamp(base)
    std::int64_t base = 1; // M, respectively M0

    static DefaultRule constant(std::int64_t m) { return {false, m}; }
    static DefaultRule proper_ramp(std::int64_t m0) { return {true, m0}; }
};

/// Symmetric weight function: finite support plus a default rule. The ramp
/// assigns w(g_i) = M0 + i (i >= 1) jointly to inverse pairs, in the canonical
/// BFS enumeration order of `enumeration` restricted to off-support elements.
struct WeightSpec {
    GroupSpec group;
    std::vector<std::pair<Element, std::int64_t>> support; // ordered, identity-free, symmetric
    DefaultRule rule;
    GeneratingSet enumeration; // ramp order; unused by Constant

    static WeightSpec make(const GroupSpec& g, std::vector<std::pair<Element, std::int64_t>> support,
                           DefaultRule rule, GeneratingSet enumeration);

    std::optional<std::int64_t> support_weight(const Element& e) const;
    /// All off-support elements with ramp weight <= cap, with their weights.
    std::vector<std::pair<Element, std::int64_t>> ramp_generators(std::int64_t cap) const;
    /// omega(e); for the ramp this enumerates until e is found (bounded by the
    /// node budget) and throws BudgetExceeded when the search runs out.
    std::int64_t weight_of(const Element& e, std::size_t probe_budget = groups::kDefaultBallCap) const;
};

struct WindowConstraint {
    LengthTable base;
    std::vector<Element> window; // the finite equality set F, subset of base.domain
};

struct AxiomViolation {
    std::string axiom; // "L1", "L2", "L3"
    std::string detail;
};

struct ValidationReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks L1-L3 on the table's domain; capped entries are treated as unknown.
ValidationReport validate_length_axioms(const LengthTable& t);

/// ell_omega on the given domain, exact up to `cap`. With a Constant(M)
/// default the closed form min(d_supp, M) is used, where d_supp is the
/// weighted shortest-path distance over support generators only; this is exact
/// because a single off-support factor already costs M. With ProperRamp the
/// engine runs Dijkstra over {h : omega(h) <= cap}, exact for values <= cap
/// since a decomposition of cost v uses only factors of weight <= v.
/// Values above cap become capped entries; with require_exact they raise
/// CapTooSmall instead. factor_count, when given, receives the geodesic factor
/// count the engine realized per domain token.
LengthTable length_from_weight(const WeightSpec& w, const std::vector<Element>& domain, std::int64_t cap,
                               bool require_exact = false,
                               std::unordered_map<std::string, int>* factor_count = nullptr);

/// Independent oracle: exhaustive minimum of sum(omega) over products of at
/// most max_factors candidates equal to g. Candidates with omega > cap are
/// excluded; the caller should pass an inverse-closed pool. nullopt when no
/// such product exists.
std::optional<std::int64_t> brute_force_length(const WeightSpec& w, const Element& g, int max_factors,
                                               const std::vector<Element>& candidates, std::int64_t cap);

/// BFS word-length distances from the identity; domain = ball(X, r).
LengthTable word_length_table(const GeneratingSet& X, int r,
                              std::size_t budget_cap = groups::kDefaultBallCap);

/// Weight function of Lemma-2.7 shape: base values on F, default elsewhere.
/// F must be symmetric, contain 1, and sit inside base's exact domain; the
/// default base must exceed max ell(F) (DefaultTooSmall otherwise).
WeightSpec wm_construction(const LengthTable& base, const std::vector<Element>& F, DefaultRule rule,
                           const GeneratingSet& enumeration);

/// (g o ell)(x) = ell(g^-1 x g) on the requested domain; points whose
/// conjugate falls outside base's domain are dropped and reported. Throws
/// EmptyDomain when nothing is computable.
LengthTable conjugate_length(const Element& g, const LengthTable& t, const std::vector<Element>& requested,
                             std::vector<Element>* dropped = nullptr);

struct Reconstruction {
    bool is_word_length = false;
    std::vector<Element> generators;     // X_ell when is_word_length
    std::optional<Element> failing;      // first g whose descent fails otherwise
};

/// Extracts X_ell = { x : ell(x) = 1 } and checks the one-step descent for
/// every non-identity g within the certified range.
Reconstruction reconstruct_word_length(const LengthTable& t);

struct LipschitzResult {
    bool bounded = false;
    std::optional<Element> witness; // first g with t1(g) > C t2(g)
};

LipschitzResult lipschitz_compare(const LengthTable& t1, const LengthTable& t2, std::int64_t C);

} // namespace lenlab::lengths

#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <unordered_set>
#include <vector>

#include "lenlab/group.hpp"

namespace lenlab::groups {

constexpr std::size_t kDefaultBallCap = 4'000'000;

/// Finite symmetric generating data for BFS enumeration. The listed order is
/// part of the contract: ball enumeration is shortlex with respect to it.
struct GeneratingSet {
    GroupSpec group;
    std::vector<Element> elements;
    bool is_verified_generating = false;

    /// Canonical generators per variant (a, a^-1, b, b^-1, ... style order).
    static GeneratingSet standard(const GroupSpec& g);
    /// Closes the list under inverses, drops identity elements, dedups while
    /// keeping first-occurrence order.
    static GeneratingSet from_elements(const GroupSpec& g, const std::vector<Element>& els);

    /// For finite groups: BFS closure reaches the declared order. For the
    /// standard sets of infinite catalog variants the certificate is
    /// structural. Returns the verdict and caches it in is_verified_generating.
    bool verify(std::size_t budget = kDefaultBallCap);
};

/// Streaming BFS from the identity over the X-labelled Cayley graph.
/// Deterministic: layer by layer, within a layer by parent order then
/// generator order (= shortlex over generator indices).
class BallEnumerator {
public:
    explicit BallEnumerator(GeneratingSet X, std::size_t node_budget = kDefaultBallCap);

    /// Next (element, word length) pair; nullopt once the group is exhausted.
    /// Throws BudgetExceeded when the node budget is hit.
    std::optional<std::pair<Element, int>> next();

private:
    GeneratingSet gens_;
    std::deque<std::pair<Element, int>> queue_;
    std::unordered_set<std::string> seen_;
    std::size_t budget_;
};

/// All elements with X-word-length <= r in canonical enumeration order
/// (identity first). Throws BudgetExceeded past the cap.
std::vector<Element> ball(const GroupSpec& G, const GeneratingSet& X, int r,
                          std::size_t budget_cap = kDefaultBallCap);

/// { a^t : t in ball(G, X, r) }, deduplicated, in first-occurrence order.
std::vector<Element> conjugacy_class_in_ball(const GroupSpec& G, const Element& a,
                                             const GeneratingSet& X, int r);

/// Exact X-word-length of g, or nullopt if g is not within radius r_max.
std::optional<int> word_length(const GeneratingSet& X, const Element& g, int r_max,
                               std::size_t budget_cap = kDefaultBallCap);

} // namespace lenlab::groups

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lenlab/graph.hpp"
#include "lenlab/length.hpp"

namespace lenlab::kernels {

using groups::Element;
using groups::GeneratingSet;
using groups::GroupSpec;
using lengths::LengthTable;
using lengths::WeightSpec;

struct Check {
    std::string description;
    std::string expected;
    std::string actual;
    bool pass = false;
};

enum class KernelStatus {
    Accepted,
    VacuouslyInD,
    NotFoundWithinRadius,
};

/// Audit trail of one proof-kernel run. overall is the conjunction of checks
/// (and false for NotFoundWithinRadius).
struct ConstructionReport {
    std::string kernel;
    std::vector<std::pair<std::string, std::string>> inputs;
    KernelStatus status = KernelStatus::NotFoundWithinRadius;
    std::optional<Element> witness;
    std::optional<WeightSpec> weight;
    std::vector<Check> checks;
    // candidate token -> first failing reason, for rejected candidates
    std::vector<std::pair<std::string, std::string>> rejected;
    bool overall = false;

    void add_check(const std::string& desc, const std::string& expected, const std::string& actual);
    void finalize();
};

/// Density kernel: searches g in BFS order, builds the weight omega_g
/// (d_i on (g^-1 a_i)^{+-1}, ell on F, M = max(ell(F) u d) + 1 elsewhere) and
/// accepts the first g with ell_{omega_g} = ell on F and
/// ell_{omega_g}(g^-1 a_i) = d_i for all i. Requires F symmetric with 1 and
/// all a_i^-1 a_j in F. An inconsistent d yields a vacuous pass.
ConstructionReport lemD_kernel(const LengthTable& base, const std::vector<Element>& F,
                               const std::vector<Element>& a, const graphs::DistanceVector& d,
                               const GeneratingSet& X, int search_radius);

/// Transitivity kernel: searches g with F^{g^-1} disjoint from F, builds omega
/// (ell0 on F, ell1(a^g) on F^{g^-1}, N + 1 elsewhere) and accepts when
/// ell_omega = ell0 on F and g^-1 o ell_omega = ell1 on F.
ConstructionReport tt_kernel(const LengthTable& ell0, const LengthTable& ell1,
                             const std::vector<Element>& F, const GeneratingSet& X, int search_radius);

/// Invariant-split check around a finite conjugacy class: reports whether t
/// lies in U = { ell : ell = 1 on x^G } and that conjugation preserves
/// membership on a sample. Throws ClassNotStabilized when the class still
/// grows from radius r to r + 1.
ConstructionReport icc_invariant_split(const LengthTable& t, const Element& x, const GeneratingSet& X,
                                       int r, int sample_radius = 2);

/// First g in BFS order with A^g disjoint from B; 1 must avoid A and B.
std::optional<Element> separating_conjugator(const std::vector<Element>& A, const std::vector<Element>& B,
                                             const GeneratingSet& X, int r);

/// Exhaustive verifier over Z/4Z x (Z/2Z)^k: every symmetric generating
/// subset X has k_X((2,0,...)) <= 2, so no word length meets the constant-3
/// length function at that point. Throws BudgetExceeded when 2^(pairs) blows
/// past subset_budget.
ConstructionReport ex_ab_exhaustive(int k, std::size_t subset_budget = 1u << 16);

/// Verifier for the <a,b | b^4, b^-1 a b = a^-1> obstruction: the algebraic
/// identities g^2 = b^2 (odd beta) / b g b^-1 = g^-1 (even beta) for
/// |alpha| <= alpha_bound, plus the extension-graph certificate that the
/// Cayley ball fails the Extension Property at (1, b, b^2, b^3).
ConstructionReport ex_vc_checks(int alpha_bound, int ball_radius = 6);

} // namespace lenlab::kernels

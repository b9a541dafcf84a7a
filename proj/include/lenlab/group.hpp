#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lenlab/error.hpp"

namespace lenlab::groups {

enum class Variant {
    FreeGroup,    // free group of rank >= 1
    FreeAbelian,  // Z^rank, rank >= 1
    CyclicFinite, // Z/nZ, n >= 2
    DirectProduct,
    FreeProduct,
    VcGroup,      // <a,b | b^4 = 1, b^-1 a b = a^-1>
    AbTorsion,    // Z/4Z x (Z/2Z)^k, k >= 1
};

const char* variant_name(Variant v);

/// Description of a cataloged group. Value type; equality is structural.
struct GroupSpec {
    Variant variant = Variant::FreeGroup;
    int param = 1;                  // rank / order / k, depending on variant
    std::vector<GroupSpec> factors; // DirectProduct / FreeProduct only

    bool operator==(const GroupSpec&) const = default;

    static GroupSpec free_group(int rank);
    static GroupSpec free_abelian(int rank);
    static GroupSpec cyclic(int order);
    static GroupSpec direct_product(std::vector<GroupSpec> fs);
    static GroupSpec free_product(std::vector<GroupSpec> fs);
    static GroupSpec vc();
    static GroupSpec ab_torsion(int k);

    bool is_abelian() const;
    /// Group order; nullopt means infinite.
    std::optional<std::int64_t> order() const;

    /// Compact token, e.g. "free:2", "cyclic:4", "vc", "abtorsion:2",
    /// "prod(free:1,cyclic:2)", "freeprod(cyclic:2,cyclic:3)".
    std::string to_string() const;
    static GroupSpec parse(const std::string& token);

    /// Throws ConfigError on malformed parameters.
    void validate() const;
};

/// Group element in canonical normal form. Immutable value type.
class Element {
public:
    // Reduced word for free groups: (generator index, nonzero exponent) runs,
    // adjacent generator indices distinct.
    using LetterRuns = std::vector<std::pair<int, std::int64_t>>;
    // Exponent vectors for FreeAbelian / AbTorsion.
    using ExpVec = std::vector<std::int64_t>;
    struct VcForm {
        std::int64_t alpha = 0;
        int beta = 0; // in [0, 4)
        bool operator==(const VcForm&) const = default;
    };
    // Alternating syllables of a free product: factor[i] is the index of the
    // free factor holding the non-identity syllable syll[i]; adjacent factor
    // indices differ.
    struct ProductWord {
        std::vector<int> factor;
        std::vector<Element> syll;
        bool operator==(const ProductWord&) const = default;
    };
    using Components = std::vector<Element>; // DirectProduct
    using Payload = std::variant<LetterRuns, ExpVec, std::int64_t, VcForm, ProductWord, Components>;

    Element() = default;

    static Element identity(const GroupSpec& g);
    /// Free-group word from possibly unreduced letter runs.
    static Element from_letters(const GroupSpec& g, const LetterRuns& runs);
    /// FreeAbelian or AbTorsion element from raw exponents (reduced mod the moduli).
    static Element from_exponents(const GroupSpec& g, const ExpVec& e);
    static Element from_cyclic(const GroupSpec& g, std::int64_t k);
    static Element from_vc(const GroupSpec& g, std::int64_t alpha, std::int64_t beta);
    static Element from_components(const GroupSpec& g, const Components& comps);
    /// Free-product element from a possibly unreduced syllable list.
    static Element from_syllables(const GroupSpec& g, const std::vector<std::pair<int, Element>>& sylls);

    const GroupSpec& group() const { return group_; }
    const Payload& payload() const { return payload_; }

    bool is_identity() const;
    bool operator==(const Element& o) const { return group_ == o.group_ && payload_ == o.payload_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    /// Canonical string token; see the per-variant grammar in README.
    std::string token() const;
    static Element parse(const GroupSpec& g, const std::string& token);

private:
    Element(GroupSpec g, Payload p) : group_(std::move(g)), payload_(std::move(p)) {}

    GroupSpec group_;
    Payload payload_;
};

/// Canonical product ab. Throws GroupMismatch if specs differ.
Element multiply(const Element& a, const Element& b);
Element inverse(const Element& a);
/// b^-1 a b.
Element conjugate(const Element& a, const Element& b);

struct ElementHash {
    std::size_t operator()(const Element& e) const;
};

} // namespace lenlab::groups

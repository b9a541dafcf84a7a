#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lenlab/enumeration.hpp"
#include "lenlab/group.hpp"

namespace lenlab::gstar {

using groups::Element;
using groups::GeneratingSet;
using groups::GroupSpec;

/// One syllable of a word in G * <x>: either a group element or a power of x.
struct Syllable {
    bool is_x = false;
    Element g;               // when !is_x
    std::int64_t xexp = 0;   // when is_x, nonzero after normalization

    static Syllable group_elem(Element e) { return Syllable{false, std::move(e), 0}; }
    static Syllable x_power(std::int64_t k) { return Syllable{true, Element{}, k}; }
};

/// Element of G * <x> in alternating-syllable normal form.
class GStarWord {
public:
    static GStarWord normalize(const GroupSpec& g, const std::vector<Syllable>& raw);

    /// Text grammar: syllables separated by spaces. "x" or "x^k" are x-powers;
    /// "{...}" wraps a full Element token; any other token is parsed as an
    /// Element token (for free groups, a bare letter like "a" means exponent 1
    /// and "a^-1" is accepted alongside "a-1").
    static GStarWord parse(const GroupSpec& g, const std::string& text);

    const GroupSpec& group() const { return group_; }
    const std::vector<Syllable>& syllables() const { return sylls_; }
    bool is_trivial() const { return sylls_.empty(); }

    std::string text() const;

    bool operator==(const GStarWord& o) const;

    /// Normalized concatenation uv.
    friend GStarWord concat(const GStarWord& u, const GStarWord& v);

private:
    GroupSpec group_;
    std::vector<Syllable> sylls_;
};

/// g^k by binary exponentiation.
Element power(const Element& g, std::int64_t k);

/// Image of w under the evaluation homomorphism fixing G and sending x to g.
Element evaluate(const GStarWord& w, const Element& g);

/// Commutator word [x^k, a] = x^-k a^-1 x^k a.
GStarWord commutator_word(const GroupSpec& g, std::int64_t xexp, const Element& a);

/// First g in ball order with evaluate(w, g) != 1 for every w in I, or nullopt
/// within r_max. Throws TrivialWordInI if some w normalizes to the empty word.
std::optional<Element> mif_witness(const GroupSpec& G, const std::vector<GStarWord>& I,
                                   const GeneratingSet& X, int r_max);

struct MixedIdentityCheck {
    bool holds_on_ball = false;
    std::optional<Element> counterexample; // BFS-first, when !holds_on_ball
    int radius = 0;
};

MixedIdentityCheck check_mixed_identity(const GroupSpec& G, const GStarWord& w,
                                        const GeneratingSet& X, int r);

} // namespace lenlab::gstar

#include "lenlab/gstar.hpp"

#include <charconv>

namespace lenlab::gstar {

GStarWord GStarWord::normalize(const GroupSpec& g, const std::vector<Syllable>& raw) {
    GStarWord w;
    w.group_ = g;
    for (const auto& s : raw) {
        // A full cancellation exposes a new same-kind adjacency, so the merged
        // remainder is reprocessed against the new tail.
        std::vector<Syllable> pending{s};
        while (!pending.empty()) {
            Syllable cur = pending.back();
            pending.pop_back();
            if (cur.is_x) {
                if (cur.xexp == 0) continue;
                if (!w.sylls_.empty() && w.sylls_.back().is_x) {
                    cur.xexp += w.sylls_.back().xexp;
                    w.sylls_.pop_back();
                    if (cur.xexp != 0) pending.push_back(cur);
                    continue;
                }
                w.sylls_.push_back(cur);
            } else {
                if (!(cur.g.group() == g))
                    throw Error(Errc::GroupMismatch, "syllable from a different group");
                if (cur.g.is_identity()) continue;
                if (!w.sylls_.empty() && !w.sylls_.back().is_x) {
                    cur.g = groups::multiply(w.sylls_.back().g, cur.g);
                    w.sylls_.pop_back();
                    if (!cur.g.is_identity()) pending.push_back(cur);
                    continue;
                }
                w.sylls_.push_back(cur);
            }
        }
    }
    return w;
}

bool GStarWord::operator==(const GStarWord& o) const {
    if (!(group_ == o.group_) || sylls_.size() != o.sylls_.size()) return false;
    for (std::size_t i = 0; i < sylls_.size(); ++i) {
        const auto& a = sylls_[i];
        const auto& b = o.sylls_[i];
        if (a.is_x != b.is_x) return false;
        if (a.is_x ? (a.xexp != b.xexp) : (a.g != b.g)) return false;
    }
    return true;
}

GStarWord concat(const GStarWord& u, const GStarWord& v) {
    if (!(u.group_ == v.group_)) throw Error(Errc::GroupMismatch, "concat across groups");
    std::vector<Syllable> raw = u.sylls_;
    raw.insert(raw.end(), v.sylls_.begin(), v.sylls_.end());
    return GStarWord::normalize(u.group_, raw);
}

namespace {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '{') ++depth;
        if (c == '}') --depth;
        if (c == ' ' && depth == 0) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::int64_t parse_exp(const std::string& s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw Error(Errc::ParseError, "bad exponent '" + s + "'");
    return v;
}

} // namespace

GStarWord GStarWord::parse(const GroupSpec& g, const std::string& text) {
    std::vector<Syllable> raw;
    for (const auto& tok : tokenize(text)) {
        if (tok == "x") {
            raw.push_back(Syllable::x_power(1));
        } else if (tok.rfind("x^", 0) == 0) {
            raw.push_back(Syllable::x_power(parse_exp(tok.substr(2))));
        } else if (tok.front() == '{' && tok.back() == '}') {
            raw.push_back(Syllable::group_elem(Element::parse(g, tok.substr(1, tok.size() - 2))));
        } else {
            std::string t = tok;
            if (g.variant == groups::Variant::FreeGroup) {
                auto caret = t.find('^');
                if (caret != std::string::npos) t.erase(caret, 1);
                if (t.size() == 1) t += '1';
            }
            raw.push_back(Syllable::group_elem(Element::parse(g, t)));
        }
    }
    return normalize(g, raw);
}

std::string GStarWord::text() const {
    if (sylls_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < sylls_.size(); ++i) {
        if (i) s += ' ';
        if (sylls_[i].is_x) {
            s += "x^" + std::to_string(sylls_[i].xexp);
        } else {
            std::string t = sylls_[i].g.token();
            s += t.find(' ') == std::string::npos ? t : "{" + t + "}";
        }
    }
    return s;
}

Element power(const Element& g, std::int64_t k) {
    Element base = k < 0 ? groups::inverse(g) : g;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    Element acc = Element::identity(g.group());
    while (e) {
        if (e & 1) acc = groups::multiply(acc, base);
        base = groups::multiply(base, base);
        e >>= 1;
    }
    return acc;
}

Element evaluate(const GStarWord& w, const Element& g) {
    if (!(g.group() == w.group())) throw Error(Errc::GroupMismatch, "evaluate in a different group");
    Element acc = Element::identity(w.group());
    for (const auto& s : w.syllables())
        acc = groups::multiply(acc, s.is_x ? power(g, s.xexp) : s.g);
    return acc;
}

GStarWord commutator_word(const GroupSpec& g, std::int64_t xexp, const Element& a) {
    return GStarWord::normalize(g, {Syllable::x_power(-xexp), Syllable::group_elem(groups::inverse(a)),
                                    Syllable::x_power(xexp), Syllable::group_elem(a)});
}

std::optional<Element> mif_witness(const GroupSpec& G, const std::vector<GStarWord>& I,
                                   const GeneratingSet& X, int r_max) {
    for (const auto& w : I)
        if (w.is_trivial())
            throw Error(Errc::TrivialWordInI, "trivial word makes the search vacuous");
    groups::BallEnumerator it(X);
    while (auto e = it.next()) {
        if (e->second > r_max) break;
        bool all_nontrivial = true;
        for (const auto& w : I) {
            if (evaluate(w, e->first).is_identity()) {
                all_nontrivial = false;
                break;
            }
        }
        if (all_nontrivial) return e->first;
    }
    return std::nullopt;
}

MixedIdentityCheck check_mixed_identity(const GroupSpec& G, const GStarWord& w,
                                        const GeneratingSet& X, int r) {
    MixedIdentityCheck res;
    res.radius = r;
    groups::BallEnumerator it(X);
    while (auto e = it.next()) {
        if (e->second > r) break;
        if (!evaluate(w, e->first).is_identity()) {
            res.holds_on_ball = false;
            res.counterexample = e->first;
            return res;
        }
    }
    res.holds_on_ball = true;
    return res;
}

} // namespace lenlab::gstar

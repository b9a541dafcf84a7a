#include "lenlab/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

namespace lenlab::groups {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::FreeGroup: return "FreeGroup";
        case Variant::FreeAbelian: return "FreeAbelian";
        case Variant::CyclicFinite: return "CyclicFinite";
        case Variant::DirectProduct: return "DirectProduct";
        case Variant::FreeProduct: return "FreeProduct";
        case Variant::VcGroup: return "VcGroup";
        case Variant::AbTorsion: return "AbTorsion";
    }
    return "?";
}

GroupSpec GroupSpec::free_group(int rank) {
    GroupSpec g{Variant::FreeGroup, rank, {}};
    g.validate();
    return g;
}
GroupSpec GroupSpec::free_abelian(int rank) {
    GroupSpec g{Variant::FreeAbelian, rank, {}};
    g.validate();
    return g;
}
GroupSpec GroupSpec::cyclic(int order) {
    GroupSpec g{Variant::CyclicFinite, order, {}};
    g.validate();
    return g;
}
GroupSpec GroupSpec::direct_product(std::vector<GroupSpec> fs) {
    GroupSpec g{Variant::DirectProduct, 0, std::move(fs)};
    g.validate();
    return g;
}
GroupSpec GroupSpec::free_product(std::vector<GroupSpec> fs) {
    GroupSpec g{Variant::FreeProduct, 0, std::move(fs)};
    g.validate();
    return g;
}
GroupSpec GroupSpec::vc() { return GroupSpec{Variant::VcGroup, 0, {}}; }
GroupSpec GroupSpec::ab_torsion(int k) {
    GroupSpec g{Variant::AbTorsion, k, {}};
    g.validate();
    return g;
}

void GroupSpec::validate() const {
    switch (variant) {
        case Variant::FreeGroup:
            if (param < 1 || param > 26) throw Error(Errc::ConfigError, "free group rank must be in [1, 26]");
            break;
        case Variant::FreeAbelian:
            if (param < 1) throw Error(Errc::ConfigError, "free abelian rank must be >= 1");
            break;
        case Variant::CyclicFinite:
            if (param < 2) throw Error(Errc::ConfigError, "cyclic order must be >= 2");
            break;
        case Variant::AbTorsion:
            if (param < 1 || param > 24) throw Error(Errc::ConfigError, "abtorsion k must be in [1, 24]");
            break;
        case Variant::DirectProduct:
        case Variant::FreeProduct:
            if (factors.empty()) throw Error(Errc::ConfigError, "product needs at least one factor");
            for (const auto& f : factors) f.validate();
            break;
        case Variant::VcGroup:
            break;
    }
}

bool GroupSpec::is_abelian() const {
    switch (variant) {
        case Variant::FreeAbelian:
        case Variant::CyclicFinite:
        case Variant::AbTorsion:
            return true;
        case Variant::FreeGroup:
            return param == 1;
        case Variant::DirectProduct:
            return std::all_of(factors.begin(), factors.end(), [](const auto& f) { return f.is_abelian(); });
        case Variant::FreeProduct: {
            if (factors.size() == 1) return factors[0].is_abelian();
            return false; // nontrivial free products are non-abelian
        }
        case Variant::VcGroup:
            return false;
    }
    return false;
}

std::optional<std::int64_t> GroupSpec::order() const {
    switch (variant) {
        case Variant::FreeGroup:
        case Variant::FreeAbelian:
        case Variant::VcGroup:
            return std::nullopt;
        case Variant::CyclicFinite:
            return param;
        case Variant::AbTorsion:
            return std::int64_t{1} << (param + 2);
        case Variant::DirectProduct: {
            std::int64_t n = 1;
            for (const auto& f : factors) {
                auto o = f.order();
                if (!o) return std::nullopt;
                n *= *o;
            }
            return n;
        }
        case Variant::FreeProduct: {
            if (factors.size() == 1) return factors[0].order();
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::string GroupSpec::to_string() const {
    switch (variant) {
        case Variant::FreeGroup: return "free:" + std::to_string(param);
        case Variant::FreeAbelian: return "abelian:" + std::to_string(param);
        case Variant::CyclicFinite: return "cyclic:" + std::to_string(param);
        case Variant::VcGroup: return "vc";
        case Variant::AbTorsion: return "abtorsion:" + std::to_string(param);
        case Variant::DirectProduct:
        case Variant::FreeProduct: {
            std::string s = variant == Variant::DirectProduct ? "prod(" : "freeprod(";
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) s += ',';
                s += factors[i].to_string();
            }
            return s + ")";
        }
    }
    return "?";
}

namespace {

std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '{' || c == '<') ++depth;
        if (c == ')' || c == '}' || c == '>') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& s) {
    std::int64_t v = 0;
    auto t = trim(s);
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || p != t.data() + t.size())
        throw Error(Errc::ParseError, "bad integer '" + s + "'");
    return v;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

GroupSpec GroupSpec::parse(const std::string& token) {
    std::string t = trim(token);
    auto prefixed = [&](const char* p) {
        return t.rfind(p, 0) == 0;
    };
    if (t == "vc") return vc();
    if (prefixed("free:")) return free_group(static_cast<int>(parse_int(t.substr(5))));
    if (prefixed("abelian:")) return free_abelian(static_cast<int>(parse_int(t.substr(8))));
    if (prefixed("cyclic:")) return cyclic(static_cast<int>(parse_int(t.substr(7))));
    if (prefixed("abtorsion:")) return ab_torsion(static_cast<int>(parse_int(t.substr(10))));
    if ((prefixed("prod(") || prefixed("freeprod(")) && t.back() == ')') {
        bool direct = prefixed("prod(");
        std::string inner = t.substr(direct ? 5 : 9);
        inner.pop_back();
        std::vector<GroupSpec> fs;
        for (const auto& part : split_top_level(inner, ','))
            fs.push_back(GroupSpec::parse(part));
        return direct ? direct_product(std::move(fs)) : free_product(std::move(fs));
    }
    throw Error(Errc::ParseError, "unknown group token '" + token + "'");
}

// ---------------------------------------------------------------------------
// Element construction / normalization

Element Element::identity(const GroupSpec& g) {
    switch (g.variant) {
        case Variant::FreeGroup: return Element(g, LetterRuns{});
        case Variant::FreeAbelian: return Element(g, ExpVec(g.param, 0));
        case Variant::CyclicFinite: return Element(g, std::int64_t{0});
        case Variant::VcGroup: return Element(g, VcForm{});
        case Variant::AbTorsion: return Element(g, ExpVec(g.param + 1, 0));
        case Variant::DirectProduct: {
            Components cs;
            cs.reserve(g.factors.size());
            for (const auto& f : g.factors) cs.push_back(identity(f));
            return Element(g, std::move(cs));
        }
        case Variant::FreeProduct: return Element(g, ProductWord{});
    }
    throw Error(Errc::ConfigError, "bad variant");
}

Element Element::from_letters(const GroupSpec& g, const LetterRuns& runs) {
    if (g.variant != Variant::FreeGroup) throw Error(Errc::GroupMismatch, "from_letters needs a free group");
    LetterRuns out;
    for (auto [gen, exp] : runs) {
        if (gen < 0 || gen >= g.param) throw Error(Errc::ParseError, "generator index out of range");
        if (exp == 0) continue;
        if (!out.empty() && out.back().first == gen) {
            out.back().second += exp;
            if (out.back().second == 0) out.pop_back();
        } else {
            out.emplace_back(gen, exp);
        }
    }
    // A merge can expose a new adjacency only through empty runs, which the
    // loop above already removes; the result is fully reduced.
    return Element(g, std::move(out));
}

Element Element::from_exponents(const GroupSpec& g, const ExpVec& e) {
    if (g.variant == Variant::FreeAbelian) {
        if (static_cast<int>(e.size()) != g.param) throw Error(Errc::ParseError, "exponent arity mismatch");
        return Element(g, e);
    }
    if (g.variant == Variant::AbTorsion) {
        if (static_cast<int>(e.size()) != g.param + 1) throw Error(Errc::ParseError, "exponent arity mismatch");
        ExpVec r(e.size());
        r[0] = mod(e[0], 4);
        for (std::size_t i = 1; i < e.size(); ++i) r[i] = mod(e[i], 2);
        return Element(g, std::move(r));
    }
    throw Error(Errc::GroupMismatch, "from_exponents needs an abelian variant");
}

Element Element::from_cyclic(const GroupSpec& g, std::int64_t k) {
    if (g.variant != Variant::CyclicFinite) throw Error(Errc::GroupMismatch, "from_cyclic needs CyclicFinite");
    return Element(g, mod(k, g.param));
}

Element Element::from_vc(const GroupSpec& g, std::int64_t alpha, std::int64_t beta) {
    if (g.variant != Variant::VcGroup) throw Error(Errc::GroupMismatch, "from_vc needs VcGroup");
    return Element(g, VcForm{alpha, static_cast<int>(mod(beta, 4))});
}

Element Element::from_components(const GroupSpec& g, const Components& comps) {
    if (g.variant != Variant::DirectProduct) throw Error(Errc::GroupMismatch, "from_components needs DirectProduct");
    if (comps.size() != g.factors.size()) throw Error(Errc::ParseError, "component arity mismatch");
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (!(comps[i].group() == g.factors[i])) throw Error(Errc::GroupMismatch, "component group mismatch");
    return Element(g, comps);
}

Element Element::from_syllables(const GroupSpec& g, const std::vector<std::pair<int, Element>>& sylls) {
    if (g.variant != Variant::FreeProduct) throw Error(Errc::GroupMismatch, "from_syllables needs FreeProduct");
    ProductWord w;
    for (const auto& [idx, el] : sylls) {
        if (idx < 0 || idx >= static_cast<int>(g.factors.size()))
            throw Error(Errc::ParseError, "factor index out of range");
        if (!(el.group() == g.factors[idx])) throw Error(Errc::GroupMismatch, "syllable group mismatch");
        if (el.is_identity()) continue;
        if (!w.factor.empty() && w.factor.back() == idx) {
            Element merged = multiply(w.syll.back(), el);
            w.factor.pop_back();
            w.syll.pop_back();
            if (!merged.is_identity()) {
                w.factor.push_back(idx);
                w.syll.push_back(std::move(merged));
            }
        } else {
            w.factor.push_back(idx);
            w.syll.push_back(el);
        }
    }
    return Element(g, std::move(w));
}

bool Element::is_identity() const {
    return std::visit(
        [](const auto& p) -> bool {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, LetterRuns>) return p.empty();
            else if constexpr (std::is_same_v<T, ExpVec>)
                return std::all_of(p.begin(), p.end(), [](auto v) { return v == 0; });
            else if constexpr (std::is_same_v<T, std::int64_t>) return p == 0;
            else if constexpr (std::is_same_v<T, VcForm>) return p.alpha == 0 && p.beta == 0;
            else if constexpr (std::is_same_v<T, ProductWord>) return p.factor.empty();
            else // Components
                return std::all_of(p.begin(), p.end(), [](const Element& e) { return e.is_identity(); });
        },
        payload_);
}

// ---------------------------------------------------------------------------
// Arithmetic

Element multiply(const Element& a, const Element& b) {
    if (!(a.group() == b.group())) throw Error(Errc::GroupMismatch, "multiply across different groups");
    const GroupSpec& g = a.group();
    switch (g.variant) {
        case Variant::FreeGroup: {
            Element::LetterRuns runs = std::get<Element::LetterRuns>(a.payload());
            const auto& rb = std::get<Element::LetterRuns>(b.payload());
            runs.insert(runs.end(), rb.begin(), rb.end());
            return Element::from_letters(g, runs);
        }
        case Variant::FreeAbelian:
        case Variant::AbTorsion: {
            auto e = std::get<Element::ExpVec>(a.payload());
            const auto& eb = std::get<Element::ExpVec>(b.payload());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            return Element::from_exponents(g, e);
        }
        case Variant::CyclicFinite:
            return Element::from_cyclic(g, std::get<std::int64_t>(a.payload()) + std::get<std::int64_t>(b.payload()));
        case Variant::VcGroup: {
            // a^p b^q . a^r b^s = a^{p + (-1)^q r} b^{(q+s) mod 4}
            auto x = std::get<Element::VcForm>(a.payload());
            auto y = std::get<Element::VcForm>(b.payload());
            std::int64_t sign = (x.beta % 2 == 0) ? 1 : -1;
            return Element::from_vc(g, x.alpha + sign * y.alpha, x.beta + y.beta);
        }
        case Variant::DirectProduct: {
            auto ca = std::get<Element::Components>(a.payload());
            const auto& cb = std::get<Element::Components>(b.payload());
            for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = multiply(ca[i], cb[i]);
            return Element::from_components(g, ca);
        }
        case Variant::FreeProduct: {
            const auto& wa = std::get<Element::ProductWord>(a.payload());
            const auto& wb = std::get<Element::ProductWord>(b.payload());
            std::vector<std::pair<int, Element>> sylls;
            sylls.reserve(wa.factor.size() + wb.factor.size());
            for (std::size_t i = 0; i < wa.factor.size(); ++i) sylls.emplace_back(wa.factor[i], wa.syll[i]);
            for (std::size_t i = 0; i < wb.factor.size(); ++i) sylls.emplace_back(wb.factor[i], wb.syll[i]);
            return Element::from_syllables(g, sylls);
        }
    }
    throw Error(Errc::ConfigError, "bad variant");
}

Element inverse(const Element& a) {
    const GroupSpec& g = a.group();
    switch (g.variant) {
        case Variant::FreeGroup: {
            const auto& runs = std::get<Element::LetterRuns>(a.payload());
            Element::LetterRuns out;
            out.reserve(runs.size());
            for (auto it = runs.rbegin(); it != runs.rend(); ++it) out.emplace_back(it->first, -it->second);
            return Element::from_letters(g, out);
        }
        case Variant::FreeAbelian:
        case Variant::AbTorsion: {
            auto e = std::get<Element::ExpVec>(a.payload());
            for (auto& v : e) v = -v;
            return Element::from_exponents(g, e);
        }
        case Variant::CyclicFinite:
            return Element::from_cyclic(g, -std::get<std::int64_t>(a.payload()));
        case Variant::VcGroup: {
            auto x = std::get<Element::VcForm>(a.payload());
            std::int64_t sign = (x.beta % 2 == 0) ? 1 : -1;
            return Element::from_vc(g, -sign * x.alpha, -x.beta);
        }
        case Variant::DirectProduct: {
            auto cs = std::get<Element::Components>(a.payload());
            for (auto& c : cs) c = inverse(c);
            return Element::from_components(g, cs);
        }
        case Variant::FreeProduct: {
            const auto& w = std::get<Element::ProductWord>(a.payload());
            std::vector<std::pair<int, Element>> sylls;
            sylls.reserve(w.factor.size());
            for (std::size_t i = w.factor.size(); i-- > 0;) sylls.emplace_back(w.factor[i], inverse(w.syll[i]));
            return Element::from_syllables(g, sylls);
        }
    }
    throw Error(Errc::ConfigError, "bad variant");
}

Element conjugate(const Element& a, const Element& b) {
    return multiply(multiply(inverse(b), a), b);
}

// ---------------------------------------------------------------------------
// Token grammar

std::string Element::token() const {
    const GroupSpec& g = group_;
    switch (g.variant) {
        case Variant::FreeGroup: {
            const auto& runs = std::get<LetterRuns>(payload_);
            if (runs.empty()) return "1";
            std::string s;
            for (std::size_t i = 0; i < runs.size(); ++i) {
                if (i) s += ' ';
                s += static_cast<char>('a' + runs[i].first);
                s += std::to_string(runs[i].second);
            }
            return s;
        }
        case Variant::FreeAbelian:
        case Variant::AbTorsion: {
            const auto& e = std::get<ExpVec>(payload_);
            std::string s = "(";
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(e[i]);
            }
            return s + ")";
        }
        case Variant::CyclicFinite:
            return std::to_string(std::get<std::int64_t>(payload_));
        case Variant::VcGroup: {
            const auto& v = std::get<VcForm>(payload_);
            return "a^" + std::to_string(v.alpha) + " b^" + std::to_string(v.beta);
        }
        case Variant::DirectProduct: {
            const auto& cs = std::get<Components>(payload_);
            std::string s = "<";
            for (std::size_t i = 0; i < cs.size(); ++i) {
                if (i) s += " ; ";
                s += cs[i].token();
            }
            return s + ">";
        }
        case Variant::FreeProduct: {
            const auto& w = std::get<ProductWord>(payload_);
            if (w.factor.empty()) return "1";
            std::string s;
            for (std::size_t i = 0; i < w.factor.size(); ++i) {
                if (i) s += ' ';
                s += "f" + std::to_string(w.factor[i]) + ":{" + w.syll[i].token() + "}";
            }
            return s;
        }
    }
    return "?";
}

Element Element::parse(const GroupSpec& g, const std::string& token) {
    std::string t = trim(token);
    switch (g.variant) {
        case Variant::FreeGroup: {
            if (t == "1") return identity(g);
            LetterRuns runs;
            for (const auto& part0 : split_top_level(t, ' ')) {
                auto part = trim(part0);
                if (part.empty()) continue;
                if (part.size() < 2 || part[0] < 'a' || part[0] >= 'a' + g.param)
                    throw Error(Errc::ParseError, "bad free-group token '" + part + "'");
                runs.emplace_back(part[0] - 'a', parse_int(part.substr(1)));
            }
            return from_letters(g, runs);
        }
        case Variant::FreeAbelian:
        case Variant::AbTorsion: {
            if (t.size() < 2 || t.front() != '(' || t.back() != ')')
                throw Error(Errc::ParseError, "bad exponent-vector token '" + t + "'");
            ExpVec e;
            for (const auto& part : split_top_level(t.substr(1, t.size() - 2), ','))
                e.push_back(parse_int(part));
            return from_exponents(g, e);
        }
        case Variant::CyclicFinite:
            return from_cyclic(g, parse_int(t));
        case Variant::VcGroup: {
            if (t == "1") return identity(g);
            auto apos = t.find("a^");
            auto bpos = t.find(" b^");
            if (apos != 0 || bpos == std::string::npos)
                throw Error(Errc::ParseError, "bad vc token '" + t + "'");
            return from_vc(g, parse_int(t.substr(2, bpos - 2)), parse_int(t.substr(bpos + 3)));
        }
        case Variant::DirectProduct: {
            if (t.size() < 2 || t.front() != '<' || t.back() != '>')
                throw Error(Errc::ParseError, "bad product token '" + t + "'");
            auto parts = split_top_level(t.substr(1, t.size() - 2), ';');
            if (parts.size() != g.factors.size()) throw Error(Errc::ParseError, "component arity mismatch");
            Components cs;
            for (std::size_t i = 0; i < parts.size(); ++i) cs.push_back(parse(g.factors[i], parts[i]));
            return from_components(g, cs);
        }
        case Variant::FreeProduct: {
            if (t == "1") return identity(g);
            std::vector<std::pair<int, Element>> sylls;
            std::size_t i = 0;
            while (i < t.size()) {
                while (i < t.size() && t[i] == ' ') ++i;
                if (i >= t.size()) break;
                if (t[i] != 'f') throw Error(Errc::ParseError, "bad syllable at '" + t.substr(i) + "'");
                std::size_t colon = t.find(':', i);
                if (colon == std::string::npos || colon + 1 >= t.size() || t[colon + 1] != '{')
                    throw Error(Errc::ParseError, "bad syllable at '" + t.substr(i) + "'");
                int idx = static_cast<int>(parse_int(t.substr(i + 1, colon - i - 1)));
                int depth = 0;
                std::size_t j = colon + 1;
                for (; j < t.size(); ++j) {
                    if (t[j] == '{') ++depth;
                    if (t[j] == '}' && --depth == 0) break;
                }
                if (j >= t.size()) throw Error(Errc::ParseError, "unbalanced braces in '" + t + "'");
                if (idx < 0 || idx >= static_cast<int>(g.factors.size()))
                    throw Error(Errc::ParseError, "factor index out of range");
                sylls.emplace_back(idx, parse(g.factors[idx], t.substr(colon + 2, j - colon - 2)));
                i = j + 1;
            }
            return from_syllables(g, sylls);
        }
    }
    throw Error(Errc::ConfigError, "bad variant");
}

std::size_t ElementHash::operator()(const Element& e) const {
    return std::hash<std::string>{}(e.token());
}

} // namespace lenlab::groups

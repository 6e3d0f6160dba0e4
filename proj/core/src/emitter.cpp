#include <jetprolong/emitter.hpp>
#include <jetprolong/errors.hpp>

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <sstream>

namespace jetprolong
{

namespace
{

using nlohmann::json;

bool scalar(const Dims &d)
{
    return d.n == 1 && d.m == 1;
}

std::string power_letter(char letter, int count)
{
    if (count == 0) {
        return "";
    }
    std::string s(1, letter);
    if (count > 1) {
        s += "^" + std::to_string(count);
    }
    return s;
}

std::string joined(const std::vector<int> &v, const char *sep)
{
    std::string s;
    for (std::size_t a = 0; a < v.size(); ++a) {
        s += (a ? sep : "") + std::to_string(v[a]);
    }
    return s;
}

struct Notation {
    bool latex;

    std::string head(const DerivativeSymbol &s) const
    {
        const char *name = s.head == Head::Y ? "Y" : "X";
        return latex ? std::string("\\mathcal{") + name + "}" : name;
    }

    std::string symbol(const DerivativeSymbol &s, const Dims &d) const
    {
        if (s.is_unit()) {
            return "1";
        }
        std::string out = head(s);
        if (scalar(d)) {
            const std::string sub = power_letter('x', s.x_order()) + power_letter('y', s.y_order());
            if (sub.empty()) {
                return out;
            }
            if (!latex) {
                return out + "_" + sub;
            }
            return out + "_" + (sub.size() == 1 ? sub : "{" + sub + "}");
        }
        if (latex) {
            out += "^{" + std::to_string(s.component) + "}";
            std::string sub;
            for (int i : s.x_indices) {
                sub += "x^{" + std::to_string(i) + "}";
            }
            for (int l : s.y_indices) {
                sub += "y^{" + std::to_string(l) + "}";
            }
            return sub.empty() ? out : out + "_{" + sub + "}";
        }
        out += "^" + std::to_string(s.component);
        std::vector<std::string> parts;
        for (int i : s.x_indices) {
            parts.push_back("x" + std::to_string(i));
        }
        for (int l : s.y_indices) {
            parts.push_back("y" + std::to_string(l));
        }
        if (parts.empty()) {
            return out;
        }
        out += "_{";
        for (std::size_t a = 0; a < parts.size(); ++a) {
            out += (a ? "," : "") + parts[a];
        }
        return out + "}";
    }

    // Base name and whether it needs parentheses before an exponent.
    std::pair<std::string, bool> variable(char letter, int component, const std::vector<int> &idx,
                                          const Dims &d) const
    {
        if (scalar(d)) {
            const std::string ord = std::to_string(idx.size());
            std::string s(1, letter);
            s += "_" + (latex && ord.size() > 1 ? "{" + ord + "}" : ord);
            return {s, latex};
        }
        std::string s(1, letter);
        if (latex) {
            s += "^{" + std::to_string(component) + "}_{" + joined(idx, ",") + "}";
            return {s, true};
        }
        s += "^" + std::to_string(component) + "_{" + joined(idx, ",") + "}";
        return {s, true};
    }

    std::string raised(const std::pair<std::string, bool> &base, int power) const
    {
        if (power == 1) {
            return base.first;
        }
        const std::string p = std::to_string(power);
        const std::string b = base.second ? "(" + base.first + ")" : base.first;
        return b + "^" + (latex && p.size() > 1 ? "{" + p + "}" : p);
    }

    std::string monomial(const JetMonomial &m, const Dims &d) const
    {
        std::string out;
        for (const auto &[v, power] : m.powers()) {
            if (!out.empty()) {
                out += " ";
            }
            out += raised(variable('y', v.component, v.indep, d), power);
        }
        return out;
    }

    // Signed summands of a combination: (negative?, magnitude and symbol).
    std::vector<std::pair<bool, std::string>> summands(const SymbolCombination &comb, const Dims &d) const
    {
        std::vector<std::pair<bool, std::string>> out;
        for (const auto &[sym, c] : comb) {
            const bool neg = c < 0;
            const BigInt mag = neg ? BigInt(-c) : c;
            std::string body;
            if (sym.is_unit()) {
                body = mag.str();
            } else {
                body = (mag == 1 ? std::string() : mag.str() + (latex ? "" : "*")) + symbol(sym, d);
            }
            out.emplace_back(neg, std::move(body));
        }
        return out;
    }
};

std::string join_signed(const std::vector<std::pair<bool, std::string>> &parts)
{
    if (parts.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t a = 0; a < parts.size(); ++a) {
        const auto &[neg, body] = parts[a];
        if (a == 0) {
            out += (neg ? "-" : "") + body;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

std::string render(const CoefficientPolynomial &p, const Notation &nt, bool compact)
{
    const Dims &d = p.dims();
    std::vector<std::pair<bool, std::string>> parts;
    for (const auto &[mono, comb] : p.terms()) {
        const std::string m = nt.monomial(mono, d);
        const bool only_unit = comb.size() == 1 && comb.begin()->first.is_unit();
        if (compact || mono.is_constant() || only_unit) {
            for (auto [neg, body] : nt.summands(comb, d)) {
                if (!m.empty()) {
                    if (body == "1") {
                        body = m;
                    } else {
                        body += " " + m;
                    }
                }
                parts.emplace_back(neg, std::move(body));
            }
        } else {
            parts.emplace_back(false, "[" + join_signed(nt.summands(comb, d)) + "] " + m);
        }
    }
    return join_signed(parts);
}

std::string render(const FaaPolynomial &p, const Notation &nt)
{
    const Dims &d = p.dims();
    std::vector<std::pair<bool, std::string>> parts;
    // highest derivative of f first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto &[mono, c] = *it;
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        std::string f;
        if (scalar(d)) {
            const std::string ord = std::to_string(mono.f.y_indices.size());
            f = "f_" + (nt.latex && ord.size() > 1 ? "{" + ord + "}" : ord);
        } else if (nt.latex) {
            f = "f_{";
            for (int l : mono.f.y_indices) {
                f += "y^{" + std::to_string(l) + "}";
            }
            f += "}";
        } else {
            f = "f_{" + joined(mono.f.y_indices, ",") + "}";
        }
        std::string body = (mag == 1 ? std::string() : mag.str() + (nt.latex ? "" : "*")) + f;
        for (std::size_t a = 0; a < mono.g.size();) {
            std::size_t b = a;
            while (b < mono.g.size() && mono.g[b] == mono.g[a]) {
                ++b;
            }
            body += " " + nt.raised(nt.variable('g', mono.g[a].component, mono.g[a].x_indices, d),
                                    static_cast<int>(b - a));
            a = b;
        }
        parts.emplace_back(neg, std::move(body));
    }
    return join_signed(parts);
}

json integer_json(const BigInt &c)
{
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(c);
    }
    return c.str();
}

BigInt integer_from(const json &v)
{
    if (v.is_number_integer()) {
        return BigInt(v.get<std::int64_t>());
    }
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
            throw DomainError("malformed integer string '" + s + "'");
        }
        return BigInt(s);
    }
    throw DomainError("expected an integer");
}

std::vector<int> int_list(const json &v)
{
    if (!v.is_array()) {
        throw DomainError("expected an index list");
    }
    std::vector<int> out;
    for (const auto &x : v) {
        if (!x.is_number_integer()) {
            throw DomainError("expected an integer index");
        }
        out.push_back(x.get<int>());
    }
    return out;
}

json parse_array(const std::string &text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw DomainError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw DomainError("expected a JSON array of terms");
    }
    return doc;
}

const json &member(const json &obj, const char *key)
{
    if (!obj.is_object() || !obj.contains(key)) {
        throw DomainError(std::string("term lacks '") + key + "'");
    }
    return obj.at(key);
}

} // namespace

std::string to_latex(const CoefficientPolynomial &p, LatexStyle style)
{
    return render(p, Notation{true}, style == LatexStyle::compact);
}

std::string to_latex(const FaaPolynomial &p)
{
    return render(p, Notation{true});
}

std::string to_latex(const DerivativeSymbol &s, const Dims &dims)
{
    return Notation{true}.symbol(s, dims);
}

std::string to_latex(const JetMonomial &m, const Dims &dims)
{
    return m.is_constant() ? "1" : Notation{true}.monomial(m, dims);
}

std::string to_text(const CoefficientPolynomial &p)
{
    return render(p, Notation{false}, false);
}

std::string to_text(const FaaPolynomial &p)
{
    return render(p, Notation{false});
}

std::string to_json(const CoefficientPolynomial &p)
{
    json out = json::array();
    for (const auto &[mono, comb] : p.terms()) {
        json m = json::array();
        for (const auto &v : mono.factors()) {
            m.push_back(json::array({v.component, v.indep}));
        }
        json c = json::array();
        for (const auto &[sym, x] : comb) {
            json s;
            if (sym.is_unit()) {
                s = json::array({"1"});
            } else {
                s = json::array({sym.head == Head::Y ? "Y" : "X", sym.component, sym.x_indices, sym.y_indices});
            }
            c.push_back(json::array({s, integer_json(x)}));
        }
        out.push_back({{"monomial", m}, {"coeff", c}});
    }
    return out.dump();
}

std::string to_json(const FaaPolynomial &p)
{
    json out = json::array();
    for (const auto &[mono, c] : p.terms()) {
        json g = json::array();
        for (const auto &gs : mono.g) {
            g.push_back(json::array({gs.component, gs.x_indices}));
        }
        out.push_back({{"f", mono.f.y_indices}, {"g", g}, {"coeff", integer_json(c)}});
    }
    return out.dump();
}

CoefficientPolynomial polynomial_from_json(const std::string &text, const Dims &dims)
{
    std::vector<RawTerm> raw;
    for (const auto &term : parse_array(text)) {
        std::vector<JetVariable> mono;
        for (const auto &v : member(term, "monomial")) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer()) {
                throw DomainError("malformed jet variable");
            }
            mono.emplace_back(v[0].get<int>(), int_list(v[1]));
        }
        for (const auto &entry : member(term, "coeff")) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() || entry[0].empty() ||
                !entry[0][0].is_string()) {
                throw DomainError("malformed coefficient entry");
            }
            const auto &s = entry[0];
            const auto headname = s[0].get<std::string>();
            DerivativeSymbol sym;
            if (headname == "1" && s.size() == 1) {
                sym = DerivativeSymbol::unit();
            } else if ((headname == "Y" || headname == "X") && s.size() == 4 && s[1].is_number_integer()) {
                sym = headname == "Y" ? DerivativeSymbol::Y(s[1].get<int>(), int_list(s[2]), int_list(s[3]))
                                      : DerivativeSymbol::X(s[1].get<int>(), int_list(s[2]), int_list(s[3]));
            } else {
                throw DomainError("malformed symbol");
            }
            raw.push_back({mono, sym, integer_from(entry[1])});
        }
    }
    return canonicalize(dims, raw);
}

FaaPolynomial faa_from_json(const std::string &text, const Dims &dims)
{
    FaaPolynomial out(dims);
    for (const auto &term : parse_array(text)) {
        FSymbol f{int_list(member(term, "f"))};
        for (int l : f.y_indices) {
            if (l < 1 || l > dims.m) {
                throw DimensionError("f index outside 1.." + std::to_string(dims.m));
            }
        }
        std::vector<GSymbol> gs;
        for (const auto &v : member(term, "g")) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer()) {
                throw DomainError("malformed g factor");
            }
            GSymbol g(v[0].get<int>(), int_list(v[1]));
            if (g.component < 1 || g.component > dims.m || g.x_indices.empty()) {
                throw DimensionError("g component outside 1.." + std::to_string(dims.m));
            }
            for (int i : g.x_indices) {
                if (i < 1 || i > dims.n) {
                    throw DimensionError("g index outside 1.." + std::to_string(dims.n));
                }
            }
            gs.push_back(std::move(g));
        }
        out.add_term(FaaMonomial(std::move(f), std::move(gs)), integer_from(member(term, "coeff")));
    }
    return out;
}

} // namespace jetprolong

#include "splice/text_format.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "splice/error.hpp"

namespace splice {

namespace {

std::string trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

std::vector<std::string> split_ws(std::string_view s)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// (U exponent, V exponent) of one monomial like "U^2V" or "1".
std::pair<int, int> parse_monomial(std::string_view term, bool allow_v)
{
    std::string t;
    for (char c : term)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty term");
    if (t == "1") return {0, 0};
    int u = 0, v = 0;
    std::size_t i = 0;
    while (i < t.size()) {
        char var = t[i++];
        if (var != 'U' && !(allow_v && var == 'V')) throw std::invalid_argument("bad monomial '" + t + "'");
        int e = 1;
        if (i < t.size() && t[i] == '^') {
            ++i;
            std::size_t start = i;
            while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
            if (start == i) throw std::invalid_argument("missing exponent in '" + t + "'");
            e = std::stoi(t.substr(start, i - start));
        }
        (var == 'U' ? u : v) += e;
    }
    return {u, v};
}

std::vector<std::pair<int, int>> parse_terms(std::string_view text, bool allow_v)
{
    std::vector<std::pair<int, int>> out;
    std::string s = trim(text);
    if (s == "0") return out;
    std::size_t start = 0;
    for (;;) {
        auto plus = s.find('+', start);
        out.push_back(parse_monomial(std::string_view(s).substr(start, plus - start), allow_v));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return out;
}

struct Line {
    int number;
    std::vector<std::string> tokens;
    std::string rest;  // text after the keyword, trimmed
};

std::vector<Line> lines_of(std::string_view text)
{
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++number;
        auto toks = split_ws(raw);
        if (!toks.empty() && toks[0][0] != '#') {
            std::string body = trim(raw);
            std::string rest = trim(std::string_view(body).substr(toks[0].size()));
            out.push_back({number, std::move(toks), std::move(rest)});
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

// "<kw> <src> -> <tgt> : <poly...>"
struct Arrow {
    std::string src, tgt, poly;
};

Arrow parse_arrow(const Line& l)
{
    const auto& t = l.tokens;
    if (t.size() < 6 || t[2] != "->" || t[4] != ":")
        throw ParseError(l.number, "expected '" + t[0] + " <src> -> <tgt> : <poly>'");
    std::string poly;
    for (std::size_t i = 5; i < t.size(); ++i) poly += t[i] + " ";
    return {t[1], t[3], poly};
}

Rational parse_grading(const Line& l, const std::string& s)
{
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(l.number, "bad grading '" + s + "'");
    }
}

std::size_t lookup(const std::map<std::string, std::size_t>& ids, const Line& l, const std::string& id)
{
    auto it = ids.find(id);
    if (it == ids.end()) throw ParseError(l.number, "unknown generator '" + id + "'");
    return it->second;
}

std::string lk_index_error(const std::string& s) { return "unknown component '" + s + "'"; }

}  // namespace

UPoly parse_upoly(std::string_view text)
{
    std::vector<int> exps;
    for (auto [u, v] : parse_terms(text, false)) exps.push_back(u);
    return UPoly::from_exponents(std::move(exps));
}

UVPoly parse_uvpoly(std::string_view text)
{
    UVPoly p;
    for (auto [u, v] : parse_terms(text, true)) p += UVPoly::monomial(u, v);
    return p;
}

std::vector<ParsedComplex> parse_complexes(std::string_view text)
{
    struct Block {
        std::string name;
        std::vector<Generator> gens;
        std::map<std::string, std::size_t> ids;
        std::vector<std::tuple<std::size_t, std::size_t, UPoly>> d, iota;
        bool has_iota = false;
    };
    std::vector<Block> blocks;
    for (const auto& l : lines_of(text)) {
        const auto& kw = l.tokens[0];
        if (kw == "complex") {
            blocks.push_back({});
            blocks.back().name = l.rest;
            continue;
        }
        if (blocks.empty()) throw ParseError(l.number, "expected 'complex <name>' before '" + kw + "'");
        auto& b = blocks.back();
        if (kw == "gen") {
            if (l.tokens.size() != 3) throw ParseError(l.number, "expected 'gen <id> <grading>'");
            if (b.ids.count(l.tokens[1])) throw ParseError(l.number, "duplicate generator '" + l.tokens[1] + "'");
            b.ids[l.tokens[1]] = b.gens.size();
            b.gens.push_back({l.tokens[1], parse_grading(l, l.tokens[2])});
        } else if (kw == "d" || kw == "iota") {
            auto a = parse_arrow(l);
            UPoly p;
            try {
                p = parse_upoly(a.poly);
            } catch (const std::invalid_argument& e) {
                throw ParseError(l.number, e.what());
            }
            auto entry = std::tuple{lookup(b.ids, l, a.tgt), lookup(b.ids, l, a.src), p};
            if (kw == "d") {
                b.d.push_back(entry);
            } else {
                b.iota.push_back(entry);
                b.has_iota = true;
            }
        } else {
            throw ParseError(l.number, "unknown keyword '" + kw + "'");
        }
    }

    std::vector<ParsedComplex> out;
    for (auto& b : blocks) {
        const std::size_t n = b.gens.size();
        UMatrix d(n, n);
        for (auto& [i, j, p] : b.d) d(i, j) += p;
        UMatrix iota = b.has_iota ? UMatrix(n, n) : identity_umatrix(n);
        for (auto& [i, j, p] : b.iota) iota(i, j) += p;
        out.push_back({{GradedComplex(b.name, std::move(b.gens), std::move(d)), {std::move(iota), 0}}, b.has_iota});
    }
    return out;
}

ParsedComplex parse_complex(std::string_view text)
{
    auto all = parse_complexes(text);
    if (all.size() != 1)
        throw ParseError(1, "expected exactly one complex block, found " + std::to_string(all.size()));
    return all.front();
}

KnotLikeComplex parse_knot(std::string_view text)
{
    KnotLikeComplex c;
    std::map<std::string, std::size_t> ids;
    std::vector<std::tuple<std::size_t, std::size_t, UVPoly>> entries;
    bool seen_header = false;
    for (const auto& l : lines_of(text)) {
        const auto& kw = l.tokens[0];
        if (kw == "knot") {
            if (seen_header) throw ParseError(l.number, "only one knot block per input");
            seen_header = true;
            c.name = l.rest;
            continue;
        }
        if (!seen_header) throw ParseError(l.number, "expected 'knot <name>' before '" + kw + "'");
        if (kw == "kgen") {
            if (l.tokens.size() != 4) throw ParseError(l.number, "expected 'kgen <id> <gr_w> <gr_z>'");
            if (ids.count(l.tokens[1])) throw ParseError(l.number, "duplicate generator '" + l.tokens[1] + "'");
            ids[l.tokens[1]] = c.generators.size();
            c.generators.push_back({l.tokens[1], parse_grading(l, l.tokens[2]), parse_grading(l, l.tokens[3])});
        } else if (kw == "kd") {
            auto a = parse_arrow(l);
            UVPoly p;
            try {
                p = parse_uvpoly(a.poly);
            } catch (const std::invalid_argument& e) {
                throw ParseError(l.number, e.what());
            }
            entries.emplace_back(lookup(ids, l, a.tgt), lookup(ids, l, a.src), p);
        } else {
            throw ParseError(l.number, "unknown keyword '" + kw + "'");
        }
    }
    if (!seen_header) throw ParseError(1, "missing 'knot <name>' header");
    c.differential = UVMatrix(c.size(), c.size());
    for (auto& [i, j, p] : entries) c.differential(i, j) += p;
    return c;
}

SurgeryPresentation parse_presentation(std::string_view text)
{
    SurgeryPresentation p;
    std::vector<std::int64_t> framings;
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> lks;
    bool seen_header = false;
    auto index = [&](const Line& l, const std::string& s) -> std::size_t {
        for (std::size_t i = 0; i < p.components.size(); ++i)
            if (p.components[i].label == s) return i;
        try {
            std::size_t used = 0;
            auto v = std::stoul(s, &used);
            if (used == s.size() && v < p.components.size()) return v;
        } catch (const std::exception&) {
        }
        throw ParseError(l.number, lk_index_error(s));
    };
    auto integer = [](const Line& l, const std::string& s) -> std::int64_t {
        try {
            std::size_t used = 0;
            auto v = std::stoll(s, &used);
            if (used == s.size()) return v;
        } catch (const std::exception&) {
        }
        throw ParseError(l.number, "expected an integer, got '" + s + "'");
    };

    for (const auto& l : lines_of(text)) {
        const auto& kw = l.tokens[0];
        if (kw == "presentation") {
            if (seen_header) throw ParseError(l.number, "only one presentation per input");
            seen_header = true;
            continue;
        }
        if (!seen_header) throw ParseError(l.number, "expected 'presentation' before '" + kw + "'");
        if (kw == "comp") {
            if (l.tokens.size() < 2) throw ParseError(l.number, "expected 'comp <label> framing=<k> companion=<0|1>'");
            Component c{l.tokens[1], false};
            std::int64_t f = 0;
            for (std::size_t i = 2; i < l.tokens.size(); ++i) {
                const auto& t = l.tokens[i];
                auto eq = t.find('=');
                if (eq == std::string::npos) throw ParseError(l.number, "expected key=value, got '" + t + "'");
                auto key = t.substr(0, eq), val = t.substr(eq + 1);
                if (key == "framing")
                    f = integer(l, val);
                else if (key == "companion" && (val == "0" || val == "1"))
                    c.companion = val == "1";
                else
                    throw ParseError(l.number, "bad attribute '" + t + "'");
            }
            p.components.push_back(c);
            framings.push_back(f);
        } else if (kw == "lk") {
            if (l.tokens.size() != 4) throw ParseError(l.number, "expected 'lk <i> <j> <v>'");
            auto i = index(l, l.tokens[1]), j = index(l, l.tokens[2]);
            if (i == j) throw ParseError(l.number, "use framing= for self-linking");
            lks.emplace_back(i, j, integer(l, l.tokens[3]));
        } else if (kw == "note") {
            p.notes.push_back(l.rest);
        } else {
            throw ParseError(l.number, "unknown keyword '" + kw + "'");
        }
    }
    if (!seen_header) throw ParseError(1, "missing 'presentation' header");
    const std::size_t n = p.components.size();
    p.linking = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) p.linking(i, i) = framings[i];
    for (auto [i, j, v] : lks) p.linking(i, j) = p.linking(j, i) = v;
    return p;
}

std::string format_complex(const GradedComplex& c)
{
    std::string s = c.name().empty() ? "complex\n" : "complex " + c.name() + "\n";
    for (const auto& g : c.generators()) s += "gen " + g.id + " " + to_string(g.grading) + "\n";
    const auto& d = c.differential();
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!d(i, j).is_zero())
                s += "d " + c.generator(j).id + " -> " + c.generator(i).id + " : " + to_string(d(i, j)) + "\n";
    return s;
}

std::string format_iota(const IotaComplex& x)
{
    std::string s = format_complex(x.complex);
    const auto& c = x.complex;
    const auto& m = x.iota.matrix;
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero())
                s += "iota " + c.generator(j).id + " -> " + c.generator(i).id + " : " + to_string(m(i, j)) + "\n";
    return s;
}

std::string format_knot(const KnotLikeComplex& c)
{
    std::string s = c.name.empty() ? "knot\n" : "knot " + c.name + "\n";
    for (const auto& g : c.generators)
        s += "kgen " + g.id + " " + to_string(g.gr_w) + " " + to_string(g.gr_z) + "\n";
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!c.differential(i, j).is_zero())
                s += "kd " + c.generators[j].id + " -> " + c.generators[i].id + " : " +
                     to_string(c.differential(i, j)) + "\n";
    return s;
}

std::string format_presentation(const SurgeryPresentation& p, const std::string& name)
{
    std::string s = name.empty() ? "presentation\n" : "presentation " + name + "\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        s += "comp " + p.components[i].label + " framing=" + std::to_string(p.framing(i)) +
             " companion=" + (p.components[i].companion ? "1" : "0") + "\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p.linking(i, j) != 0)
                s += "lk " + p.components[i].label + " " + p.components[j].label + " " +
                     std::to_string(p.linking(i, j)) + "\n";
    for (const auto& note : p.notes) s += "note " + note + "\n";
    return s;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace splice

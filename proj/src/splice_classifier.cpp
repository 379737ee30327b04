#include "splice/splice_classifier.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "splice/error.hpp"

namespace splice {

std::string to_string(Basis b) { return b == Basis::phi ? "phi" : "psi"; }

std::string to_string(const GluingMatrix& m)
{
    return "(" + std::to_string(m.a) + " " + std::to_string(m.b) + "; " + std::to_string(m.c) + " " +
           std::to_string(m.d) + ")";
}

namespace {

std::int64_t parse_int(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    return v;
}

const GluingMatrix kE{1, 0, 0, -1, Basis::psi};

}  // namespace

GluingMatrix parse_matrix(std::string_view text, Basis basis)
{
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw std::invalid_argument("matrix must look like a,b;c,d");
    auto row = [](std::string_view r) {
        auto comma = r.find(',');
        if (comma == std::string_view::npos) throw std::invalid_argument("matrix must look like a,b;c,d");
        return std::pair{parse_int(r.substr(0, comma)), parse_int(r.substr(comma + 1))};
    };
    auto [a, b] = row(text.substr(0, semi));
    auto [c, d] = row(text.substr(semi + 1));
    return {a, b, c, d, basis};
}

GluingMatrix operator*(const GluingMatrix& x, const GluingMatrix& y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d, x.basis};
}

GluingMatrix operator-(const GluingMatrix& m) { return {-m.a, -m.b, -m.c, -m.d, m.basis}; }

GluingMatrix phi_n(std::int64_t n, int sign)
{
    const std::int64_t s = sign < 0 ? -1 : 1;
    return {n, s, s * (1 + n * n), n, Basis::phi};
}

GluingMatrix psi_n(std::int64_t n, int sign) { return convert_basis(phi_n(n, sign)); }

GluingMatrix convert_basis(const GluingMatrix& m)
{
    GluingMatrix r = kE * m;
    r.basis = m.basis == Basis::phi ? Basis::psi : Basis::phi;
    return r;
}

bool is_splice_homology_sphere(const GluingMatrix& m)
{
    const GluingMatrix psi = m.basis == Basis::psi ? m : convert_basis(m);
    return psi.b == 1 || psi.b == -1;
}

std::optional<Type1Class> classify_type1(const GluingMatrix& m)
{
    const GluingMatrix phi = m.basis == Basis::phi ? m : convert_basis(m);
    if (phi.det() != -1) return std::nullopt;
    const GluingMatrix psi = convert_basis(phi);
    const GluingMatrix sq = psi * psi;
    if (sq != GluingMatrix{-1, 0, 0, -1, psi.basis} || !is_splice_homology_sphere(psi)) return std::nullopt;
    return Type1Class{phi.a, static_cast<int>(phi.b)};
}

Type2Kind type2_kind(const GluingMatrix& m)
{
    const GluingMatrix phi = m.basis == Basis::phi ? m : convert_basis(m);
    if (phi.a == 0 && phi.d == 0 && phi.b == phi.c && (phi.b == 1 || phi.b == -1)) return Type2Kind::admissible;
    if (phi.b == 0 && phi.c == 0 && phi.a == -phi.d && (phi.a == 1 || phi.a == -1)) return Type2Kind::b1_one;
    return Type2Kind::none;
}

bool classify_type2(const GluingMatrix& m) { return type2_kind(m) == Type2Kind::admissible; }

bool change_sign_identity(std::int64_t n) { return -phi_n(n, +1) == phi_n(-n, -1); }

std::string to_string(const GeneratorWord& w)
{
    if (w.empty()) return "1";
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += ' ';
        s += l.kind == Letter::Kind::H ? std::string("H") : "T(" + std::to_string(l.k) + ")";
    }
    return s;
}

GeneratorWord parse_word(std::string_view text)
{
    GeneratorWord w;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
    };
    skip();
    if (text.substr(i) == "1") return w;
    while (skip(), i < text.size()) {
        char c = text[i++];
        if (c == 'H') {
            w.push_back(H());
        } else if (c == 'T') {
            bool paren = i < text.size() && text[i] == '(';
            if (paren) ++i;
            std::size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            std::int64_t k = parse_int(text.substr(start, i - start));
            if (paren) {
                if (i >= text.size() || text[i] != ')') throw std::invalid_argument("missing ')' in word");
                ++i;
            }
            w.push_back(T(k));
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c + "' in word");
        }
    }
    return w;
}

namespace {

GluingMatrix letter_matrix(const Letter& l)
{
    if (l.kind == Letter::Kind::H) return {0, 1, -1, 0, Basis::psi};
    return {1, l.k, 0, 1, Basis::psi};
}

}  // namespace

GluingMatrix evaluate_word(const GeneratorWord& w)
{
    GluingMatrix m{1, 0, 0, 1, Basis::psi};
    for (const auto& l : w) m = m * letter_matrix(l);
    return m;
}

GeneratorWord lemma_word(std::int64_t n) { return {H(), T(-n), H(), T(n), H()}; }

std::string to_string(Relation r)
{
    switch (r) {
    case Relation::exact: return "exact";
    case Relation::e_conjugate: return "equal after conjugation by e";
    case Relation::negated: return "equal up to sign";
    case Relation::e_conjugate_negated: return "equal up to sign after conjugation by e";
    case Relation::none: return "unrelated";
    }
    return "unrelated";
}

Relation relate(const GluingMatrix& value, const GluingMatrix& target)
{
    GluingMatrix v = value, t = target;
    v.basis = t.basis = Basis::psi;
    GluingMatrix conj = kE * v * kE;
    if (v == t) return Relation::exact;
    if (conj == t) return Relation::e_conjugate;
    if (-v == t) return Relation::negated;
    if (-conj == t) return Relation::e_conjugate_negated;
    return Relation::none;
}

FactorizationReport lemma_factorization(std::int64_t n)
{
    FactorizationReport r;
    r.n = n;
    r.word = lemma_word(n);
    r.target = psi_n(n, +1);
    r.value = evaluate_word(r.word);
    GeneratorWord rev(r.word.rbegin(), r.word.rend());
    r.reversed = evaluate_word(rev);
    r.relation = relate(r.value, r.target);
    r.reversed_relation = relate(r.reversed, r.target);
    r.squares_to_minus_id = r.value * r.value == GluingMatrix{-1, 0, 0, -1, Basis::psi};
    return r;
}

GeneratorWord simplify(const GeneratorWord& w)
{
    GeneratorWord out;
    for (const auto& l : w) {
        if (l.kind == Letter::Kind::T) {
            if (!out.empty() && out.back().kind == Letter::Kind::T)
                out.back().k += l.k;
            else
                out.push_back(l);
            if (out.back().k == 0) out.pop_back();
        } else {
            out.push_back(l);
            std::size_t run = 0;
            while (run < out.size() && out[out.size() - 1 - run].kind == Letter::Kind::H) ++run;
            if (run == 4) {
                out.resize(out.size() - 4);
                // Removing H^4 may make two T letters adjacent.
                if (out.size() >= 2 && out[out.size() - 1].kind == Letter::Kind::T &&
                    out[out.size() - 2].kind == Letter::Kind::T) {
                    out[out.size() - 2].k += out.back().k;
                    out.pop_back();
                    if (out.back().k == 0) out.pop_back();
                }
            }
        }
    }
    return out;
}

GeneratorWord factorize(const GluingMatrix& m)
{
    if (m.det() != 1) throw InadmissibleWord("det " + std::to_string(m.det()) + " is not 1; only SL2(Z) factors");
    GluingMatrix cur = m;
    cur.basis = Basis::psi;
    // Left factors L_i applied so far; m = L_1^-1 ... L_k^-1 cur.
    GeneratorWord inverses;
    while (cur.c != 0) {
        const std::int64_t q = cur.a / cur.c;
        if (q != 0) {
            cur = GluingMatrix{1, -q, 0, 1, Basis::psi} * cur;
            inverses.push_back(T(q));
        }
        cur = GluingMatrix{0, 1, -1, 0, Basis::psi} * cur;
        // H^-1 = H^3
        inverses.insert(inverses.end(), {H(), H(), H()});
    }
    GeneratorWord tail;
    if (cur.a == 1) {
        tail = {T(cur.b)};
    } else {
        // cur = -T(-b) = H H T(-b)
        tail = {H(), H(), T(-cur.b)};
    }
    GeneratorWord w = inverses;
    w.insert(w.end(), tail.begin(), tail.end());
    return simplify(w);
}

}  // namespace splice

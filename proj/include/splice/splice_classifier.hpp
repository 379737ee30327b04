#ifndef SPLICE_SPLICE_CLASSIFIER_HPP
#define SPLICE_SPLICE_CLASSIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace splice {

// phi: written in the (mu, -lambda) convention on the second side, det -1.
// psi: (mu, lambda) on both sides, det +1.
enum class Basis { phi, psi };

std::string to_string(Basis b);

// 2x2 integer matrix acting on column vectors; the columns are the images of
// (mu, lambda).
struct GluingMatrix {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    Basis basis = Basis::psi;

    std::int64_t det() const { return a * d - b * c; }
    // Whether det matches the basis mode.
    bool valid() const { return det() == (basis == Basis::phi ? -1 : 1); }
    friend bool operator==(const GluingMatrix&, const GluingMatrix&) = default;
};

// "(a b; c d)"
std::string to_string(const GluingMatrix& m);
// Parses "a,b;c,d". Throws std::invalid_argument.
GluingMatrix parse_matrix(std::string_view text, Basis basis);

// Entrywise product; the result takes the basis of `x`.
GluingMatrix operator*(const GluingMatrix& x, const GluingMatrix& y);
GluingMatrix operator-(const GluingMatrix& m);

// phi_n^+ = (n 1; 1+n^2 n) and phi_n^- = (n -1; -(1+n^2) n).
GluingMatrix phi_n(std::int64_t n, int sign);
// convert_basis(phi_n(n, sign)), e.g. psi_n^+ = (n 1; -(1+n^2) -n).
GluingMatrix psi_n(std::int64_t n, int sign);

// Left-composes with e = diag(1, -1) and toggles the basis mode.
GluingMatrix convert_basis(const GluingMatrix& m);

// The mu-coefficient of psi(lambda) is +-1.
bool is_splice_homology_sphere(const GluingMatrix& m);

struct Type1Class {
    std::int64_t n;
    int sign;  // +1 or -1
    friend bool operator==(const Type1Class&, const Type1Class&) = default;
};

// (n, sign) when m is phi_n^sign; nullopt otherwise (including bad det).
std::optional<Type1Class> classify_type1(const GluingMatrix& m);

enum class Type2Kind { admissible, b1_one, none };

// admissible for phi = +-antidiag(1, 1); b1_one for phi = +-e.
Type2Kind type2_kind(const GluingMatrix& m);
bool classify_type2(const GluingMatrix& m);

// Lemma-style sign identity: -phi_n^+ == phi_{-n}^-.
bool change_sign_identity(std::int64_t n);

struct Letter {
    enum class Kind { H, T } kind = Kind::H;
    std::int64_t k = 0;  // exponent of T
    friend bool operator==(const Letter&, const Letter&) = default;
};
using GeneratorWord = std::vector<Letter>;

inline Letter H() { return {Letter::Kind::H, 0}; }
inline Letter T(std::int64_t k) { return {Letter::Kind::T, k}; }

// "H T(-2) H T(2) H"; the empty word prints as "1".
std::string to_string(const GeneratorWord& w);
// Inverse of to_string; also accepts "T-2" and "T2". Throws std::invalid_argument.
GeneratorWord parse_word(std::string_view text);

// Product of the letters in reading order, in psi mode.
GluingMatrix evaluate_word(const GeneratorWord& w);

// The word H T(-n) H T(n) H.
GeneratorWord lemma_word(std::int64_t n);

enum class Relation { exact, e_conjugate, negated, e_conjugate_negated, none };
std::string to_string(Relation r);

// How `value` relates to `target`: first exact equality, then e value e,
// then -value, then -e value e.
Relation relate(const GluingMatrix& value, const GluingMatrix& target);

struct FactorizationReport {
    std::int64_t n = 0;
    GeneratorWord word;
    GluingMatrix target;      // psi_n^+
    GluingMatrix value;       // reading-order product
    GluingMatrix reversed;    // product in the opposite order
    Relation relation = Relation::none;
    Relation reversed_relation = Relation::none;
    bool squares_to_minus_id = false;
};

FactorizationReport lemma_factorization(std::int64_t n);

// A word whose product is exactly m (psi mode, det 1). Throws
// InadmissibleWord when det(m) != 1.
GeneratorWord factorize(const GluingMatrix& m);

// Merges adjacent T letters, drops T(0) and reduces runs of H modulo 4.
GeneratorWord simplify(const GeneratorWord& w);

}  // namespace splice

#endif

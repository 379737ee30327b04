#include "splice/iota_complex.hpp"

#include <cstdlib>
#include <map>

#include "splice/error.hpp"
#include "splice/f2_linalg.hpp"
#include "splice/reduction.hpp"

namespace splice {

IotaComplex trivial_iota(const Rational& d, std::string name)
{
    auto c = GradedComplex::tower(d, "x", std::move(name));
    return {c, identity_map(c)};
}

namespace {

// An unknown homogeneous map: each admissible entry is bit * U^exponent.
struct Slot {
    std::size_t var;
    int exponent;
};
using SlotMatrix = Matrix<std::optional<Slot>>;

// Linear expression per matrix entry: exponent -> unknowns summed over F2.
using Expr = std::map<int, std::vector<std::size_t>>;
using ExprMatrix = Matrix<Expr>;

SlotMatrix allocate(const GradedComplex& source, const GradedComplex& target, int degree, std::size_t& next)
{
    SlotMatrix m(target.size(), source.size());
    for (std::size_t i = 0; i < target.size(); ++i)
        for (std::size_t j = 0; j < source.size(); ++j)
            if (auto e = forced_exponent(target.grading(i), source.grading(j), Rational(degree)))
                m(i, j) = Slot{next++, *e};
    return m;
}

// out += a * x
void add_left(ExprMatrix& out, const UMatrix& a, const SlotMatrix& x)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < x.cols(); ++j)
                if (const auto& s = x(k, j))
                    for (int p : a(i, k).exponents()) out(i, j)[p + s->exponent].push_back(s->var);
        }
}

// out += x * b
void add_right(ExprMatrix& out, const SlotMatrix& x, const UMatrix& b)
{
    for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (b(k, j).is_zero()) continue;
            for (std::size_t i = 0; i < x.rows(); ++i)
                if (const auto& s = x(i, k))
                    for (int p : b(k, j).exponents()) out(i, j)[p + s->exponent].push_back(s->var);
        }
}

// Adds the equations out == rhs, one per entry and exponent.
void equate(f2::LinearSystem& sys, const ExprMatrix& lhs, const UMatrix& rhs)
{
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j) {
            Expr e = lhs(i, j);
            for (int p : rhs(i, j).exponents()) e[p];
            for (const auto& [p, vars] : e) sys.add_equation(vars, rhs(i, j).has_term(p));
        }
}

UMatrix evaluate(const SlotMatrix& x, const f2::BitVector& bits)
{
    UMatrix m(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (const auto& s = x(i, j); s && bits[s->var]) m(i, j) = UPoly::monomial(s->exponent);
    return m;
}

void check_shape(const GradedComplex& source, const GradedComplex& target, const UMap& f, const char* what)
{
    if (f.rows() != target.size() || f.cols() != source.size())
        throw DegreeMismatch(std::string(what) + " has shape " + std::to_string(f.rows()) + "x" +
                             std::to_string(f.cols()) + ", expected " + std::to_string(target.size()) + "x" +
                             std::to_string(source.size()));
}

// Coefficient functional of the tower-to-tower entry of f2 * F * g1, where
// f2 reduces the target and g1 includes the reduced source.
struct TowerFunctional {
    std::optional<int> exponent;  // forced exponent of the tower entry
    UMatrix left;                 // row of f2 at the target tower (1 x n2)
    UMatrix right;                // column of g1 at the source tower (n1 x 1)
};

TowerFunctional tower_functional(const GradedComplex& c1, const GradedComplex& c2)
{
    auto r1 = reduce(c1);
    auto r2 = reduce(c2);
    TowerFunctional t;
    t.exponent = forced_exponent(r2.normal_form.tower_grading, r1.normal_form.tower_grading, Rational(0));
    const auto& f2 = r2.decomposition.to_reduced.matrix;
    const auto& g1 = r1.decomposition.from_reduced.matrix;
    t.left = UMatrix(1, f2.cols());
    for (std::size_t j = 0; j < f2.cols(); ++j) t.left(0, j) = f2(r2.tower, j);
    t.right = UMatrix(g1.rows(), 1);
    for (std::size_t i = 0; i < g1.rows(); ++i) t.right(i, 0) = g1(i, r1.tower);
    return t;
}

}  // namespace

std::optional<UMap> homotopy_solve(const GradedComplex& source, const GradedComplex& target, const UMap& f,
                                   const UMap& g)
{
    check_shape(source, target, f, "f");
    check_shape(source, target, g, "g");
    if (f.degree != g.degree)
        throw DegreeMismatch("maps have degrees " + std::to_string(f.degree) + " and " + std::to_string(g.degree));

    std::size_t next = 0;
    auto h = allocate(source, target, f.degree + 1, next);
    f2::LinearSystem sys(next);
    ExprMatrix lhs(target.size(), source.size());
    add_left(lhs, target.differential(), h);
    add_right(lhs, h, source.differential());
    equate(sys, lhs, add(f.matrix, g.matrix));
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    return UMap{evaluate(h, *sol), f.degree + 1};
}

IotaCheck verify_iota(const IotaComplex& x)
{
    IotaCheck out;
    auto& v = out.violations;
    const auto& c = x.complex;
    auto cv = validate(c);
    v.insert(v.end(), cv.begin(), cv.end());

    bool shape_ok = x.iota.rows() == c.size() && x.iota.cols() == c.size();
    if (x.iota.degree != 0) v.push_back({"degree", "iota has degree " + std::to_string(x.iota.degree)});
    auto mv = map_violations(c, c, x.iota);
    v.insert(v.end(), mv.begin(), mv.end());
    if (!shape_ok || !cv.empty()) return out;

    if (!is_chain_map(c, c, x.iota)) v.push_back({"chain-map", "iota does not commute with the differential"});
    UMap sq = compose(x.iota, x.iota);
    out.homotopy = homotopy_solve(c, c, sq, identity_map(c));
    if (!out.homotopy) v.push_back({"iota-squared", "iota^2 is not homotopic to the identity"});

    auto towers = decompose(c).towers.size();
    if (towers != 1)
        v.push_back({"localization", "localized homology has rank " + std::to_string(towers) + ", expected 1"});
    return out;
}

SearchBudget SearchBudget::from_environment()
{
    SearchBudget b;
    if (const char* s = std::getenv("SPLICE_FLOER_BUDGET")) {
        char* end = nullptr;
        auto n = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0') b.max_unknowns = static_cast<std::size_t>(n);
    }
    return b;
}

bool is_local_map(const UMap& f, const IotaComplex& x1, const IotaComplex& x2)
{
    const auto& c1 = x1.complex;
    const auto& c2 = x2.complex;
    if (f.degree != 0) throw DegreeMismatch("a local map has degree 0, got " + std::to_string(f.degree));
    check_shape(c1, c2, f, "map");
    if (!map_violations(c1, c2, f).empty()) return false;
    if (!is_chain_map(c1, c2, f)) return false;
    if (!homotopy_solve(c1, c2, compose(x2.iota, f), compose(f, x1.iota))) return false;

    auto t = tower_functional(c1, c2);
    auto entry = multiply(multiply(t.left, f.matrix), t.right)(0, 0);
    return !entry.is_zero();
}

std::optional<UMap> find_local_map(const IotaComplex& x1, const IotaComplex& x2, const SearchBudget& budget)
{
    const auto& c1 = x1.complex;
    const auto& c2 = x2.complex;
    auto t = tower_functional(c1, c2);
    if (!t.exponent) return std::nullopt;  // towers in incompatible gradings

    std::size_t next = 0;
    auto fm = allocate(c1, c2, 0, next);
    auto hm = allocate(c1, c2, 1, next);
    if (next > budget.max_unknowns)
        throw SearchBudgetExceeded("local-map search needs " + std::to_string(next) + " unknowns, budget is " +
                                   std::to_string(budget.max_unknowns));

    f2::LinearSystem sys(next);
    const UMatrix zero(c2.size(), c1.size());

    ExprMatrix chain(c2.size(), c1.size());
    add_left(chain, c2.differential(), fm);
    add_right(chain, fm, c1.differential());
    equate(sys, chain, zero);

    ExprMatrix equiv(c2.size(), c1.size());
    add_left(equiv, x2.iota.matrix, fm);
    add_right(equiv, fm, x1.iota.matrix);
    add_left(equiv, c2.differential(), hm);
    add_right(equiv, hm, c1.differential());
    equate(sys, equiv, zero);

    // Tower coefficient: sum over (i, j) of left(i) * F(i, j) * right(j).
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < c2.size(); ++i) {
        if (t.left(0, i).is_zero()) continue;
        for (std::size_t j = 0; j < c1.size(); ++j) {
            if (t.right(j, 0).is_zero() || !fm(i, j)) continue;
            for (int p : t.left(0, i).exponents())
                for (int q : t.right(j, 0).exponents())
                    if (p + q + fm(i, j)->exponent == *t.exponent) vars.push_back(fm(i, j)->var);
        }
    }
    sys.add_equation(vars, true);

    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    return UMap{evaluate(fm, *sol), 0};
}

bool is_locally_trivial(const IotaComplex& x, const SearchBudget& budget)
{
    auto triv = trivial_iota();
    return find_local_map(x, triv, budget).has_value() && find_local_map(triv, x, budget).has_value();
}

IotaComplex tensor_iota(const IotaComplex& a, const IotaComplex& b)
{
    return {tensor(a.complex, b.complex), tensor_map(a.iota, b.iota)};
}

IotaComplex dual_iota(const IotaComplex& x) { return {dual(x.complex), dual_map(x.iota)}; }

}  // namespace splice

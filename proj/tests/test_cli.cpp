#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "splice/cli.hpp"
#include "splice/iota_complex.hpp"
#include "splice/text_format.hpp"

using namespace splice;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(SPLICE_DATA_DIR) + "/" + rel; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::filesystem::path temp_file(const std::string& name, const std::string& content)
{
    auto p = std::filesystem::temp_directory_path() / ("splicefloer_test_" + name);
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("classify")
{
    auto a = run({"classify", "--matrix", "0,1;1,0", "--basis", "phi"});
    CHECK(a.code == kExitOk);
    CHECK(first_line(a.out) == "type1 n=0 sign=+; type2 admissible");

    auto b = run({"classify", "--matrix", "1,0;0,-1", "--basis", "phi"});
    CHECK(first_line(b.out) == "none: b1=1 splice");

    auto c = run({"classify", "--matrix", "3,-1;-10,3", "--basis", "phi"});
    CHECK(first_line(c.out) == "type1 n=3 sign=-");
    CHECK(c.out.find("moves: 3") != std::string::npos);

    auto bad = run({"classify", "--matrix", "1,2"});
    CHECK(bad.code == kExitParse);
    CHECK(bad.err.find("--matrix:1:") != std::string::npos);
}

TEST_CASE("module wrappers")
{
    CHECK(run({"d-inv", data("complexes/rp3.txt")}).out == "1/4\n");
    CHECK(run({"factorize", "--matrix", "0,1;-1,0", "--basis", "psi"}).out == "H\n");
    CHECK(run({"lens-d", "--p", "2", "--i", "0"}).out == "1/4\n");
    CHECK(run({"lens-d", "--p", "5", "--i", "0", "--q", "2"}).out == "2/5\n");

    auto present = run({"present", "--n", "2"});
    CHECK(present.code == kExitOk);
    CHECK(present.out.find("comp K framing=0 companion=1\ncomp U1 framing=2 companion=0\n"
                           "comp U2 framing=-2 companion=0\ncomp mK framing=0 companion=1\n") != std::string::npos);
    CHECK(present.out.find("h1_order: 1") != std::string::npos);
    CHECK(run({"present", "--word", "H T(-2) H T(2) H"}).out == present.out);

    auto red = run({"reduce", data("complexes/step.txt")});
    CHECK(red.out.find("step: a -> b : U^2 top=3 length=2") != std::string::npos);
    CHECK(red.out.find("d: 0") != std::string::npos);

    auto cob = run({"cobordism", "--kind", "filling"});
    CHECK(cob.out.find("b2_minus: 2") != std::string::npos);
    CHECK(cob.out.find("grading_shift: 1/2") != std::string::npos);

    auto lemma = run({"lemma", "--n", "1"});
    CHECK(lemma.out.find("relation: equal after conjugation by e") != std::string::npos);

    auto kc = run({"knot-check", data("knots/trefoil_rh.txt")});
    CHECK(kc.out.find("locally_trivial: false") != std::string::npos);

    auto lm = run({"local-map", data("complexes/trivial.txt"), data("complexes/rp3.txt")});
    CHECK(lm.out == "found: false\n");
}

TEST_CASE("blow up and down through files")
{
    auto up = run({"blowup", data("presentations/chain_n2.txt"), "--i", "0", "--k", "1", "--sign", "1"});
    REQUIRE(up.code == kExitOk);
    const auto text = up.out.substr(0, up.out.find("h1_order"));
    auto file = temp_file("up.txt", text);
    auto down = run({"blowdown", file.string(), "--component", "E"});
    CHECK(down.code == kExitOk);
    auto orig = parse_presentation(read_file(data("presentations/chain_n2.txt")));
    auto back = parse_presentation(down.out.substr(0, down.out.find("h1_order")));
    CHECK(back.linking == orig.linking);
    auto refused = run({"blowdown", data("presentations/chain_n2.txt"), "--component", "K"});
    CHECK(refused.code == kExitError);
    std::filesystem::remove(file);
}

TEST_CASE("verdicts")
{
    auto t1 = run({"verdict-type1", "--matrix", "0,1;1,0"});
    CHECK(t1.code == kExitOk);
    CHECK(t1.out.find("verdict: locally trivial (conditional)") != std::string::npos);
    CHECK(t1.out.find("grading_shift") == std::string::npos);
    CHECK(t1.out.find("shift=1/4") != std::string::npos);

    auto t5 = run({"verdict-type1", "--matrix", "5,-1;-26,5"});
    CHECK(t5.out.find("moves: 5") != std::string::npos);

    auto none = run({"verdict-type1", "--matrix", "1,0;0,-1"});
    CHECK(none.code == kExitHypothesis);

    auto t2 = run({"verdict-type2", "--knot0", data("knots/figure_eight.txt"), "--knot1", data("knots/unknot.txt")});
    CHECK(t2.code == kExitOk);
    CHECK(t2.out.find("class: (F[U]_{0}, id)") != std::string::npos);

    auto tref = run({"verdict-type2", "--knot0", data("knots/trefoil_rh.txt"), "--knot1", data("knots/unknot.txt")});
    CHECK(tref.code == kExitHypothesis);
    CHECK(tref.err.find("knot0 not locally trivial") != std::string::npos);
}

TEST_CASE("machine mode")
{
    auto m = run({"--machine", "verdict-type2", "--knot0", data("knots/unknot.txt"), "--knot1",
                  data("knots/unknot.txt")});
    CHECK(m.code == kExitOk);
    std::istringstream in(m.out);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        CHECK(line.find('=') != std::string::npos);
        ++lines;
    }
    CHECK(lines > 5);
    CHECK(m.out.find("verdict=locally trivial (conditional)\n") != std::string::npos);
    CHECK(run({"--machine", "d-inv", data("complexes/rp3.txt")}).out == "d=1/4\n");
    auto p = run({"--machine", "present", "--n", "1"});
    CHECK(p.out.find("comp=K framing=0 companion=1\n") != std::string::npos);
}

TEST_CASE("outputs re-parse and are deterministic")
{
    auto cone = run({"cone", "--knot", data("knots/figure_eight.txt"), "--n", "1"});
    REQUIRE(cone.code == kExitOk);
    auto x = parse_complex(cone.out).x;
    CHECK(verify_iota(x).ok());
    CHECK(run({"cone", "--knot", data("knots/figure_eight.txt"), "--n", "1"}).out == cone.out);

    auto file = temp_file("cone.txt", cone.out);
    auto dual = run({"dual", file.string()});
    CHECK(parse_complex(dual.out).x == dual_iota(x));
    auto tensor = run({"tensor", file.string(), data("complexes/rp3.txt")});
    CHECK(parse_complex(tensor.out).x.complex.size() == x.complex.size());
    auto verify = run({"iota-verify", file.string()});
    CHECK(verify.out == "ok: true\n");

    setenv("SPLICE_FLOER_BUDGET", "1", 1);
    auto budget = run({"local-map", file.string(), file.string()});
    unsetenv("SPLICE_FLOER_BUDGET");
    CHECK(budget.code == kExitBudget);
    std::filesystem::remove(file);
}

TEST_CASE("errors and exit codes")
{
    auto bad = temp_file("bad.txt", "complex a\ngen x 0\nd x -> y : 1\n");
    auto r = run({"d-inv", bad.string()});
    CHECK(r.code == kExitParse);
    CHECK(r.err.find(bad.string() + ":3: ") != std::string::npos);
    std::filesystem::remove(bad);

    auto two = temp_file("two.txt", "complex a\ngen x 0\ngen y 2\n");
    CHECK(run({"d-inv", two.string()}).code == kExitHypothesis);
    std::filesystem::remove(two);

    auto zero = temp_file("zero.txt", "complex z\ngen x 0\niota x -> x : U\n");
    auto v = run({"iota-verify", zero.string()});
    CHECK(v.code == kExitHypothesis);
    CHECK(v.out.find("ok: false") != std::string::npos);
    std::filesystem::remove(zero);

    CHECK(run({"d-inv", "/nonexistent.txt"}).code == kExitError);
    CHECK(run({"frobnicate"}).code == kExitParse);
    CHECK(run({}).code == kExitParse);
    CHECK(run({"--help"}).code == kExitOk);
    CHECK(run({"lens-d", "--p", "2", "--i", "5"}).code == kExitError);
}

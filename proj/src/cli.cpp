#include "splice/cli.hpp"

#include <CLI11.hpp>

#include <sstream>

#include "splice/cobordism.hpp"
#include "splice/error.hpp"
#include "splice/pipeline.hpp"
#include "splice/reduction.hpp"
#include "splice/surgery_cone.hpp"
#include "splice/text_format.hpp"

namespace splice {

namespace {

class Output {
public:
    Output(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

    void kv(const std::string& key, const std::string& value)
    {
        out_ << key << (machine_ ? "=" : ": ") << value << '\n';
    }
    // Human mode prints `line`; machine mode prints key=value.
    void headline(const std::string& key, const std::string& line)
    {
        if (machine_)
            kv(key, line);
        else
            out_ << line << '\n';
    }
    // A text-format block; machine mode rewrites "kw rest" as "kw=rest".
    void block(const std::string& text)
    {
        if (!machine_) {
            out_ << text;
            return;
        }
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            auto sp = line.find(' ');
            if (sp == std::string::npos)
                out_ << line << "=\n";
            else
                out_ << line.substr(0, sp) << '=' << line.substr(sp + 1) << '\n';
        }
    }

private:
    std::ostream& out_;
    bool machine_;
};

ParsedComplex load_complex(const std::string& path)
{
    auto text = read_file(path);
    try {
        return parse_complex(text);
    } catch (const ParseError& e) {
        throw ParseError(path, e.line(), e.detail());
    }
}

KnotLikeComplex load_knot(const std::string& path)
{
    auto text = read_file(path);
    try {
        return parse_knot(text);
    } catch (const ParseError& e) {
        throw ParseError(path, e.line(), e.detail());
    }
}

SurgeryPresentation load_presentation(const std::string& path)
{
    auto text = read_file(path);
    try {
        return parse_presentation(text);
    } catch (const ParseError& e) {
        throw ParseError(path, e.line(), e.detail());
    }
}

GluingMatrix matrix_arg(const std::string& text, const std::string& basis)
{
    try {
        return parse_matrix(text, basis == "psi" ? Basis::psi : Basis::phi);
    } catch (const std::invalid_argument& e) {
        throw ParseError("--matrix", 1, e.what());
    }
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

std::string map_lines(const GradedComplex& src, const GradedComplex& tgt, const UMap& f)
{
    std::string s;
    for (std::size_t j = 0; j < f.cols(); ++j)
        for (std::size_t i = 0; i < f.rows(); ++i)
            if (!f.matrix(i, j).is_zero())
                s += "map " + src.generator(j).id + " -> " + tgt.generator(i).id + " : " + to_string(f.matrix(i, j)) +
                     "\n";
    return s;
}

void print_cobordism(Output& o, const CobordismData& c)
{
    o.kv("source", c.source);
    o.kv("target", c.target);
    o.kv("chi", std::to_string(c.chi));
    o.kv("sigma", std::to_string(c.sigma));
    o.kv("b1", std::to_string(c.b1));
    o.kv("b2_plus", std::to_string(c.b2_plus));
    o.kv("b2_minus", std::to_string(c.b2_minus));
    o.kv("negative_definite", c.negative_definite() ? "true" : "false");
    o.kv("even_form", c.even_form ? "true" : "false");
    o.kv("grading_shift", to_string(c.grading_shift));
    for (const auto& n : c.notes) o.kv("note", n);
}

void print_report(Output& o, const PipelineReport& r)
{
    for (const auto& [k, v] : r.entries) o.kv(k, v);
    for (const auto& w : r.warnings) o.kv("warning", w);
    o.kv("verdict", r.verdict);
    o.kv("condition", r.condition);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Splice gluing maps, surgery presentations and iota-complex algebra", "splicefloer"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "Print key=value lines");

    std::string matrix, basis = "phi", word, file, file2, knot0, knot1, component, kind = "type1", shift_text;
    std::int64_t n = 0, p = 2, q = 1, i_res = 0;
    int n_surgery = 1, ci = 0, ck = 1, sign = 1;
    bool absorb = false;
    bool reduce = false;

    auto basis_opt = [&](CLI::App* s, const char* def) {
        basis = def;
        s->add_option("--basis", basis, "phi or psi")->check(CLI::IsMember({"phi", "psi"}));
    };

    auto* classify = app.add_subcommand("classify", "Classify a gluing matrix");
    classify->add_option("--matrix", matrix, "a,b;c,d")->required();
    classify->add_option("--basis", basis, "phi or psi")->check(CLI::IsMember({"phi", "psi"}));

    auto* v1 = app.add_subcommand("verdict-type1", "Type-1 splice argument");
    v1->add_option("--matrix", matrix, "a,b;c,d")->required();
    v1->add_option("--basis", basis, "phi or psi")->check(CLI::IsMember({"phi", "psi"}));

    auto* v2 = app.add_subcommand("verdict-type2", "Type-2 splice argument");
    v2->add_option("--knot0", knot0, "knot-like complex file")->required();
    v2->add_option("--knot1", knot1, "knot-like complex file")->required();
    v2->add_option("--n", n_surgery, "surgery parameter (2n-surgery)")->check(CLI::PositiveNumber);

    auto* reduce_cmd = app.add_subcommand("reduce", "Normal form of a complex");
    reduce_cmd->add_option("file", file)->required();
    auto* dinv = app.add_subcommand("d-inv", "d-invariant of a complex");
    dinv->add_option("file", file)->required();
    auto* verify = app.add_subcommand("iota-verify", "Check the iota-complex axioms");
    verify->add_option("file", file)->required();
    auto* local = app.add_subcommand("local-map", "Search for a local map between two iota-complexes");
    local->add_option("source", file)->required();
    local->add_option("target", file2)->required();
    auto* tensor_cmd = app.add_subcommand("tensor", "Tensor product of two iota-complexes");
    tensor_cmd->add_option("first", file)->required();
    tensor_cmd->add_option("second", file2)->required();
    auto* dual_cmd = app.add_subcommand("dual", "Dual of an iota-complex");
    dual_cmd->add_option("file", file)->required();

    auto* factor = app.add_subcommand("factorize", "Write a matrix as a word in H and T");
    factor->add_option("--matrix", matrix, "a,b;c,d")->required();
    basis_opt(factor, "psi");
    basis = "phi";

    auto* lemma = app.add_subcommand("lemma", "Evaluate H T(-n) H T(n) H against psi_n^+");
    lemma->add_option("--n", n)->required();

    auto* present = app.add_subcommand("present", "Surgery presentation from a word");
    auto* present_n = present->add_option("--n", n, "use the word H T(-n) H T(n) H");
    auto* present_w = present->add_option("--word", word, "e.g. \"H T(-2) H T(2) H\"");
    present_n->excludes(present_w);
    std::string k0 = "K", k1 = "mK";
    present->add_option("--k0", k0);
    present->add_option("--k1", k1);

    auto* blowdown = app.add_subcommand("blowdown", "Blow down a +-1 framed component");
    blowdown->add_option("file", file)->required();
    blowdown->add_option("--component", component, "label or index")->required();
    blowdown->add_flag("--absorb", absorb, "allow a +-1 framed companion (surgery in its ambient manifold)");

    auto* blowup = app.add_subcommand("blowup", "Blow up the clasp between two components");
    blowup->add_option("file", file)->required();
    blowup->add_option("--i", ci)->required();
    blowup->add_option("--k", ck)->required();
    blowup->add_option("--sign", sign, "new component gets framing -sign")->check(CLI::IsMember({-1, 1}));

    auto* cob = app.add_subcommand("cobordism", "Grading data of the negative definite cobordisms");
    cob->add_option("--kind", kind)->check(CLI::IsMember({"type1", "filling", "type2"}));
    cob->add_option("--n", n);

    auto* lens = app.add_subcommand("lens-d", "d-invariant of a lens space");
    lens->add_option("--p", p)->required();
    lens->add_option("--i", i_res)->required();
    lens->add_option("--q", q, "L(p,q); default 1");

    auto* cone_cmd = app.add_subcommand("cone", "Surgery cone of a knot-like complex");
    cone_cmd->add_option("--knot", file)->required();
    cone_cmd->add_option("--n", n_surgery)->check(CLI::PositiveNumber);
    auto* shift_opt = cone_cmd->add_option("--shift", shift_text, "grading shift; default d(L(2n,1),[n])");
    cone_cmd->add_flag("--reduce", reduce, "also run the explicit reduction");

    auto* kcheck = app.add_subcommand("knot-check", "Validate a knot-like complex and test local triviality");
    kcheck->add_option("file", file)->required();
    kcheck->add_option("--n", n_surgery, "report d(A_n) for this n")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitParse;
    }

    Output o(out, machine);
    try {
        if (*classify) {
            auto m = matrix_arg(matrix, basis);
            std::vector<std::string> parts;
            auto t1 = classify_type1(m);
            if (t1) parts.push_back("type1 n=" + std::to_string(t1->n) + " sign=" + sign_char(t1->sign));
            switch (type2_kind(m)) {
            case Type2Kind::admissible: parts.push_back("type2 admissible"); break;
            case Type2Kind::b1_one: parts.push_back("none: b1=1 splice"); break;
            case Type2Kind::none: break;
            }
            if (parts.empty()) parts.push_back("none");
            std::string line;
            for (const auto& s : parts) line += (line.empty() ? "" : "; ") + s;
            o.headline("classification", line);
            o.kv("det", std::to_string(m.det()));
            o.kv("homology_sphere", is_splice_homology_sphere(m) ? "true" : "false");
            if (t1) {
                std::int64_t k = t1->n;
                if (t1->sign < 0) {
                    o.kv("sign_change", "phi_" + std::to_string(k) + "^- = -phi_" + std::to_string(-k) + "^+");
                    k = -k;
                }
                auto steps = normalize_to_zero(k);
                o.kv("moves", std::to_string(steps.size()));
                for (const auto& s : steps)
                    o.kv("move", "n=" + std::to_string(s.from_n) + " -> " + std::to_string(s.to_n) +
                                     (s.matches_chain ? "" : " (mismatch)"));
            }
            return kExitOk;
        }
        if (*v1) {
            print_report(o, verdict_type1(matrix_arg(matrix, basis)));
            return kExitOk;
        }
        if (*v2) {
            print_report(o, verdict_type2(load_knot(knot0), load_knot(knot1), n_surgery));
            return kExitOk;
        }
        if (*reduce_cmd) {
            auto c = load_complex(file).x.complex;
            auto dec = decompose(c);
            o.kv("towers", std::to_string(dec.towers.size()));
            for (auto t : dec.towers)
                o.kv("tower", dec.reduced.generator(t).id + " " + to_string(dec.reduced.grading(t)));
            for (auto [a, b] : dec.pairs)
                o.kv("step", dec.reduced.generator(a).id + " -> " + dec.reduced.generator(b).id + " : " +
                                 to_string(dec.reduced.differential()(b, a)) +
                                 " top=" + to_string(dec.reduced.grading(b)) +
                                 " length=" + std::to_string(dec.reduced.differential()(b, a).exponents().front()));
            if (dec.towers.size() == 1) o.kv("d", to_string(dec.reduced.grading(dec.towers.front())));
            return kExitOk;
        }
        if (*dinv) {
            o.headline("d", to_string(d_invariant(load_complex(file).x.complex)));
            return kExitOk;
        }
        if (*verify) {
            auto check = verify_iota(load_complex(file).x);
            o.kv("ok", check.ok() ? "true" : "false");
            for (const auto& v : check.violations) o.kv("violation", v.kind + ": " + v.detail);
            return check.ok() ? kExitOk : kExitHypothesis;
        }
        if (*local) {
            auto x1 = load_complex(file).x, x2 = load_complex(file2).x;
            auto f = find_local_map(x1, x2);
            o.kv("found", f ? "true" : "false");
            if (f) o.block(map_lines(x1.complex, x2.complex, *f));
            return kExitOk;
        }
        if (*tensor_cmd) {
            o.block(format_iota(tensor_iota(load_complex(file).x, load_complex(file2).x)));
            return kExitOk;
        }
        if (*dual_cmd) {
            o.block(format_iota(dual_iota(load_complex(file).x)));
            return kExitOk;
        }
        if (*factor) {
            auto m = matrix_arg(matrix, basis);
            if (m.basis == Basis::phi) m = convert_basis(m);
            o.headline("word", to_string(factorize(m)));
            return kExitOk;
        }
        if (*lemma) {
            auto r = lemma_factorization(n);
            o.kv("word", to_string(r.word));
            o.kv("value", to_string(r.value));
            o.kv("psi_n+", to_string(r.target));
            o.kv("relation", to_string(r.relation));
            o.kv("reversed_value", to_string(r.reversed));
            o.kv("reversed_relation", to_string(r.reversed_relation));
            o.kv("squares_to_minus_id", r.squares_to_minus_id ? "true" : "false");
            return kExitOk;
        }
        if (*present) {
            GeneratorWord w;
            if (*present_w) {
                try {
                    w = parse_word(word);
                } catch (const std::invalid_argument& e) {
                    throw ParseError("--word", 1, e.what());
                }
            } else {
                w = lemma_word(n);
            }
            auto pres = presentation_from_word(w, k0, k1);
            o.block(format_presentation(pres));
            o.kv("h1_order", std::to_string(h1_order(pres)));
            return kExitOk;
        }
        if (*blowdown) {
            auto pres = load_presentation(file);
            std::size_t j = 0;
            bool found = false;
            for (std::size_t i = 0; i < pres.size(); ++i)
                if (pres.components[i].label == component) {
                    j = i;
                    found = true;
                }
            if (!found) {
                try {
                    j = std::stoul(component);
                } catch (const std::exception&) {
                    throw InvalidInput("no component " + component);
                }
            }
            auto res = absorb && j < pres.size() && pres.components[j].companion ? absorb_companion(pres, j)
                                                                                 : blow_down(pres, j);
            o.block(format_presentation(res));
            o.kv("h1_order", std::to_string(h1_order(res)));
            return kExitOk;
        }
        if (*blowup) {
            auto res = blow_up_clasp(load_presentation(file), static_cast<std::size_t>(ci),
                                     static_cast<std::size_t>(ck), sign);
            o.block(format_presentation(res));
            o.kv("h1_order", std::to_string(h1_order(res)));
            return kExitOk;
        }
        if (*cob) {
            CobordismData c = kind == "type1" ? type1_cobordism(n) : kind == "filling" ? type1_filling() : type2_cobordism();
            print_cobordism(o, c);
            return kExitOk;
        }
        if (*lens) {
            Rational d = q == 1 ? lens_d(p, i_res) : lens_d_recursive(p, q, i_res);
            o.headline("d", to_string(d));
            return kExitOk;
        }
        if (*cone_cmd) {
            auto k = load_knot(file);
            Rational shift = lens_d(2 * n_surgery, n_surgery);
            if (*shift_opt) {
                try {
                    shift = parse_rational(shift_text);
                } catch (const std::invalid_argument& e) {
                    throw ParseError("--shift", 1, e.what());
                }
            }
            auto cone = surgery_cone(build_An(k, n_surgery), build_B(k), v_map(k, n_surgery), shift);
            o.block(format_iota(cone.iota));
            if (reduce) {
                auto r = corollary_reduce(cone);
                o.kv("reduced_class", "(F[U]_{" + to_string(r.d) + "}, id)");
                o.block(map_lines(cone.iota.complex, r.model.complex, r.to_model));
            }
            return kExitOk;
        }
        if (*kcheck) {
            auto k = load_knot(file);
            auto bad = validate_knotlike(k);
            o.kv("valid", bad.empty() ? "true" : "false");
            for (const auto& v : bad) o.kv("violation", v.kind + ": " + v.detail);
            if (!bad.empty()) return kExitHypothesis;
            o.kv("locally_trivial", is_locally_trivial_knotlike(k) ? "true" : "false");
            o.kv("d(A_" + std::to_string(n_surgery) + ")", to_string(d_invariant(build_An(k, n_surgery))));
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const SearchBudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const HypothesisFailed& e) {
        err << "hypothesis failed: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const NotType1& e) {
        err << "hypothesis failed: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const NotRankOne& e) {
        err << "hypothesis failed: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const InvalidCone& e) {
        err << "hypothesis failed: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace splice

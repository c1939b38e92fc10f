#include "ncalg/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncalg/casimir.hpp"
#include "ncalg/filtration.hpp"
#include "ncalg/map_text.hpp"
#include "ncalg/system_text.hpp"
#include "ncalg/verify.hpp"

namespace ncalg {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json element_json(const Element& e) {
    return {{"text", e.to_text()}, {"terms", element_to_json(e)}};
}

json polynomial_json(const CentralPolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", c.to_string()}});
    return {{"variables", kCentralNames}, {"text", p.to_text(kCentralNames)}, {"terms", terms}};
}

struct Options {
    bool json = false;
    std::string alg;
    std::string expr;
    std::string weights;
    long level = 0;
    std::string path;
    bool all = false;
    int max_weight = 40;
    std::vector<int> criteria;
};

class Commands {
public:
    Commands(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

    int reduce() {
        auto p = load_presentation(o_.alg);
        Element e = p->parse(o_.expr);
        if (o_.json) {
            json j = element_json(e);
            j["algebra"] = p->name();
            out_ << j.dump(2) << "\n";
        } else {
            out_ << e.to_text() << "\n";
        }
        return kExitOk;
    }

    int confluence() {
        auto p = load_presentation(o_.alg);
        const auto& sys = p->system();
        const bool terminates = sys.termination().terminates;
        std::vector<OverlapReport> reports;
        if (terminates) reports = check_confluence(sys);
        const bool ok = terminates && all_resolvable(reports);
        std::size_t nontrivial = 0;
        for (const auto& r : reports) nontrivial += r.trivial ? 0 : 1;
        if (o_.json) {
            json list = json::array();
            for (const auto& r : reports) {
                if (r.trivial && !o_.all) continue;
                list.push_back({{"word", word_to_text(*p->alphabet(), r.word)},
                                {"rules", {r.first_rule, r.second_rule}},
                                {"inclusion", r.inclusion},
                                {"trivial", r.trivial},
                                {"resolvable", r.resolvable},
                                {"left", element_json(r.left_result)},
                                {"right", element_json(r.right_result)}});
            }
            out_ << json{{"algebra", p->name()},
                         {"terminates", terminates},
                         {"ambiguities", reports.size()},
                         {"nontrivial", nontrivial},
                         {"resolvable", ok},
                         {"overlaps", list}}
                        .dump(2)
                 << "\n";
        } else {
            if (!terminates) {
                for (const auto& v : sys.termination().violations) {
                    out_ << "rule " << v.rule + 1 << " does not decrease at " << word_to_text(*p->alphabet(), v.rhs_word)
                         << "\n";
                }
            }
            for (const auto& r : reports) {
                if (r.trivial && !o_.all) continue;
                out_ << word_to_text(*p->alphabet(), r.word) << " = " << r.left_result.to_text();
                if (!r.resolvable) out_ << "  UNRESOLVED, other path " << r.right_result.to_text();
                out_ << "\n";
            }
            out_ << "terminates: " << (terminates ? "yes" : "no") << "\n";
            out_ << "ambiguities: " << reports.size() << ", nontrivial: " << nontrivial << "\n";
            out_ << "resolvable: " << (ok ? "yes" : "no") << "\n";
        }
        return ok ? kExitOk : kExitVerificationFailed;
    }

    int map_apply(const AlgebraMap& m) {
        Element e = m.apply(std::string_view(o_.expr));
        if (o_.json) {
            json j = element_json(e);
            j["map"] = m.name();
            j["target"] = m.target()->name();
            out_ << j.dump(2) << "\n";
        } else {
            out_ << e.to_text() << "\n";
        }
        return kExitOk;
    }

    int map_file() {
        AlgebraMap m = parse_map(read_file(o_.path));
        RelationCheck check = m.seal();
        if (!check.holds) {
            for (const auto& c : check.counterexamples) {
                err_ << "relation " << c.rule_text << " fails: defect " << c.defect.to_text() << "\n";
            }
            return kExitVerificationFailed;
        }
        return map_apply(m);
    }

    int filtration_check() {
        WeightVector w = WeightVector::parse(o_.weights);
        const bool yes = is_filtration(w);
        const unsigned x = w[0], y = w[1], z = w[2], k = w[3], l = w[4], m = w[5];
        struct Ineq {
            const char* text;
            bool holds;
        };
        const Ineq ineqs[] = {{"max(wZ, wkappa) <= wX + wY", std::max(z, k) <= x + y},
                              {"max(wX, wlambda) <= wY + wZ", std::max(x, l) <= y + z},
                              {"max(wY, wmu) <= wZ + wX", std::max(y, m) <= z + x}};
        if (o_.json) {
            json list = json::array();
            for (const auto& i : ineqs) list.push_back({{"inequality", i.text}, {"holds", i.holds}});
            out_ << json{{"weights", w.values()}, {"filtration", yes}, {"inequalities", list}}.dump(2) << "\n";
        } else {
            out_ << "filtration: " << (yes ? "yes" : "no") << "\n";
            for (const auto& i : ineqs) {
                if (!i.holds) out_ << "fails: " << i.text << "\n";
            }
        }
        return kExitOk;
    }

    int filtration_lead() {
        WeightVector w = WeightVector::parse(o_.weights);
        const auto& bi = *bannai_ito();
        if (w.size() != bi.alphabet()->size()) throw std::invalid_argument("BI weight vectors have six entries");
        Element e = bi.parse(o_.expr);
        Element lead = leading_form(w, e, o_.level);
        if (o_.json) {
            json j = element_json(lead);
            j["degree"] = weighted_degree(w, e);
            j["level"] = o_.level;
            out_ << j.dump(2) << "\n";
        } else {
            out_ << lead.to_text() << "\n";
        }
        return kExitOk;
    }

    int casimir_express() {
        Element omega = racah()->parse(o_.expr);
        try {
            CentralPolynomial p = express_casimir(omega);
            if (o_.json) {
                json j = polynomial_json(p);
                j["central"] = is_central(*racah(), omega);
                out_ << j.dump(2) << "\n";
            } else {
                out_ << p.to_text(kCentralNames) << "\n";
            }
            return kExitOk;
        } catch (const NotInCentralizerImage& e) {
            err_ << e.what() << "\n";
            for (const auto& m : e.offending()) err_ << "  " << m << "\n";
            return kExitVerificationFailed;
        }
    }

    int casimir_rank() {
        auto report = zeta_rank_check(o_.max_weight);
        if (o_.json) {
            out_ << report.to_json().dump(2) << "\n";
        } else {
            out_ << "monomials: " << report.dimension_source << "\n";
            out_ << "rank: " << report.dimension_image << "\n";
            out_ << "full rank: " << (report.full_rank ? "yes" : "no") << "\n";
            out_ << "leading tuples injective: " << (report.leading_map_injective ? "yes" : "no") << "\n";
            out_ << "top coefficients match: " << (report.top_coefficients_match ? "yes" : "no") << "\n";
        }
        return report.passed() ? kExitOk : kExitVerificationFailed;
    }

    int verify(bool identities, bool criteria) {
        bool ok = true;
        json j;
        if (identities) {
            auto corpus = o_.path.empty() ? builtin_identities() : parse_identities(read_file(o_.path));
            std::size_t passed = 0;
            json list = json::array();
            for (const auto& id : corpus) {
                auto r = check_identity(id);
                passed += r.passed ? 1 : 0;
                ok = ok && r.passed;
                if (o_.json) {
                    list.push_back(to_json(r));
                } else {
                    out_ << (r.passed ? "PASS " : "FAIL ") << id.label;
                    if (!r.passed) out_ << ": " << r.detail;
                    out_ << "\n";
                }
            }
            j["identities"] = list;
            if (!o_.json) out_ << "identities: " << passed << "/" << corpus.size() << " passed\n";
        }
        if (criteria) {
            auto results = run_acceptance(o_.criteria);
            std::size_t passed = 0;
            json list = json::array();
            for (const auto& r : results) {
                passed += r.passed ? 1 : 0;
                ok = ok && r.passed;
                if (o_.json) {
                    list.push_back(to_json(r));
                } else {
                    out_ << (r.passed ? "PASS " : "FAIL ") << "criterion " << r.id << ": " << r.title << " ("
                         << std::fixed << std::setprecision(3) << r.seconds << " s) " << r.detail << "\n";
                }
            }
            j["criteria"] = list;
            if (!o_.json) out_ << "criteria: " << passed << "/" << results.size() << " passed\n";
        }
        if (o_.json) {
            j["pass"] = ok;
            out_ << j.dump(2) << "\n";
        }
        return ok ? kExitOk : kExitVerificationFailed;
    }

private:
    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal forms and verification for the Racah and Bannai-Ito algebras", "ncalg"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "emit JSON instead of canonical text");

    const std::string alg_help = "racah, bi, bi-rebased, or a system file";

    auto* reduce = app.add_subcommand("reduce", "print the normal form of an expression");
    reduce->add_option("alg", o.alg, alg_help)->required();
    reduce->add_option("expr", o.expr, "expression")->required();

    auto* confluence = app.add_subcommand("confluence", "check termination and all ambiguities");
    confluence->add_option("alg", o.alg, alg_help)->required();
    confluence->add_flag("--all", o.all, "also list trivial ambiguities");

    auto* map = app.add_subcommand("map", "apply an algebra map");
    map->require_subcommand(1);
    auto* zeta_cmd = map->add_subcommand("zeta", "Racah -> Bannai-Ito embedding");
    zeta_cmd->add_option("expr", o.expr, "Racah expression")->required();
    auto* sigma_cmd = map->add_subcommand("sigma", "D6 generator sigma (antiautomorphism)");
    auto* tau_cmd = map->add_subcommand("tau", "D6 generator tau (antiautomorphism)");
    for (auto* c : {sigma_cmd, tau_cmd}) {
        o.alg = "racah";
        c->add_option("--alg", o.alg, "racah or bi")->check(CLI::IsMember({"racah", "bi"}));
        c->add_option("expr", o.expr, "expression")->required();
    }
    auto* file_cmd = map->add_subcommand("file", "map read from a definition file");
    file_cmd->add_option("path", o.path, "map definition file")->required();
    file_cmd->add_option("expr", o.expr, "source expression")->required();

    auto* filtration = app.add_subcommand("filtration", "weighted filtrations of the Bannai-Ito algebra");
    filtration->require_subcommand(1);
    auto* fcheck = filtration->add_subcommand("check", "is the weight vector a filtration");
    fcheck->add_option("weights", o.weights, "wX,wY,wZ,wkappa,wlambda,wmu")->required();
    auto* flead = filtration->add_subcommand("lead", "terms of weighted degree >= n");
    flead->add_option("weights", o.weights, "wX,wY,wZ,wkappa,wlambda,wmu")->required();
    flead->add_option("n", o.level, "level")->required();
    flead->add_option("expr", o.expr, "BI expression")->required();

    auto* casimir = app.add_subcommand("casimir", "Casimir elements of the Racah algebra");
    casimir->require_subcommand(1);
    auto* cexpress = casimir->add_subcommand("express", "write zeta(omega) as P(iota, kappa, lambda, mu)");
    cexpress->add_option("expr", o.expr, "Racah expression")->required();
    auto* crank = casimir->add_subcommand("rank", "truncated injectivity check for zeta");
    crank->add_option("--max-weight", o.max_weight, "weight bound")->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "run the identity corpus and acceptance criteria");
    verify->require_subcommand(1);
    auto* vall = verify->add_subcommand("all", "identity corpus and all criteria");
    auto* vids = verify->add_subcommand("identities", "identity corpus only");
    vids->add_option("--file", o.path, "corpus file (default: built-in)");
    auto* vcrit = verify->add_subcommand("criteria", "acceptance criteria only");
    vcrit->add_option("ids", o.criteria, "criterion numbers (default: all)")->check(CLI::Range(1, 12));

    // trailing flags should work after positionals in any subcommand
    app.fallthrough();
    for (auto* c : {reduce, confluence, map, filtration, casimir, verify}) c->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    Commands cmd(o, out, err);
    try {
        if (*reduce) return cmd.reduce();
        if (*confluence) return cmd.confluence();
        if (*zeta_cmd) return cmd.map_apply(zeta());
        if (*sigma_cmd) return cmd.map_apply(sigma_on(o.alg));
        if (*tau_cmd) return cmd.map_apply(tau_on(o.alg));
        if (*file_cmd) return cmd.map_file();
        if (*fcheck) return cmd.filtration_check();
        if (*flead) return cmd.filtration_lead();
        if (*cexpress) return cmd.casimir_express();
        if (*crank) return cmd.casimir_rank();
        if (*vall) return cmd.verify(true, true);
        if (*vids) return cmd.verify(true, false);
        if (*vcrit) return cmd.verify(false, true);
    } catch (const ParseError& e) {
        err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.reason() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace ncalg

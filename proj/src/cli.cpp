#include "cgd/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cgd/charring.hpp"
#include "cgd/errors.hpp"
#include "cgd/fp_module.hpp"
#include "cgd/oracle.hpp"
#include "cgd/quadruple.hpp"
#include "cgd/tilting.hpp"

namespace cgd::cli {

using nlohmann::json;

namespace {

std::string set_string(const IndexSet& I) {
    std::string s = "{";
    for (std::size_t k = 0; k < I.size(); ++k) s += (k ? "," : "") + std::to_string(I[k]);
    return s + "}";
}

std::string list_string(const std::vector<Int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + std::to_string(v[k]);
    return s;
}

json character_json(const Character& c) {
    json terms = json::array();
    for (const auto& [w, k] : c.terms()) terms.push_back({w, k});
    return terms;
}

json chi_json(const ChiExpansion& e) {
    json out = json::array();
    for (auto it = e.mults.rbegin(); it != e.mults.rend(); ++it) out.push_back({it->first, it->second});
    return out;
}

std::string chi_string(const ChiExpansion& e) {
    std::string s;
    for (auto it = e.mults.rbegin(); it != e.mults.rend(); ++it) {
        if (!s.empty()) s += " + ";
        if (it->second != 1) s += std::to_string(it->second) + "*";
        s += "chi(" + std::to_string(it->first) + ")";
    }
    return s.empty() ? "0" : s;
}

void need_s(const Request& q) {
    if (q.s < 0) throw UsageError(q.command + ": --s is required");
}

int do_decompose(const Request& q, std::ostream& out) {
    need_s(q);
    const Prime p(q.p);
    const Decomposition d = decompose_tensor(q.r, q.s, p, DualPolicy::Dualize);
    const bool check = d.character() == chi(q.r) * chi(q.s);
    if (q.format == Format::Json) {
        json j = to_json(d);
        j["character_check"] = check;
        out << j.dump(2) << "\n";
    } else {
        out << "nabla(" << q.r << ") x Delta(" << q.s << ")  p=" << q.p;
        if (d.dual) out << "  (dual of nabla(" << d.r << ") x Delta(" << d.s << "))";
        out << "\n";
        out << std::setw(8) << "m" << "  " << std::setw(12) << std::left << "I" << std::right << std::setw(8) << "dim"
            << "  sections\n";
        for (const Summand& sm : d.summands) {
            out << std::setw(8) << sm.m << "  " << std::setw(12) << std::left << set_string(sm.I) << std::right
                << std::setw(8) << sm.dim() << "  " << list_string(sm.sections) << "\n";
        }
        out << "summands: " << d.summands.size() << "  character_check: " << (check ? "ok" : "FAILED") << "\n";
    }
    return check ? 0 : 1;
}

int do_ytilt(const Request& q, std::ostream& out) {
    const Prime p(q.p);
    const std::vector<Int> ss = decompose_y(q.r, p);
    if (q.format == Format::Json) {
        json j = {{"p", q.p}, {"r", q.r}, {"tilting", ss}};
        if (q.s >= 0) j["contains"] = y_has_tilting(q.r, q.s, p);
        out << j.dump(2) << "\n";
    } else {
        out << "Y(" << q.r << ")  p=" << q.p << "\n";
        for (Int s : ss) out << "  T(" << s << ")  dim " << tilting_char(s, p).dimension() << "\n";
        if (q.s >= 0) out << "contains T(" << q.s << "): " << (y_has_tilting(q.r, q.s, p) ? "yes" : "no") << "\n";
    }
    return 0;
}

int do_char(const Request& q, std::ostream& out) {
    const Prime p(q.p);
    Character c;
    std::string label;
    if (q.kind == "nabla") {
        c = chi(q.r);
        label = "nabla(" + std::to_string(q.r) + ")";
    } else if (q.kind == "y") {
        c = y_char(q.r);
        label = "Y(" + std::to_string(q.r) + ")";
    } else if (q.kind == "tilting") {
        c = tilting_char(q.r, p);
        label = "T(" + std::to_string(q.r) + ")";
    } else if (q.kind == "tensor") {
        need_s(q);
        c = chi(q.r) * chi(q.s);
        label = "nabla(" + std::to_string(q.r) + ") x Delta(" + std::to_string(q.s) + ")";
    } else {
        throw UsageError("char: unknown --kind '" + q.kind + "'");
    }
    const ChiExpansion e = chi_expand(c);
    if (q.format == Format::Json) {
        out << json{{"p", q.p}, {"kind", q.kind}, {"label", label}, {"dim", c.dimension()},
                    {"terms", character_json(c)}, {"chi", chi_json(e)}}.dump(2)
            << "\n";
    } else {
        out << label << "  p=" << q.p << "  dim " << c.dimension() << "\n";
        out << "  " << c.to_string() << "\n";
        out << "  = " << chi_string(e) << "\n";
    }
    return 0;
}

int do_quadruple(const Request& q, std::ostream& out) {
    const Prime p(q.p);
    check_pair(q.r, q.t);
    std::vector<Quadruple> found;
    if (q.method == "solve") {
        found.push_back(solve(q.r, q.t, p));
    } else if (q.method == "enumerate") {
        found = solve_by_enumeration(q.r, q.t, p);
    } else if (q.method == "recursive") {
        found.push_back(solve_recursive(q.r, q.t, p));
    } else {
        throw UsageError("quadruple: unknown --method '" + q.method + "'");
    }
    if (q.format == Format::Json) {
        json arr = json::array();
        for (const Quadruple& x : found) {
            arr.push_back({{"N", x.N}, {"sigma", x.sigma}, {"delta", x.delta}, {"I", x.I}});
        }
        out << json{{"p", q.p}, {"r", q.r}, {"t", q.t}, {"method", q.method}, {"quadruples", arr}}.dump(2) << "\n";
    } else {
        for (const Quadruple& x : found) out << x << "\n";
        if (found.empty()) out << "no admissible quadruple\n";
    }
    return found.size() == 1 ? 0 : 1;
}

int do_verify(const Request& q, std::ostream& out, std::ostream& err) {
    const Report rep = verify_all(Prime(q.p), q.bound);
    if (q.format == Format::Json) {
        json checks = json::array();
        for (const CheckResult& c : rep.checks) {
            checks.push_back(
                {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"counterexample", c.counterexample}});
        }
        out << json{{"p", rep.p}, {"bound", rep.bound}, {"all_passed", rep.all_passed()}, {"checks", checks}}.dump(2)
            << "\n";
    } else {
        out << rep.to_text();
    }
    for (const CheckResult& c : rep.checks) {
        if (!c.passed) {
            err << "first failure: " << c.name << ": " << c.counterexample << "\n";
            return 1;
        }
    }
    return 0;
}

int do_ses(const Request& q, std::ostream& out, std::ostream& err) {
    need_s(q);
    const Prime p(q.p);
    if (q.p > fp::kMaxExplicitPrime) throw DomainError("ses: p must be at most 97");
    if (q.s < 1 || q.r < q.s) throw DomainError("ses: needs r >= s >= 1");
    const fp::SesReport rep = fp::verify_ses(q.r, q.s, p);
    if (q.format == Format::Json) {
        out << json{{"p", rep.p},
                    {"r", rep.r},
                    {"s", rep.s},
                    {"domain_dim", rep.domain_dim},
                    {"codomain_dim", rep.codomain_dim},
                    {"rank", rep.rank},
                    {"kernel_dim", rep.kernel_dim},
                    {"kernel_character", character_json(rep.kernel_character)},
                    {"homomorphism", rep.homomorphism},
                    {"surjective", rep.surjective},
                    {"kernel_is_nabla", rep.kernel_is_nabla},
                    {"kernel_stable", rep.kernel_stable},
                    {"highest_weight_ok", rep.highest_weight_ok},
                    {"telescoping_ok", rep.telescoping_ok},
                    {"passed", rep.passed()},
                    {"failure", rep.failure}}
                   .dump(2)
            << "\n";
    } else {
        out << rep.to_text() << "\n";
    }
    if (!rep.passed()) {
        err << "ses failed: " << rep.failure << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

Request parse_request(const std::vector<std::string>& args, HelpRequested* help) {
    CLI::App app{"Clebsch-Gordan decompositions for SL2 in characteristic p", "cgdecomp"};
    app.require_subcommand(1);
    Request q;
    std::string format = "table";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", q.p, "prime")->required()->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
    };
    auto weight = [](CLI::App* sub, const char* name, Int& slot, const char* what) {
        return sub->add_option(name, slot, what)->check(CLI::Range(Int{0}, kMaxWeight - 1, "WEIGHT"));
    };

    CLI::App* dec = app.add_subcommand("decompose", "summands of nabla(r) x Delta(s)");
    add_common(dec);
    weight(dec, "--r", q.r, "weight r")->required();
    weight(dec, "--s", q.s, "weight s")->required();

    CLI::App* yt = app.add_subcommand("ytilt", "tilting summands of Y(r)");
    add_common(yt);
    weight(yt, "--r", q.r, "weight r")->required();
    weight(yt, "--s", q.s, "also test whether T(s) is a summand");

    CLI::App* ch = app.add_subcommand("char", "characters");
    add_common(ch);
    weight(ch, "--r", q.r, "weight r")->required();
    weight(ch, "--s", q.s, "second weight for --kind tensor");
    ch->add_option("--kind", q.kind, "nabla, y, tilting or tensor")
        ->check(CLI::IsMember({"nabla", "y", "tilting", "tensor"}));

    CLI::App* qd = app.add_subcommand("quadruple", "admissible quadruple for (r, t)");
    add_common(qd);
    weight(qd, "--r", q.r, "weight r")->required();
    weight(qd, "--t", q.t, "weight t")->required();
    qd->add_option("--method", q.method, "solve, enumerate or recursive")
        ->check(CLI::IsMember({"solve", "enumerate", "recursive"}));

    CLI::App* ver = app.add_subcommand("verify", "run every invariant family up to --bound");
    add_common(ver);
    weight(ver, "--bound", q.bound, "sweep limit");

    CLI::App* ses = app.add_subcommand("ses", "explicit F_p check of the short exact sequence");
    add_common(ses);
    weight(ses, "--r", q.r, "weight r")->required();
    weight(ses, "--s", q.s, "weight s")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        if (help) help->text = app.help();
        return q;
    } catch (const CLI::CallForAllHelp&) {
        if (help) help->text = app.help("", CLI::AppFormatMode::All);
        return q;
    } catch (const CLI::ParseError& e) {
        for (CLI::App* sub : app.get_subcommands()) {
            if (sub->get_help_ptr() && sub->get_help_ptr()->count() > 0 && help) {
                help->text = sub->help();
                return q;
            }
        }
        throw UsageError(e.what());
    }
    q.command = app.get_subcommands().front()->get_name();
    q.format = format == "json" ? Format::Json : Format::Table;
    return q;
}

int run(const Request& q, std::ostream& out, std::ostream& err) {
    try {
        if (q.command == "decompose") return do_decompose(q, out);
        if (q.command == "ytilt") return do_ytilt(q, out);
        if (q.command == "char") return do_char(q, out);
        if (q.command == "quadruple") return do_quadruple(q, out);
        if (q.command == "verify") return do_verify(q, out, err);
        if (q.command == "ses") return do_ses(q, out, err);
        err << "error: unknown command '" << q.command << "'\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return 1;
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Request q;
    HelpRequested help;
    try {
        q = parse_request(args, &help);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\nrun with --help for usage\n";
        return 2;
    }
    if (!help.text.empty()) {
        out << help.text;
        return 0;
    }
    return run(q, out, err);
}

json to_json(const Decomposition& d) {
    json summands = json::array();
    for (const Summand& sm : d.summands) {
        summands.push_back({{"m", sm.m}, {"I", sm.I}, {"sections", sm.sections}, {"dim", sm.dim()}});
    }
    return {{"p", d.p.value()}, {"r", d.r}, {"s", d.s}, {"dual", d.dual}, {"summands", summands}};
}

Decomposition decomposition_from_json(const json& j) {
    Decomposition d{Prime(j.at("p").get<Int>()), j.at("r").get<Int>(), j.at("s").get<Int>(),
                    j.value("dual", false), {}};
    for (const json& x : j.at("summands")) {
        Summand sm;
        sm.m = x.at("m").get<Int>();
        sm.I = x.at("I").get<IndexSet>();
        sm.sections = x.at("sections").get<std::vector<Int>>();
        for (Int w : sm.sections) sm.character += chi(w);
        if (sm.dim() != x.at("dim").get<Int>()) throw DomainError("decomposition_from_json: dim does not match sections");
        d.summands.push_back(std::move(sm));
    }
    return d;
}

}  // namespace cgd::cli

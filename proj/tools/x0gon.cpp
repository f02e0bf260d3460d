// x0gon: command-line front end for the gonality library.
//
// Exit codes: 0 success, 1 usage or domain error, 2 data error, 3 verify mismatch.

#include "gonality/arith.hpp"
#include "gonality/classnum.hpp"
#include "gonality/engine.hpp"
#include "gonality/facts.hpp"
#include "gonality/hecke.hpp"
#include "gonality/modgenus.hpp"
#include "gonality/rules.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace gonality;
using nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, usage = 1, data = 2, mismatch = 3 };

struct DataError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Output
{
    bool json = false;
    std::ostringstream out;

    void row(std::vector<std::string> const & cells, ordered_json const & obj)
    {
        if (json) {
            out << obj.dump() << '\n';
            return;
        }
        for (std::size_t i = 0; i < cells.size(); ++i)
            out << (i ? "\t" : "") << cells[i];
        out << '\n';
    }
};

std::string read_file(std::string const & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

FactParseResult load_facts(std::string const & path)
{
    if (path.empty())
        return {};
    auto result = parse_facts(read_file(path));
    for (auto const & d : result.errors)
        std::cerr << path << ":" << d.line << ": " << d.message << '\n';
    if (!result.ok())
        throw DataError("fact file " + path + " has " + std::to_string(result.errors.size()) + " error(s)");
    return result;
}

std::string bound(std::int64_t v)
{
    return v == unbounded ? "inf" : std::to_string(v);
}

ordered_json bound_json(std::int64_t v)
{
    return v == unbounded ? ordered_json(nullptr) : ordered_json(v);
}

std::string status(GonalityState const & s)
{
    return s.decided() ? "decided" : "undecided";
}

std::string step_text(CertificateStep const & step)
{
    auto const & a = step.assertion;
    return std::string(to_string(a.rule)) + " " + std::string(to_string(a.field)) +
           (a.kind == BoundKind::lower ? ">=" : "<=") + std::to_string(a.value) + " {" + step.anchor + "}";
}

std::string summary(Certificate const & cert)
{
    std::string out;
    for (auto const & step : cert)
        out += (out.empty() ? "" : " | ") + step_text(step);
    return out;
}

void emit_state(Output & o, GonalityState const & s)
{
    ordered_json certificate = ordered_json::array();
    for (auto const & step : s.certificate) {
        ordered_json inputs = ordered_json::object();
        for (auto const & e : step.assertion.inputs)
            inputs[e.name] = e.value;
        certificate.push_back({{"rule", to_string(step.assertion.rule)},
                               {"field", to_string(step.assertion.field)},
                               {"kind", to_string(step.assertion.kind)},
                               {"value", step.assertion.value},
                               {"inputs", inputs},
                               {"anchor", step.anchor}});
    }
    ordered_json obj{{"N", s.curve.level()},
                     {"d", s.curve.d()},
                     {"genus", s.genus},
                     {"lowerQ", s.lowerQ},
                     {"upperQ", bound_json(s.upperQ)},
                     {"lowerC", s.lowerC},
                     {"upperC", bound_json(s.upperC)},
                     {"status", status(s)},
                     {"certificate", certificate}};
    o.row({std::to_string(s.curve.level()), std::to_string(s.curve.d()), std::to_string(s.genus),
           std::to_string(s.lowerQ), bound(s.upperQ), std::to_string(s.lowerC), bound(s.upperC),
           status(s), summary(s.certificate)},
          obj);
}

std::string join(std::vector<std::int64_t> const & v)
{
    std::string out;
    for (auto x : v)
        out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

std::string rational_text(Rational const & r)
{
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Gonality of Atkin-Lehner quotients of X0(N)"};
    app.require_subcommand(1);
    Output o;
    std::string format = "tsv";
    app.add_option("--format", format, "tsv (default) or json, one object per row")
        ->check(CLI::IsMember({"tsv", "json"}));

    std::int64_t n = 0, d = 0, d2 = 0, p = 0, m = 0, disc = 0, nmax = 0;
    int deg = 1;
    std::string facts_path, expected_path, validate_path;
    bool include_fricke = false;

    auto * inv = app.add_subcommand("invariants", "psi, omega, genus, cusps, Hall divisors of N");
    inv->add_option("N", n)->required();

    auto * gen = app.add_subcommand("genus", "genus of X0(N)/d or X0(N)/<d,d'>");
    gen->add_option("N", n)->required();
    gen->add_option("d", d)->required();
    gen->add_option("d2", d2);

    auto * cnt = app.add_subcommand("count", "#X0(N)(F_{p^deg})");
    cnt->add_option("N", n)->required();
    cnt->add_option("p", p)->required();
    cnt->add_option("--deg", deg)->check(CLI::IsMember({1, 2}));

    auto * tr = app.add_subcommand("trace", "trace of T_m on S_2(Gamma0(N))");
    tr->add_option("N", n)->required();
    tr->add_option("m", m)->required();

    auto * cn = app.add_subcommand("classnum", "class number h(D) and Hurwitz H(|D|)");
    cn->add_option("D", disc)->required();

    auto * cls = app.add_subcommand("classify", "gonality interval of X0(N)/d");
    cls->add_option("N", n)->required();
    cls->add_option("d", d)->required();
    cls->add_option("--facts", facts_path);

    auto * sur = app.add_subcommand("survey", "classify every X0(N)/d with N <= nmax");
    sur->add_option("--nmax", nmax)->required();
    sur->add_option("--facts", facts_path);
    sur->add_flag("--include-fricke", include_fricke);

    auto * ver = app.add_subcommand("verify", "compare a survey against an expected table");
    ver->add_option("--facts", facts_path);
    ver->add_option("--expected", expected_path)->required();
    ver->add_option("--nmax", nmax, "survey bound (default: largest N in the table)");

    auto * fac = app.add_subcommand("facts", "fact file utilities");
    fac->require_subcommand(1);
    auto * val = fac->add_subcommand("validate", "parse and check a fact file");
    val->add_option("FILE", validate_path)->required();

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        app.exit(e);
        return usage;
    }
    o.json = format == "json";

    int code = ok;
    try {
        if (*inv) {
            Level const level(n);
            auto const g = genus_X0(level);
            std::vector<std::int64_t> hall;
            for (auto const & h : hall_divisors(level))
                hall.push_back(h.value());
            o.row({std::to_string(n), std::to_string(level.psi()), std::to_string(level.omega()),
                   std::to_string(g.genus), std::to_string(g.cusps), join(hall)},
                  {{"N", n}, {"psi", level.psi()}, {"omega", level.omega()}, {"genus", g.genus},
                   {"cusps", g.cusps}, {"hall_divisors", hall}});
        } else if (*gen) {
            CurveRef const curve = d2 ? CurveRef::pair(n, d, d2) : CurveRef::single(n, d);
            std::int64_t const g = genus(curve).genus;
            std::string const label = d2 ? "(" + std::to_string(d) + "," + std::to_string(d2) + ")"
                                         : std::to_string(d);
            o.row({std::to_string(n), label, std::to_string(g)},
                  {{"N", n}, {"curve", curve.to_string()}, {"genus", g}});
        } else if (*cnt) {
            auto const c = count_points(Level(n), p, deg);
            o.row({std::to_string(n), std::to_string(c.q), std::to_string(c.count)},
                  {{"N", n}, {"q", c.q}, {"count", c.count}});
        } else if (*tr) {
            auto const t = trace_Tm(Level(n), m);
            o.row({std::to_string(n), std::to_string(m), std::to_string(t.value)},
                  {{"N", n}, {"m", m}, {"trace", t.value}});
        } else if (*cn) {
            std::int64_t const h = class_number(disc);
            std::string const hw = rational_text(hurwitz_class_number(-disc));
            o.row({std::to_string(disc), std::to_string(h), hw},
                  {{"D", disc}, {"h", h}, {"H", hw}});
        } else if (*cls) {
            CurveRef const curve = CurveRef::single(n, d);
            auto const facts = load_facts(facts_path);
            emit_state(o, classify(curve, facts.store));
        } else if (*sur) {
            auto const facts = load_facts(facts_path);
            for (auto const & s : survey(nmax, facts.store, include_fricke))
                emit_state(o, s);
        } else if (*ver) {
            auto const facts = load_facts(facts_path);
            auto const table = parse_expected(read_file(expected_path));
            for (auto const & e : table.errors)
                std::cerr << expected_path << ":" << e.line << ": " << e.message << '\n';
            if (!table.ok())
                throw DataError("expected table " + expected_path + " has errors");
            std::int64_t const bound_n = nmax ? nmax : table.max_level();
            auto const states = survey(bound_n, facts.store, table.has_fricke());
            auto const report = verify(states, table, facts.store, facts.suspect);
            auto list = [&](std::string const & tag, std::vector<VerifyEntry> const & entries) {
                for (auto const & e : entries)
                    o.row({tag, std::to_string(e.n), std::to_string(e.d), e.detail},
                          {{"result", tag}, {"N", e.n}, {"d", e.d}, {"detail", e.detail}});
            };
            list("match", report.matches);
            list("mismatch", report.mismatches);
            list("undecided", report.undecided);
            for (auto const & note : report.notes)
                o.row({"note", note}, {{"result", "note"}, {"detail", note}});
            std::cerr << "matches " << report.matches.size() << ", mismatches "
                      << report.mismatches.size() << ", undecided " << report.undecided.size() << '\n';
            if (!report.passed())
                code = mismatch;
        } else if (*val) {
            auto const result = parse_facts(read_file(validate_path));
            for (auto const & e : result.errors)
                std::cerr << validate_path << ":" << e.line << ": error: " << e.message << '\n';
            for (auto const & w : result.suspect)
                std::cerr << validate_path << ":" << w.line << ": warning: " << w.message << '\n';
            o.row({"facts", std::to_string(result.store.size()), "errors",
                   std::to_string(result.errors.size()), "suspect", std::to_string(result.suspect.size())},
                  {{"facts", result.store.size()},
                   {"errors", result.errors.size()},
                   {"suspect", result.suspect.size()}});
            if (!result.ok())
                code = data;
        }
    } catch (DataError const & e) {
        std::cerr << "error: " << e.what() << '\n';
        return data;
    } catch (ContradictionError const & e) {
        std::cerr << "error: " << e.what() << '\n';
        return data;
    } catch (domain_error const & e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    std::cout << o.out.str() << std::flush;
    return code;
}

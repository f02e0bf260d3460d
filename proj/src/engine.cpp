#include "gonality/engine.hpp"

#include "gonality/detail/memo.hpp"
#include "gonality/hecke.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <map>
#include <set>
#include <tuple>

namespace gonality {

namespace {

constexpr std::int64_t count_prime_bound = 13;
constexpr int max_passes = 8;

struct Candidate
{
    BoundAssertion assertion;
    std::string anchor;
};

struct Quotient
{
    CurveRef curve;
    std::int64_t genus;
};

struct Context
{
    CurveRef curve;
    Level level;
    std::int64_t g;
    FactStore const & store;
    std::vector<Quotient> quotients; // every X0(N)/<w_d, w_e> below the curve
};

std::string fact_anchor(Fact const & f)
{
    return "fact " + serialize(f) + " (line " + std::to_string(f.line) + ")";
}

Context make_context(CurveRef const & curve, FactStore const & store)
{
    if (curve.kind() != CurveKind::single_quotient)
        throw domain_error("classify expects a single quotient X0(N)/d, got " + curve.to_string());
    if (is_prime_power(curve.level()))
        throw domain_error("classify: N = " + std::to_string(curve.level()) +
                           " is a prime power");
    Level const level(curve.level());
    Context ctx{curve, level, genus(curve).genus, store, {}};
    std::set<CurveRef> seen;
    for (auto const & e : hall_divisors(level)) {
        if (e.value() == 1 || e.value() == curve.d())
            continue;
        CurveRef const y = CurveRef::pair(level.value(), curve.d(), e.value());
        if (seen.insert(y).second)
            ctx.quotients.push_back({y, genus(y).genus});
    }
    return ctx;
}

std::int64_t cached_count(Level const & level, std::int64_t p, int e)
{
    static detail::ConcurrentMemo<std::tuple<std::int64_t, std::int64_t, int>, std::int64_t> memo;
    return memo.get({level.value(), p, e}, [&] { return count_points(level, p, e).count; });
}

// Best known upper bound for gon_Q of a pair quotient.
std::int64_t quotient_upper(Quotient const & y, FactStore const & store)
{
    if (y.genus == 0)
        return 1;
    if (y.genus <= 2)
        return 2;
    std::int64_t ub = y.genus;
    for (auto const & f : store.about(y.curve)) {
        if (f.kind == FactKind::HYPERELLIPTIC && f.flag)
            ub = std::min<std::int64_t>(ub, 2);
        else if (f.kind == FactKind::TRIGONAL_Q && f.flag)
            ub = std::min<std::int64_t>(ub, 3);
        else if ((f.kind == FactKind::MAP_P1 || f.kind == FactKind::GON_KNOWN) && f.field == Field::Q)
            ub = std::min(ub, f.kind == FactKind::MAP_P1 ? f.degree : f.value);
    }
    return ub;
}

// Best known lower bound for gon_C of a pair quotient.
std::int64_t quotient_lower_c(Quotient const & y, FactStore const & store)
{
    std::int64_t lb = y.genus == 0 ? 1 : 2;
    bool non_hyperelliptic = false;
    bool non_trigonal = false;
    for (auto const & f : store.about(y.curve)) {
        if (f.kind == FactKind::HYPERELLIPTIC && !f.flag)
            non_hyperelliptic = true;
        if (f.kind == FactKind::TRIGONAL_C && !f.flag)
            non_trigonal = true;
        if (f.kind == FactKind::GON_KNOWN && f.field == Field::C)
            lb = std::max(lb, f.value);
    }
    if (y.genus >= 3 && non_hyperelliptic)
        lb = std::max<std::int64_t>(lb, non_trigonal ? 4 : 3);
    return lb;
}

using Generator = void (*)(Context const &, GonalityState const &, std::vector<Candidate> &);

void push(std::vector<Candidate> & out, BoundAssertion a)
{
    std::string text(anchor(a.rule));
    out.push_back({std::move(a), std::move(text)});
}

void gen_genus_small(Context const & ctx, GonalityState const &, std::vector<Candidate> & out)
{
    for (auto & a : genus_small(ctx.curve, ctx.g))
        push(out, std::move(a));
}

void gen_poonen(Context const & ctx, GonalityState const &, std::vector<Candidate> & out)
{
    // Every X0(N)/w_d has the rational cusp image of infinity.
    for (auto & a : poonen_bounds(ctx.curve, ctx.g, true))
        push(out, std::move(a));
}

void gen_quot_up(Context const & ctx, GonalityState const &, std::vector<Candidate> & out)
{
    for (auto const & y : ctx.quotients) {
        std::int64_t const ub = quotient_upper(y, ctx.store);
        push(out, {ctx.curve, Field::Q, BoundKind::upper, 2 * ub, RuleId::POONEN_QUOT_UP,
                   {{"Y_d", y.curve.d()}, {"Y_d2", y.curve.d2()}, {"gY", y.genus}, {"gonY_upper", ub}}});
    }
}

void gen_facts(Context const & ctx, GonalityState const & s, std::vector<Candidate> & out)
{
    auto emit = [&](Fact const & f, Field field, BoundKind kind, std::int64_t value,
                    std::vector<Evidence> inputs) {
        inputs.insert(inputs.begin(), Evidence{"line", f.line});
        out.push_back({{ctx.curve, field, kind, value, RuleId::FACT, std::move(inputs)}, fact_anchor(f)});
    };
    for (auto const & f : ctx.store.about(ctx.curve)) {
        switch (f.kind) {
        case FactKind::FP_GON_LB:
            emit(f, Field::Q, BoundKind::lower, f.lb, {{"p", f.p}, {"lb", f.lb}});
            break;
        case FactKind::MAP_P1:
            emit(f, f.field, BoundKind::upper, f.degree, {{"degree", f.degree}});
            break;
        case FactKind::GON_KNOWN:
            emit(f, f.field, BoundKind::lower, f.value, {{"value", f.value}});
            emit(f, f.field, BoundKind::upper, f.value, {{"value", f.value}});
            break;
        case FactKind::HYPERELLIPTIC:
            if (ctx.g < 2)
                break;
            if (f.flag)
                // the hyperelliptic quotient is a conic with a rational point
                emit(f, Field::Q, BoundKind::upper, 2, {{"g", ctx.g}});
            else if (s.lowerC == 2)
                emit(f, Field::C, BoundKind::lower, 3, {{"g", ctx.g}, {"known_lower", 2}});
            break;
        case FactKind::TRIGONAL_C:
            if (f.flag)
                emit(f, Field::C, BoundKind::upper, 3, {});
            else if (s.lowerC == 3)
                emit(f, Field::C, BoundKind::lower, 4, {{"known_lower", 3}});
            break;
        case FactKind::TRIGONAL_Q:
            if (f.flag)
                emit(f, Field::Q, BoundKind::upper, 3, {});
            else if (s.lowerQ == 3)
                emit(f, Field::Q, BoundKind::lower, 4, {{"known_lower", 3}});
            break;
        case FactKind::BETTI22:
            break; // consumed by the Betti rule
        }
    }
}

void gen_counts(Context const & ctx, GonalityState const &, std::vector<Candidate> & out)
{
    for (std::int64_t p : primes_up_to(count_prime_bound)) {
        if (ctx.level.divisible_by(p))
            continue;
        for (int e : {1, 2}) {
            std::int64_t const q = e == 1 ? p : p * p;
            std::int64_t const count = cached_count(ctx.level, p, e);
            std::int64_t const full = gonality_lb_from_count(count, q);
            push(out, {ctx.curve, Field::Q, BoundKind::lower, lift_to_quotient(full), RuleId::COUNT_LB,
                       {{"p", p}, {"e", e}, {"count", count}, {"gonX0_lower", full}}});
        }
    }
}

void gen_ogg(Context const & ctx, GonalityState const &, std::vector<Candidate> & out)
{
    for (std::int64_t p : primes_up_to(count_prime_bound)) {
        if (ctx.level.divisible_by(p))
            continue;
        std::int64_t const lp = ogg_Lp(ctx.level, p).ceiling;
        std::int64_t const full = gonality_lb_from_count(lp, p * p);
        push(out, {ctx.curve, Field::Q, BoundKind::lower, lift_to_quotient(full), RuleId::OGG_LP,
                   {{"p", p}, {"Lp_ceiling", lp}, {"gonX0_lower", full}}});
    }
}

void gen_eq1(Context const & ctx, GonalityState const &, std::vector<Candidate> & out)
{
    if (auto w = eq1_eliminates(ctx.level))
        push(out, {ctx.curve, Field::Q, BoundKind::lower, 5, RuleId::EQ1,
                   {{"p", w->p}, {"Lp_ceiling", w->lp.ceiling}, {"rhs", w->rhs}}});
}

void gen_quot_down(Context const & ctx, GonalityState const &, std::vector<Candidate> & out)
{
    for (auto const & y : ctx.quotients) {
        for (auto const & f : ctx.store.about(y.curve)) {
            std::vector<Evidence> inputs{{"Y_d", y.curve.d()}, {"Y_d2", y.curve.d2()}, {"line", f.line}};
            if (f.kind == FactKind::FP_GON_LB) {
                inputs.push_back({"p", f.p});
                out.push_back({{ctx.curve, Field::Q, BoundKind::lower, f.lb, RuleId::POONEN_QUOT_DOWN,
                                std::move(inputs)},
                               std::string(anchor(RuleId::POONEN_QUOT_DOWN)) + "; " + fact_anchor(f)});
            } else if (f.kind == FactKind::GON_KNOWN) {
                out.push_back({{ctx.curve, f.field, BoundKind::lower, f.value, RuleId::POONEN_QUOT_DOWN,
                                std::move(inputs)},
                               std::string(anchor(RuleId::POONEN_QUOT_DOWN)) + "; " + fact_anchor(f)});
            }
        }
    }
}

void gen_cs(Context const & ctx, GonalityState const & s, std::vector<Candidate> & out)
{
    for (auto const & y : ctx.quotients) {
        std::int64_t const lb = quotient_lower_c(y, ctx.store);
        for (auto [field, known] : {std::pair{Field::C, s.lowerC}, std::pair{Field::Q, s.lowerQ}})
            if (known == 4)
                if (auto a = cs_factoring_rule(ctx.curve, y.curve, ctx.g, y.genus, lb, field, known))
                    push(out, std::move(*a));
    }
}

void gen_kim_sarnak(Context const & ctx, GonalityState const &, std::vector<Candidate> & out)
{
    if (auto a = kim_sarnak_rule(ctx.curve))
        push(out, std::move(*a));
}

void gen_betti(Context const & ctx, GonalityState const &, std::vector<Candidate> & out)
{
    if (auto f = ctx.store.query(ctx.curve, FactKind::BETTI22))
        if (auto a = betti_rule(ctx.curve, ctx.g, f->flag))
            out.push_back({std::move(*a), std::string(anchor(RuleId::BETTI)) + "; " + fact_anchor(*f)});
}

void gen_tower(Context const & ctx, GonalityState const & s, std::vector<Candidate> & out)
{
    if (auto a = tower_rule(ctx.curve, ctx.g, s.lowerQ))
        push(out, std::move(*a));
}

void gen_descent(Context const & ctx, GonalityState const & s, std::vector<Candidate> & out)
{
    if (s.upperQ != unbounded)
        push(out, {ctx.curve, Field::C, BoundKind::upper, s.upperQ, RuleId::FIELD_DESCENT,
                   {{"upperQ", s.upperQ}}});
    push(out, {ctx.curve, Field::Q, BoundKind::lower, s.lowerC, RuleId::FIELD_DESCENT,
               {{"lowerC", s.lowerC}}});
    if (ctx.g >= 2 && s.lowerQ >= 3)
        push(out, {ctx.curve, Field::C, BoundKind::lower, 3, RuleId::FIELD_DESCENT,
                   {{"g", ctx.g}, {"lowerQ", s.lowerQ}}});
}

struct Stage
{
    Generator run;
    std::vector<RuleId> rules;
};

std::vector<Stage> const & stages()
{
    static std::vector<Stage> const all{
        {gen_genus_small, {RuleId::GENUS_SMALL}},
        {gen_poonen, {RuleId::POONEN_2G2, RuleId::POONEN_G, RuleId::POONEN_C}},
        {gen_quot_up, {RuleId::POONEN_QUOT_UP}},
        {gen_facts, {RuleId::FACT}},
        {gen_counts, {RuleId::COUNT_LB}},
        {gen_ogg, {RuleId::OGG_LP}},
        {gen_quot_down, {RuleId::POONEN_QUOT_DOWN}},
        {gen_cs, {RuleId::CS_FACTOR}},
        {gen_kim_sarnak, {RuleId::KIM_SARNAK}},
        {gen_betti, {RuleId::BETTI}},
        {gen_tower, {RuleId::TOWER}},
        {gen_eq1, {RuleId::EQ1}},
        {gen_descent, {RuleId::FIELD_DESCENT}},
    };
    return all;
}

Generator generator_for(RuleId rule)
{
    for (auto const & stage : stages())
        if (std::find(stage.rules.begin(), stage.rules.end(), rule) != stage.rules.end())
            return stage.run;
    throw std::logic_error("no generator for rule " + std::string(to_string(rule)));
}

std::int64_t & bound_ref(GonalityState & s, Field field, BoundKind kind)
{
    if (field == Field::Q)
        return kind == BoundKind::lower ? s.lowerQ : s.upperQ;
    return kind == BoundKind::lower ? s.lowerC : s.upperC;
}

bool tightens(GonalityState const & s, BoundAssertion const & a)
{
    std::int64_t const cur = bound_ref(const_cast<GonalityState &>(s), a.field, a.kind);
    return a.kind == BoundKind::lower ? a.value > cur : a.value < cur;
}

// Index of the latest step that set the given bound.
std::size_t last_step(Certificate const & cert, Field field, BoundKind kind)
{
    for (std::size_t i = cert.size(); i-- > 0;)
        if (cert[i].assertion.field == field && cert[i].assertion.kind == kind)
            return i;
    throw std::logic_error("bound set without a certificate step");
}

void apply(GonalityState & s, Candidate c)
{
    Field const field = c.assertion.field;
    bound_ref(s, field, c.assertion.kind) = c.assertion.value;
    s.certificate.push_back({std::move(c.assertion), std::move(c.anchor)});
    if (bound_ref(s, field, BoundKind::lower) > bound_ref(s, field, BoundKind::upper))
        throw ContradictionError(s.curve, s.certificate[last_step(s.certificate, field, BoundKind::lower)],
                                 s.certificate[last_step(s.certificate, field, BoundKind::upper)]);
}

std::string describe(CertificateStep const & step)
{
    auto const & a = step.assertion;
    return std::string(to_string(a.rule)) + " " + std::string(to_string(a.kind)) + " " +
           std::string(to_string(a.field)) + " " + std::to_string(a.value) + " [" + step.anchor + "]";
}

} // namespace

bool GonalityState::same_bounds(GonalityState const & o) const
{
    return std::tie(curve, genus, lowerQ, upperQ, lowerC, upperC) ==
           std::tie(o.curve, o.genus, o.lowerQ, o.upperQ, o.lowerC, o.upperC);
}

ContradictionError::ContradictionError(CurveRef const & curve, CertificateStep const & lower,
                                       CertificateStep const & upper)
    : std::runtime_error("contradiction on " + curve.to_string() + ": " + describe(lower) +
                         " vs " + describe(upper))
{
}

GonalityState classify(CurveRef const & curve, FactStore const & store)
{
    Context const ctx = make_context(curve, store);
    GonalityState s{.curve = curve, .genus = ctx.g};
    for (int pass = 0;; ++pass) {
        if (pass == max_passes)
            throw std::logic_error("classify did not converge for " + curve.to_string());
        bool changed = false;
        for (auto const & stage : stages()) {
            std::vector<Candidate> candidates;
            stage.run(ctx, s, candidates);
            for (auto & c : candidates) {
                if (!tightens(s, c.assertion))
                    continue;
                apply(s, std::move(c));
                changed = true;
            }
        }
        if (!changed)
            break;
    }
    return s;
}

GonalityState replay(CurveRef const & curve, Certificate const & certificate, FactStore const & store)
{
    Context const ctx = make_context(curve, store);
    GonalityState s{.curve = curve, .genus = ctx.g};
    for (auto const & step : certificate) {
        std::vector<Candidate> candidates;
        generator_for(step.assertion.rule)(ctx, s, candidates);
        auto it = std::find_if(candidates.begin(), candidates.end(), [&](Candidate const & c) {
            return c.assertion == step.assertion && c.anchor == step.anchor;
        });
        if (it == candidates.end())
            throw std::logic_error("replay: step not reproduced on " + curve.to_string() + ": " +
                                   describe(step));
        if (!tightens(s, it->assertion))
            throw std::logic_error("replay: step does not tighten on " + curve.to_string() + ": " +
                                   describe(step));
        apply(s, *it);
    }
    return s;
}

std::vector<CurveRef> survey_curves(std::int64_t nmax, bool include_fricke)
{
    if (nmax < 6)
        throw domain_error("survey: nmax must be at least 6");
    std::vector<CurveRef> out;
    for (std::int64_t n = 6; n <= nmax; ++n) {
        if (is_prime_power(n))
            continue;
        for (auto const & d : hall_divisors(Level(n))) {
            if (d.value() == 1 || (d.value() == n && !include_fricke))
                continue;
            out.push_back(CurveRef::single(n, d.value()));
        }
    }
    return out;
}

std::vector<GonalityState> survey_serial(std::int64_t nmax, FactStore const & store, bool include_fricke)
{
    std::vector<GonalityState> out;
    for (auto const & curve : survey_curves(nmax, include_fricke))
        out.push_back(classify(curve, store));
    return out;
}

std::vector<GonalityState> survey(std::int64_t nmax, FactStore const & store, bool include_fricke)
{
    auto const curves = survey_curves(nmax, include_fricke);
    std::vector<std::optional<GonalityState>> slots(curves.size());
    std::vector<std::exception_ptr> errors(curves.size());
    auto const count = static_cast<std::int64_t>(curves.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            slots[i] = classify(curves[i], store);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto const & e : errors)
        if (e)
            std::rethrow_exception(e);
    std::vector<GonalityState> out;
    out.reserve(slots.size());
    for (auto & s : slots)
        out.push_back(std::move(*s));
    return out;
}

bool ExpectedTable::has_fricke() const
{
    return std::any_of(rows.begin(), rows.end(), [](ExpectedRow const & r) { return r.n == r.d; });
}

std::int64_t ExpectedTable::max_level() const
{
    std::int64_t m = 0;
    for (auto const & r : rows)
        m = std::max(m, r.n);
    return m;
}

namespace {

std::optional<std::int64_t> to_int(std::string_view s)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 1)
        return std::nullopt;
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    for (std::size_t start = 0;;) {
        auto const at = s.find(sep, start);
        out.push_back(s.substr(start, at - start));
        if (at == std::string_view::npos)
            return out;
        start = at + 1;
    }
}

std::optional<std::int64_t> keyed(std::string_view field, std::string_view key)
{
    if (!field.starts_with(key) || field.size() <= key.size() || field[key.size()] != '=')
        return std::nullopt;
    return to_int(field.substr(key.size() + 1));
}

void parse_directive(std::string_view body, int lineno, ExpectedTable & t)
{
    if (body.starts_with("note ")) {
        t.notes.emplace_back(body.substr(5));
        return;
    }
    if (!body.starts_with("complete ")) {
        t.errors.push_back({lineno, "unknown directive"});
        return;
    }
    Completeness c;
    for (auto word : split(body.substr(9), ' ')) {
        if (word.empty())
            continue;
        if (auto v = keyed(word, "gonQ"))
            c.gonQ = *v;
        else if (auto g = keyed(word, "genus"))
            c.genus = *g;
        else if (word == "scope=fricke")
            c.scope = Scope::fricke;
        else if (word == "scope=nonfricke")
            c.scope = Scope::nonfricke;
        else if (word == "scope=all")
            c.scope = Scope::all;
        else
            t.errors.push_back({lineno, "bad directive field '" + std::string(word) + "'"});
    }
    if (c.gonQ == 0)
        t.errors.push_back({lineno, "complete directive needs gonQ"});
    t.complete.push_back(c);
}

} // namespace

ExpectedTable parse_expected(std::string_view text)
{
    ExpectedTable t;
    int lineno = 0;
    for (auto raw : split(text, '\n')) {
        ++lineno;
        while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' '))
            raw.remove_suffix(1);
        if (raw.empty())
            continue;
        if (raw.starts_with("#!")) {
            auto body = raw.substr(2);
            while (!body.empty() && body.front() == ' ')
                body.remove_prefix(1);
            parse_directive(body, lineno, t);
            continue;
        }
        if (raw.front() == '#')
            continue;
        auto const fields = split(raw, ';');
        if (fields.size() < 3 || fields.size() > 4) {
            t.errors.push_back({lineno, "expected N;d;gonQ=<int>[;gonC=<int>]"});
            continue;
        }
        auto const n = to_int(fields[0]);
        auto const d = to_int(fields[1]);
        auto const q = keyed(fields[2], "gonQ");
        std::optional<std::int64_t> c;
        if (fields.size() == 4 && !(c = keyed(fields[3], "gonC"))) {
            t.errors.push_back({lineno, "malformed gonC field"});
            continue;
        }
        if (!n || !d || !q) {
            t.errors.push_back({lineno, "malformed row"});
            continue;
        }
        if (is_prime_power(*n)) {
            t.errors.push_back({lineno, "N = " + std::to_string(*n) + " is a prime power"});
            continue;
        }
        if (*d == 1 || !is_hall_divisor(*n, *d)) {
            t.errors.push_back({lineno, std::to_string(*d) + " is not a nontrivial Hall divisor of " +
                                            std::to_string(*n)});
            continue;
        }
        t.rows.push_back({*n, *d, *q, c, lineno});
    }
    return t;
}

namespace {

std::string interval(std::int64_t lo, std::int64_t hi)
{
    return "[" + std::to_string(lo) + "," + (hi == unbounded ? std::string("inf") : std::to_string(hi)) + "]";
}

enum class Verdict { match, undecided, mismatch };

Verdict judge(std::int64_t lo, std::int64_t hi, std::int64_t expected)
{
    if (expected < lo || expected > hi)
        return Verdict::mismatch;
    return lo == hi ? Verdict::match : Verdict::undecided;
}

bool in_scope(Scope scope, std::int64_t n, std::int64_t d)
{
    switch (scope) {
    case Scope::fricke: return n == d;
    case Scope::nonfricke: return n != d;
    case Scope::all: return true;
    }
    return true;
}

} // namespace

VerifyReport verify(std::vector<GonalityState> const & states, ExpectedTable const & expected,
                    FactStore const & store, std::vector<Diagnostic> const & suspect)
{
    VerifyReport report;
    std::map<std::pair<std::int64_t, std::int64_t>, GonalityState const *> by_pair;
    for (auto const & s : states)
        by_pair[{s.curve.level(), s.curve.d()}] = &s;
    std::set<std::pair<std::int64_t, std::int64_t>> listed;

    for (auto const & row : expected.rows) {
        listed.insert({row.n, row.d});
        auto it = by_pair.find({row.n, row.d});
        if (it == by_pair.end()) {
            report.mismatches.push_back({row.n, row.d, "no engine state"});
            continue;
        }
        GonalityState const & s = *it->second;
        Verdict v = judge(s.lowerQ, s.upperQ, row.gonQ);
        std::string detail = "gonQ " + interval(s.lowerQ, s.upperQ) + " expected " + std::to_string(row.gonQ);
        if (row.gonC) {
            Verdict const c = judge(s.lowerC, s.upperC, *row.gonC);
            v = std::max(v, c);
            detail += "; gonC " + interval(s.lowerC, s.upperC) + " expected " + std::to_string(*row.gonC);
        }
        auto & bucket = v == Verdict::match       ? report.matches
                        : v == Verdict::undecided ? report.undecided
                                                  : report.mismatches;
        bucket.push_back({row.n, row.d, detail});
    }

    for (auto const & c : expected.complete) {
        for (auto const & s : states) {
            std::int64_t const n = s.curve.level(), d = s.curve.d();
            if (!s.decidedQ() || s.lowerQ != c.gonQ || listed.contains({n, d}) || !in_scope(c.scope, n, d))
                continue;
            if (c.genus && s.genus != *c.genus)
                continue;
            report.mismatches.push_back({n, d, "decided gonQ = " + std::to_string(c.gonQ) +
                                                   " but absent from the table"});
        }
        for (auto const & curve : store.curves()) {
            if (curve.kind() != CurveKind::single_quotient || curve.level() > expected.max_level())
                continue;
            if (listed.contains({curve.level(), curve.d()}) ||
                !in_scope(c.scope, curve.level(), curve.d()))
                continue;
            for (auto const & f : store.about(curve)) {
                if (f.kind != FactKind::MAP_P1 || f.degree != c.gonQ || f.field != Field::Q)
                    continue;
                std::string note = "fact line " + std::to_string(f.line) + ": degree-" +
                                   std::to_string(f.degree) + " map on " + curve.to_string() +
                                   " but the table does not list it";
                if (auto it = by_pair.find({curve.level(), curve.d()}); it != by_pair.end())
                    note += "; engine gonQ " + interval(it->second->lowerQ, it->second->upperQ);
                report.notes.push_back(note);
            }
        }
    }

    for (auto const & d : suspect)
        report.notes.push_back("fact line " + std::to_string(d.line) + ": " + d.message);
    for (auto const & n : expected.notes)
        report.notes.push_back(n);
    return report;
}

} // namespace gonality

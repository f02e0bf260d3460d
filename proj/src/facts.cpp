#include "gonality/facts.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <tuple>

namespace gonality {

std::string_view to_string(FactKind kind)
{
    switch (kind) {
    case FactKind::FP_GON_LB: return "FP_GON_LB";
    case FactKind::HYPERELLIPTIC: return "HYPERELLIPTIC";
    case FactKind::TRIGONAL_C: return "TRIGONAL_C";
    case FactKind::TRIGONAL_Q: return "TRIGONAL_Q";
    case FactKind::BETTI22: return "BETTI22";
    case FactKind::MAP_P1: return "MAP_P1";
    case FactKind::GON_KNOWN: return "GON_KNOWN";
    }
    return "?";
}

std::optional<FactKind> parse_fact_kind(std::string_view text)
{
    for (auto k : {FactKind::FP_GON_LB, FactKind::HYPERELLIPTIC, FactKind::TRIGONAL_C,
                   FactKind::TRIGONAL_Q, FactKind::BETTI22, FactKind::MAP_P1,
                   FactKind::GON_KNOWN})
        if (to_string(k) == text)
            return k;
    return std::nullopt;
}

std::int64_t Fact::head_discriminator() const
{
    switch (kind) {
    case FactKind::FP_GON_LB:
        return p;
    case FactKind::MAP_P1:
    case FactKind::GON_KNOWN:
        return field == Field::Q ? 0 : 1;
    default:
        return 0;
    }
}

bool Fact::same_payload(Fact const & o) const
{
    return std::tie(p, lb, flag, degree, field, value) ==
           std::tie(o.p, o.lb, o.flag, o.degree, o.field, o.value);
}

std::string serialize(Fact const & f)
{
    std::string out(to_string(f.kind));
    out += ";curve=" + f.curve.to_string();
    auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    switch (f.kind) {
    case FactKind::FP_GON_LB:
        out += ";p=" + std::to_string(f.p) + ";lb=" + std::to_string(f.lb);
        break;
    case FactKind::HYPERELLIPTIC:
    case FactKind::TRIGONAL_C:
    case FactKind::TRIGONAL_Q:
        out += std::string(";value=") + yes_no(f.flag);
        break;
    case FactKind::BETTI22:
        out += std::string(";zero=") + yes_no(f.flag);
        break;
    case FactKind::MAP_P1:
        out += ";degree=" + std::to_string(f.degree) + ";field=" + std::string(to_string(f.field));
        break;
    case FactKind::GON_KNOWN:
        out += ";field=" + std::string(to_string(f.field)) + ";value=" + std::to_string(f.value);
        break;
    }
    out += ";src=" + f.source;
    return out;
}

FactStore::FactStore(std::vector<Fact> facts)
{
    for (auto & f : facts) {
        index_[f.curve].push_back(std::move(f));
        ++count_;
    }
}

std::vector<Fact> const & FactStore::about(CurveRef const & curve) const
{
    static std::vector<Fact> const none;
    auto it = index_.find(curve);
    return it == index_.end() ? none : it->second;
}

std::optional<Fact> FactStore::query(CurveRef const & curve, FactKind kind) const
{
    for (auto const & f : about(curve))
        if (f.kind == kind)
            return f;
    return std::nullopt;
}

std::string FactStore::serialize() const
{
    std::vector<std::string> lines;
    for (auto const & [curve, facts] : index_) {
        std::vector<Fact const *> sorted;
        for (auto const & f : facts)
            sorted.push_back(&f);
        std::stable_sort(sorted.begin(), sorted.end(), [](Fact const * a, Fact const * b) {
            return std::tuple(a->kind, a->head_discriminator()) <
                   std::tuple(b->kind, b->head_discriminator());
        });
        for (auto const * f : sorted)
            lines.push_back(gonality::serialize(*f));
    }
    std::string out;
    for (auto const & l : lines)
        out += l + "\n";
    return out;
}

std::vector<CurveRef> FactStore::curves() const
{
    std::vector<CurveRef> out;
    for (auto const & [curve, facts] : index_)
        out.push_back(curve);
    return out;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::optional<std::int64_t> parse_positive(std::string_view s)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 1)
        return std::nullopt;
    return v;
}

std::optional<bool> parse_yes_no(std::string_view s)
{
    if (s == "yes")
        return true;
    if (s == "no")
        return false;
    return std::nullopt;
}

std::vector<std::string_view> required_keys(FactKind kind)
{
    switch (kind) {
    case FactKind::FP_GON_LB: return {"p", "lb"};
    case FactKind::HYPERELLIPTIC:
    case FactKind::TRIGONAL_C:
    case FactKind::TRIGONAL_Q: return {"value"};
    case FactKind::BETTI22: return {"zero"};
    case FactKind::MAP_P1: return {"degree", "field"};
    case FactKind::GON_KNOWN: return {"field", "value"};
    }
    return {};
}

struct LineResult
{
    std::optional<Fact> fact;
    std::vector<std::string> errors;
    bool suspect = false;
};

LineResult parse_line(std::string_view line, int lineno)
{
    LineResult r;
    std::vector<std::string_view> parts;
    for (std::size_t start = 0;;) {
        auto const semi = line.find(';', start);
        parts.push_back(trim(line.substr(start, semi - start)));
        if (semi == std::string_view::npos)
            break;
        start = semi + 1;
    }
    auto const kind = parse_fact_kind(parts.front());
    if (!kind) {
        r.errors.push_back("unknown fact kind '" + std::string(parts.front()) + "'");
        return r;
    }
    std::map<std::string_view, std::string_view> kv;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        auto const eq = parts[i].find('=');
        if (eq == std::string_view::npos) {
            r.errors.push_back("malformed field '" + std::string(parts[i]) + "'");
            continue;
        }
        auto const key = parts[i].substr(0, eq);
        if (!kv.emplace(key, parts[i].substr(eq + 1)).second)
            r.errors.push_back("duplicate key '" + std::string(key) + "'");
    }
    auto const required = required_keys(*kind);
    for (auto const & [key, value] : kv) {
        bool const known = key == "curve" || key == "src" || key == "suspect" ||
                           std::find(required.begin(), required.end(), key) != required.end();
        if (!known)
            r.errors.push_back("unknown key '" + std::string(key) + "' for " +
                               std::string(to_string(*kind)));
    }
    for (std::string_view key : {std::string_view("curve"), std::string_view("src")})
        if (!kv.contains(key))
            r.errors.push_back("missing key '" + std::string(key) + "'");
    for (auto key : required)
        if (!kv.contains(key))
            r.errors.push_back("missing key '" + std::string(key) + "'");
    if (auto it = kv.find("suspect"); it != kv.end()) {
        if (auto flag = parse_yes_no(it->second))
            r.suspect = *flag;
        else
            r.errors.push_back("suspect must be yes or no");
    }
    if (auto it = kv.find("src"); it != kv.end() && it->second.empty())
        r.errors.push_back("src must be nonempty");

    std::optional<CurveRef> curve;
    if (auto it = kv.find("curve"); it != kv.end()) {
        try {
            curve = CurveRef::from_string(it->second);
        } catch (domain_error const & e) {
            r.errors.push_back(e.what());
        }
    }
    if (!r.errors.empty() || !curve)
        return r;

    Fact f{.curve = *curve, .kind = *kind};
    f.source = std::string(kv.at("src"));
    f.line = lineno;
    auto positive = [&](std::string_view key) -> std::int64_t {
        auto v = parse_positive(kv.at(key));
        if (!v) {
            r.errors.push_back(std::string(key) + " must be a positive integer");
            return 0;
        }
        return *v;
    };
    auto yes_no = [&](std::string_view key) {
        auto v = parse_yes_no(kv.at(key));
        if (!v)
            r.errors.push_back(std::string(key) + " must be yes or no");
        return v.value_or(false);
    };
    auto field = [&] {
        auto v = parse_field(kv.at("field"));
        if (!v)
            r.errors.push_back("field must be Q or C");
        return v.value_or(Field::Q);
    };
    switch (*kind) {
    case FactKind::FP_GON_LB:
        f.p = positive("p");
        f.lb = positive("lb");
        if (f.p != 0 && (!is_prime(f.p) || curve->level() % f.p == 0))
            r.errors.push_back("p = " + std::to_string(f.p) + " is not prime or divides N = " +
                               std::to_string(curve->level()));
        if (f.lb == 1)
            r.errors.push_back("lb must be at least 2");
        break;
    case FactKind::HYPERELLIPTIC:
    case FactKind::TRIGONAL_C:
    case FactKind::TRIGONAL_Q:
        f.flag = yes_no("value");
        break;
    case FactKind::BETTI22:
        f.flag = yes_no("zero");
        break;
    case FactKind::MAP_P1:
        f.degree = positive("degree");
        f.field = field();
        break;
    case FactKind::GON_KNOWN:
        f.field = field();
        f.value = positive("value");
        break;
    }
    if (r.errors.empty())
        r.fact = std::move(f);
    return r;
}

} // namespace

FactParseResult parse_facts(std::string_view text)
{
    FactParseResult result;
    std::vector<Fact> accepted;
    std::map<std::tuple<CurveRef, FactKind, std::int64_t>, std::size_t> heads;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto const nl = text.find('\n', pos);
        auto const raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        auto const line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        LineResult r = parse_line(line, lineno);
        if (r.suspect) {
            std::string msg = "suspect record not loaded";
            for (auto const & e : r.errors)
                msg += "; " + e;
            result.suspect.push_back({lineno, msg});
            continue;
        }
        for (auto & e : r.errors)
            result.errors.push_back({lineno, std::move(e)});
        if (!r.fact)
            continue;
        auto const key = std::tuple(r.fact->curve, r.fact->kind, r.fact->head_discriminator());
        if (auto it = heads.find(key); it != heads.end()) {
            Fact const & prior = accepted[it->second];
            if (!prior.same_payload(*r.fact))
                result.errors.push_back({lineno, "contradicts the fact on line " +
                                                     std::to_string(prior.line)});
            continue;
        }
        heads.emplace(key, accepted.size());
        accepted.push_back(std::move(*r.fact));
    }
    result.store = FactStore(std::move(accepted));
    return result;
}

} // namespace gonality

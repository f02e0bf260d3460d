#include "gonality/modgenus.hpp"

#include "gonality/classnum.hpp"
#include "gonality/detail/memo.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gonality {

namespace {

void require_nontrivial(std::int64_t n, std::int64_t d)
{
    if (!is_hall_divisor(n, d))
        throw domain_error(std::to_string(d) + " is not a Hall divisor of " + std::to_string(n));
    if (d == 1)
        throw domain_error("the trivial involution w_1 does not define a quotient");
}

bool parse_int(std::string_view text, std::int64_t & out)
{
    if (text.empty() || text.front() < '1' || text.front() > '9')
        return false;
    auto const * end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc() && ptr == end;
}

} // namespace

CurveRef CurveRef::full(std::int64_t n)
{
    if (n < 1)
        throw domain_error("level must be a positive integer, got " + std::to_string(n));
    return CurveRef(n, CurveKind::full, 0, 0, 0);
}

CurveRef CurveRef::single(std::int64_t n, std::int64_t d)
{
    require_nontrivial(n, d);
    return CurveRef(n, CurveKind::single_quotient, d, 0, 0);
}

CurveRef CurveRef::pair(std::int64_t n, std::int64_t d1, std::int64_t d2)
{
    require_nontrivial(n, d1);
    require_nontrivial(n, d2);
    if (d1 == d2)
        throw domain_error("pair quotient needs two distinct involutions");
    std::array<std::int64_t, 3> ds{d1, d2, hall_product(d1, d2)};
    std::sort(ds.begin(), ds.end());
    return CurveRef(n, CurveKind::pair_quotient, ds[0], ds[1], ds[2]);
}

CurveRef CurveRef::from_string(std::string_view const text)
{
    auto malformed = [&] {
        return domain_error("malformed curve spec '" + std::string(text) + "'");
    };
    constexpr std::string_view prefix = "X0(";
    std::string_view rest = text;
    if (!rest.starts_with(prefix))
        throw malformed();
    rest.remove_prefix(prefix.size());
    auto const close = rest.find(')');
    if (close == std::string_view::npos)
        throw malformed();
    std::int64_t n = 0;
    if (!parse_int(rest.substr(0, close), n))
        throw malformed();
    rest.remove_prefix(close + 1);
    if (rest.empty())
        return full(n);
    if (rest.front() != '/')
        throw malformed();
    rest.remove_prefix(1);
    if (rest.empty() || rest.front() != '<') {
        std::int64_t d = 0;
        if (!parse_int(rest, d))
            throw malformed();
        return single(n, d);
    }
    if (rest.back() != '>')
        throw malformed();
    rest = rest.substr(1, rest.size() - 2);
    auto const comma = rest.find(',');
    std::int64_t a = 0, b = 0;
    if (comma == std::string_view::npos) {
        if (!parse_int(rest, a))
            throw malformed();
        return single(n, a);
    }
    if (!parse_int(rest.substr(0, comma), a) || !parse_int(rest.substr(comma + 1), b))
        throw malformed();
    return pair(n, a, b);
}

std::optional<CurveRef> CurveRef::parse(std::string_view text)
{
    try {
        return from_string(text);
    } catch (domain_error const &) {
        return std::nullopt;
    }
}

std::string CurveRef::to_string() const
{
    std::string out = "X0(" + std::to_string(n_) + ")";
    switch (kind_) {
    case CurveKind::full:
        break;
    case CurveKind::single_quotient:
        out += "/" + std::to_string(d1_);
        break;
    case CurveKind::pair_quotient:
        out += "/<" + std::to_string(d1_) + "," + std::to_string(d2_) + ">";
        break;
    }
    return out;
}

std::int64_t cusp_count(Level const & level)
{
    std::int64_t const n = level.value();
    std::int64_t c = 0;
    for (std::int64_t d : divisors(n))
        c += euler_phi(gcd(d, n / d));
    return c;
}

GenusData genus_X0(Level const & level)
{
    std::int64_t const n = level.value();
    std::int64_t nu2 = n % 4 == 0 ? 0 : 1;
    std::int64_t nu3 = n % 9 == 0 ? 0 : 1;
    for (auto const & pe : level.factorization()) {
        nu2 *= 1 + kronecker_symbol(-4, pe.prime);
        nu3 *= 1 + kronecker_symbol(-3, pe.prime);
    }
    std::int64_t const cusps = cusp_count(level);
    std::int64_t const twelve_g = 12 + level.psi() - 3 * nu2 - 4 * nu3 - 6 * cusps;
    if (twelve_g % 12 != 0 || twelve_g < 0)
        throw std::logic_error("genus_X0: non-integral genus at N = " + std::to_string(n));
    return {CurveRef::full(n), twelve_g / 12, nu2, nu3, cusps};
}

namespace {

// Local optimal embedding numbers of the order of discriminant D into the
// Eichler order of level p^k.
std::int64_t local_embeddings(std::int64_t disc, std::int64_t p, int k)
{
    bool const conductor_two = p == 2 && mod(disc, 4) == 0 && mod(disc / 4, 4) == 1;
    if (conductor_two) {
        // Z_2 + 2 O_K with 2 unramified in K
        if (kronecker_symbol(disc / 4, 2) == 1)
            return k == 1 ? 2 : (k == 2 ? 4 : 6);
        return k <= 2 ? 2 : 0;
    }
    switch (kronecker_symbol(disc, p)) {
    case 1:
        return 2;
    case -1:
        return 0;
    default:
        return k == 1 ? 1 : 0;
    }
}

std::vector<std::int64_t> fixed_point_discriminants(std::int64_t q)
{
    std::vector<std::int64_t> out{-4 * q};
    if (q % 4 == 3)
        out.push_back(-q);
    if (q == 2)
        out.push_back(-4);
    return out;
}

std::int64_t compute_fixed_points(Level const & level, std::int64_t q)
{
    std::int64_t const m = level.value() / q;
    Level const rest(m);
    std::int64_t total = 0;
    for (std::int64_t disc : fixed_point_discriminants(q)) {
        std::int64_t term = class_number(disc);
        for (auto const & [p, k] : rest.factorization())
            term *= local_embeddings(disc, p, k);
        total += term;
    }
    if (q == 4)
        total += cusp_count(rest);
    return total;
}

detail::ConcurrentMemo<std::pair<std::int64_t, std::int64_t>, std::int64_t> & fixed_point_cache()
{
    static detail::ConcurrentMemo<std::pair<std::int64_t, std::int64_t>, std::int64_t> memo;
    return memo;
}

} // namespace

std::int64_t al_fixed_points(Level const & level, HallDivisor const & q)
{
    if (q.level() != level.value())
        throw domain_error("Hall divisor belongs to a different level");
    if (q.value() == 1)
        throw domain_error("al_fixed_points: Q must be greater than 1");
    std::pair<std::int64_t, std::int64_t> const key{level.value(), q.value()};
    return fixed_point_cache().get(key, [&] { return compute_fixed_points(level, q.value()); });
}

GenusData genus_single_quotient(Level const & level, HallDivisor const & d)
{
    CurveRef const curve = CurveRef::single(level.value(), d.value());
    std::int64_t const g = genus_X0(level).genus;
    std::int64_t const numerator = 2 * g + 2 - al_fixed_points(level, d);
    if (numerator % 4 != 0 || numerator < 0)
        throw std::logic_error("Riemann-Hurwitz fails for " + curve.to_string());
    return {curve, numerator / 4};
}

GenusData genus_pair_quotient(Level const & level, HallDivisor const & d, HallDivisor const & d2)
{
    CurveRef const curve = CurveRef::pair(level.value(), d.value(), d2.value());
    std::int64_t const g = genus_X0(level).genus;
    std::int64_t numerator = 2 * g + 6;
    for (std::int64_t q : {curve.d(), curve.d2(), curve.d3()})
        numerator -= al_fixed_points(level, HallDivisor(level, q));
    if (numerator % 8 != 0 || numerator < 0)
        throw std::logic_error("Riemann-Hurwitz fails for " + curve.to_string());
    return {curve, numerator / 8};
}

GenusData genus(CurveRef const & curve)
{
    Level const level(curve.level());
    switch (curve.kind()) {
    case CurveKind::full:
        return genus_X0(level);
    case CurveKind::single_quotient:
        return genus_single_quotient(level, HallDivisor(level, curve.d()));
    case CurveKind::pair_quotient:
        return genus_pair_quotient(level, HallDivisor(level, curve.d()),
                                   HallDivisor(level, curve.d2()));
    }
    throw std::logic_error("unreachable");
}

} // namespace gonality

#include "gonality/classnum.hpp"

#include "gonality/arith.hpp"
#include "gonality/detail/memo.hpp"

#include <string>

namespace gonality {

Discriminant::Discriminant(std::int64_t d)
    : d_(d)
{
    if (d >= 0)
        throw domain_error("discriminant must be negative, got " + std::to_string(d));
    std::int64_t const r = mod(d, 4);
    if (r != 0 && r != 1)
        throw domain_error("discriminant must be 0 or 1 mod 4, got " + std::to_string(d));
}

std::vector<BinaryForm> reduced_forms(Discriminant disc, bool primitive_only)
{
    std::int64_t const d = disc.value();
    std::vector<BinaryForm> out;
    // a <= sqrt(|D|/3)
    for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            std::int64_t const num = b * b - d;
            if (num % (4 * a) != 0)
                continue;
            std::int64_t const c = num / (4 * a);
            if (c < a)
                continue;
            if (c == a && b < 0)
                continue;
            if (primitive_only && gcd(gcd(a, b), c) != 1)
                continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

namespace {

detail::ConcurrentMemo<std::int64_t, std::int64_t> & cache()
{
    static detail::ConcurrentMemo<std::int64_t, std::int64_t> instance;
    return instance;
}

} // namespace

std::int64_t class_number(Discriminant d)
{
    return cache().get(d.value(), [&] {
        return static_cast<std::int64_t>(reduced_forms(d, true).size());
    });
}

std::int64_t class_number(std::int64_t d)
{
    return class_number(Discriminant(d));
}

Rational weighted_class_number(std::int64_t d)
{
    if (d == -3)
        return Rational(1, 3);
    if (d == -4)
        return Rational(1, 2);
    return Rational(class_number(d));
}

Rational hurwitz_class_number(std::int64_t n)
{
    if (n < 0)
        throw domain_error("hurwitz_class_number: n must be nonnegative");
    if (n == 0)
        return Rational(-1, 12);
    std::int64_t const r = n % 4;
    if (r == 1 || r == 2)
        return Rational(0);
    Rational sum(0);
    for (std::int64_t f = 1; f * f <= n; ++f) {
        if (n % (f * f) != 0)
            continue;
        std::int64_t const d = -(n / (f * f));
        std::int64_t const dr = mod(d, 4);
        if (dr == 0 || dr == 1)
            sum += weighted_class_number(d);
    }
    return sum;
}

} // namespace gonality

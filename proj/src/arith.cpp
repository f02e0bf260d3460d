#include "gonality/arith.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gonality {

std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    return std::gcd(a, b);
}

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t isqrt(std::int64_t n)
{
    if (n < 0)
        throw domain_error("isqrt of negative number");
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

bool is_square(std::int64_t n)
{
    if (n < 0)
        return false;
    std::int64_t r = isqrt(n);
    return r * r == n;
}

std::vector<PrimePower> factorize(std::int64_t n)
{
    if (n < 1)
        throw domain_error("factorize: n must be positive, got " + std::to_string(n));
    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

bool is_prime_power(std::int64_t n)
{
    return n > 1 && factorize(n).size() == 1;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    std::vector<std::int64_t> out{1};
    for (auto const & [p, e] : factorize(n)) {
        std::size_t const base = out.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t euler_phi(std::int64_t n)
{
    std::int64_t r = n;
    for (auto const & pe : factorize(n))
        r = r / pe.prime * (pe.prime - 1);
    return r;
}

std::int64_t sigma1(std::int64_t n)
{
    std::int64_t s = 0;
    for (std::int64_t d : divisors(n))
        s += d;
    return s;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound)
{
    std::vector<std::int64_t> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound + 1), false);
    for (std::int64_t p = 2; p <= bound; ++p) {
        if (composite[static_cast<std::size_t>(p)])
            continue;
        out.push_back(p);
        for (std::int64_t q = p * p; q <= bound; q += p)
            composite[static_cast<std::size_t>(q)] = true;
    }
    return out;
}

namespace {

int jacobi_odd(std::int64_t a, std::int64_t m)
{
    // m odd positive
    a = mod(a, m);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t const r = m % 8;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3)
            result = -result;
        a %= m;
    }
    return m == 1 ? result : 0;
}

int kronecker_two(std::int64_t d)
{
    if (d % 2 == 0)
        return 0;
    std::int64_t const r = mod(d, 8);
    return (r == 1 || r == 7) ? 1 : -1;
}

} // namespace

int kronecker_symbol(std::int64_t d, std::int64_t n)
{
    if (n < 1)
        throw domain_error("kronecker_symbol: n must be positive");
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        result *= kronecker_two(d);
        if (result == 0)
            return 0;
    }
    if (n == 1)
        return result;
    return result * jacobi_odd(d, n);
}

Level::Level(std::int64_t n)
    : n_(n)
{
    if (n < 1)
        throw domain_error("level must be a positive integer, got " + std::to_string(n));
    factors_ = factorize(n);
    psi_ = n;
    for (auto const & pe : factors_)
        psi_ = psi_ / pe.prime * (pe.prime + 1);
}

Level make_level(std::int64_t n)
{
    return Level(n);
}

bool is_hall_divisor(std::int64_t n, std::int64_t d)
{
    return n >= 1 && d >= 1 && n % d == 0 && gcd(d, n / d) == 1;
}

HallDivisor::HallDivisor(Level const & level, std::int64_t d)
    : n_(level.value()), d_(d)
{
    if (!is_hall_divisor(n_, d))
        throw domain_error(std::to_string(d) + " is not a Hall divisor of " +
                           std::to_string(n_));
}

std::vector<HallDivisor> hall_divisors(Level const & level)
{
    std::vector<std::int64_t> ds{1};
    for (auto const & [p, e] : level.factorization()) {
        std::int64_t pk = 1;
        for (int i = 0; i < e; ++i)
            pk *= p;
        std::size_t const base = ds.size();
        for (std::size_t i = 0; i < base; ++i)
            ds.push_back(ds[i] * pk);
    }
    std::sort(ds.begin(), ds.end());
    std::vector<HallDivisor> out;
    out.reserve(ds.size());
    for (std::int64_t d : ds)
        out.emplace_back(level, d);
    return out;
}

std::int64_t hall_product(std::int64_t a, std::int64_t b)
{
    std::int64_t const g = gcd(a, b);
    return (a / g) * (b / g);
}

} // namespace gonality

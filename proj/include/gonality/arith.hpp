#ifndef GONALITY_ARITH_HPP
#define GONALITY_ARITH_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gonality {

/// Raised for out-of-domain arguments anywhere in the library.
class domain_error : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

struct PrimePower
{
    std::int64_t prime;
    int exponent;

    bool operator==(PrimePower const &) const = default;
};

/*
 * A level N with its factorization and the two multiplicative quantities every
 * downstream bound uses: psi(N) = [SL2(Z) : Gamma0(N)] and omega(N), the
 * number of distinct prime factors.
 */
class Level
{
  public:
    explicit Level(std::int64_t n);

    std::int64_t value() const { return n_; }
    std::vector<PrimePower> const & factorization() const { return factors_; }
    std::int64_t psi() const { return psi_; }
    int omega() const { return static_cast<int>(factors_.size()); }

    bool divisible_by(std::int64_t m) const { return m != 0 && n_ % m == 0; }

    bool operator==(Level const & o) const { return n_ == o.n_; }

  private:
    std::int64_t n_;
    std::vector<PrimePower> factors_;
    std::int64_t psi_;
};

Level make_level(std::int64_t n);

/// A divisor d of N with gcd(d, N/d) = 1, indexing the involution w_d.
class HallDivisor
{
  public:
    HallDivisor(Level const & level, std::int64_t d);

    std::int64_t value() const { return d_; }
    std::int64_t level() const { return n_; }
    std::int64_t complement() const { return n_ / d_; }

    auto operator<=>(HallDivisor const &) const = default;

  private:
    std::int64_t n_;
    std::int64_t d_;
};

bool is_hall_divisor(std::int64_t n, std::int64_t d);

/// Ascending; always contains 1 and N.
std::vector<HallDivisor> hall_divisors(Level const & level);

/// The product of two Hall divisors in the group of Atkin-Lehner involutions:
/// w_a w_b = w_{ab / gcd(a,b)^2}.
std::int64_t hall_product(std::int64_t a, std::int64_t b);

/// True iff n = p^k with k >= 1. One is not a prime power.
bool is_prime_power(std::int64_t n);

bool is_prime(std::int64_t n);

/// Trial division, primes ascending.
std::vector<PrimePower> factorize(std::int64_t n);

std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t euler_phi(std::int64_t n);
std::int64_t sigma1(std::int64_t n);

/// Nonnegative representative of a mod m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);

/// Largest r with r*r <= n (n >= 0).
std::int64_t isqrt(std::int64_t n);

bool is_square(std::int64_t n);

/// Kronecker symbol (D | n) for n >= 1.
int kronecker_symbol(std::int64_t d, std::int64_t n);

/// Primes p <= bound, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

} // namespace gonality

#endif

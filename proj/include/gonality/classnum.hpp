#ifndef GONALITY_CLASSNUM_HPP
#define GONALITY_CLASSNUM_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <vector>

namespace gonality {

using Rational = boost::rational<std::int64_t>;

/// A negative discriminant, D = 0 or 1 mod 4.
class Discriminant
{
  public:
    explicit Discriminant(std::int64_t d);
    std::int64_t value() const { return d_; }

  private:
    std::int64_t d_;
};

struct BinaryForm
{
    std::int64_t a, b, c;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    bool operator==(BinaryForm const &) const = default;
};

/*
 * Reduced positive-definite forms of discriminant D: |b| <= a <= c, and b >= 0
 * whenever |b| = a or a = c. With primitive_only the list has h(D) entries.
 */
std::vector<BinaryForm> reduced_forms(Discriminant d, bool primitive_only = true);

/// h(D), memoized. Safe for concurrent callers.
std::int64_t class_number(Discriminant d);
std::int64_t class_number(std::int64_t d);

/// h(D) / (|O_D^*| / 2): 1/3 at D = -3, 1/2 at D = -4, h(D) otherwise.
Rational weighted_class_number(std::int64_t d);

/// Hurwitz class number; H(0) = -1/12, H(n) = 0 for n = 1, 2 mod 4.
Rational hurwitz_class_number(std::int64_t n);

} // namespace gonality

#endif

// Independent brute-force oracles used only by the test suites. Nothing here
// calls the closed-form routines it is used to check.
#ifndef GONALITY_TEST_ORACLES_HPP
#define GONALITY_TEST_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

inline i64 md(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

// ---------------------------------------------------------------------------
// P^1(Z/N)

/// Counts primitive pairs (c, d) mod N and divides by the (free) unit action.
inline i64 p1_cardinality(i64 n)
{
    if (n == 1)
        return 1;
    i64 pairs = 0;
    i64 units = 0;
    for (i64 c = 0; c < n; ++c) {
        i64 const g = std::gcd(c, n);
        if (g == 1)
            ++units;
        for (i64 d = 0; d < n; ++d)
            if (std::gcd(g, d) == 1)
                ++pairs;
    }
    return pairs / units;
}

/// Explicit P^1(Z/N): every primitive pair labelled by its unit orbit.
class ProjectiveLine
{
  public:
    explicit ProjectiveLine(i64 n)
        : n_(n), label_(static_cast<std::size_t>(n * n), -1)
    {
        std::vector<i64> units;
        for (i64 u = 1; u <= n; ++u)
            if (std::gcd(u, n) == 1)
                units.push_back(u % n);
        for (i64 c = 0; c < n; ++c)
            for (i64 d = 0; d < n; ++d) {
                if (std::gcd(std::gcd(c, d), n) != 1 || label_[idx(c, d)] >= 0)
                    continue;
                int const id = static_cast<int>(reps_.size());
                reps_.push_back({c, d});
                for (i64 u : units)
                    label_[idx(u * c % n, u * d % n)] = id;
            }
    }

    i64 modulus() const { return n_; }
    std::size_t size() const { return reps_.size(); }
    std::pair<i64, i64> rep(std::size_t i) const { return reps_[i]; }
    int index(i64 c, i64 d) const { return label_[idx(md(c, n_), md(d, n_))]; }

  private:
    std::size_t idx(i64 c, i64 d) const { return static_cast<std::size_t>(c * n_ + d); }

    i64 n_;
    std::vector<int> label_;
    std::vector<std::pair<i64, i64>> reps_;
};

// ---------------------------------------------------------------------------
// Genus of X0(N) from the permutation action of S and T on Gamma0(N)\SL2(Z).

struct CosetGenus
{
    i64 index, nu2, nu3, cusps, genus;
};

inline CosetGenus coset_genus(i64 n)
{
    ProjectiveLine const p1(n);
    // Right cosets Gamma0(N) g <-> bottom row (c : d); g -> g S sends (c, d) to (d, -c),
    // g -> g T sends (c, d) to (c, c + d).
    i64 const idx = static_cast<i64>(p1.size());
    i64 nu2 = 0, nu3 = 0;
    std::vector<int> seen(p1.size(), 0);
    i64 cusps = 0;
    for (std::size_t i = 0; i < p1.size(); ++i) {
        auto [c, d] = p1.rep(i);
        if (p1.index(d, -c) == static_cast<int>(i))
            ++nu2;
        // S T: (c, d) -> (d, -c) -> (d, d - c), an element of order 3 in PSL2(Z)
        if (p1.index(d, d - c) == static_cast<int>(i))
            ++nu3;
        if (!seen[i]) {
            ++cusps;
            i64 cc = c, dd = d;
            int j = static_cast<int>(i);
            while (!seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = 1;
                dd = dd + cc;
                j = p1.index(cc, dd);
            }
        }
    }
    i64 const twelve_g = 12 + idx - 3 * nu2 - 4 * nu3 - 6 * cusps;
    if (twelve_g % 12 != 0)
        throw std::logic_error("coset_genus: non-integral genus");
    return {idx, nu2, nu3, cusps, twelve_g / 12};
}

// ---------------------------------------------------------------------------
// Class numbers by enumerating ALL primitive forms in a box and reducing each.

struct Form
{
    i64 a, b, c;
    auto operator<=>(Form const &) const = default;
};

inline Form reduce(Form f)
{
    for (;;) {
        // translate b into (-a, a]
        if (f.b > f.a || f.b <= -f.a) {
            i64 const two_a = 2 * f.a;
            i64 k = (f.a - f.b) / two_a;
            if ((f.a - f.b) < 0 && (f.a - f.b) % two_a != 0)
                --k;
            i64 const nb = f.b + two_a * k;
            f.c = f.a * k * k + f.b * k + f.c;
            f.b = nb;
            continue;
        }
        if (f.a > f.c) {
            f = {f.c, -f.b, f.a};
            continue;
        }
        if (f.a == f.c && f.b < 0)
            f.b = -f.b;
        return f;
    }
}

inline i64 class_number(i64 d)
{
    std::set<Form> classes;
    i64 const bound = -d;
    for (i64 a = 1; a <= bound; ++a)
        for (i64 b = -a; b <= a; ++b) {
            i64 const num = b * b - d;
            if (num % (4 * a) != 0)
                continue;
            i64 const c = num / (4 * a);
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1)
                continue;
            classes.insert(reduce({a, b, c}));
        }
    return static_cast<i64>(classes.size());
}

// ---------------------------------------------------------------------------
// Fixed points of w_Q on X0(N), counted as points.
//
// A point tau in H is fixed by w_Q iff some W = [[Qx, y], [Nz, Qw]] of
// determinant Q fixes it. The trace of W is Q(x + w) and must satisfy
// t^2 < 4Q, so t = 0, or t = +-Q when Q < 4. The positive form through tau
// attached to W is [Nz, Q(w - x), -y] of discriminant t^2 - 4Q; conversely a
// positive form [A, B, C] of that discriminant with N | A, Q | B and
// B/Q = t/Q mod 2 gives such a W. Gamma0(N) classes of these forms are
// enumerated as Aut(f0) \ SL2(Z) / Gamma0(N) for each reduced f0; points are
// deduplicated by (primitive reduced form, Aut orbit of the coset).

inline std::array<i64, 3> ext_gcd(i64 a, i64 b)
{
    if (b == 0)
        return {a, 1, 0};
    auto [g, x, y] = ext_gcd(b, md(a, b));
    i64 const q = (a - md(a, b)) / b;
    return {g, y, x - q * y};
}

struct Mat
{
    i64 a, b, c, d;
};

/// Some g in SL2(Z) with first column congruent to (a, c) mod N.
inline Mat lift_column(i64 a, i64 c, i64 n)
{
    if (c == 0)
        c = n;
    while (std::gcd(a, c) != 1)
        a += n;
    auto [g, x, y] = ext_gcd(a, c);
    (void)g;
    // a x + c y = 1  ->  [[a, -y], [c, x]]
    return {a, -y, c, x};
}

inline Form act(Form f, Mat g)
{
    // (f o g)(X, Y) = f(aX + bY, cX + dY)
    i64 const A = f.a * g.a * g.a + f.b * g.a * g.c + f.c * g.c * g.c;
    i64 const B = 2 * f.a * g.a * g.b + f.b * (g.a * g.d + g.b * g.c) + 2 * f.c * g.c * g.d;
    i64 const C = f.a * g.b * g.b + f.b * g.b * g.d + f.c * g.d * g.d;
    return {A, B, C};
}

inline std::vector<Form> all_reduced(i64 d)
{
    std::vector<Form> out;
    for (i64 a = 1; 3 * a * a <= -d; ++a)
        for (i64 b = -a + 1; b <= a; ++b) {
            i64 const num = b * b - d;
            if (num % (4 * a) != 0)
                continue;
            i64 const c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            out.push_back({a, b, c});
        }
    return out;
}

/// Automorphisms of a reduced primitive form in PSL2(Z).
inline std::vector<Mat> automorphs(Form f)
{
    std::vector<Mat> out{{1, 0, 0, 1}};
    if (f.b == 0 && f.a == f.c)
        out.push_back({0, -1, 1, 0});
    if (f.a == f.b && f.b == f.c) {
        out.push_back({0, -1, 1, 1});
        out.push_back({1, 1, -1, 0});
    }
    return out;
}

inline i64 fixed_cm_points(i64 n, i64 q)
{
    ProjectiveLine const p1(n);
    std::set<std::tuple<Form, int>> points;
    std::vector<i64> traces{0};
    if (q < 4)
        traces.push_back(q);
    for (i64 t : traces) {
        i64 const disc = t * t - 4 * q;
        for (Form f0 : all_reduced(disc)) {
            i64 const content = std::gcd(std::gcd(f0.a, std::abs(f0.b)), f0.c);
            Form const prim{f0.a / content, f0.b / content, f0.c / content};
            auto const autos = automorphs(prim);
            for (std::size_t i = 0; i < p1.size(); ++i) {
                auto [a, c] = p1.rep(i);
                Form const f = act(f0, lift_column(a, c, n));
                if (md(f.a, n) != 0 || md(f.b, q) != 0)
                    continue;
                if (md(f.b / q, 2) != md(t / q, 2))
                    continue;
                int best = static_cast<int>(i);
                for (Mat s : autos) {
                    int const j = p1.index(s.a * a + s.b * c, s.c * a + s.d * c);
                    best = std::min(best, j);
                }
                points.insert({prim, best});
            }
        }
    }
    return static_cast<i64>(points.size());
}

/// Cusps as Gamma0(N) \ P^1(Q), via bottom rows (c : d) of SL2(Z) modulo T.
inline i64 fixed_cusps(i64 n, i64 q)
{
    ProjectiveLine const p1(n);
    std::vector<int> orbit(p1.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < p1.size(); ++i) {
        if (orbit[i] >= 0)
            continue;
        auto [c, d] = p1.rep(i);
        int j = static_cast<int>(i);
        while (orbit[static_cast<std::size_t>(j)] < 0) {
            orbit[static_cast<std::size_t>(j)] = next;
            d += c;
            j = p1.index(c, d);
        }
        ++next;
    }
    // W = [[Q x, y], [N z, Q w]] with Q^2 x w - N y z = Q, i.e. Q x w - (N/Q) y z = 1.
    i64 const m = n / q;
    auto [g, x, yz] = ext_gcd(q, m);
    (void)g;
    // q*x + m*yz = 1 -> take w = 1, z = 1, y = -yz
    Mat const w{q * x, -yz, n, q};
    i64 fixed = 0;
    std::vector<char> done(static_cast<std::size_t>(next), 0);
    for (std::size_t i = 0; i < p1.size(); ++i) {
        int const o = orbit[i];
        if (done[static_cast<std::size_t>(o)])
            continue;
        done[static_cast<std::size_t>(o)] = 1;
        auto [c, d] = p1.rep(i);
        // cusp = g(oo) = a/c for g = [[a, b], [c, d]] in SL2(Z); lift (c, d).
        i64 cc = c, dd = d;
        if (cc == 0)
            cc = n;
        while (std::gcd(cc, dd) != 1)
            dd += n;
        // cusp a/cc with a*dd - b*cc = 1
        auto [g2, ia, ib] = ext_gcd(dd, cc);
        (void)g2;
        i64 const a = ia; // a*dd + ib*cc = 1
        // image W(a/cc) = (w.a a + w.b cc) / (w.c a + w.d cc)
        i64 num = w.a * a + w.b * cc;
        i64 den = w.c * a + w.d * cc;
        i64 const h = std::gcd(std::abs(num), std::abs(den));
        num /= h;
        den /= h;
        if (den < 0) {
            num = -num;
            den = -den;
        }
        // bottom row for the cusp num/den: find d' with num*d' = 1 mod den
        i64 dprime;
        if (den == 0) {
            // cusp at infinity: bottom row (0 : 1)
            if (orbit[static_cast<std::size_t>(p1.index(0, 1))] == o)
                ++fixed;
            continue;
        }
        auto [g3, inv, unused] = ext_gcd(md(num, den), den);
        (void)g3;
        (void)unused;
        dprime = md(inv, den);
        if (den == 1)
            dprime = 0;
        // num*dprime - b'*den = 1 for some b'
        if (orbit[static_cast<std::size_t>(p1.index(den, dprime))] == o)
            ++fixed;
    }
    return fixed;
}

inline i64 fixed_points(i64 n, i64 q)
{
    return fixed_cm_points(n, q) + fixed_cusps(n, q);
}

// ---------------------------------------------------------------------------
// Points of y^2 + y = x^3 - x^2 - 10x - 20 (a model of X0(11)) over F_p.

inline i64 x0_11_points(i64 p)
{
    i64 count = 1; // point at infinity
    for (i64 x = 0; x < p; ++x)
        for (i64 y = 0; y < p; ++y) {
            i64 const lhs = md(y * y + y, p);
            i64 const rhs = md(x * x % p * x - x * x - 10 * x - 20, p);
            if (lhs == rhs)
                ++count;
        }
    return count;
}

} // namespace oracle

#endif

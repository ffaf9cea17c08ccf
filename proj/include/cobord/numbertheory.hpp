#pragma once

#include <string>
#include <vector>

#include "cobord/integer.hpp"

namespace cobord {

// eta(n) = p when n+1 = p^k for a prime p, and 1 otherwise: the required
// |s_n| of a degree-n polynomial generator of the cobordism ring.
inline long long eta(long long n) {
    if (n < 1) throw ValidationError("eta: n must be >= 1");
    if (auto pp = prime_power(n + 1)) return pp->first;
    return 1;
}

// Number of carries when i is added to j in base p. Equals the p-adic
// valuation of binom(i+j, i).
inline int kummer_carries(long long i, long long j, long long p) {
    if (i < 0 || j < 0) throw ValidationError("kummer_carries needs i, j >= 0");
    if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
    int carries = 0;
    long long carry = 0;
    while (i > 0 || j > 0 || carry > 0) {
        const long long digit = i % p + j % p + carry;
        carry = digit >= p ? 1 : 0;
        carries += static_cast<int>(carry);
        i /= p;
        j /= p;
    }
    return carries;
}

/* Generator-existence arithmetic: the gcd of n+1 with the binomials
 * binom(n+1, i) over i_min <= i <= (n+1)/2, compared against eta(n).
 * eta(n) divides n+1 and every binom(n+1, i), so the running gcd can
 * never drop below eta(n) and the loop may stop as soon as it reaches
 * it; binomials are still computed exactly (incrementally) since the
 * gcd itself stays <= n+1.
 */
struct GcdReport {
    long long n = 0;
    int i_min = 2;
    long long gcd_value = 0;
    long long eta_value = 0;
    bool pass = false;
    bool range_empty = false;       // no i with i_min <= i <= (n+1)/2
    std::vector<long long> witnesses; // the i consumed before stabilizing
};

inline GcdReport gcd_generator_check(long long n, int i_min) {
    if (n < 2) throw ValidationError("gcd_generator_check: n must be >= 2");
    if (i_min != 2 && i_min != 4)
        throw ValidationError("gcd_generator_check: i_min must be 2 or 4");
    GcdReport rep;
    rep.n = n;
    rep.i_min = i_min;
    rep.eta_value = eta(n);
    Integer g = n + 1;
    const long long hi = (n + 1) / 2;
    rep.range_empty = i_min > hi;
    if (!rep.range_empty) {
        Integer binom = binomial(n + 1, i_min);
        for (long long i = i_min; i <= hi && g != rep.eta_value; ++i) {
            if (i > i_min) {
                binom *= n + 2 - i;
                binom /= i;
            }
            g = gcd(g, binom);
            rep.witnesses.push_back(i);
        }
    }
    rep.gcd_value = g.convert_to<long long>();
    rep.pass = rep.gcd_value == rep.eta_value;
    return rep;
}

enum class Parity { Even, Odd };

// All failing n of the given parity with 2 <= n <= n_max, sorted by n.
inline std::vector<GcdReport> scan_gcd_exceptions(long long n_max, int i_min, Parity parity) {
    if (n_max < 2) throw ValidationError("scan_gcd_exceptions: n_max must be >= 2");
    std::vector<GcdReport> failures;
    long long n = parity == Parity::Even ? 2 : 3;
    for (; n <= n_max; n += 2) {
        GcdReport rep = gcd_generator_check(n, i_min);
        if (!rep.pass) failures.push_back(std::move(rep));
    }
    return failures;
}

// Bott periodicity: the stable group pi_j(O) vanishes exactly for
// j = 2, 4, 5, 6 mod 8.
inline bool pi_O_trivial(long long j) {
    if (j < 1) throw ValidationError("pi_O_trivial: j must be >= 1");
    const long long r = j % 8;
    return r == 2 || r == 4 || r == 5 || r == 6;
}

// Torus rank used when summing dimension-n pieces: k = 4 when
// n = 1 mod 4 and k = 2 otherwise; the extension obstruction lives in
// pi_{2n-k}(O), which this choice always makes trivial.
struct TorusRankChoice {
    int k = 0;
    long long obstruction_dim = 0; // 2n - k
    bool trivial = false;
};

inline TorusRankChoice choose_torus_rank(long long n) {
    if (n < 3) throw ValidationError("choose_torus_rank: n must be >= 3");
    TorusRankChoice c;
    c.k = (n % 4 == 1) ? 4 : 2;
    c.obstruction_dim = 2 * n - c.k;
    c.trivial = pi_O_trivial(c.obstruction_dim);
    return c;
}

} // namespace cobord

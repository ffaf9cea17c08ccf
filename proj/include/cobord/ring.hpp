#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cobord/chern.hpp"
#include "cobord/linalg.hpp"
#include "cobord/numbertheory.hpp"
#include "cobord/variety.hpp"

namespace cobord {

/* Polynomial-generator system for the cobordism ring up to a working
 * dimension bound N. In every dimension d the generator is a formal
 * integer combination of CP(d), Milnor hypersurfaces H(i, d+1-i) and
 * blow-ups BlCP(d, k) whose Milnor number is +-eta(d). Strict mode
 * restricts H to 4 <= i <= j and therefore has gaps in some dimensions
 * (d = 5 and d = 8 are the first two); relaxed mode (2 <= i <= j) has a
 * generator in every dimension.
 *
 * The search prefers a single variety whose |s| already equals eta(d),
 * then folds pool entries into an extended-gcd combination, skipping
 * entries that do not lower the gcd, until it reaches eta(d).
 */
struct GeneratorTerm {
    GoodVariety variety;
    Integer coeff;
};

struct DimGenerator {
    int dim = 0;
    std::vector<GeneratorTerm> combination;
    Integer s;         // Milnor number of the combination, |s| = eta(dim)
    ChernVector chern; // full Chern data of the combination

    DimGenerator() : chern(0) {}
};

namespace detail {

inline Integer closed_form_milnor(const GoodVariety& v) {
    if (const auto* cp = std::get_if<CP>(&v)) return Integer(cp->n + 1);
    if (const auto* h = std::get_if<MilnorH>(&v)) return -binomial(h->i + h->j, h->i);
    if (const auto* b = std::get_if<BlowUpCP>(&v)) {
        const int n = b->n;
        const int shift = n + (n % 2 == 0 ? 1 : -1);
        return Integer(n + 1) - Integer(b->k) * shift;
    }
    if (const auto* s = std::get_if<Sigma>(&v)) return Integer(2 - 2 * s->genus);
    throw ValidationError("no closed-form Milnor number for this variety");
}

inline std::vector<GoodVariety> generator_pool(int d, GeneratorMode mode) {
    std::vector<GoodVariety> pool;
    pool.push_back(CP{d});
    const int i_min = mode == GeneratorMode::Strict ? 4 : 2;
    for (int i = i_min; 2 * i <= d + 1; ++i) pool.push_back(MilnorH{i, d + 1 - i});
    if (d >= 2)
        for (int k = 1; k <= std::min(3, d + 1); ++k) pool.push_back(BlowUpCP{d, k});
    return pool;
}

} // namespace detail

class GeneratorSystem {
public:
    static GeneratorSystem build(int max_dim, GeneratorMode mode) {
        if (max_dim < 1) throw ValidationError("generator system needs max_dim >= 1");
        GeneratorSystem gs;
        gs.mode_ = mode;
        gs.max_dim_ = max_dim;
        gs.by_dim_.resize(max_dim + 1);
        for (int d = 1; d <= max_dim; ++d) {
            auto gen = search_dimension(d, mode);
            if (!gen) {
                gs.gaps_.push_back(d);
                continue;
            }
            gen->chern = ChernVector::zero(d);
            for (const auto& term : gen->combination)
                gen->chern = add(gen->chern, scale(term.coeff, chern_of(term.variety)));
            if (milnor_number(gen->chern) != gen->s)
                throw InternalError("generator Milnor number disagrees with closed form");
            if (abs(gen->s) != eta(d))
                throw InternalError("generator |s| is not eta in dimension " + std::to_string(d));
            gs.by_dim_[d] = std::move(*gen);
        }
        return gs;
    }

    GeneratorMode mode() const noexcept { return mode_; }
    int max_dim() const noexcept { return max_dim_; }
    const std::vector<int>& gaps() const noexcept { return gaps_; }

    bool has(int d) const {
        return d >= 1 && d <= max_dim_ && by_dim_[d].has_value();
    }

    const DimGenerator& generator(int d) const {
        if (d < 1 || d > max_dim_)
            throw ValidationError("dimension " + std::to_string(d) +
                                  " outside generator system bound " + std::to_string(max_dim_));
        if (!by_dim_[d])
            throw StrictModeGapError(
                d, "no strict-mode generator in dimension " + std::to_string(d) +
                       " (H factors with 4 <= i <= j cannot reach |s| = eta); "
                       "use relaxed mode");
        return *by_dim_[d];
    }

    // Per-dimension listing of the chosen combination and its s-number.
    std::string report() const {
        std::ostringstream out;
        out << "generator system (mode: "
            << (mode_ == GeneratorMode::Strict ? "strict" : "relaxed") << ", max dim "
            << max_dim_ << ")\n";
        for (int d = 1; d <= max_dim_; ++d) {
            out << "  d=" << d << ": ";
            if (!by_dim_[d]) {
                out << "GAP (no combination of CP/H/BlCP with |s| = eta)"
                    << "   eta=" << eta(d) << "\n";
                continue;
            }
            const auto& g = *by_dim_[d];
            for (size_t t = 0; t < g.combination.size(); ++t) {
                const Integer& c = g.combination[t].coeff;
                if (t == 0) {
                    if (c == -1) out << "-";
                    else if (c != 1) out << c << "*";
                } else {
                    out << (c < 0 ? " - " : " + ");
                    if (abs(c) != 1) out << abs(c) << "*";
                }
                out << to_string(g.combination[t].variety);
            }
            out << "   s=" << g.s << "   eta=" << eta(d) << "\n";
        }
        return out.str();
    }

private:
    static std::optional<DimGenerator> search_dimension(int d, GeneratorMode mode) {
        const auto pool = detail::generator_pool(d, mode);
        const Integer target = eta(d);

        std::vector<Integer> s_values;
        for (const auto& v : pool) s_values.push_back(detail::closed_form_milnor(v));

        DimGenerator gen;
        gen.dim = d;

        // single varieties first
        for (size_t i = 0; i < pool.size(); ++i) {
            if (abs(s_values[i]) == target) {
                gen.combination = {{pool[i], 1}};
                gen.s = s_values[i];
                return gen;
            }
        }

        // greedy extended-gcd fold, smallest supports first
        std::vector<GeneratorTerm> combo = {{pool[0], 1}};
        Integer s = s_values[0];
        for (size_t i = 1; i < pool.size() && abs(s) != target; ++i) {
            if (s_values[i] == 0) continue;
            const ExtGcd eg = ext_gcd(s, s_values[i]);
            if (eg.g == abs(s)) continue; // no progress
            std::vector<GeneratorTerm> next;
            for (const auto& term : combo)
                if (eg.x * term.coeff != 0) next.push_back({term.variety, eg.x * term.coeff});
            if (eg.y != 0) next.push_back({pool[i], eg.y});
            combo = std::move(next);
            s = eg.g;
        }
        if (abs(s) != target) return std::nullopt;
        gen.combination = std::move(combo);
        gen.s = s;
        return gen;
    }

    GeneratorMode mode_ = GeneratorMode::Relaxed;
    int max_dim_ = 0;
    std::vector<std::optional<DimGenerator>> by_dim_;
    std::vector<int> gaps_;
};

inline long long eta_for_dim(long long d) { return eta(d); }

// Chern data of the generator monomial G_{l1} * ... * G_{lk}.
inline ChernVector monomial_chern(const GeneratorSystem& gs, const Partition& lambda) {
    ChernVector r = ChernVector::unit();
    for (int part : lambda.parts()) r = product(r, gs.generator(part).chern);
    return r;
}

// Integer coordinates of a class in the monomial basis of the generators.
struct ClassCoordinates {
    int dim = 0;
    std::map<Partition, Integer> coeffs; // zeros absent

    bool operator==(const ClassCoordinates& o) const {
        return dim == o.dim && coeffs == o.coeffs;
    }
};

inline ChernVector compose(const ClassCoordinates& c, const GeneratorSystem& gs) {
    ChernVector v = ChernVector::zero(c.dim);
    for (const auto& [lam, coeff] : c.coeffs) {
        if (lam.weight() != c.dim)
            throw DimensionMismatchError("coordinate key weight does not match dimension");
        v = add(v, scale(coeff, monomial_chern(gs, lam)));
    }
    return v;
}

/* Exact solve of the square system (generator monomial Chern data) x = v.
 * The solution is unique over the rationals; the class is integral
 * exactly when every coordinate is an integer, which is the membership
 * test for the integral span.
 */
inline ClassCoordinates decompose(const ChernVector& v, const GeneratorSystem& gs) {
    const int n = v.dim();
    if (n < 1) throw ValidationError("decompose needs dimension >= 1");
    if (n > gs.max_dim())
        throw ValidationError("class dimension exceeds generator system bound");
    const auto idx = partitions_of(n);
    const size_t sz = idx.size();

    RationalMatrix a(sz, RationalVector(sz, 0));
    for (size_t col = 0; col < sz; ++col) {
        const ChernVector mc = monomial_chern(gs, idx[col]);
        for (size_t row = 0; row < sz; ++row) a[row][col] = Rational(mc.coeff(idx[row]));
    }
    RationalVector b(sz, 0);
    for (size_t row = 0; row < sz; ++row) b[row] = Rational(v.coeff(idx[row]));

    const auto x = solve_linear(std::move(a), std::move(b));
    if (!x)
        throw InternalError("Singular: generator monomial matrix is singular in dimension " +
                            std::to_string(n));
    ClassCoordinates c;
    c.dim = n;
    for (size_t col = 0; col < sz; ++col) {
        if (denominator((*x)[col]) != 1)
            throw NonIntegralError("class is not integral over the generator system: "
                                   "coordinate at (" + idx[col].to_string() + ") is " +
                                   numerator((*x)[col]).str() + "/" +
                                   denominator((*x)[col]).str());
        if (numerator((*x)[col]) != 0) c.coeffs[idx[col]] = numerator((*x)[col]);
    }
    return c;
}

// s_n = 0 characterizes the decomposable classes.
inline bool is_decomposable(const ChernVector& v) { return milnor_number(v) == 0; }

// ---------------------------------------------------------------------
// Text format: "dim: n" then lines "lambda: coefficient" (sparse).

inline std::string to_text(const ClassCoordinates& c) {
    std::ostringstream out;
    out << "dim: " << c.dim << "\n";
    for (const auto& [p, v] : c.coeffs) out << p.to_string() << ": " << v << "\n";
    return out.str();
}

inline ClassCoordinates coordinates_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ClassCoordinates c;
    bool have_dim = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ValidationError("bad coordinates line: '" + line + "'");
        std::string key = line.substr(0, colon);
        std::string val = line.substr(colon + 1);
        const auto strip = [](std::string s) {
            const size_t a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string();
            const size_t b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        key = strip(key);
        val = strip(val);
        if (key == "dim") {
            c.dim = std::stoi(val);
            have_dim = true;
        } else {
            if (!have_dim) throw ValidationError("coordinates file must start with 'dim: n'");
            const Integer v(val);
            if (v != 0) c.coeffs[Partition::parse(key)] = v;
        }
    }
    if (!have_dim) throw ValidationError("coordinates file must contain 'dim: n'");
    return c;
}

} // namespace cobord

#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "cobord/numbertheory.hpp"
#include "cobord/ring.hpp"
#include "cobord/variety.hpp"

namespace cobord {

// A formal disjoint union: good-variety products with positive integer
// multiplicities, all of one dimension.
struct RealizationComponent {
    GoodProduct product;
    Integer multiplicity;
};

struct Realization {
    int dim = 0;
    GeneratorMode mode = GeneratorMode::Strict;
    std::vector<RealizationComponent> components; // canonical order, merged
};

inline ChernVector total_chern(const Realization& r) {
    ChernVector v = ChernVector::zero(r.dim);
    for (const auto& c : r.components) v = add(v, scale(c.multiplicity, chern_of(c.product)));
    return v;
}

namespace detail {

struct ProductKey {
    GoodProduct product;
    bool operator<(const ProductKey& o) const { return product_less(product, o.product); }
};

using Accumulator = std::map<ProductKey, Integer>;

inline void accumulate(Accumulator& acc, const GoodProduct& p, const Integer& mult) {
    if (mult <= 0) throw InternalError("realization multiplicity must be positive");
    acc[ProductKey{p}] += mult;
}

inline GoodProduct with_extra_factors(const GoodProduct& base, const GoodProduct& extra) {
    std::vector<GoodVariety> fs = base.factors;
    fs.insert(fs.end(), extra.factors.begin(), extra.factors.end());
    return GoodProduct(std::move(fs));
}

/* Signed formal sums of products arise while expanding generator
 * monomials. Before dispatching signs, products holding two curve
 * factors are repaired by trading one curve Sigma(g) for its class
 * (1-g)[CP^1]; the generator expansions themselves never contain curves,
 * so this is a safety net for externally built terms.
 */
inline std::map<ProductKey, Integer> normalize_signed_terms(
    std::vector<std::pair<GoodProduct, Integer>> terms) {
    std::map<ProductKey, Integer> merged;
    while (!terms.empty()) {
        auto [p, coeff] = std::move(terms.back());
        terms.pop_back();
        if (coeff == 0) continue;
        if (curve_count(p) >= 2) {
            std::vector<GoodVariety> rest;
            int genus = -1;
            bool dropped = false;
            for (const auto& f : p.factors) {
                if (!dropped && is_curve(f)) {
                    genus = std::get<Sigma>(f).genus;
                    dropped = true;
                } else {
                    rest.push_back(f);
                }
            }
            rest.push_back(CP{1});
            terms.emplace_back(GoodProduct(std::move(rest)), coeff * Integer(1 - genus));
            continue;
        }
        Integer& slot = merged[ProductKey{p}];
        slot += coeff;
        if (slot == 0) merged.erase(ProductKey{p});
    }
    return merged;
}

class Realizer {
public:
    Realizer(const GeneratorSystem& gs, int max_depth) : gs_(gs), max_depth_(max_depth) {}

    void run(Accumulator& acc, const ChernVector& v) { realize_class(acc, v, 0); }

private:
    const GeneratorSystem& gs_;
    int max_depth_;

    void check_depth(int depth) const {
        if (depth > max_depth_)
            throw InternalError("realization recursion exceeded depth bound " +
                                std::to_string(max_depth_));
    }

    /* The induction: dimension 1 is k copies of CP^1 or a single curve;
     * when s_n(v) != 0 the generator multiple c*[G_n] is split off first
     * (c = s_n(v)/s_n(G_n), integral for every integral class); the
     * remaining s_n = 0 class decomposes into lower generator monomials,
     * whose negative terms push their sign into one factor and recurse
     * in strictly smaller dimension.
     */
    void realize_class(Accumulator& acc, const ChernVector& v, int depth) {
        check_depth(depth);
        const int n = v.dim();
        if (n < 1) throw ValidationError("realize needs dimension >= 1");
        if (v.is_zero()) return;

        if (n == 1) {
            const Integer c1 = v.coeff(Partition::single(1));
            if (c1 % 2 != 0)
                throw NonIntegralError("dimension-1 class with odd c_1 = " + c1.str());
            const Integer k = c1 / 2;
            if (k > 0) {
                accumulate(acc, GoodProduct({CP{1}}), k);
            } else if (k < 0) {
                const Integer genus = 1 - k;
                accumulate(acc, GoodProduct({Sigma{genus.convert_to<int>()}}), 1);
            }
            return;
        }

        const Integer s = milnor_number(v);
        if (s != 0) {
            const DimGenerator& gen = gs_.generator(n);
            if (s % gen.s != 0)
                throw NonIntegralError("Milnor number " + s.str() + " is not divisible by s(G_" +
                                       std::to_string(n) + ") = " + gen.s.str());
            const Integer c = s / gen.s;
            const ChernVector w = subtract(v, scale(c, gen.chern));
            if (milnor_number(w) != 0)
                throw InternalError("generator split left a nonzero Milnor number");
            for (const auto& term : gen.combination) {
                const Integer q = c * term.coeff;
                if (q > 0) {
                    accumulate(acc, GoodProduct({term.variety}), q);
                } else if (q < 0) {
                    realize_negative_single(acc, term.variety, -q, depth + 1);
                }
            }
            realize_class(acc, w, depth + 1);
            return;
        }

        // s_n(v) = 0: expand the decomposition into concrete products
        const ClassCoordinates coords = decompose(v, gs_);
        if (coords.coeffs.count(Partition::single(n)))
            throw InternalError("zero Milnor number but nonzero top coordinate");

        std::vector<std::pair<GoodProduct, Integer>> terms;
        for (const auto& [lam, q] : coords.coeffs) {
            std::vector<std::pair<std::vector<GoodVariety>, Integer>> expanded = {{{}, q}};
            for (int part : lam.parts()) {
                std::vector<std::pair<std::vector<GoodVariety>, Integer>> next;
                for (const auto& [fs, coeff] : expanded) {
                    for (const auto& term : gs_.generator(part).combination) {
                        auto fs2 = fs;
                        fs2.push_back(term.variety);
                        next.emplace_back(std::move(fs2), coeff * term.coeff);
                    }
                }
                expanded = std::move(next);
            }
            for (auto& [fs, coeff] : expanded)
                terms.emplace_back(GoodProduct(std::move(fs)), coeff);
        }

        for (const auto& [key, m] : normalize_signed_terms(std::move(terms))) {
            if (m > 0) {
                accumulate(acc, key.product, m);
            } else {
                negate_product(acc, key.product, m, depth + 1);
            }
        }
    }

    // Realization of q[V] with q < 0 for a single variety V of dimension
    // >= 2: pair V with a toric partner N of opposite Milnor sign
    // (BlCP(n,3) when s(V) > 0, CP(n) otherwise), so that a s = 0 class
    // -a[V] - b[N] absorbs the sign; b copies of N and a - |q| copies of
    // V are appended to restore the class.
    void realize_negative_single(Accumulator& acc, const GoodVariety& variety, const Integer& q,
                                 int depth) {
        check_depth(depth);
        const int d = dimension(variety);
        const ChernVector vc = chern_of(variety);
        if (d == 1) {
            realize_class(acc, scale(-q, vc), depth + 1);
            return;
        }
        const Integer s_m = milnor_number(vc);
        if (s_m == 0) {
            realize_class(acc, scale(-q, vc), depth + 1);
            return;
        }
        const GoodVariety partner = s_m > 0 ? GoodVariety(BlowUpCP{d, 3}) : GoodVariety(CP{d});
        const ChernVector pc = chern_of(partner);
        const Integer s_n = milnor_number(pc);
        if ((s_m > 0) == (s_n > 0))
            throw InternalError("negation partner has the wrong Milnor sign");
        const Integer g = gcd(abs(s_m), abs(s_n));
        const Integer a0 = abs(s_n) / g;
        const Integer b0 = abs(s_m) / g;
        const Integer t = (q + a0 - 1) / a0; // smallest multiple with a >= q
        const Integer a = a0 * t;
        const Integer b = b0 * t;

        const ChernVector u = add(scale(-a, vc), scale(-b, pc));
        if (milnor_number(u) != 0)
            throw InternalError("negation pairing left a nonzero Milnor number");
        realize_class(acc, u, depth + 1);
        accumulate(acc, GoodProduct({partner}), b);
        if (a > q) accumulate(acc, GoodProduct({variety}), a - q);
    }

    // m < 0 copies of a multi-factor product: push the sign (with its
    // multiplicity) into one factor of minimal dimension and recurse on
    // the strictly smaller-dimensional class m[V_min].
    void negate_product(Accumulator& acc, const GoodProduct& p, const Integer& m, int depth) {
        check_depth(depth);
        if (p.factors.size() < 2)
            throw InternalError("sign pushing needs a product with at least two factors");
        size_t min_at = 0;
        for (size_t i = 1; i < p.factors.size(); ++i)
            if (dimension(p.factors[i]) < dimension(p.factors[min_at])) min_at = i;
        std::vector<GoodVariety> others;
        for (size_t i = 0; i < p.factors.size(); ++i)
            if (i != min_at) others.push_back(p.factors[i]);
        const GoodProduct rest(std::move(others));

        Accumulator sub;
        realize_class(sub, scale(m, chern_of(p.factors[min_at])), depth + 1);
        for (const auto& [key, mult] : sub)
            accumulate(acc, with_extra_factors(key.product, rest), mult);
    }
};

} // namespace detail

inline const GeneratorSystem& shared_generator_system(int min_dim, GeneratorMode mode) {
    // Bucketed so cached systems are never rebuilt and references stay valid.
    const int bucket = ((std::max(min_dim, 8) + 7) / 8) * 8;
    static std::map<std::pair<int, int>, GeneratorSystem> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    const auto key = std::make_pair(static_cast<int>(mode), bucket);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, GeneratorSystem::build(bucket, mode)).first;
    return it->second;
}

inline Realization realize(const ChernVector& v, GeneratorMode mode = GeneratorMode::Strict) {
    const int n = v.dim();
    if (n < 1) throw ValidationError("realize needs dimension >= 1");
    const GeneratorSystem& gs = shared_generator_system(n, mode);
    detail::Accumulator acc;
    detail::Realizer realizer(gs, 8 * n + 32);
    realizer.run(acc, v);
    Realization r;
    r.dim = n;
    r.mode = mode;
    for (auto& [key, mult] : acc) r.components.push_back({key.product, mult});
    return r;
}

/* Independent check of a realization against a target class: recompute
 * the total Chern data from scratch, and verify the structural
 * constraints (positive multiplicities, at most one curve per product,
 * H parameter bounds for the mode, and the torus-rank bound
 * rank >= min(4, n-1)). In relaxed mode a product can only miss the
 * rank bound through an H factor with i < 4; those are reported as
 * concessions rather than violations.
 */
struct VerifyReport {
    bool chern_match = false;
    std::vector<Partition> mismatched;      // partitions where sums differ
    std::vector<std::string> violations;    // structural failures
    std::vector<std::string> concessions;   // relaxed-mode rank misses
    int required_rank = 0;                  // min(4, n-1)
    int min_rank = 0;                       // over all products
    bool obstruction_applicable = false;    // dim >= 3
    TorusRankChoice obstruction;            // k, 2n-k, triviality
    bool obstruction_admissible = false;    // k <= rank of every product

    bool pass() const { return chern_match && violations.empty(); }

    std::string to_string() const {
        std::ostringstream out;
        out << "chern numbers: " << (chern_match ? "match" : "MISMATCH") << "\n";
        for (const auto& p : mismatched) out << "  differs at (" << p.to_string() << ")\n";
        for (const auto& s : violations) out << "violation: " << s << "\n";
        for (const auto& s : concessions) out << "concession: " << s << "\n";
        out << "torus rank: min " << min_rank << ", required " << required_rank << "\n";
        if (obstruction_applicable) {
            out << "obstruction: k=" << obstruction.k << " dim=" << obstruction.obstruction_dim
                << " trivial=" << (obstruction.trivial ? "yes" : "no")
                << " admissible=" << (obstruction_admissible ? "yes" : "no") << "\n";
        }
        out << "verified: " << (pass() ? "yes" : "no") << "\n";
        return out.str();
    }
};

inline VerifyReport verify_realization(const Realization& r, const ChernVector& target) {
    VerifyReport rep;
    rep.required_rank = std::min(4, r.dim - 1);
    rep.min_rank = r.components.empty() ? rep.required_rank : torus_rank(r.components[0].product);

    ChernVector sum = ChernVector::zero(r.dim);
    for (size_t ci = 0; ci < r.components.size(); ++ci) {
        const auto& comp = r.components[ci];
        const std::string tag = "component " + std::to_string(ci) + " (" +
                                to_string(comp.product) + ")";
        if (comp.multiplicity < 1)
            rep.violations.push_back(tag + ": multiplicity must be >= 1");
        if (dimension(comp.product) != r.dim)
            rep.violations.push_back(tag + ": dimension " +
                                     std::to_string(dimension(comp.product)) +
                                     " differs from target " + std::to_string(r.dim));
        for (const auto& f : comp.product.factors) {
            try {
                validate_variety(f, GeneratorMode::Relaxed);
            } catch (const Error& e) {
                rep.violations.push_back(tag + ": " + e.what());
            }
            if (r.mode == GeneratorMode::Strict && !strict_ok(f))
                rep.violations.push_back(tag + ": " + to_string(f) +
                                         " is not allowed in strict mode (needs 4 <= i <= j)");
        }
        if (curve_count(comp.product) > 1)
            rep.violations.push_back(tag + ": more than one curve factor");

        const int rank = torus_rank(comp.product);
        rep.min_rank = std::min(rep.min_rank, rank);
        if (rank < rep.required_rank) {
            const bool relaxed_h = std::any_of(
                comp.product.factors.begin(), comp.product.factors.end(),
                [](const GoodVariety& f) { return !strict_ok(f); });
            if (relaxed_h && r.mode == GeneratorMode::Relaxed) {
                rep.concessions.push_back(tag + ": torus rank " + std::to_string(rank) +
                                          " < " + std::to_string(rep.required_rank) +
                                          " through a relaxed H factor");
            } else {
                rep.violations.push_back(tag + ": torus rank " + std::to_string(rank) +
                                         " < required " + std::to_string(rep.required_rank));
            }
        }

        if (dimension(comp.product) == r.dim && comp.multiplicity >= 1)
            sum = add(sum, scale(comp.multiplicity, chern_of(comp.product)));
    }

    if (r.dim == target.dim()) {
        rep.chern_match = sum == target;
        if (!rep.chern_match)
            for (const Partition& p : partitions_of(r.dim))
                if (sum.coeff(p) != target.coeff(p)) rep.mismatched.push_back(p);
    } else {
        rep.chern_match = false;
    }

    if (r.dim >= 3) {
        rep.obstruction_applicable = true;
        rep.obstruction = choose_torus_rank(r.dim);
        rep.obstruction_admissible = rep.obstruction.trivial && rep.min_rank >= rep.obstruction.k;
    }
    return rep;
}

// ---------------------------------------------------------------------
// Text format: "dim: n", "mode: strict|relaxed", one line
// "multiplicity x factor * factor * ..." per component, and the trailer
// "verified: yes|no" emitted by the CLI after re-verification.

inline std::string to_text(const Realization& r) {
    std::ostringstream out;
    out << "dim: " << r.dim << "\n";
    out << "mode: " << (r.mode == GeneratorMode::Strict ? "strict" : "relaxed") << "\n";
    for (const auto& c : r.components)
        out << c.multiplicity << " x " << to_string(c.product) << "\n";
    return out.str();
}

inline Realization realization_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Realization r;
    bool have_dim = false;
    const auto strip = [](std::string s) {
        const size_t a = s.find_first_not_of(" \t\r");
        if (a == std::string::npos) return std::string();
        const size_t b = s.find_last_not_of(" \t\r");
        return s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty()) continue;
        if (line.rfind("dim:", 0) == 0) {
            r.dim = std::stoi(strip(line.substr(4)));
            have_dim = true;
            continue;
        }
        if (line.rfind("mode:", 0) == 0) {
            const std::string m = strip(line.substr(5));
            if (m == "strict") r.mode = GeneratorMode::Strict;
            else if (m == "relaxed") r.mode = GeneratorMode::Relaxed;
            else throw ValidationError("unknown mode '" + m + "'");
            continue;
        }
        if (line.rfind("verified:", 0) == 0) continue; // trailer, recomputed
        const auto xpos = line.find(" x ");
        if (xpos == std::string::npos)
            throw ValidationError("bad realization line: '" + line + "'");
        const Integer mult(strip(line.substr(0, xpos)));
        std::vector<GoodVariety> factors;
        std::string factor;
        std::stringstream fs(line.substr(xpos + 3));
        while (std::getline(fs, factor, '*')) {
            factor = strip(factor);
            if (!factor.empty()) factors.push_back(parse_variety(factor));
        }
        r.components.push_back({GoodProduct(std::move(factors)), mult});
    }
    if (!have_dim) throw ValidationError("realization file must contain 'dim: n'");
    return r;
}

} // namespace cobord

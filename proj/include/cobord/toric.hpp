#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cobord/chern.hpp"
#include "cobord/integer.hpp"
#include "cobord/linalg.hpp"

namespace cobord {

/* A smooth complete fan: primitive integer rays and the index sets of the
 * full-dimensional cones. Smoothness = every maximal cone's rays form a
 * lattice basis; completeness is checked combinatorially (every facet
 * lies in exactly two maximal cones), which is correct for the fans this
 * library builds but weaker than covering R^n in general. Projectivity
 * is not checked at all.
 */
struct Fan {
    int rank = 0;
    std::vector<std::vector<long long>> rays;
    std::vector<std::vector<int>> max_cones;

    bool operator==(const Fan& o) const {
        return rank == o.rank && rays == o.rays && max_cones == o.max_cones;
    }
};

namespace detail {

inline Integer cone_determinant(const Fan& f, const std::vector<int>& cone) {
    const int n = f.rank;
    RationalMatrix m(n, RationalVector(n, 0));
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) m[r][c] = f.rays[cone[c]][r]; // rays as columns
    const Rational det = determinant(std::move(m));
    return numerator(det); // denominator is 1
}

} // namespace detail

// Empty result = valid; otherwise one message per violation.
inline std::vector<std::string> validate_fan(const Fan& f) {
    std::vector<std::string> bad;
    const int n = f.rank;
    if (n < 1) {
        bad.push_back("rank must be >= 1");
        return bad;
    }
    for (size_t i = 0; i < f.rays.size(); ++i) {
        if (static_cast<int>(f.rays[i].size()) != n) {
            bad.push_back("ray " + std::to_string(i) + " has wrong length");
            continue;
        }
        long long g = 0;
        for (long long x : f.rays[i]) g = std::gcd(g, x < 0 ? -x : x);
        if (g != 1) bad.push_back("ray " + std::to_string(i) + " is not primitive");
        for (size_t k = 0; k < i; ++k)
            if (f.rays[k] == f.rays[i])
                bad.push_back("duplicate ray: " + std::to_string(k) + " and " + std::to_string(i));
    }
    if (!bad.empty()) return bad;

    std::map<std::vector<int>, int> facet_count;
    for (size_t ci = 0; ci < f.max_cones.size(); ++ci) {
        const auto& cone = f.max_cones[ci];
        if (static_cast<int>(cone.size()) != n) {
            bad.push_back("cone " + std::to_string(ci) + " has " + std::to_string(cone.size()) +
                          " rays, expected " + std::to_string(n));
            continue;
        }
        bool in_range = true;
        for (int idx : cone)
            if (idx < 0 || idx >= static_cast<int>(f.rays.size())) {
                bad.push_back("cone " + std::to_string(ci) + " has ray index out of range");
                in_range = false;
            }
        if (!in_range) continue;
        std::set<int> uniq(cone.begin(), cone.end());
        if (static_cast<int>(uniq.size()) != n) {
            bad.push_back("cone " + std::to_string(ci) + " repeats a ray");
            continue;
        }
        const Integer det = detail::cone_determinant(f, cone);
        if (det != 1 && det != -1)
            bad.push_back("cone " + std::to_string(ci) + " is not unimodular (det " +
                          det.str() + ")");
        // facets: all (n-1)-subsets
        std::vector<int> sorted(uniq.begin(), uniq.end());
        for (int drop = 0; drop < n; ++drop) {
            std::vector<int> facet;
            for (int t = 0; t < n; ++t)
                if (t != drop) facet.push_back(sorted[t]);
            ++facet_count[facet];
        }
    }
    if (!bad.empty()) return bad;

    for (const auto& [facet, count] : facet_count) {
        if (count == 2) continue;
        std::string fs = "{";
        for (size_t t = 0; t < facet.size(); ++t)
            fs += (t ? "," : "") + std::to_string(facet[t]);
        fs += "}";
        bad.push_back("facet " + fs + " incident to " + std::to_string(count) +
                      " cone(s), expected 2");
    }
    return bad;
}

inline void require_valid(const Fan& f) {
    const auto bad = validate_fan(f);
    if (bad.empty()) return;
    std::string msg = "invalid fan:";
    for (const auto& b : bad) msg += " " + b + ";";
    throw ValidationError(msg);
}

// Rays e_1..e_n and -(e_1+...+e_n); the n+1 maximal cones omit one ray
// each, listed in omitted-ray order.
inline Fan projective_space_fan(int n) {
    if (n < 1) throw ValidationError("projective_space_fan: n must be >= 1");
    Fan f;
    f.rank = n;
    for (int i = 0; i < n; ++i) {
        std::vector<long long> e(n, 0);
        e[i] = 1;
        f.rays.push_back(std::move(e));
    }
    f.rays.push_back(std::vector<long long>(n, -1));
    for (int omit = 0; omit <= n; ++omit) {
        std::vector<int> cone;
        for (int i = 0; i <= n; ++i)
            if (i != omit) cone.push_back(i);
        f.max_cones.push_back(std::move(cone));
    }
    return f;
}

/* Stellar subdivision of the maximal cone at cone_index: the blow-up of
 * the corresponding torus-fixed point. The new ray is the sum of the
 * cone's rays (automatically primitive for a unimodular cone) and the
 * cone is replaced by the n cones swapping one original ray for it.
 */
inline Fan blow_up(const Fan& f, int cone_index) {
    require_valid(f);
    if (cone_index < 0 || cone_index >= static_cast<int>(f.max_cones.size()))
        throw ValidationError("blow_up: cone index " + std::to_string(cone_index) +
                              " out of range (fan has " + std::to_string(f.max_cones.size()) +
                              " maximal cones)");
    if (f.rank == 1) return f; // subdividing a ray at itself is the identity
    const auto cone = f.max_cones[cone_index];
    std::vector<long long> sum(f.rank, 0);
    for (int idx : cone)
        for (int r = 0; r < f.rank; ++r) sum[r] += f.rays[idx][r];
    for (const auto& ray : f.rays)
        if (ray == sum)
            throw ValidationError("blow_up: subdivision ray already present "
                                  "(cone cannot be subdivided again)");
    Fan g;
    g.rank = f.rank;
    g.rays = f.rays;
    g.rays.push_back(sum);
    const int new_ray = static_cast<int>(g.rays.size()) - 1;
    for (int ci = 0; ci < static_cast<int>(f.max_cones.size()); ++ci)
        if (ci != cone_index) g.max_cones.push_back(f.max_cones[ci]);
    for (int drop = 0; drop < f.rank; ++drop) {
        std::vector<int> nc;
        for (int t = 0; t < f.rank; ++t)
            if (t != drop) nc.push_back(cone[t]);
        nc.push_back(new_ray);
        std::sort(nc.begin(), nc.end());
        g.max_cones.push_back(std::move(nc));
    }
    return g;
}

// Locate a maximal cone by its set of ray vectors (blow-ups renumber
// cones, so callers track cones by geometry, not by index).
inline std::optional<int> find_max_cone(const Fan& f,
                                        std::vector<std::vector<long long>> cone_rays) {
    std::sort(cone_rays.begin(), cone_rays.end());
    for (size_t ci = 0; ci < f.max_cones.size(); ++ci) {
        std::vector<std::vector<long long>> rays;
        for (int idx : f.max_cones[ci]) rays.push_back(f.rays[idx]);
        std::sort(rays.begin(), rays.end());
        if (rays == cone_rays) return static_cast<int>(ci);
    }
    return std::nullopt;
}

// Tangent characters at each fixed point: for the cone with ray basis
// v_1..v_n, the weights are the dual basis (rows of the inverse of the
// matrix with the rays as columns).
struct FixedPointWeights {
    std::vector<std::vector<std::vector<Integer>>> per_cone; // [cone][weight][coord]
};

inline FixedPointWeights fixed_point_weights(const Fan& f) {
    require_valid(f);
    const int n = f.rank;
    FixedPointWeights w;
    for (const auto& cone : f.max_cones) {
        RationalMatrix m(n, RationalVector(n, 0));
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r) m[r][c] = f.rays[cone[c]][r];
        auto inv = invert(std::move(m));
        if (!inv) throw InternalError("unimodular cone with singular ray matrix");
        std::vector<std::vector<Integer>> rows;
        for (int r = 0; r < n; ++r) {
            std::vector<Integer> row;
            for (int c = 0; c < n; ++c) {
                if (denominator((*inv)[r][c]) != 1)
                    throw InternalError("non-integral dual basis for unimodular cone");
                row.push_back(numerator((*inv)[r][c]));
            }
            rows.push_back(std::move(row));
        }
        w.per_cone.push_back(std::move(rows));
    }
    return w;
}

/* Chern data by summation over fixed points: pick a generic integer
 * point t, evaluate each fixed point's tangent weights on t, and sum
 * m_lambda(weight values) / prod(weight values) over the fixed points.
 * The sum is independent of t and integral; non-integrality signals a
 * broken fan and is surfaced as an internal error.
 */
inline ChernVector toric_chern_vector_at(const Fan& f, const std::vector<Integer>& point) {
    require_valid(f);
    const int n = f.rank;
    if (static_cast<int>(point.size()) != n)
        throw ValidationError("evaluation point has wrong length");
    const FixedPointWeights w = fixed_point_weights(f);
    const auto& m2e = m_to_e_matrix(n);
    const auto idx = partitions_of(n);

    std::vector<Rational> sums(idx.size(), 0);
    for (const auto& cone_weights : w.per_cone) {
        std::vector<Integer> values;
        Integer denom = 1;
        for (const auto& weight : cone_weights) {
            Integer v = 0;
            for (int c = 0; c < n; ++c) v += weight[c] * point[c];
            if (v == 0)
                throw ValidationError("evaluation point annihilates a weight");
            values.push_back(v);
            denom *= v;
        }
        // elementary symmetric values e_0..e_n of the weights
        std::vector<Integer> e(n + 1, 0);
        e[0] = 1;
        for (const Integer& v : values)
            for (int k = n; k >= 1; --k) e[k] += e[k - 1] * v;
        // m_lambda(values) through the m -> e change of basis
        for (size_t li = 0; li < idx.size(); ++li) {
            Integer m_val = 0;
            for (size_t mi = 0; mi < idx.size(); ++mi) {
                const Integer& coef = m2e.rows()[li][mi];
                if (coef == 0) continue;
                Integer prod = 1;
                for (int part : idx[mi].parts()) prod *= e[part];
                m_val += coef * prod;
            }
            if (m_val != 0) sums[li] += Rational(m_val) / Rational(denom);
        }
    }

    ChernVector v(n);
    for (size_t li = 0; li < idx.size(); ++li) {
        if (denominator(sums[li]) != 1)
            throw InternalError("localization sum is not integral (fan inconsistency)");
        v.set(idx[li], numerator(sums[li]));
    }
    return v;
}

inline ChernVector toric_chern_vector(const Fan& f) {
    require_valid(f);
    // Deterministic point sequence: a fixed-seed generator with a growing
    // range, rejecting points that annihilate some weight. The result is
    // point-independent, so any accepted point gives the same answer.
    std::mt19937_64 rng(0x636f626f7264ULL);
    for (int attempt = 0; attempt < 64; ++attempt) {
        const long long range = 16LL << (attempt / 8);
        std::vector<Integer> point;
        for (int c = 0; c < f.rank; ++c) {
            const long long raw = static_cast<long long>(rng() % (2 * range + 1));
            point.push_back(Integer(raw - range));
        }
        try {
            return toric_chern_vector_at(f, point);
        } catch (const ValidationError&) {
            continue; // non-generic point, retry
        }
    }
    throw InternalError("no generic evaluation point found after 64 attempts");
}

// ---------------------------------------------------------------------
// JSON file format, canonical writer (the reader accepts any layout):
// {"rank": n, "rays": [[..],..], "max_cones": [[..],..]}, 0-based.

inline std::string fan_to_json(const Fan& f) {
    nlohmann::ordered_json j;
    j["rank"] = f.rank;
    j["rays"] = f.rays;
    j["max_cones"] = f.max_cones;
    return j.dump(2) + "\n";
}

inline Fan fan_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad fan JSON: ") + e.what());
    }
    Fan f;
    try {
        f.rank = j.at("rank").get<int>();
        f.rays = j.at("rays").get<std::vector<std::vector<long long>>>();
        f.max_cones = j.at("max_cones").get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad fan JSON: ") + e.what());
    }
    return f;
}

} // namespace cobord

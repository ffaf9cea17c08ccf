#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "cobord/chern.hpp"
#include "cobord/toric.hpp"

namespace cobord {

// The building blocks a realization may use. BlowUpCP(n, k) is CP^n with
// k distinct torus-fixed points blown up; NamedToric wraps an arbitrary
// smooth complete fan supplied by the user.
struct CP {
    int n;
};
struct MilnorH {
    int i, j;
};
struct Sigma {
    int genus;
};
struct BlowUpCP {
    int n, k;
};
struct NamedToric {
    std::string name;
    Fan fan;
};

using GoodVariety = std::variant<CP, MilnorH, Sigma, BlowUpCP, NamedToric>;

enum class GeneratorMode { Strict, Relaxed };

inline void validate_variety(const GoodVariety& v, GeneratorMode mode = GeneratorMode::Relaxed) {
    if (const auto* cp = std::get_if<CP>(&v)) {
        if (cp->n < 1) throw ValidationError("CP(n) needs n >= 1");
    } else if (const auto* h = std::get_if<MilnorH>(&v)) {
        const int lo = mode == GeneratorMode::Strict ? 4 : 2;
        if (h->i < lo || h->j < h->i)
            throw ValidationError("H(i,j) needs " + std::to_string(lo) + " <= i <= j" +
                                  (mode == GeneratorMode::Strict ? " in strict mode" : ""));
    } else if (const auto* s = std::get_if<Sigma>(&v)) {
        if (s->genus <= 1) throw ValidationError("Sigma(g) needs genus g > 1");
    } else if (const auto* b = std::get_if<BlowUpCP>(&v)) {
        if (b->n < 1 || b->k < 1 || b->k > b->n + 1)
            throw ValidationError("BlCP(n,k) needs n >= 1 and 1 <= k <= n+1");
    } else if (const auto* t = std::get_if<NamedToric>(&v)) {
        require_valid(t->fan);
    }
}

inline int dimension(const GoodVariety& v) {
    if (const auto* cp = std::get_if<CP>(&v)) return cp->n;
    if (const auto* h = std::get_if<MilnorH>(&v)) return h->i + h->j - 1;
    if (std::get_if<Sigma>(&v)) return 1;
    if (const auto* b = std::get_if<BlowUpCP>(&v)) return b->n;
    return std::get<NamedToric>(v).fan.rank;
}

// Faithful torus rank each factor carries: full rank for toric pieces,
// i for H(i,j), nothing for a curve.
inline int torus_rank(const GoodVariety& v) {
    if (const auto* cp = std::get_if<CP>(&v)) return cp->n;
    if (const auto* h = std::get_if<MilnorH>(&v)) return h->i;
    if (std::get_if<Sigma>(&v)) return 0;
    if (const auto* b = std::get_if<BlowUpCP>(&v)) return b->n;
    return std::get<NamedToric>(v).fan.rank;
}

inline bool is_curve(const GoodVariety& v) { return std::holds_alternative<Sigma>(v); }

// H factors with i < 4 are allowed in relaxed mode only.
inline bool strict_ok(const GoodVariety& v) {
    if (const auto* h = std::get_if<MilnorH>(&v)) return h->i >= 4;
    return true;
}

inline std::string to_string(const GoodVariety& v) {
    if (const auto* cp = std::get_if<CP>(&v)) return "CP(" + std::to_string(cp->n) + ")";
    if (const auto* h = std::get_if<MilnorH>(&v))
        return "H(" + std::to_string(h->i) + "," + std::to_string(h->j) + ")";
    if (const auto* s = std::get_if<Sigma>(&v)) return "Sigma(" + std::to_string(s->genus) + ")";
    if (const auto* b = std::get_if<BlowUpCP>(&v))
        return "BlCP(" + std::to_string(b->n) + "," + std::to_string(b->k) + ")";
    return "Toric(" + std::get<NamedToric>(v).name + ")";
}

// Canonical factor order: descending dimension, then family, then
// parameters; makes products and realizations print deterministically.
inline std::tuple<int, int, int, int, std::string> variety_sort_key(const GoodVariety& v) {
    const int d = -dimension(v);
    if (const auto* cp = std::get_if<CP>(&v)) return {d, 0, cp->n, 0, ""};
    if (const auto* h = std::get_if<MilnorH>(&v)) return {d, 1, h->i, h->j, ""};
    if (const auto* s = std::get_if<Sigma>(&v)) return {d, 2, s->genus, 0, ""};
    if (const auto* b = std::get_if<BlowUpCP>(&v)) return {d, 3, b->n, b->k, ""};
    return {d, 4, 0, 0, std::get<NamedToric>(v).name};
}

inline bool variety_less(const GoodVariety& a, const GoodVariety& b) {
    return variety_sort_key(a) < variety_sort_key(b);
}

inline bool variety_equal(const GoodVariety& a, const GoodVariety& b) {
    return variety_sort_key(a) == variety_sort_key(b) && to_string(a) == to_string(b);
}

// The fan of CP^n with the first k maximal cones subdivided (processed in
// descending index order so each target is still an original cone).
inline Fan blown_up_projective_fan(int n, int k) {
    if (n < 1 || k < 0 || k > n + 1)
        throw ValidationError("blown_up_projective_fan needs n >= 1, 0 <= k <= n+1");
    Fan f = projective_space_fan(n);
    for (int c = k - 1; c >= 0; --c) f = blow_up(f, c);
    return f;
}

inline ChernVector chern_of(const GoodVariety& v) {
    validate_variety(v);
    if (const auto* cp = std::get_if<CP>(&v)) return cp_chern(cp->n);
    if (const auto* h = std::get_if<MilnorH>(&v)) return milnor_hypersurface_chern(h->i, h->j);
    if (const auto* s = std::get_if<Sigma>(&v)) return curve_chern(s->genus);
    if (const auto* b = std::get_if<BlowUpCP>(&v)) {
        static std::map<std::pair<int, int>, ChernVector> cache;
        static std::mutex mutex;
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({b->n, b->k});
        if (it != cache.end()) return it->second;
        ChernVector r = toric_chern_vector(blown_up_projective_fan(b->n, b->k));
        cache.emplace(std::make_pair(b->n, b->k), r);
        return r;
    }
    return toric_chern_vector(std::get<NamedToric>(v).fan);
}

// Ordered product of good varieties; kept sorted in canonical order.
struct GoodProduct {
    std::vector<GoodVariety> factors;

    GoodProduct() = default;
    explicit GoodProduct(std::vector<GoodVariety> fs) : factors(std::move(fs)) {
        std::sort(factors.begin(), factors.end(), variety_less);
    }
};

inline int dimension(const GoodProduct& p) {
    int d = 0;
    for (const auto& f : p.factors) d += dimension(f);
    return d;
}

inline int torus_rank(const GoodProduct& p) {
    int r = 0;
    for (const auto& f : p.factors) r += torus_rank(f);
    return r;
}

inline int curve_count(const GoodProduct& p) {
    int c = 0;
    for (const auto& f : p.factors) c += is_curve(f) ? 1 : 0;
    return c;
}

inline ChernVector chern_of(const GoodProduct& p) {
    ChernVector r = ChernVector::unit();
    for (const auto& f : p.factors) r = product(r, chern_of(f));
    return r;
}

inline std::string to_string(const GoodProduct& p) {
    if (p.factors.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < p.factors.size(); ++i) {
        if (i) s += " * ";
        s += to_string(p.factors[i]);
    }
    return s;
}

inline bool product_less(const GoodProduct& a, const GoodProduct& b) {
    const size_t n = std::min(a.factors.size(), b.factors.size());
    for (size_t i = 0; i < n; ++i) {
        if (variety_less(a.factors[i], b.factors[i])) return true;
        if (variety_less(b.factors[i], a.factors[i])) return false;
    }
    return a.factors.size() < b.factors.size();
}

inline bool product_equal(const GoodProduct& a, const GoodProduct& b) {
    if (a.factors.size() != b.factors.size()) return false;
    for (size_t i = 0; i < a.factors.size(); ++i)
        if (!variety_equal(a.factors[i], b.factors[i])) return false;
    return true;
}

// Parse "CP(2)", "H(4,5)", "Sigma(2)", "BlCP(2,3)".
inline GoodVariety parse_variety(const std::string& text) {
    const auto open = text.find('(');
    const auto close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ValidationError("bad variety '" + text + "'");
    const std::string name = text.substr(0, open);
    std::vector<int> args;
    std::string tok;
    std::stringstream in(text.substr(open + 1, close - open - 1));
    while (std::getline(in, tok, ',')) {
        try {
            args.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ValidationError("bad variety argument in '" + text + "'");
        }
    }
    GoodVariety v;
    if (name == "CP" && args.size() == 1) v = CP{args[0]};
    else if (name == "H" && args.size() == 2) v = MilnorH{args[0], args[1]};
    else if (name == "Sigma" && args.size() == 1) v = Sigma{args[0]};
    else if (name == "BlCP" && args.size() == 2) v = BlowUpCP{args[0], args[1]};
    else throw ValidationError("unknown variety '" + text + "'");
    validate_variety(v);
    return v;
}

} // namespace cobord

#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cobord/integer.hpp"
#include "cobord/partition.hpp"
#include "cobord/symfunc.hpp"

namespace cobord {

/* A cobordism class of complex dimension n, stored as its complete set of
 * characteristic numbers in the monomial-symmetric-function basis:
 * coefficient at lambda = evaluation of m_lambda in Chern roots on the
 * fundamental class. In this basis the product of manifolds is a
 * multiset-splitting convolution and the Milnor number s_n is the single
 * coordinate at lambda = (n).
 *
 * Dimension 0 is supported (a signed count of points, coordinate at the
 * empty partition) so the ring has a unit.
 */
class ChernVector {
public:
    explicit ChernVector(int dim) : dim_(dim) {
        if (dim < 0) throw ValidationError("class dimension must be >= 0");
    }

    static ChernVector zero(int dim) { return ChernVector(dim); }

    static ChernVector point(const Integer& count) {
        ChernVector v(0);
        v.set(Partition(), count);
        return v;
    }

    static ChernVector unit() { return point(1); }

    int dim() const noexcept { return dim_; }
    const std::map<Partition, Integer>& mcoords() const noexcept { return mcoords_; }
    bool is_zero() const noexcept { return mcoords_.empty(); }

    Integer coeff(const Partition& p) const {
        auto it = mcoords_.find(p);
        return it == mcoords_.end() ? Integer(0) : it->second;
    }

    void set(const Partition& p, const Integer& v) {
        if (p.weight() != dim_)
            throw DimensionMismatchError("partition weight " + std::to_string(p.weight()) +
                                         " does not match dimension " + std::to_string(dim_));
        if (v == 0) {
            mcoords_.erase(p);
        } else {
            mcoords_[p] = v;
        }
    }

    void add_to(const Partition& p, const Integer& v) {
        if (p.weight() != dim_)
            throw DimensionMismatchError("partition weight does not match dimension");
        Integer& slot = mcoords_[p];
        slot += v;
        if (slot == 0) mcoords_.erase(p);
    }

    bool operator==(const ChernVector& o) const {
        return dim_ == o.dim_ && mcoords_ == o.mcoords_;
    }
    bool operator!=(const ChernVector& o) const { return !(*this == o); }

private:
    int dim_;
    std::map<Partition, Integer> mcoords_; // keys of weight dim_, zeros absent
};

// Same data in the Chern-number basis: value at lambda is the Chern
// number c_{l1}...c_{lk}[M].
struct ChernNumberTable {
    int dim = 0;
    std::map<Partition, Integer> values;

    bool operator==(const ChernNumberTable& o) const {
        return dim == o.dim && values == o.values;
    }
};

inline ChernNumberTable to_table(const ChernVector& v) {
    // c_mu[M] = e_mu(roots)[M] = sum_rho E2M[mu][rho] * m_rho[M]
    ChernNumberTable t;
    t.dim = v.dim();
    t.values = e_to_m_matrix(v.dim()).apply(v.mcoords());
    return t;
}

inline ChernVector from_table(const ChernNumberTable& t) {
    ChernVector v(t.dim);
    for (const auto& [p, val] : t.values)
        if (p.weight() != t.dim)
            throw DimensionMismatchError("table key weight does not match dimension");
    for (const auto& [p, val] : m_to_e_matrix(t.dim).apply(t.values)) v.set(p, val);
    return v;
}

inline ChernVector add(const ChernVector& a, const ChernVector& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatchError("cannot add classes of dimension " +
                                     std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    ChernVector r = a;
    for (const auto& [p, v] : b.mcoords()) r.add_to(p, v);
    return r;
}

inline ChernVector scale(const Integer& k, const ChernVector& a) {
    ChernVector r(a.dim());
    if (k != 0)
        for (const auto& [p, v] : a.mcoords()) r.set(p, k * v);
    return r;
}

inline ChernVector subtract(const ChernVector& a, const ChernVector& b) {
    return add(a, scale(-1, b));
}

// Chern-root splitting: m_lambda(x + y alphabet) splits over distinct
// sub-multiset pairs, and only the pair with weights (dim a, dim b)
// survives integration, so the product is a convolution over key pairs.
inline ChernVector product(const ChernVector& a, const ChernVector& b) {
    ChernVector r(a.dim() + b.dim());
    for (const auto& [mu, ca] : a.mcoords())
        for (const auto& [nu, cb] : b.mcoords()) r.add_to(mu.merged(nu), ca * cb);
    return r;
}

inline Integer milnor_number(const ChernVector& v) {
    if (v.dim() < 1)
        throw ValidationError("Milnor number needs dimension >= 1");
    return v.coeff(Partition::single(v.dim()));
}

inline Integer chern_number(const ChernVector& v, const Partition& lambda) {
    if (lambda.weight() != v.dim())
        throw DimensionMismatchError("partition weight does not match class dimension");
    const auto t = to_table(v);
    auto it = t.values.find(lambda);
    return it == t.values.end() ? Integer(0) : it->second;
}

// CP^n: total Chern class (1+x)^{n+1}, i.e. n+1 equal Chern roots. The
// m-coordinate at lambda counts the arrangements of lambda's parts in
// n+1 slots; the Chern number at lambda is prod_i binom(n+1, lambda_i).
inline ChernVector cp_chern(int n) {
    if (n < 0) throw ValidationError("cp_chern: n must be >= 0");
    ChernVector v(n);
    if (n == 0) return ChernVector::unit();
    for (const Partition& lam : partitions_of(n)) {
        const int len = lam.length();
        if (len > n + 1) continue;
        Integer c = factorial(n + 1) / factorial(n + 1 - len);
        int run = 1;
        for (int i = 1; i <= len; ++i) {
            if (i < len && lam.parts()[i] == lam.parts()[i - 1]) {
                ++run;
            } else {
                c /= factorial(run);
                run = 1;
            }
        }
        v.set(lam, c);
    }
    return v;
}

// Genus-g curve: dimension 1, c_1 = 2 - 2g is the complete invariant.
inline ChernVector curve_chern(int g) {
    if (g < 0) throw ValidationError("curve_chern: genus must be >= 0");
    ChernVector v(1);
    v.set(Partition::single(1), Integer(2 - 2 * g));
    return v;
}

namespace detail {

// Dense bivariate polynomial in Z[x,y]/(x^{i+1}, y^{j+1}).
struct TruncPoly2 {
    int nx, ny; // kept degrees: 0..nx in x, 0..ny in y
    std::vector<std::vector<Integer>> c;

    TruncPoly2(int nx_, int ny_) : nx(nx_), ny(ny_), c(nx_ + 1, std::vector<Integer>(ny_ + 1, 0)) {}

    static TruncPoly2 constant(int nx, int ny, const Integer& k) {
        TruncPoly2 p(nx, ny);
        p.c[0][0] = k;
        return p;
    }

    TruncPoly2 times(const TruncPoly2& o) const {
        TruncPoly2 r(nx, ny);
        for (int a = 0; a <= nx; ++a)
            for (int b = 0; b <= ny; ++b) {
                if (c[a][b] == 0) continue;
                for (int a2 = 0; a + a2 <= nx; ++a2)
                    for (int b2 = 0; b + b2 <= ny; ++b2)
                        if (o.c[a2][b2] != 0) r.c[a + a2][b + b2] += c[a][b] * o.c[a2][b2];
            }
        return r;
    }

    TruncPoly2& accumulate(const TruncPoly2& o, const Integer& k) {
        for (int a = 0; a <= nx; ++a)
            for (int b = 0; b <= ny; ++b) c[a][b] += k * o.c[a][b];
        return *this;
    }

    // homogeneous piece of total degree k
    TruncPoly2 graded_part(int k) const {
        TruncPoly2 r(nx, ny);
        for (int a = 0; a <= nx; ++a)
            for (int b = 0; b <= ny; ++b)
                if (a + b == k) r.c[a][b] = c[a][b];
        return r;
    }
};

} // namespace detail

/* Milnor hypersurface H_{i,j}: the (1,1) hypersurface in CP^i x CP^j.
 * Chern data is computed in Z[x,y]/(x^{i+1}, y^{j+1}) from the total
 * class (1+x)^{i+1} (1+y)^{j+1} (1+x+y)^{-1}; integration over H takes
 * the coefficient of x^i y^j after multiplying by the hyperplane class
 * x + y.
 */
inline ChernVector milnor_hypersurface_chern(int i, int j) {
    if (i < 1 || j < i)
        throw ValidationError("milnor_hypersurface_chern needs 1 <= i <= j");
    const int n = i + j - 1;
    using detail::TruncPoly2;

    // (1+x)^{i+1} (1+y)^{j+1}
    TruncPoly2 factor(i, j);
    for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= j; ++b) factor.c[a][b] = binomial(i + 1, a) * binomial(j + 1, b);

    // (1 + x + y)^{-1} = sum (-1)^m (x+y)^m, truncated
    TruncPoly2 xy(i, j);
    if (i >= 1) xy.c[1][0] = 1;
    xy.c[0][1] = 1;
    TruncPoly2 inv = TruncPoly2::constant(i, j, 1);
    TruncPoly2 pw = TruncPoly2::constant(i, j, 1);
    for (int m = 1; m <= i + j; ++m) {
        pw = pw.times(xy);
        inv.accumulate(pw, (m % 2 == 0) ? Integer(1) : Integer(-1));
    }

    const TruncPoly2 total = factor.times(inv);
    std::vector<TruncPoly2> ck;
    ck.reserve(n + 1);
    for (int k = 0; k <= n; ++k) ck.push_back(total.graded_part(k));

    ChernNumberTable t;
    t.dim = n;
    for (const Partition& lam : partitions_of(n)) {
        TruncPoly2 prod = TruncPoly2::constant(i, j, 1);
        for (int part : lam.parts()) prod = prod.times(ck[part]);
        // coefficient of x^i y^j in prod * (x + y)
        Integer val = 0;
        if (i >= 1) val += prod.c[i - 1][j];
        if (j >= 1) val += prod.c[i][j - 1];
        if (val != 0) t.values[lam] = val;
    }
    return from_table(t);
}

// ---------------------------------------------------------------------
// Text format. First line "dim: n", then "basis: c" or "basis: m", then
// one line "lambda: value" per partition (canonical order; the writer
// emits every partition of n, the reader treats missing lines as zero).

inline std::string to_text(const ChernNumberTable& t) {
    std::ostringstream out;
    out << "dim: " << t.dim << "\n";
    out << "basis: c\n";
    for (const Partition& p : partitions_of(t.dim)) {
        auto it = t.values.find(p);
        out << p.to_string() << ": " << (it == t.values.end() ? Integer(0) : it->second) << "\n";
    }
    return out.str();
}

inline std::string to_text(const ChernVector& v, bool m_basis = false) {
    if (!m_basis) return to_text(to_table(v));
    std::ostringstream out;
    out << "dim: " << v.dim() << "\n";
    out << "basis: m\n";
    for (const Partition& p : partitions_of(v.dim()))
        out << p.to_string() << ": " << v.coeff(p) << "\n";
    return out.str();
}

inline ChernVector chern_vector_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int dim = -1;
    bool m_basis = false;
    std::map<Partition, Integer> values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ValidationError("bad class file line: '" + line + "'");
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
            dim = std::stoi(val);
        } else if (key == "basis") {
            if (val == "m") m_basis = true;
            else if (val == "c") m_basis = false;
            else throw ValidationError("unknown basis '" + val + "'");
        } else {
            if (dim < 0) throw ValidationError("class file must start with 'dim: n'");
            Integer v(val);
            if (v != 0) values[Partition::parse(key)] = v;
        }
    }
    if (dim < 0) throw ValidationError("class file must contain 'dim: n'");
    if (m_basis) {
        ChernVector v(dim);
        for (const auto& [p, val] : values) v.set(p, val);
        return v;
    }
    ChernNumberTable t;
    t.dim = dim;
    for (const auto& [p, val] : values) {
        if (p.weight() != dim)
            throw DimensionMismatchError("table key weight does not match dimension");
        t.values[p] = val;
    }
    return from_table(t);
}

} // namespace cobord

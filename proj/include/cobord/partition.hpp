#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cobord/errors.hpp"

namespace cobord {

/* Weakly decreasing sequence of positive integers. Partitions index
 * Chern-number monomials (c_{l1}...c_{lk}) and generator monomials.
 * The empty partition (weight 0) indexes the degree-0 unit.
 *
 * Canonical total order, used for every matrix, map and file format:
 * smaller weight first, then lexicographically decreasing part
 * sequences, so the partitions of n run
 *   (n), (n-1,1), ..., (2,1,...,1), (1,...,1).
 */
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        for (int p : parts_) {
            if (p <= 0) throw ValidationError("partition parts must be positive");
            weight_ += p;
        }
    }

    static Partition single(int n) { return Partition(std::vector<int>{n}); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    bool operator==(const Partition& o) const noexcept { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const noexcept { return !(*this == o); }

    bool operator<(const Partition& o) const noexcept {
        if (weight_ != o.weight_) return weight_ < o.weight_;
        return parts_ > o.parts_;
    }

    // Multiset union, e.g. (2,1) merged with (3,1) = (3,2,1,1).
    Partition merged(const Partition& o) const {
        std::vector<int> all;
        all.reserve(parts_.size() + o.parts_.size());
        all.insert(all.end(), parts_.begin(), parts_.end());
        all.insert(all.end(), o.parts_.begin(), o.parts_.end());
        return Partition(std::move(all));
    }

    // Text form "2,1,1"; the empty partition prints as "".
    std::string to_string() const {
        std::string s;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::string tok;
        std::stringstream in(text);
        while (std::getline(in, tok, ',')) {
            size_t a = tok.find_first_not_of(" \t");
            if (a == std::string::npos) continue;
            size_t b = tok.find_last_not_of(" \t");
            tok = tok.substr(a, b - a + 1);
            try {
                size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                parts.push_back(v);
            } catch (const std::exception&) {
                throw ValidationError("bad partition part '" + tok + "'");
            }
        }
        return Partition(std::move(parts));
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of n in canonical order. n = 0 gives { () }.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw ValidationError("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> gen = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(max_part, remaining); p >= 1; --p) {
            cur.push_back(p);
            gen(remaining - p, p);
            cur.pop_back();
        }
    };
    gen(n, n);
    if (n == 0) out.assign(1, Partition());
    return out;
}

} // namespace cobord

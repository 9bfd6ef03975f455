#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exact_scalar.hpp"
#include "order_condition.hpp"

namespace ietlang {

// A substitution on letters; used for generating fixed-point words and for
// the substitutive tails of non-recurrent sequences.
struct Substitution {
    std::map<char, std::string> rules;

    std::string apply(const std::string& w) const {
        std::string out;
        for (char c : w) {
            auto it = rules.find(c);
            if (it == rules.end()) fail(errc::invalid_argument, std::string("no rule for letter '") + c + "'");
            out += it->second;
        }
        return out;
    }

    std::vector<char> letters() const {
        std::vector<char> out;
        for (const auto& [c, _] : rules) out.push_back(c);
        return out;
    }

    // Incidence matrix M[i][j] = occurrences of letter i in rules[letter j].
    std::vector<std::vector<long long>> incidence() const {
        auto ls = letters();
        std::map<char, size_t> idx;
        for (size_t i = 0; i < ls.size(); ++i) idx[ls[i]] = i;
        std::vector<std::vector<long long>> m(ls.size(), std::vector<long long>(ls.size(), 0));
        for (size_t j = 0; j < ls.size(); ++j)
            for (char c : rules.at(ls[j])) ++m[idx.at(c)][j];
        return m;
    }

    bool primitive() const {
        auto m = incidence();
        size_t k = m.size();
        // Some power up to (k-1)^2 + 1 must be strictly positive.
        std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) reach[i][j] = m[i][j] > 0;
        size_t steps = (k - 1) * (k - 1) + 1;
        auto cur = reach;
        for (size_t s = 1; s <= steps; ++s) {
            bool all = true;
            for (size_t i = 0; i < k && all; ++i)
                for (size_t j = 0; j < k && all; ++j) all = cur[i][j];
            if (all) return true;
            std::vector<std::vector<bool>> next(k, std::vector<bool>(k, false));
            for (size_t i = 0; i < k; ++i)
                for (size_t l = 0; l < k; ++l)
                    if (cur[i][l])
                        for (size_t j = 0; j < k; ++j)
                            if (reach[l][j]) next[i][j] = true;
            cur = next;
        }
        return false;
    }
};

// Prefix of the one-sided fixed point sigma^inf(seed); requires the rule for
// the seed to start with the seed.
inline std::string fixed_point_prefix(const Substitution& sub, char seed, size_t min_len) {
    const std::string& r = sub.rules.at(seed);
    if (r.empty() || r[0] != seed) fail(errc::invalid_argument, "seed rule must start with the seed letter");
    std::string w(1, seed);
    while (w.size() < min_len) {
        std::string next = sub.apply(w);
        if (next.size() == w.size()) fail(errc::invalid_argument, "substitution does not grow from the seed");
        w = std::move(next);
    }
    return w.substr(0, min_len);
}

inline Substitution fibonacci_substitution() { return Substitution{{{'1', "12"}, {'2', "1"}}}; }

// Exact letter frequencies of the fixed point of a primitive two-letter
// substitution: the normalized Perron eigenvector, living in a quadratic
// field when the Perron root is irrational.
inline std::map<char, ExactScalar> perron_frequencies(const Substitution& sub) {
    auto ls = sub.letters();
    if (ls.size() != 2)
        fail(errc::invalid_argument, "exact Perron frequencies are built in for two-letter substitutions only");
    if (!sub.primitive()) fail(errc::invalid_argument, "substitution must be primitive");
    auto m = sub.incidence();
    long long tr = m[0][0] + m[1][1];
    long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    BigInt disc = BigInt(tr) * tr - 4 * BigInt(det);
    if (disc < 0) fail(errc::invalid_argument, "complex Perron data");
    auto [sq, rest] = square_free_split(disc);
    // lambda = (tr + sqrt(disc)) / 2 = tr/2 + (sq/2) sqrt(rest)
    ExactScalar lambda = rest == 1 ? ExactScalar(Rational(tr, 2) + Rational(sq, 2))
                                   : ExactScalar(Rational(tr, 2), Rational(sq, 2), rest.convert_to<std::int64_t>());
    // Eigenvector of M for lambda.
    ExactScalar v0, v1;
    if (m[0][1] != 0) {
        v0 = ExactScalar(static_cast<long long>(m[0][1]));
        v1 = lambda - ExactScalar(static_cast<long long>(m[0][0]));
    } else if (m[1][0] != 0) {
        v0 = lambda - ExactScalar(static_cast<long long>(m[1][1]));
        v1 = ExactScalar(static_cast<long long>(m[1][0]));
    } else {
        fail(errc::invalid_argument, "reducible incidence matrix");
    }
    ExactScalar total = v0 + v1;
    return {{ls[0], v0 / total}, {ls[1], v1 / total}};
}

// ---------------------------------------------------------------------------
// Tails of non-recurrent sequences

// Finite description of one tail of a bi-infinite sequence. Letters are
// stored in OUTWARD order: index k is the k-th letter moving away from the
// middle word (so a left tail reads right-to-left in the sequence).
struct TailDescriptor {
    enum class Kind { Periodic, Substitutive } kind = Kind::Periodic;
    std::string period;  // outward repetition, nonempty for Periodic
    Substitution sub;    // outward fixed point, for Substitutive
    char seed = 0;
    std::optional<std::map<char, ExactScalar>> frequency_override;

    static TailDescriptor periodic(std::string v) {
        TailDescriptor t;
        t.kind = Kind::Periodic;
        t.period = std::move(v);
        return t;
    }
    static TailDescriptor substitutive(Substitution s, char seed) {
        TailDescriptor t;
        t.kind = Kind::Substitutive;
        t.sub = std::move(s);
        t.seed = seed;
        return t;
    }

    std::string letters_outward(size_t n) const {
        if (kind == Kind::Periodic) {
            if (period.empty()) fail(errc::invalid_argument, "empty periodic tail");
            std::string out;
            while (out.size() < n) out += period;
            return out.substr(0, n);
        }
        return fixed_point_prefix(sub, seed, n);
    }

    // Exact letter frequencies: counting for periodic tails, Perron data for
    // substitutive ones (two-letter built-ins; otherwise supply an override).
    std::map<char, ExactScalar> frequencies() const {
        if (frequency_override) return *frequency_override;
        if (kind == Kind::Periodic) {
            std::map<char, long long> counts;
            for (char c : period) ++counts[c];
            std::map<char, ExactScalar> out;
            for (const auto& [c, k] : counts) out[c] = ExactScalar(Rational(k, static_cast<long long>(period.size())));
            return out;
        }
        return perron_frequencies(sub);
    }
};

// Finite description of a non-recurrent bi-infinite sequence: two tails and a
// middle word. Index 0 is the first letter of the middle word (or the first
// letter of the right tail when the middle is empty).
struct NonRecurrentSeq {
    TailDescriptor left;
    std::string middle;
    TailDescriptor right;

    char letter_at(long long i) const {
        long long mid = static_cast<long long>(middle.size());
        if (i < 0) return left.letters_outward(static_cast<size_t>(-i))[static_cast<size_t>(-i) - 1];
        if (i < mid) return middle[static_cast<size_t>(i)];
        return right.letters_outward(static_cast<size_t>(i - mid) + 1)[static_cast<size_t>(i - mid)];
    }

    TwoSidedWord window(int n_back, int n_fwd) const {  // indices [-n_back, n_fwd)
        std::string w;
        for (long long i = -n_back; i < n_fwd; ++i) w += letter_at(i);
        return {w, n_back};
    }
};

}  // namespace ietlang

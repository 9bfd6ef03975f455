#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "language.hpp"

namespace ietlang {

// A pair of total orders on the alphabet plus the flip set. order_a / order_d
// list the letters in increasing <_A / <_D order.
struct OrderSpec {
    std::vector<char> order_a;
    std::vector<char> order_d;
    std::set<char> flips;

    bool flipped(char c) const { return flips.count(c) > 0; }

    // Parity of flip letters in w decides whether the departure order at the
    // bispecial w is <_D or its reverse.
    bool odd_parity(const std::string& w) const {
        size_t n = 0;
        for (char c : w)
            if (flipped(c)) ++n;
        return n % 2 == 1;
    }

    std::map<char, int> rank_a() const {
        std::map<char, int> r;
        for (size_t i = 0; i < order_a.size(); ++i) r[order_a[i]] = static_cast<int>(i);
        return r;
    }
    std::map<char, int> rank_d(bool reversed = false) const {
        std::map<char, int> r;
        int n = static_cast<int>(order_d.size());
        for (int i = 0; i < n; ++i) r[order_d[static_cast<size_t>(i)]] = reversed ? n - 1 - i : i;
        return r;
    }

    OrderSpec double_reversed() const {
        OrderSpec s = *this;
        std::reverse(s.order_a.begin(), s.order_a.end());
        std::reverse(s.order_d.begin(), s.order_d.end());
        return s;
    }

    std::string str() const {
        auto join = [](const std::vector<char>& v) { return std::string(v.begin(), v.end()); };
        std::string f(flips.begin(), flips.end());
        return "D:" + join(order_d) + " A:" + join(order_a) + " F:{" + f + "}";
    }

    friend bool operator==(const OrderSpec& x, const OrderSpec& y) {
        return x.order_a == y.order_a && x.order_d == y.order_d && x.flips == y.flips;
    }
    friend bool operator<(const OrderSpec& x, const OrderSpec& y) {
        if (x.order_d != y.order_d) return x.order_d < y.order_d;
        if (x.order_a != y.order_a) return x.order_a < y.order_a;
        return x.flips < y.flips;
    }
};

// ---------------------------------------------------------------------------
// Order condition check

struct OrderCounterexample {
    std::string word;  // the offending bispecial
    char a, b, c, d;   // awc and bwd in L with a<_A b but not c<_{D,w} d
};

struct OrderCheckResult {
    bool holds = false;
    std::optional<OrderCounterexample> counterexample;
};

// Definition of the F-flipped order condition: for every bispecial w and all
// awc, bwd in L with a != b and c != d, a <_A b iff c <_{D,w} d where <_{D,w}
// is <_D reversed when w has odd flip parity.
inline OrderCheckResult check_order_condition(const FiniteLanguage& L, const OrderSpec& spec) {
    auto ra = spec.rank_a();
    auto bis = classify_bispecials(L);
    for (const auto& rep : bis) {
        auto rd = spec.rank_d(spec.odd_parity(rep.word));
        for (const auto& [a, c] : rep.pairs)
            for (const auto& [b, d] : rep.pairs) {
                if (a == b || c == d) continue;
                if ((ra.at(a) < ra.at(b)) != (rd.at(c) < rd.at(d)))
                    return {false, OrderCounterexample{rep.word, a, b, c, d}};
            }
    }
    return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Exhaustive search over order specs

namespace detail {

// All linear extensions of the constraint digraph, appended to `out` as
// letter sequences. Constraints are pairs (x before y).
inline void linear_extensions(std::vector<char> letters, const std::set<std::pair<char, char>>& before,
                              std::vector<char>& acc, std::vector<std::vector<char>>& out) {
    if (letters.empty()) {
        out.push_back(acc);
        return;
    }
    for (size_t i = 0; i < letters.size(); ++i) {
        char c = letters[i];
        bool minimal = true;
        for (char other : letters)
            if (other != c && before.count({other, c})) {
                minimal = false;
                break;
            }
        if (!minimal) continue;
        acc.push_back(c);
        std::vector<char> rest = letters;
        rest.erase(rest.begin() + static_cast<long>(i));
        linear_extensions(rest, before, acc, out);
        acc.pop_back();
    }
}

}  // namespace detail

// All order specs under which the condition holds, one canonical
// representative per {spec, double-reversal} class, for each candidate flip
// set. The representative is the one whose order_d is lexicographically
// least (ties broken by order_a).
inline std::vector<OrderSpec> search_orders(const FiniteLanguage& L, const std::vector<std::set<char>>& flip_sets) {
    if (L.alphabet().size() > 8) fail(errc::alphabet_too_large, "order search limited to alphabets of size <= 8");
    auto bis = classify_bispecials(L);
    // A flip letter that occurs in no bispecial word never changes a parity,
    // so it cannot influence the condition; reported flip sets are reduced to
    // the letters that do occur in some bispecial.
    std::set<char> active;
    for (const auto& rep : bis) active.insert(rep.word.begin(), rep.word.end());
    std::set<OrderSpec> found;
    for (const auto& raw_flips : flip_sets) {
        std::set<char> flips;
        for (char c : raw_flips)
            if (active.count(c)) flips.insert(c);
        std::vector<char> perm = L.alphabet();
        std::sort(perm.begin(), perm.end());
        do {  // perm = candidate order_a
            OrderSpec base;
            base.order_a = perm;
            base.flips = flips;
            auto ra = base.rank_a();
            // Forced <_D constraints implied by the candidate <_A.
            std::set<std::pair<char, char>> before;
            bool contradiction = false;
            for (const auto& rep : bis) {
                bool odd = base.odd_parity(rep.word);
                for (const auto& [a, c] : rep.pairs)
                    for (const auto& [b, d] : rep.pairs) {
                        if (a == b || c == d) continue;
                        bool a_before = ra.at(a) < ra.at(b);
                        // a <_A b forces c <_{D,w} d.
                        char lo = a_before ? c : d, hi = a_before ? d : c;
                        if (odd) std::swap(lo, hi);
                        if (before.count({hi, lo})) {
                            contradiction = true;
                            break;
                        }
                        before.emplace(lo, hi);
                    }
                if (contradiction) break;
            }
            if (contradiction) continue;
            std::vector<std::vector<char>> candidates;
            std::vector<char> acc;
            detail::linear_extensions(L.alphabet(), before, acc, candidates);
            for (auto& od : candidates) {
                OrderSpec spec = base;
                spec.order_d = od;
                if (!check_order_condition(L, spec).holds) continue;
                OrderSpec rev = spec.double_reversed();
                found.insert(std::min(spec, rev));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Connections

// At a bispecial w: letters a, a' consecutive in A(w) under <_A and b, b'
// consecutive in D(w) under <_{D,w} with awb, a'wb' present and the cross
// words absent — the combinatorial trace of an orbit hitting a discontinuity.
struct ConnectionWitness {
    std::string word;
    char a, a_next;
    char b, b_next;
    bool bits[4];  // membership of awb, awb', a'wb, a'wb'
};

struct ConnectionScan {
    std::vector<ConnectionWitness> witnesses;
    bool spec_holds = true;  // results carry a warning when the spec fails
};

inline ConnectionScan find_connections(const FiniteLanguage& L, const OrderSpec& spec) {
    ConnectionScan scan;
    scan.spec_holds = check_order_condition(L, spec).holds;
    auto ra = spec.rank_a();
    for (const auto& rep : classify_bispecials(L)) {
        auto rd = spec.rank_d(spec.odd_parity(rep.word));
        std::vector<char> A = rep.arrivals, D = rep.departures;
        std::sort(A.begin(), A.end(), [&](char x, char y) { return ra.at(x) < ra.at(y); });
        std::sort(D.begin(), D.end(), [&](char x, char y) { return rd.at(x) < rd.at(y); });
        auto has = [&](char a, char b) { return L.contains(a + rep.word + b); };
        for (size_t i = 0; i + 1 < A.size(); ++i)
            for (size_t j = 0; j + 1 < D.size(); ++j) {
                char a = A[i], a2 = A[i + 1], b = D[j], b2 = D[j + 1];
                if (has(a, b) && has(a2, b2) && !has(a, b2) && !has(a2, b))
                    scan.witnesses.push_back({rep.word, a, a2, b, b2, {has(a, b), has(a, b2), has(a2, b), has(a2, b2)}});
            }
    }
    return scan;
}

// ---------------------------------------------------------------------------
// Order on two-sided sequences (windows)

enum class SeqOrder { Less, Greater, Equal, Unresolved };

inline const char* to_string(SeqOrder o) {
    switch (o) {
        case SeqOrder::Less: return "Less";
        case SeqOrder::Greater: return "Greater";
        case SeqOrder::Equal: return "Equal";
        case SeqOrder::Unresolved: return "Unresolved";
    }
    return "?";
}

// A finite window of a two-sided sequence: letters at indices
// [-zero, size - zero).
struct TwoSidedWord {
    std::string letters;
    int zero = 0;

    int lo() const { return -zero; }
    int hi() const { return static_cast<int>(letters.size()) - zero; }
    char at(int i) const { return letters[static_cast<size_t>(i + zero)]; }
    std::string range(int from, int to) const {  // [from, to)
        return letters.substr(static_cast<size_t>(from + zero), static_cast<size_t>(to - from));
    }
};

// Decides the order of two sequences from aligned windows: first forward
// discrepancy compared in <_D (reversed by the flip parity of the shared
// prefix), first backward discrepancy in <_A (reversed by the parity of the
// shared suffix). Identical windows resolve to Equal only when the caller
// asserts the windows determine the sequences completely (e.g. they cover
// full periods of eventually periodic data); otherwise they are Unresolved.
inline SeqOrder sequence_order(const OrderSpec& spec, const TwoSidedWord& x, const TwoSidedWord& y,
                               bool complete_windows = false) {
    if (x.lo() != y.lo() || x.hi() != y.hi())
        fail(errc::misaligned_windows, "windows must cover identical index ranges");
    auto rd = spec.rank_d();
    auto ra = spec.rank_a();
    std::optional<SeqOrder> forward, backward;
    for (int i = 0; i < x.hi(); ++i)
        if (x.at(i) != y.at(i)) {
            bool odd = i > 0 && spec.odd_parity(x.range(0, i));
            bool less = rd.at(x.at(i)) < rd.at(y.at(i));
            forward = (less != odd) ? SeqOrder::Less : SeqOrder::Greater;
            break;
        }
    for (int i = -1; i >= x.lo(); --i)
        if (x.at(i) != y.at(i)) {
            bool odd = i < -1 && spec.odd_parity(x.range(i + 1, 0));
            bool less = ra.at(x.at(i)) < ra.at(y.at(i));
            backward = (less != odd) ? SeqOrder::Less : SeqOrder::Greater;
            break;
        }
    if (forward && backward && *forward != *backward)
        fail(errc::invalid_argument, "windows violate the order condition: sides disagree");
    if (forward) return *forward;
    if (backward) return *backward;
    return complete_windows ? SeqOrder::Equal : SeqOrder::Unresolved;
}

}  // namespace ietlang

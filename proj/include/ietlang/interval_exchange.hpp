#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "exact_scalar.hpp"
#include "order_condition.hpp"

namespace ietlang {

enum class IetKind { Standard, Affine, LazyGeneralized };

inline const char* to_string(IetKind k) {
    switch (k) {
        case IetKind::Standard: return "standard";
        case IetKind::Affine: return "affine";
        case IetKind::LazyGeneralized: return "lazy";
    }
    return "?";
}

enum class Direction { Forward, Backward };

// An interval exchange transformation on (0, total): defining intervals I_e
// laid out by order_d, image intervals TI_e by order_a, slope on I_e equal to
// +/- imageLength/length with the sign given by the flip set. Immutable once
// built.
class IntervalExchange {
public:
    struct Spec {
        std::vector<char> alphabet;
        std::vector<ExactScalar> lengths;        // by alphabet index
        std::vector<ExactScalar> image_lengths;  // by alphabet index; empty means = lengths
        std::vector<char> order_d;               // letters left-to-right in the domain
        std::vector<char> order_a;               // letters left-to-right in the image
        std::set<char> flips;
        IetKind kind = IetKind::Standard;
    };

    static IntervalExchange build(Spec spec) {
        IntervalExchange t;
        t.alphabet_ = spec.alphabet;
        size_t k = t.alphabet_.size();
        if (k == 0) fail(errc::invalid_argument, "empty alphabet");
        for (size_t i = 0; i < k; ++i) t.index_[t.alphabet_[i]] = static_cast<int>(i);
        if (spec.lengths.size() != k) fail(errc::invalid_argument, "need one length per letter");
        if (spec.image_lengths.empty()) spec.image_lengths = spec.lengths;
        if (spec.image_lengths.size() != k) fail(errc::invalid_argument, "need one image length per letter");
        t.lengths_ = spec.lengths;
        t.image_lengths_ = spec.image_lengths;
        t.kind_ = spec.kind;
        t.flipped_.assign(k, false);
        for (char c : spec.flips) t.flipped_[static_cast<size_t>(t.index_of(c))] = true;
        t.order_d_ = t.permutation_of(spec.order_d, "orderD");
        t.order_a_ = t.permutation_of(spec.order_a, "orderA");

        ExactScalar sum_d, sum_a;
        for (size_t i = 0; i < k; ++i) {
            if (t.lengths_[i].sign() <= 0 || t.image_lengths_[i].sign() <= 0)
                fail(errc::empty_interval, std::string("interval for '") + t.alphabet_[i] + "' must have positive length");
            if (spec.kind == IetKind::Standard && !(t.lengths_[i] == t.image_lengths_[i]))
                fail(errc::standard_slope_violation,
                     std::string("standard kind requires |TI| = |I| for '") + t.alphabet_[i] + "'");
            sum_d += t.lengths_[i];
            sum_a += t.image_lengths_[i];
        }
        if (!(sum_d == sum_a))
            fail(errc::length_mismatch, "domain length " + sum_d.str() + " != image length " + sum_a.str());
        t.total_ = sum_d;

        t.left_d_.resize(k);
        t.left_a_.resize(k);
        ExactScalar acc;
        for (int pos : t.order_d_) {
            t.left_d_[static_cast<size_t>(pos)] = acc;
            acc += t.lengths_[static_cast<size_t>(pos)];
        }
        acc = ExactScalar();
        for (int pos : t.order_a_) {
            t.left_a_[static_cast<size_t>(pos)] = acc;
            acc += t.image_lengths_[static_cast<size_t>(pos)];
        }
        return t;
    }

    const std::vector<char>& alphabet() const { return alphabet_; }
    size_t letter_count() const { return alphabet_.size(); }
    IetKind kind() const { return kind_; }
    const ExactScalar& total() const { return total_; }
    char letter(int i) const { return alphabet_[static_cast<size_t>(i)]; }
    int index_of(char c) const {
        auto it = index_.find(c);
        if (it == index_.end()) fail(errc::invalid_argument, std::string("unknown letter '") + c + "'");
        return it->second;
    }
    bool flipped(int i) const { return flipped_[static_cast<size_t>(i)]; }
    const ExactScalar& length(int i) const { return lengths_[static_cast<size_t>(i)]; }
    const ExactScalar& image_length(int i) const { return image_lengths_[static_cast<size_t>(i)]; }
    const ExactScalar& domain_left(int i) const { return left_d_[static_cast<size_t>(i)]; }
    const ExactScalar& image_left(int i) const { return left_a_[static_cast<size_t>(i)]; }
    ExactScalar domain_right(int i) const { return left_d_[static_cast<size_t>(i)] + lengths_[static_cast<size_t>(i)]; }
    ExactScalar image_right(int i) const {
        return left_a_[static_cast<size_t>(i)] + image_lengths_[static_cast<size_t>(i)];
    }
    const std::vector<int>& order_d() const { return order_d_; }
    const std::vector<int>& order_a() const { return order_a_; }
    ExactScalar slope_magnitude(int i) const { return image_lengths_[static_cast<size_t>(i)] / lengths_[static_cast<size_t>(i)]; }

    // The orders and flips the transformation defines on its alphabet.
    OrderSpec order_spec() const {
        OrderSpec s;
        for (int pos : order_d_) s.order_d.push_back(alphabet_[static_cast<size_t>(pos)]);
        for (int pos : order_a_) s.order_a.push_back(alphabet_[static_cast<size_t>(pos)]);
        for (size_t i = 0; i < alphabet_.size(); ++i)
            if (flipped_[i]) s.flips.insert(alphabet_[i]);
        return s;
    }

    // Letter of the defining interval containing x, or nullopt at an
    // endpoint / outside the open domain.
    std::optional<int> letter_at(const ExactScalar& x) const {
        for (size_t i = 0; i < alphabet_.size(); ++i)
            if (left_d_[i] < x && x < domain_right(static_cast<int>(i))) return static_cast<int>(i);
        return std::nullopt;
    }
    std::optional<int> image_letter_at(const ExactScalar& x) const {
        for (size_t i = 0; i < alphabet_.size(); ++i)
            if (left_a_[i] < x && x < image_right(static_cast<int>(i))) return static_cast<int>(i);
        return std::nullopt;
    }

    ExactScalar map_forward(int e, const ExactScalar& x) const {  // x in closure of I_e
        size_t i = static_cast<size_t>(e);
        ExactScalar offset = (x - left_d_[i]) * slope_magnitude(e);
        if (flipped_[i]) return image_right(e) - offset;
        return left_a_[i] + offset;
    }
    ExactScalar map_backward(int e, const ExactScalar& y) const {  // y in closure of TI_e
        size_t i = static_cast<size_t>(e);
        ExactScalar offset = flipped_[i] ? image_right(e) - y : y - left_a_[i];
        return left_d_[i] + offset / slope_magnitude(e);
    }

    // Exact image of a point; Undefined (nullopt) exactly at the finitely
    // many endpoints. Throws OutOfDomain outside (0, total).
    std::optional<ExactScalar> apply(const ExactScalar& x, Direction dir = Direction::Forward) const {
        if (!(ExactScalar(0) < x) || !(x < total_)) fail(errc::out_of_domain, "point " + x.str() + " outside (0, M)");
        if (dir == Direction::Forward) {
            auto e = letter_at(x);
            if (!e) return std::nullopt;
            return map_forward(*e, x);
        }
        auto e = image_letter_at(x);
        if (!e) return std::nullopt;
        return map_backward(*e, x);
    }

private:
    std::vector<int> permutation_of(const std::vector<char>& letters, const std::string& which) const {
        if (letters.size() != alphabet_.size()) fail(errc::invalid_argument, which + " must list every letter once");
        std::vector<int> perm;
        std::vector<bool> seen(alphabet_.size(), false);
        for (char c : letters) {
            int i = index_of(c);
            if (seen[static_cast<size_t>(i)]) fail(errc::invalid_argument, which + " repeats a letter");
            seen[static_cast<size_t>(i)] = true;
            perm.push_back(i);
        }
        return perm;
    }

    std::vector<char> alphabet_;
    std::map<char, int> index_;
    std::vector<ExactScalar> lengths_, image_lengths_;
    std::vector<ExactScalar> left_d_, left_a_;
    std::vector<int> order_d_, order_a_;
    std::vector<bool> flipped_;
    IetKind kind_ = IetKind::Standard;
    ExactScalar total_;
};

// ---------------------------------------------------------------------------
// Natural coding

// Letters of the trajectory of x for indices in [-n_back, n_fwd); iteration
// stops early when an undefined point is hit, and the report says where.
struct CodingResult {
    TwoSidedWord word;                      // indices actually produced
    std::optional<int> truncated_backward;  // first undefined backward index
    std::optional<int> truncated_forward;   // first undefined forward index
};

inline CodingResult natural_coding(const IntervalExchange& T, const ExactScalar& x, int n_back, int n_fwd) {
    CodingResult out;
    std::string fwd, bwd;
    ExactScalar p = x;
    for (int n = 0; n < n_fwd; ++n) {
        auto e = T.letter_at(p);
        if (!e) {
            out.truncated_forward = n;
            break;
        }
        fwd += T.letter(*e);
        if (n + 1 < n_fwd) {
            auto next = T.apply(p, Direction::Forward);
            if (!next) {
                out.truncated_forward = n + 1;
                break;
            }
            p = *next;
        }
    }
    p = x;
    for (int n = -1; n >= -n_back; --n) {
        auto prev = T.apply(p, Direction::Backward);
        if (!prev) {
            out.truncated_backward = n;
            break;
        }
        p = *prev;
        auto e = T.letter_at(p);
        if (!e) {
            out.truncated_backward = n;
            break;
        }
        bwd += T.letter(*e);
    }
    std::reverse(bwd.begin(), bwd.end());
    out.word.letters = bwd + fwd;
    out.word.zero = static_cast<int>(bwd.size());
    return out;
}

// ---------------------------------------------------------------------------
// Grouped codings

// Merging of adjacent defining intervals whose images are adjacent, in the
// same relative order, and identically flipped: the coding by the merged
// intervals is still the coding of a continuous monotone piecewise map.
struct CodingScheme {
    std::vector<char> grouped_alphabet;
    std::vector<std::vector<int>> members;  // base letter indices per group, in domain order
    std::map<int, int> group_of;            // base letter index -> group index

    bool identity() const {
        for (const auto& g : members)
            if (g.size() != 1) return false;
        return true;
    }
};

inline CodingScheme grouped_coding_map(const IntervalExchange& T,
                                       const std::vector<std::pair<char, std::string>>& groups) {
    CodingScheme scheme;
    std::vector<bool> used(T.letter_count(), false);
    std::vector<int> pos_d(T.letter_count()), pos_a(T.letter_count());
    for (size_t p = 0; p < T.order_d().size(); ++p) pos_d[static_cast<size_t>(T.order_d()[p])] = static_cast<int>(p);
    for (size_t p = 0; p < T.order_a().size(); ++p) pos_a[static_cast<size_t>(T.order_a()[p])] = static_cast<int>(p);

    for (const auto& [label, letters] : groups) {
        if (letters.empty()) fail(errc::invalid_argument, "empty group");
        std::vector<int> mem;
        for (char c : letters) {
            int i = T.index_of(c);
            if (used[static_cast<size_t>(i)]) fail(errc::invalid_argument, "groups must partition the alphabet");
            used[static_cast<size_t>(i)] = true;
            mem.push_back(i);
        }
        std::sort(mem.begin(), mem.end(), [&](int x, int y) { return pos_d[static_cast<size_t>(x)] < pos_d[static_cast<size_t>(y)]; });
        for (size_t j = 0; j + 1 < mem.size(); ++j)
            if (pos_d[static_cast<size_t>(mem[j + 1])] != pos_d[static_cast<size_t>(mem[j])] + 1)
                fail(errc::non_contiguous_group, std::string("group '") + label + "' is not contiguous in the domain");
        bool flip = T.flipped(mem[0]);
        for (int i : mem)
            if (T.flipped(i) != flip)
                fail(errc::mixed_flip_group, std::string("group '") + label + "' mixes flipped and unflipped letters");
        // Images must be adjacent and traversed in the order that lets the
        // map extend continuously: same order as the domain when unflipped,
        // reversed when flipped.
        std::vector<int> expect = mem;
        if (flip) std::reverse(expect.begin(), expect.end());
        for (size_t j = 0; j + 1 < expect.size(); ++j)
            if (pos_a[static_cast<size_t>(expect[j + 1])] != pos_a[static_cast<size_t>(expect[j])] + 1)
                fail(errc::non_contiguous_image,
                     std::string("group '") + label + "' images are not adjacent in the required order");
        int gi = static_cast<int>(scheme.grouped_alphabet.size());
        scheme.grouped_alphabet.push_back(label);
        scheme.members.push_back(mem);
        for (int i : mem) scheme.group_of[i] = gi;
    }
    for (size_t i = 0; i < used.size(); ++i)
        if (!used[i]) fail(errc::invalid_argument, std::string("letter '") + T.letter(static_cast<int>(i)) + "' not grouped");
    return scheme;
}

inline CodingScheme identity_scheme(const IntervalExchange& T) {
    std::vector<std::pair<char, std::string>> groups;
    for (char c : T.alphabet()) groups.emplace_back(c, std::string(1, c));
    return grouped_coding_map(T, groups);
}

}  // namespace ietlang

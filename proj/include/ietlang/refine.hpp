#pragma once

#include <optional>
#include <string>
#include <vector>

#include "interval_exchange.hpp"
#include "language.hpp"

namespace ietlang {

// Cylinder refinement: the language of a map is generated exactly, with no
// sampling, by tracking for each word w the open interval F = T^|w|[w] and
// intersecting it with the coding intervals. Zero-length intersections are
// pruned by exact comparison, so connections never produce words.
//
// A model supplies the coding intervals, the point order, and one-sided
// images of open intervals; concrete, grouped and lazily blown-up maps all
// fit this shape.
template <class Model>
FiniteLanguage language_from_map(const Model& model, int N) {
    using Point = typename Model::Point;
    if (N < 1) fail(errc::invalid_argument, "depth must be >= 1");
    struct Cyl {
        std::string word;
        Point lo, hi;  // F = T^|w|[w], open
    };
    FiniteLanguage lang(model.alphabet(), N);
    std::vector<Cyl> frontier;
    int labels = static_cast<int>(model.alphabet().size());
    for (int e = 0; e < labels; ++e) {
        auto [lo, hi] = model.label_interval(e);
        auto [ilo, ihi] = model.image_in_label(e, lo, hi);
        std::string w(1, model.alphabet()[static_cast<size_t>(e)]);
        lang.insert(w);
        frontier.push_back({std::move(w), std::move(ilo), std::move(ihi)});
    }
    for (int n = 2; n <= N; ++n) {
        std::vector<Cyl> next;
        for (const auto& cyl : frontier)
            for (int e = 0; e < labels; ++e) {
                auto [llo, lhi] = model.label_interval(e);
                Point lo = model.less(cyl.lo, llo) ? llo : cyl.lo;
                Point hi = model.less(lhi, cyl.hi) ? lhi : cyl.hi;
                if (!model.less(lo, hi)) continue;  // empty interior: prune
                auto [ilo, ihi] = model.image_in_label(e, lo, hi);
                std::string w = cyl.word + model.alphabet()[static_cast<size_t>(e)];
                lang.insert(w);
                next.push_back({std::move(w), std::move(ilo), std::move(ihi)});
            }
        frontier = std::move(next);
    }
    lang.finalize();
    return lang;
}

// Model for Standard/Affine maps, optionally coded through a grouping. The
// map is continuous and monotone on each coding interval, so the image of an
// open subinterval is the open interval between the one-sided images of its
// endpoints, computed from the adjacent affine piece.
class IetRefineModel {
public:
    using Point = ExactScalar;

    explicit IetRefineModel(const IntervalExchange& T, std::optional<CodingScheme> scheme = std::nullopt)
        : T_(T), scheme_(std::move(scheme)) {
        if (scheme_) {
            alphabet_ = scheme_->grouped_alphabet;
            for (const auto& mem : scheme_->members) {
                ExactScalar lo = T_.domain_left(mem.front());
                ExactScalar hi = T_.domain_right(mem.back());
                bounds_.emplace_back(lo, hi);
                flips_.push_back(T_.flipped(mem.front()));
            }
        } else {
            alphabet_ = T_.alphabet();
            for (size_t i = 0; i < alphabet_.size(); ++i) {
                bounds_.emplace_back(T_.domain_left(static_cast<int>(i)), T_.domain_right(static_cast<int>(i)));
                flips_.push_back(T_.flipped(static_cast<int>(i)));
            }
        }
    }

    const std::vector<char>& alphabet() const { return alphabet_; }
    bool less(const Point& a, const Point& b) const { return a < b; }

    std::pair<Point, Point> label_interval(int e) const { return bounds_[static_cast<size_t>(e)]; }

    // Image of the open interval (lo, hi), a subset of coding interval e.
    std::pair<Point, Point> image_in_label(int e, const Point& lo, const Point& hi) const {
        ExactScalar a = forward_limit_from_right(lo);
        ExactScalar b = forward_limit_from_left(hi);
        if (flips_[static_cast<size_t>(e)]) return {std::move(b), std::move(a)};
        return {std::move(a), std::move(b)};
    }

private:
    // One-sided image limits: the affine piece adjacent to x on the given
    // side extends continuously to x.
    ExactScalar forward_limit_from_right(const ExactScalar& x) const {
        for (size_t i = 0; i < T_.letter_count(); ++i)
            if (!(x < T_.domain_left(static_cast<int>(i))) && x < T_.domain_right(static_cast<int>(i)))
                return T_.map_forward(static_cast<int>(i), x);
        fail(errc::out_of_domain, "no piece to the right of " + x.str());
    }
    ExactScalar forward_limit_from_left(const ExactScalar& x) const {
        for (size_t i = 0; i < T_.letter_count(); ++i)
            if (T_.domain_left(static_cast<int>(i)) < x && !(T_.domain_right(static_cast<int>(i)) < x))
                return T_.map_forward(static_cast<int>(i), x);
        fail(errc::out_of_domain, "no piece to the left of " + x.str());
    }

    const IntervalExchange& T_;
    std::optional<CodingScheme> scheme_;
    std::vector<char> alphabet_;
    std::vector<std::pair<ExactScalar, ExactScalar>> bounds_;
    std::vector<bool> flips_;
};

// The language of (T, coding) to depth N, by exact cylinder refinement.
inline FiniteLanguage language_from_iet(const IntervalExchange& T, int N,
                                        std::optional<CodingScheme> scheme = std::nullopt) {
    return language_from_map(IetRefineModel(T, std::move(scheme)), N);
}

}  // namespace ietlang

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"

namespace ietlang {

// Finite-depth factorial extendable language: the sets L_1..L_N. Levels are
// kept sorted by the declared alphabet order so that every traversal of the
// language is deterministic.
class FiniteLanguage {
public:
    FiniteLanguage() = default;

    FiniteLanguage(std::vector<char> alphabet, int depth)
        : alphabet_(std::move(alphabet)), depth_(depth), levels_(static_cast<size_t>(depth)) {
        for (size_t i = 0; i < alphabet_.size(); ++i) rank_[alphabet_[i]] = static_cast<int>(i);
    }

    const std::vector<char>& alphabet() const { return alphabet_; }
    int depth() const { return depth_; }

    int rank(char c) const {
        auto it = rank_.find(c);
        if (it == rank_.end()) fail(errc::invalid_argument, std::string("letter '") + c + "' not in alphabet");
        return it->second;
    }

    bool word_less(const std::string& a, const std::string& b) const {
        size_t n = std::min(a.size(), b.size());
        for (size_t i = 0; i < n; ++i)
            if (a[i] != b[i]) return rank(a[i]) < rank(b[i]);
        return a.size() < b.size();
    }

    void insert(const std::string& w) {
        if (w.empty() || static_cast<int>(w.size()) > depth_) return;
        if (members_.insert(w).second) levels_[w.size() - 1].push_back(w);
    }

    bool contains(const std::string& w) const {
        if (w.empty()) return true;
        return members_.count(w) > 0;
    }

    // L_n, sorted by the alphabet order; n in [1, depth].
    const std::vector<std::string>& level(int n) const {
        static const std::vector<std::string> none;
        if (n < 1 || n > depth_) return none;
        return levels_[static_cast<size_t>(n) - 1];
    }

    void finalize() {
        for (auto& lv : levels_)
            std::sort(lv.begin(), lv.end(), [&](const std::string& a, const std::string& b) { return word_less(a, b); });
    }

    // Factoriality: every one-letter truncation of a stored word is stored.
    // Extendability: every word below the top level has extensions both ways.
    // Returns the first offending word, or nullopt.
    std::optional<std::string> factorial_violation() const {
        for (int n = 2; n <= depth_; ++n)
            for (const auto& w : level(n))
                if (!contains(w.substr(1)) || !contains(w.substr(0, w.size() - 1))) return w;
        return std::nullopt;
    }
    std::optional<std::string> extendability_violation() const {
        for (int n = 1; n < depth_; ++n)
            for (const auto& w : level(n)) {
                bool left = false, right = false;
                for (char c : alphabet_) {
                    left = left || contains(c + w);
                    right = right || contains(w + c);
                }
                if (!left || !right) return w;
            }
        return std::nullopt;
    }

    std::vector<char> arrivals(const std::string& w) const {  // A(w)
        std::vector<char> out;
        for (char c : alphabet_)
            if (w.empty() ? contains(std::string(1, c)) : contains(c + w)) out.push_back(c);
        return out;
    }
    std::vector<char> departures(const std::string& w) const {  // D(w)
        std::vector<char> out;
        for (char c : alphabet_)
            if (w.empty() ? contains(std::string(1, c)) : contains(w + c)) out.push_back(c);
        return out;
    }

private:
    std::vector<char> alphabet_;
    int depth_ = 0;
    std::vector<std::vector<std::string>> levels_;
    std::unordered_set<std::string> members_;
    std::map<char, int> rank_;
};

// ---------------------------------------------------------------------------
// Generation from sequence windows

// Builds the depth-N language of a family of finite windows. Words are
// collected only from the core region of each window (margin cells on both
// ends serve as context), so edge truncation cannot introduce factors that
// the underlying sequences do not have. Extendability of the collected set is
// validated and a failure reported as NotExtendable.
inline FiniteLanguage language_from_sequences(const std::vector<std::string>& windows, int N,
                                              std::optional<int> margin_opt = std::nullopt,
                                              std::optional<std::vector<char>> alphabet_opt = std::nullopt) {
    if (N < 1) fail(errc::invalid_argument, "depth must be >= 1");
    int margin = margin_opt.value_or(N);
    if (margin < N) fail(errc::invalid_argument, "margin must be >= depth");
    std::vector<char> alphabet;
    if (alphabet_opt) {
        alphabet = *alphabet_opt;
    } else {
        std::set<char> seen;
        for (const auto& w : windows) seen.insert(w.begin(), w.end());
        alphabet.assign(seen.begin(), seen.end());
    }
    FiniteLanguage lang(alphabet, N);
    for (const auto& win : windows) {
        if (static_cast<int>(win.size()) < N + 2 * margin)
            fail(errc::window_too_short,
                 "window of length " + std::to_string(win.size()) + " needs at least " + std::to_string(N + 2 * margin));
        int lo = margin, hi = static_cast<int>(win.size()) - margin;  // core region [lo, hi)
        for (int n = 1; n <= N; ++n)
            for (int p = lo; p + n <= hi; ++p) lang.insert(win.substr(static_cast<size_t>(p), static_cast<size_t>(n)));
    }
    lang.finalize();
    if (auto bad = lang.extendability_violation())
        fail(errc::not_extendable, "word '" + *bad + "' has no extension in the collected set");
    return lang;
}

// Builds a language directly from explicit level sets (corpus fixtures).
inline FiniteLanguage language_from_levels(const std::vector<char>& alphabet,
                                           const std::vector<std::vector<std::string>>& levels) {
    FiniteLanguage lang(alphabet, static_cast<int>(levels.size()));
    for (const auto& lv : levels)
        for (const auto& w : lv) lang.insert(w);
    lang.finalize();
    if (auto bad = lang.factorial_violation()) fail(errc::invalid_argument, "level sets not factorial at '" + *bad + "'");
    if (auto bad = lang.extendability_violation()) fail(errc::not_extendable, "level sets not extendable at '" + *bad + "'");
    return lang;
}

// ---------------------------------------------------------------------------
// Complexity

struct ComplexityProfile {
    std::vector<long long> p;  // p[n-1] = #L_n, 1 <= n <= N
    std::vector<long long> s;  // s[n-1] = p(n+1) - p(n), 1 <= n <= N-1
};

inline ComplexityProfile complexity_profile(const FiniteLanguage& L) {
    ComplexityProfile out;
    for (int n = 1; n <= L.depth(); ++n) out.p.push_back(static_cast<long long>(L.level(n).size()));
    for (size_t i = 0; i + 1 < out.p.size(); ++i) out.s.push_back(out.p[i + 1] - out.p[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Bispecial classification

enum class BispecialClass { Weak, Neutral, Strong, LocallyStrongOnly, Ordinary };

inline const char* to_string(BispecialClass c) {
    switch (c) {
        case BispecialClass::Weak: return "Weak";
        case BispecialClass::Neutral: return "Neutral";
        case BispecialClass::Strong: return "Strong";
        case BispecialClass::LocallyStrongOnly: return "LocallyStrongOnly";
        case BispecialClass::Ordinary: return "Ordinary";
    }
    return "?";
}

struct BispecialReport {
    std::string word;
    std::vector<char> arrivals;                   // A(w)
    std::vector<char> departures;                 // D(w)
    std::vector<std::pair<char, char>> pairs;     // {(a,b) : awb in L}
    BispecialClass cls = BispecialClass::Neutral;
    // Witness subsets A', D' with #pairs(A',D') > #A' + #D' - 1, when found.
    std::optional<std::pair<std::vector<char>, std::vector<char>>> local_witness;
    long long multiplicity() const {
        return static_cast<long long>(pairs.size()) - static_cast<long long>(arrivals.size()) -
               static_cast<long long>(departures.size()) + 1;
    }
};

namespace detail {

inline std::optional<std::pair<std::vector<char>, std::vector<char>>> locally_strong_witness(
    const std::vector<char>& A, const std::vector<char>& D, const std::vector<std::pair<char, char>>& pairs) {
    // Subset search; alphabets are tiny (<= 8) so 2^|A| * 2^|D| is cheap.
    int na = static_cast<int>(A.size()), nd = static_cast<int>(D.size());
    for (unsigned ma = 1; ma < (1u << na); ++ma)
        for (unsigned md = 1; md < (1u << nd); ++md) {
            int count = 0;
            for (const auto& [a, b] : pairs) {
                int ia = static_cast<int>(std::find(A.begin(), A.end(), a) - A.begin());
                int ib = static_cast<int>(std::find(D.begin(), D.end(), b) - D.begin());
                if ((ma >> ia & 1u) && (md >> ib & 1u)) ++count;
            }
            int ca = __builtin_popcount(ma), cd = __builtin_popcount(md);
            if (count > ca + cd - 1) {
                std::vector<char> wa, wd;
                for (int i = 0; i < na; ++i)
                    if (ma >> i & 1u) wa.push_back(A[static_cast<size_t>(i)]);
                for (int i = 0; i < nd; ++i)
                    if (md >> i & 1u) wd.push_back(D[static_cast<size_t>(i)]);
                return std::make_pair(wa, wd);
            }
        }
    return std::nullopt;
}

}  // namespace detail

// Classifies one word (must be bispecial-eligible: the caller checks lengths).
inline std::optional<BispecialReport> classify_bispecial(const FiniteLanguage& L, const std::string& w) {
    BispecialReport r;
    r.word = w;
    r.arrivals = L.arrivals(w);
    r.departures = L.departures(w);
    if (r.arrivals.size() < 2 || r.departures.size() < 2) return std::nullopt;
    for (char a : r.arrivals)
        for (char b : r.departures)
            if (L.contains(a + w + b)) r.pairs.emplace_back(a, b);
    long long m = r.multiplicity();
    if (m > 0)
        r.cls = BispecialClass::Strong;
    else {
        r.local_witness = detail::locally_strong_witness(r.arrivals, r.departures, r.pairs);
        if (r.local_witness)
            r.cls = BispecialClass::LocallyStrongOnly;
        else
            r.cls = m < 0 ? BispecialClass::Weak : BispecialClass::Neutral;
    }
    if (r.cls == BispecialClass::Strong) r.local_witness = std::make_pair(r.arrivals, r.departures);
    return r;
}

// Every bispecial word of length <= N-2 (both extensions visible), including
// the empty word when #L_1 > 1.
inline std::vector<BispecialReport> classify_bispecials(const FiniteLanguage& L) {
    std::vector<BispecialReport> out;
    if (L.level(1).size() > 1)
        if (auto r = classify_bispecial(L, "")) out.push_back(std::move(*r));
    for (int n = 1; n <= L.depth() - 2; ++n)
        for (const auto& w : L.level(n))
            if (auto r = classify_bispecial(L, w)) out.push_back(std::move(*r));
    return out;
}

// ---------------------------------------------------------------------------
// Rauzy graphs

struct RauzyGraph {
    int n = 0;
    std::vector<std::string> vertices;              // L_n in alphabet order
    std::vector<std::pair<int, int>> edges;         // one per word of L_{n+1}
    std::vector<std::string> edge_words;
    std::vector<int> component;                     // nonoriented component id per vertex
    int component_count = 0;
};

inline RauzyGraph rauzy_graph(const FiniteLanguage& L, int n) {
    if (n < 0 || n > L.depth() - 1) fail(errc::invalid_argument, "rauzy graph level out of range");
    RauzyGraph g;
    g.n = n;
    if (n == 0)
        g.vertices.push_back("");
    else
        g.vertices = L.level(n);
    std::map<std::string, int> index;
    for (size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = static_cast<int>(i);
    for (const auto& w : L.level(n + 1)) {
        g.edges.emplace_back(index.at(w.substr(0, static_cast<size_t>(n))), index.at(w.substr(1)));
        g.edge_words.push_back(w);
    }
    // Union-find over the nonoriented graph.
    std::vector<int> parent(g.vertices.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    for (const auto& [u, v] : g.edges) parent[static_cast<size_t>(find(u))] = find(v);
    std::map<int, int> label;
    g.component.resize(g.vertices.size());
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        int root = find(static_cast<int>(i));
        auto [it, fresh] = label.emplace(root, static_cast<int>(label.size()));
        g.component[i] = it->second;
    }
    g.component_count = static_cast<int>(label.size());
    return g;
}

// ---------------------------------------------------------------------------
// Recurrence at bounded depth

// A violation is a proof of non-recurrence under the depth-N horizon: no word
// of length <= N both begins and ends with the reported word. The positive
// answer is only a bounded-depth statement.
struct RecurrenceReport {
    int check_depth = 0;
    std::optional<std::string> violation;
    bool recurrent_up_to() const { return !violation.has_value(); }
};

inline RecurrenceReport recurrence_report(const FiniteLanguage& L, int check_depth) {
    if (check_depth > L.depth() / 2) fail(errc::invalid_argument, "checkDepth must be <= depth/2");
    RecurrenceReport rep;
    rep.check_depth = check_depth;
    for (int n = 1; n <= check_depth && !rep.violation; ++n)
        for (const auto& w : L.level(n)) {
            bool returns = false;
            for (int m = n + 1; m <= L.depth() && !returns; ++m)
                for (const auto& u : L.level(m))
                    if (u.compare(0, w.size(), w) == 0 && u.compare(u.size() - w.size(), w.size(), w) == 0) {
                        returns = true;
                        break;
                    }
            if (!returns) {
                rep.violation = w;
                break;
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Component decomposition (Rauzy-graph components as sub-languages)

enum class ComponentKind { Periodic, Aperiodic };

struct LanguageComponent {
    FiniteLanguage language;
    ComponentKind kind = ComponentKind::Aperiodic;
};

// One sub-language per nonoriented component of G_n: words whose length-n
// factors stay inside the component (shorter words: factors of those).
// Periodic iff the component is a single directed cycle.
inline std::vector<LanguageComponent> decompose_components(const FiniteLanguage& L, int n) {
    RauzyGraph g = rauzy_graph(L, n);
    std::map<std::string, int> comp_of;
    for (size_t i = 0; i < g.vertices.size(); ++i) comp_of[g.vertices[i]] = g.component[i];
    std::vector<LanguageComponent> out;
    for (int c = 0; c < g.component_count; ++c) {
        FiniteLanguage sub(L.alphabet(), L.depth());
        auto in_component = [&](const std::string& w) {
            if (static_cast<int>(w.size()) < n) return true;
            for (size_t p = 0; p + static_cast<size_t>(n) <= w.size(); ++p) {
                auto it = comp_of.find(w.substr(p, static_cast<size_t>(n)));
                if (it == comp_of.end() || it->second != c) return false;
            }
            return true;
        };
        for (int m = n; m <= L.depth(); ++m)
            for (const auto& w : L.level(m))
                if (in_component(w)) {
                    sub.insert(w);
                    if (m == n)  // seed the short levels with factors
                        for (int len = 1; len < n; ++len)
                            for (size_t p = 0; p + static_cast<size_t>(len) <= w.size(); ++p)
                                sub.insert(w.substr(p, static_cast<size_t>(len)));
                }
        sub.finalize();
        // Single directed cycle test: #edges == #vertices, all degrees 1.
        size_t verts = 0, edges = 0;
        std::map<int, int> outdeg, indeg;
        for (size_t i = 0; i < g.vertices.size(); ++i)
            if (g.component[i] == c) ++verts;
        bool degrees_ok = true;
        for (size_t e = 0; e < g.edges.size(); ++e) {
            auto [u, v] = g.edges[e];
            if (g.component[static_cast<size_t>(u)] != c) continue;
            ++edges;
            if (++outdeg[u] > 1 || ++indeg[v] > 1) degrees_ok = false;
        }
        LanguageComponent item;
        item.language = std::move(sub);
        item.kind = (degrees_ok && edges == verts) ? ComponentKind::Periodic : ComponentKind::Aperiodic;
        out.push_back(std::move(item));
    }
    return out;
}

}  // namespace ietlang

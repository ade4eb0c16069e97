#pragma once

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "qpacs/operator_words.hpp"

namespace qpacs {

// Hard-coded transcriptions of the six published quadrature-power expansions
// <Y(phi)^j>, j = 2..6, against which the rewriter output is compared
// coefficient by coefficient. The transcriptions are kept exactly as printed;
// the rewriter, not this table, is the source of truth downstream.

namespace golden_detail {

inline QPolynomial poly(std::initializer_list<std::pair<long long, int>> terms) {
    QPolynomial p;
    for (const auto& [c, e] : terms) p += QPolynomial::monomial(c, e);
    return p;
}

// mu = 1 + q^2 + q^4 + q^6 + q^8
inline QPolynomial mu() { return poly({{1, 0}, {1, 2}, {1, 4}, {1, 6}, {1, 8}}); }

// lambda = mu + q^4 + q^6 + 2q^8 + 2q^10 + 2q^12 + q^14 + q^16
inline QPolynomial lambda() {
    return mu() + poly({{1, 4}, {1, 6}, {2, 8}, {2, 10}, {2, 12}, {1, 14}, {1, 16}});
}

struct GoldenTerm {
    int phase_weight;
    int d;
    int l;
    QPolynomial coeff;
};

/// One-sided (phase weight <= 0) transcription of <Y^j>; the +w side is the
/// dagger mirror and is generated on demand.
inline std::vector<GoldenTerm> transcription(int j) {
    using golden_detail::poly;
    const QPolynomial m = mu();
    const QPolynomial lam = lambda();
    switch (j) {
        case 2:
            return {{0, 0, 0, poly({{1, 0}})},
                    {0, 1, 1, poly({{1, 0}, {1, 2}})},
                    {-2, 0, 2, poly({{1, 0}})}};
        case 3:
            return {{-3, 0, 3, poly({{1, 0}})},
                    {-1, 0, 1, poly({{2, 0}, {1, 2}})},
                    {-1, 1, 2, poly({{1, 0}, {1, 2}, {1, 4}})}};
        case 4:
            return {{0, 0, 0, poly({{2, 0}, {1, 2}})},
                    {0, 1, 1, poly({{3, 0}, {5, 2}, {3, 4}, {1, 6}})},
                    {0, 2, 2, m + poly({{1, 4}})},
                    {-4, 0, 4, poly({{1, 0}})},
                    {-2, 0, 2, poly({{3, 0}, {2, 2}, {1, 4}})},
                    {-2, 1, 3, m - poly({{1, 8}})}};
        case 5:
            return {{-5, 0, 5, poly({{1, 0}})},
                    {-3, 1, 4, m},
                    {-3, 0, 3, poly({{4, 0}, {3, 2}, {2, 4}, {1, 6}})},
                    {-1, 0, 1, poly({{5, 0}, {6, 2}, {3, 4}, {1, 6}})},
                    {-1, 1, 2,
                     poly({{1, 0}}) + m + m + m + poly({{4, 2}, {6, 4}, {3, 6}, {1, 10}})},
                    {-1, 2, 3, m + poly({{1, 4}, {1, 6}, {1, 8}, {1, 10}, {1, 12}})}};
        case 6:
            return {{0, 0, 0, poly({{5, 0}, {6, 2}, {3, 4}, {1, 6}})},
                    {0, 1, 1,
                     poly({{9, 0}, {22, 2}, {25, 4}, {19, 6}, {10, 8}, {4, 10}, {1, 12}})},
                    {0, 2, 2,
                     poly({{5, 0},
                           {9, 2},
                           {17, 4},
                           {18, 6},
                           {18, 8},
                           {12, 10},
                           {7, 12},
                           {3, 14},
                           {1, 16}})},
                    {0, 3, 3, lam + poly({{1, 6}, {1, 10}, {1, 12}, {1, 14}, {1, 18}})},
                    {-6, 0, 6, poly({{1, 0}})},
                    {-4, 0, 4, poly({{5, 0}, {4, 2}, {3, 4}, {2, 6}, {1, 8}})},
                    {-4, 1, 5, m + poly({{1, 10}})},
                    {-2, 0, 2, poly({{9, 0}, {13, 2}, {12, 4}, {7, 6}, {3, 8}, {1, 10}})},
                    {-2, 1, 3,
                     poly({{5, 0}, {9, 2}, {12, 4}, {14, 6}, {10, 8}, {6, 10}, {3, 12}, {1, 14}})},
                    {-2, 2, 4, lam}};
        default:
            throw Error("no golden transcription for order " + std::to_string(j));
    }
}

/// Full two-sided golden expansion for <Y^j>, prefactor 2^{-j}.
inline QuadratureExpansion golden_expansion(int j) {
    QuadratureExpansion exp;
    exp.order = j;
    exp.prefactor_log2 = -j;
    for (const auto& t : transcription(j)) {
        exp.phase_terms[t.phase_weight] += NormalForm::monomial(t.d, t.l, t.coeff);
        if (t.phase_weight != 0)
            exp.phase_terms[-t.phase_weight] += NormalForm::monomial(t.l, t.d, t.coeff);
    }
    return exp;
}

}  // namespace golden_detail

struct GoldenEntry {
    int order;
    int phase_weight;
    int d;
    int l;
    std::string published;  // "absent" when the printed expansion lacks the slot
    std::string computed;   // "absent" when the rewriter lacks the slot
    bool match;
};

struct GoldenReport {
    std::vector<GoldenEntry> entries;
    int mismatches = 0;

    bool coefficient_matches(int order, int d, int l, int phase_weight = 0) const {
        for (const auto& e : entries)
            if (e.order == order && e.d == d && e.l == l && e.phase_weight == phase_weight)
                return e.match;
        return false;
    }
};

/// Compare the rewriter's quadrature_power(2..6) against the published
/// expansions. Mismatches are reported data, not failures.
inline GoldenReport golden_check() {
    GoldenReport report;
    for (int j = 2; j <= 6; ++j) {
        const QuadratureExpansion published = golden_detail::golden_expansion(j);
        const QuadratureExpansion& computed = quadrature_power(j);
        std::set<std::pair<int, std::pair<int, int>>> slots;
        for (const auto& [w, nf] : published.phase_terms)
            for (const auto& [k, p] : nf.terms()) slots.insert({w, k});
        for (const auto& [w, nf] : computed.phase_terms)
            for (const auto& [k, p] : nf.terms()) slots.insert({w, k});
        for (const auto& [w, k] : slots) {
            auto lookup = [&](const QuadratureExpansion& e) -> const QPolynomial* {
                auto wit = e.phase_terms.find(w);
                if (wit == e.phase_terms.end()) return nullptr;
                auto tit = wit->second.terms().find(k);
                if (tit == wit->second.terms().end()) return nullptr;
                return &tit->second;
            };
            const QPolynomial* pp = lookup(published);
            const QPolynomial* pc = lookup(computed);
            GoldenEntry entry{j,
                              w,
                              k.first,
                              k.second,
                              pp ? pp->to_string() : "absent",
                              pc ? pc->to_string() : "absent",
                              pp && pc && *pp == *pc};
            if (!entry.match) ++report.mismatches;
            report.entries.push_back(std::move(entry));
        }
    }
    return report;
}

}  // namespace qpacs

#pragma once

#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qpacs/errors.hpp"
#include "qpacs/qpolynomial.hpp"

namespace qpacs {

/// A letter of an operator word: the lowering operator A or the raising A†.
enum class Letter { Lower, Raise };

using Word = std::vector<Letter>;

/// Parse a compact word string: 'a' = A (lowering), 'd' = A† (raising).
/// Whitespace ignored. Leftmost character acts last (standard operator order).
inline Word parse_word(const std::string& s) {
    Word w;
    for (char ch : s) {
        if (ch == ' ' || ch == '\t') continue;
        if (ch == 'a' || ch == 'A') w.push_back(Letter::Lower);
        else if (ch == 'd' || ch == 'D' || ch == '+') w.push_back(Letter::Raise);
        else throw Error(std::string("unrecognised letter '") + ch + "' in operator word");
    }
    return w;
}

/// Normal-ordered operator polynomial: sum of P_{d,l}(q) · A†^d A^l keyed by
/// (dagger count d, lowering count l).
class NormalForm {
public:
    using Key = std::pair<int, int>;

    static NormalForm identity() {
        NormalForm nf;
        nf.terms_[{0, 0}] = QPolynomial::constant(1);
        return nf;
    }

    static NormalForm monomial(int d, int l, QPolynomial coeff = QPolynomial::constant(1)) {
        NormalForm nf;
        if (!coeff.is_zero()) nf.terms_[{d, l}] = std::move(coeff);
        return nf;
    }

    const std::map<Key, QPolynomial>& terms() const { return terms_; }

    bool operator==(const NormalForm& o) const { return terms_ == o.terms_; }

    NormalForm& operator+=(const NormalForm& o) {
        for (const auto& [k, p] : o.terms_) add_term(k.first, k.second, p);
        return *this;
    }

    friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }

    /// Right-multiply by A: A†^d A^l · A = A†^d A^{l+1}.
    NormalForm times_lower() const {
        NormalForm r;
        for (const auto& [k, p] : terms_) r.terms_[{k.first, k.second + 1}] = p;
        return r;
    }

    /// Right-multiply by A†, using A^l A† = q^{2l} A† A^l + [l]_q A^{l-1}.
    NormalForm times_raise() const {
        NormalForm r;
        for (const auto& [k, p] : terms_) {
            const int d = k.first, l = k.second;
            r.add_term(d + 1, l, p.shifted(2 * l));
            if (l > 0) r.add_term(d, l - 1, p * QPolynomial::q_integer(l));
        }
        return r;
    }

    NormalForm times_letter(Letter x) const {
        return x == Letter::Lower ? times_lower() : times_raise();
    }

    /// Dagger mirror: swaps d and l in every term. The rewrite rule produces
    /// real coefficient polynomials, so this is the full adjoint.
    NormalForm adjoint() const {
        NormalForm r;
        for (const auto& [k, p] : terms_) r.terms_[{k.second, k.first}] = p;
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (const auto& [k, p] : terms_)
            os << "(d=" << k.first << ", l=" << k.second << ")  " << p.to_string() << "\n";
        return os.str();
    }

private:
    void add_term(int d, int l, const QPolynomial& p) {
        auto it = terms_.find({d, l});
        if (it == terms_.end()) {
            if (!p.is_zero()) terms_[{d, l}] = p;
            return;
        }
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<Key, QPolynomial> terms_;
};

/// Normal-order a word under A A† = 1 + q² A† A. Exact coefficients.
inline NormalForm normal_order(const Word& word) {
    NormalForm nf = NormalForm::identity();
    for (Letter x : word) nf = nf.times_letter(x);
    return nf;
}

/// Expansion of a power of a quadrature into phase-weighted normal forms:
/// 2^{prefactor_log2} · Σ_w e^{iφw} · phase_terms[w].
struct QuadratureExpansion {
    int order = 0;
    int prefactor_log2 = 0;  // prefactor is the exact rational 2^{prefactor_log2}
    std::map<int, NormalForm> phase_terms;
};

inline constexpr int kMaxQuadratureOrder = 16;

/// Y(φ)^j with Y(φ) = ½(A e^{-iφ} + A† e^{iφ}), fully normal-ordered.
/// Results are memoised; j is capped at kMaxQuadratureOrder.
inline const QuadratureExpansion& quadrature_power(int j) {
    if (j < 1) throw Error("quadrature_power: order must be >= 1");
    if (j > kMaxQuadratureOrder)
        throw ResourceError("quadrature_power: order " + std::to_string(j) + " exceeds cap " +
                            std::to_string(kMaxQuadratureOrder));
    static std::mutex mu;
    static std::map<int, QuadratureExpansion> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(j);
    if (it != cache.end()) return it->second;

    std::map<int, NormalForm> cur;
    cur[0] = NormalForm::identity();
    for (int step = 0; step < j; ++step) {
        std::map<int, NormalForm> next;
        for (const auto& [w, nf] : cur) {
            next[w - 1] += nf.times_lower();
            next[w + 1] += nf.times_raise();
        }
        cur = std::move(next);
    }
    QuadratureExpansion exp;
    exp.order = j;
    exp.prefactor_log2 = -j;
    exp.phase_terms = std::move(cur);
    return cache.emplace(j, std::move(exp)).first->second;
}

/// Y_N(φ)² with Y_N(φ) = ½(A^N e^{-iNφ} + A†^N e^{iNφ}).
/// Phase weights are {-2N, 0, +2N}; the weight-0 slot carries the
/// normal-ordered A^N A†^N plus A†^N A^N.
inline QuadratureExpansion hillery_quadrature_square(int N) {
    if (N < 1) throw Error("hillery_quadrature_square: N must be >= 1");
    QuadratureExpansion exp;
    exp.order = 2;
    exp.prefactor_log2 = -2;
    exp.phase_terms[-2 * N] = NormalForm::monomial(0, 2 * N);
    exp.phase_terms[2 * N] = NormalForm::monomial(2 * N, 0);
    Word anti(static_cast<std::size_t>(2 * N), Letter::Lower);
    for (int i = 0; i < N; ++i) anti[static_cast<std::size_t>(N + i)] = Letter::Raise;
    exp.phase_terms[0] = normal_order(anti) + NormalForm::monomial(N, N);
    return exp;
}

}  // namespace qpacs

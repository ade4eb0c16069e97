#pragma once

#include <cmath>
#include <vector>

#include "qpacs/operator_words.hpp"
#include "qpacs/states.hpp"

namespace qpacs {

// Ground-truth oracle: operator expectation values computed by applying band
// matrices with entries sqrt([n]_q) directly to the truncated coefficient
// vector. Shares no series code with the closed-form evaluators in moments.hpp.

namespace oracle_detail {

inline std::vector<Complex> apply_lower(const std::vector<Complex>& v,
                                        const DeformationParam& dp) {
    std::vector<Complex> out(v.size(), Complex(0.0));
    for (std::size_t n = 0; n + 1 < v.size(); ++n)
        out[n] = std::sqrt(q_int(static_cast<std::int64_t>(n) + 1, dp)) * v[n + 1];
    return out;
}

inline std::vector<Complex> apply_raise(const std::vector<Complex>& v,
                                        const DeformationParam& dp) {
    std::vector<Complex> out(v.size(), Complex(0.0));
    for (std::size_t n = 1; n < v.size(); ++n)
        out[n] = std::sqrt(q_int(static_cast<std::int64_t>(n), dp)) * v[n - 1];
    return out;
}

}  // namespace oracle_detail

/// <state| word |state> by direct ladder application. The state must be
/// truncated finely enough that the lost mass cannot matter.
inline Complex oracle_expectation(const Word& word, const ModeState& state) {
    if (state.tail_bound > 1e-6)
        throw HeadroomError("oracle_expectation: state truncated too coarsely");
    // headroom so raising never pushes amplitude off the end
    std::vector<Complex> v = state.coeffs;
    v.resize(v.size() + word.size(), Complex(0.0));
    // rightmost letter acts first
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        v = *it == Letter::Lower ? oracle_detail::apply_lower(v, state.dp)
                                 : oracle_detail::apply_raise(v, state.dp);
    Complex acc = 0.0;
    for (std::size_t n = 0; n < state.coeffs.size(); ++n) acc += std::conj(state.coeffs[n]) * v[n];
    return acc;
}

/// Oracle evaluation of a normal form: Σ P_{d,l}(q) <A†^d A^l>.
inline Complex oracle_normal_form(const NormalForm& nf, const ModeState& state) {
    Complex acc = 0.0;
    for (const auto& [k, p] : nf.terms()) {
        Word w;
        w.insert(w.end(), static_cast<std::size_t>(k.first), Letter::Raise);
        w.insert(w.end(), static_cast<std::size_t>(k.second), Letter::Lower);
        acc += p.evaluate(state.dp) * oracle_expectation(w, state);
    }
    return acc;
}

/// Oracle evaluation of a quadrature expansion at fixed phase angle.
inline Complex oracle_quadrature(const QuadratureExpansion& exp, double phi,
                                 const ModeState& state) {
    Complex acc = 0.0;
    for (const auto& [w, nf] : exp.phase_terms)
        acc += std::polar(1.0, phi * static_cast<double>(w)) * oracle_normal_form(nf, state);
    return std::ldexp(1.0, exp.prefactor_log2) * acc;
}

}  // namespace qpacs

#pragma once

#include <complex>
#include <random>
#include <string>

#include "qrefl/errors.hpp"
#include "qrefl/laurent.hpp"

// Runs f and reports the qrefl::Error code it throws ("" if none).
template <typename F>
std::string error_code(F&& f) {
    try {
        f();
    } catch (const qrefl::Error& e) {
        return e.code();
    } catch (...) {
        return "<other>";
    }
    return "";
}

inline qrefl::GaussRational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<int> has_im(0, 1);
    qrefl::GaussRational re = qrefl::GaussRational::ratio(num(rng), den(rng));
    if (!has_im(rng)) return re;
    return re + qrefl::GaussRational::imag_ratio(num(rng), den(rng));
}

inline qrefl::Laurent random_laurent(std::mt19937_64& rng, int max_terms = 4) {
    using namespace qrefl;
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> unit_exp(-3, 3);
    std::uniform_int_distribution<int> xi_exp(0, 2);
    Laurent out;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        ExpVec e = zero_exp();
        e[static_cast<int>(VarId::x)] = static_cast<std::int16_t>(unit_exp(rng));
        e[static_cast<int>(VarId::q)] = static_cast<std::int16_t>(unit_exp(rng));
        e[static_cast<int>(VarId::c1)] = static_cast<std::int16_t>(unit_exp(rng));
        e[static_cast<int>(VarId::xi)] = static_cast<std::int16_t>(xi_exp(rng));
        GaussRational c = random_rational(rng);
        if (!c.is_zero()) out += Laurent::monomial(c, e);
    }
    return out;
}

// Random point with every unit variable away from zero.
inline qrefl::Assignment random_assignment(std::mt19937_64& rng) {
    using namespace qrefl;
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    std::uniform_real_distribution<double> arg(0.0, 6.283185307179586);
    Assignment at;
    for (int v = 0; v < kNumVars; ++v)
        at[static_cast<VarId>(v)] = std::polar(mag(rng), arg(rng));
    return at;
}

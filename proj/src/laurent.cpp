#include "qrefl/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace qrefl {

VarId c_var(int a) {
    if (a < 1 || a > kMaxCPairs)
        throw Error("SpecOutOfRange",
                    "conjugate-pair index " + std::to_string(a) + " outside 1.." +
                        std::to_string(kMaxCPairs));
    return static_cast<VarId>(static_cast<int>(VarId::c1) + a - 1);
}

const char* var_name(VarId v) {
    static const char* names[kNumVars] = {
        "x",  "x1", "x2", "q",  "Q",  "r",  "xi", "c1", "c2", "c3",
        "c4", "c5", "c6", "c7", "c8", "c9", "c10", "c11", "c12"};
    return names[static_cast<int>(v)];
}

bool is_unit_var(VarId v) { return v != VarId::xi; }

Laurent Laurent::constant(GaussRational c) {
    if (c.is_zero()) return Laurent();
    std::vector<Term> t;
    t.push_back({zero_exp(), std::move(c)});
    return Laurent(std::move(t));
}

Laurent Laurent::variable(VarId v, int power) {
    if (power == 0) return one();
    if (v == VarId::xi && power < 0)
        throw Error("NotAUnit", "xi cannot carry a negative exponent");
    ExpVec e = zero_exp();
    e[static_cast<int>(v)] = static_cast<std::int16_t>(power);
    return monomial(GaussRational(1), e);
}

Laurent Laurent::monomial(GaussRational c, const ExpVec& e) {
    if (c.is_zero()) return Laurent();
    if (e[static_cast<int>(VarId::xi)] < 0)
        throw Error("NotAUnit", "xi cannot carry a negative exponent");
    std::vector<Term> t;
    t.push_back({e, std::move(c)});
    return Laurent(std::move(t));
}

Laurent Laurent::from_map(std::map<ExpVec, GaussRational>&& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (!c.is_zero()) out.push_back({e, std::move(c)});
    return Laurent(std::move(out));
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    // Sorted-merge of the two term lists.
    std::vector<Term> out;
    out.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        if (ia->exp < ib->exp) {
            out.push_back(*ia++);
        } else if (ib->exp < ia->exp) {
            out.push_back(*ib++);
        } else {
            GaussRational c = ia->coeff + ib->coeff;
            if (!c.is_zero()) out.push_back({ia->exp, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    out.insert(out.end(), ia, a.terms_.end());
    out.insert(out.end(), ib, b.terms_.end());
    return Laurent(std::move(out));
}

Laurent Laurent::operator-() const {
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff = -t.coeff;
    return Laurent(std::move(out));
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return Laurent::zero();
    std::map<ExpVec, GaussRational> acc;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            ExpVec e = ta.exp;
            for (int k = 0; k < kNumVars; ++k)
                e[k] = static_cast<std::int16_t>(e[k] + tb.exp[k]);
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, ta.coeff * tb.coeff);
            else
                it->second += ta.coeff * tb.coeff;
        }
    }
    return Laurent::from_map(std::move(acc));
}

Laurent operator*(const GaussRational& c, const Laurent& p) {
    if (c.is_zero()) return Laurent::zero();
    std::vector<Term> out = p.terms_;
    for (auto& t : out) t.coeff *= c;
    return Laurent(std::move(out));
}

bool operator==(const Laurent& a, const Laurent& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
        if (a.terms_[k].exp != b.terms_[k].exp || a.terms_[k].coeff != b.terms_[k].coeff)
            return false;
    return true;
}

Laurent Laurent::invert_unit() const {
    if (terms_.size() != 1)
        throw Error("NotAUnit", "only single-term Laurent polynomials are units");
    const Term& t = terms_.front();
    if (t.exp[static_cast<int>(VarId::xi)] != 0)
        throw Error("NotAUnit", "xi is not invertible");
    ExpVec e = t.exp;
    for (auto& k : e) k = static_cast<std::int16_t>(-k);
    return monomial(t.coeff.inverse(), e);
}

Laurent Laurent::coeff_at_degree(VarId v, int degree) const {
    const int iv = static_cast<int>(v);
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.exp[iv] != degree) continue;
        Term u = t;
        u.exp[iv] = 0;
        out.push_back(std::move(u));
    }
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return a.exp < b.exp; });
    return Laurent(std::move(out));
}

std::optional<std::pair<int, int>> Laurent::degree_range(VarId v) const {
    if (terms_.empty()) return std::nullopt;
    const int iv = static_cast<int>(v);
    int lo = terms_.front().exp[iv], hi = lo;
    for (const auto& t : terms_) {
        lo = std::min<int>(lo, t.exp[iv]);
        hi = std::max<int>(hi, t.exp[iv]);
    }
    return std::make_pair(lo, hi);
}

Laurent Laurent::substitute_monomial(VarId v, const Laurent& replacement) const {
    if (replacement.terms_.size() != 1)
        throw Error("NotAUnit", "substitution target must be a single term");
    const Term& rep = replacement.terms_.front();
    const int iv = static_cast<int>(v);
    const int ixi = static_cast<int>(VarId::xi);
    std::map<ExpVec, GaussRational> acc;
    for (const auto& t : terms_) {
        const int e = t.exp[iv];
        ExpVec ne = t.exp;
        ne[iv] = 0;
        GaussRational c = t.coeff;
        if (e != 0) {
            for (int k = 0; k < kNumVars; ++k)
                ne[k] = static_cast<std::int16_t>(ne[k] + e * rep.exp[k]);
            c *= rep.coeff.pow(e);
        }
        if (ne[ixi] < 0)
            throw Error("NotAUnit", "substitution drives xi to a negative exponent");
        auto it = acc.find(ne);
        if (it == acc.end())
            acc.emplace(ne, std::move(c));
        else
            it->second += c;
    }
    return from_map(std::move(acc));
}

Laurent Laurent::log_derivative(VarId v) const {
    const int iv = static_cast<int>(v);
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.exp[iv] == 0) continue;
        out.push_back({t.exp, GaussRational(t.exp[iv]) * t.coeff});
    }
    return Laurent(std::move(out));
}

std::complex<double> Laurent::evaluate(const Assignment& at) const {
    std::complex<double> sum = 0.0;
    for (const auto& t : terms_) {
        std::complex<double> v = t.coeff.to_complex();
        for (int k = 0; k < kNumVars; ++k) {
            const int e = t.exp[k];
            if (e == 0) continue;
            const VarId var = static_cast<VarId>(k);
            auto it = at.find(var);
            if (it == at.end())
                throw Error("MissingAssignment",
                            std::string("no value for ") + var_name(var));
            if (it->second == 0.0 && is_unit_var(var))
                throw Error("ZeroAssignedToUnit",
                            std::string(var_name(var)) + " must be nonzero");
            v *= std::pow(it->second, e);
        }
        sum += v;
    }
    return sum;
}

std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) s += " + ";
        first = false;
        std::string mono;
        for (int k = 0; k < kNumVars; ++k) {
            if (t.exp[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(static_cast<VarId>(k));
            if (t.exp[k] != 1) mono += "^" + std::to_string(t.exp[k]);
        }
        std::string c = t.coeff.to_string();
        const bool plain = (t.coeff.im() == 0 && t.coeff.re() >= 0);
        if (mono.empty()) {
            s += plain ? c : "(" + c + ")";
        } else if (t.coeff.is_one()) {
            s += mono;
        } else {
            s += (plain ? c : "(" + c + ")") + "*" + mono;
        }
    }
    return s;
}

} // namespace qrefl

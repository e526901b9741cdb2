#pragma once

#include <string>
#include <vector>

#include "qrefl/errors.hpp"

namespace qrefl {

enum class DiagramKind { Distinguished, Symmetric };

std::string diagram_name(DiagramKind k);

// Z2-grading of the N = m + n basis indices together with the conjugation map
// a -> abar. Indices are 1-based in the public interface.
class Grading {
public:
    Grading(DiagramKind kind, int m, int n);

    DiagramKind kind() const { return kind_; }
    int m() const { return m_; }
    int n() const { return n_; }
    int size() const { return static_cast<int>(parity_.size()); }

    int parity(int a) const { return parity_[check(a) - 1]; }
    int conjugate(int a) const { return conj_[check(a) - 1]; }

    // Parity of a 0-based multi-index written base-N over `sites` digits.
    int multi_parity(long idx, int sites) const {
        int p = 0;
        for (int s = 0; s < sites; ++s) {
            p ^= parity_[idx % size()];
            idx /= size();
        }
        return p;
    }

    bool operator==(const Grading& o) const {
        return kind_ == o.kind_ && m_ == o.m_ && n_ == o.n_;
    }
    bool operator!=(const Grading& o) const { return !(*this == o); }

private:
    int check(int a) const {
        if (a < 1 || a > size())
            throw Error("PositionOutOfRange",
                        "index " + std::to_string(a) + " outside 1.." +
                            std::to_string(size()));
        return a;
    }

    DiagramKind kind_;
    int m_, n_;
    std::vector<int> parity_;
    std::vector<int> conj_;
};

Grading make_grading(DiagramKind kind, int m, int n);

} // namespace qrefl

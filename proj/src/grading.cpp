#include "qrefl/grading.hpp"

namespace qrefl {

std::string diagram_name(DiagramKind k) {
    return k == DiagramKind::Distinguished ? "distinguished" : "symmetric";
}

Grading::Grading(DiagramKind kind, int m, int n) : kind_(kind), m_(m), n_(n) {
    if (m < 0 || n < 0)
        throw Error("SpecOutOfRange", "m and n must be non-negative");
    const int N = m + n;
    if (N < 1) throw Error("EmptyAlgebra", "m + n must be at least 1");

    parity_.resize(N);
    conj_.resize(N);

    if (kind == DiagramKind::Distinguished) {
        for (int a = 1; a <= N; ++a) parity_[a - 1] = a <= m ? 0 : 1;
        for (int a = 1; a <= N; ++a)
            conj_[a - 1] = (a <= m) ? (m + 1 - a) : (2 * m + n + 1 - a);
    } else {
        if (n % 2 != 0)
            throw Error("OddNForSymmetric",
                        "symmetric diagram needs even n, got n = " + std::to_string(n));
        const int k = n / 2;
        // 0 on 1..k and m+k+1..m+2k, 1 on the middle block k+1..k+m.
        for (int a = 1; a <= N; ++a)
            parity_[a - 1] = (a <= k || a > m + k) ? 0 : 1;
        for (int a = 1; a <= N; ++a) conj_[a - 1] = N + 1 - a;
    }
}

Grading make_grading(DiagramKind kind, int m, int n) { return Grading(kind, m, n); }

} // namespace qrefl

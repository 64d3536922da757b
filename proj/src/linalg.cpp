#include "germlink/linalg.hpp"

namespace germlink {

std::vector<Rational> solve_exact(const IntersectionMatrix& matrix, const std::vector<Rational>& rhs_in) {
    const int n = matrix.n;
    std::vector<Rational> a(matrix.entries.begin(), matrix.entries.end());
    std::vector<Rational> rhs = rhs_in;
    auto at = [&](int i, int j) -> Rational& { return a[static_cast<size_t>(i) * n + j]; };

    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i) {
            if (at(i, k) != 0) { pivot = i; break; }
        }
        if (pivot < 0) {
            throw SingularMatrix("solve_exact: singular matrix");
        }
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            std::swap(rhs[static_cast<size_t>(k)], rhs[static_cast<size_t>(pivot)]);
        }
        for (int i = k + 1; i < n; ++i) {
            if (at(i, k) == 0) continue;
            Rational f = at(i, k) / at(k, k);
            for (int j = k; j < n; ++j) at(i, j) -= f * at(k, j);
            rhs[static_cast<size_t>(i)] -= f * rhs[static_cast<size_t>(k)];
        }
    }
    std::vector<Rational> x(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        Rational acc = rhs[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) acc -= at(i, j) * x[static_cast<size_t>(j)];
        x[static_cast<size_t>(i)] = acc / at(i, i);
    }

    // residual must vanish identically
    for (int i = 0; i < n; ++i) {
        Rational acc = 0;
        for (int j = 0; j < n; ++j) {
            if (matrix.at(i, j) != 0) acc += Rational(matrix.at(i, j)) * x[static_cast<size_t>(j)];
        }
        if (acc != rhs_in[static_cast<size_t>(i)]) {
            throw SingularMatrix("solve_exact: residual nonzero at row " + std::to_string(i));
        }
    }
    return x;
}

} // namespace germlink

#include "indmatch/bounds.hpp"

namespace indmatch {

std::int64_t ceil_of(const Rational& r) {
    const std::int64_t num = r.numerator();
    const std::int64_t den = r.denominator();  // always positive
    const std::int64_t q = num / den;
    return (num % den > 0) ? q + 1 : q;
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t order_bound(std::int64_t n, std::int64_t isolated, std::int64_t n33plus) {
    const std::int64_t counted = n - isolated - n33plus;
    return counted <= 0 ? 0 : (counted + 5) / 6;
}

std::int64_t cubic_size_bound(std::int64_t m) { return m <= 0 ? 0 : (m + 8) / 9; }

Rational high_girth_bound(std::int64_t n, std::int64_t isolated, int max_degree) {
    // (n-i) / (D^2/4 + D + 1) = 4(n-i) / (D+2)^2
    const std::int64_t d = max_degree;
    return Rational(4 * (n - isolated), (d + 2) * (d + 2));
}

Rational greedy_general_bound(std::int64_t m, int max_degree) {
    const std::int64_t d = max_degree;
    return Rational(m, 2 * d * (d - 1) + 1);
}

Rational greedy_forest_bound(std::int64_t m, int max_degree) {
    if (max_degree == 0) return Rational(0);
    return Rational(m, 2 * static_cast<std::int64_t>(max_degree) - 1);
}

BoundReport bound_values(const Graph& g) { return count_invariants(g); }

}  // namespace indmatch

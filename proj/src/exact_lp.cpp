#include "dos/exact_lp.hpp"

#include <map>
#include <stdexcept>

namespace dos {

using Int = boost::multiprecision::cpp_int;

Rational binom_exact(int n, int k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    if (k > n - k) k = n - k;
    Int c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return Rational(c);
}

Rational local_rank_prob_exact(int n, int i, int j, int ell) {
    if (ell - 1 > j - 1 || i - ell > n - j || i - ell < 0) return Rational(0);
    return binom_exact(j - 1, ell - 1) * binom_exact(n - j, i - ell) / binom_exact(n - 1, i - 1);
}

Rational opt_dist_dependent_exact(int n, int h, int j) {
    if (j > h + 1) return Rational(0);
    Rational r(n - h, n - j + 1);
    for (int s = 0; s <= j - 2; ++s) r *= Rational(h - s, n - s);
    return r;
}

LpModelT<Rational> build_known_values_lp_exact(const std::vector<Rational>& values,
                                               const Rational& tail, int h) {
    const int n = static_cast<int>(values.size());
    if (!(0 <= h && h < n)) throw std::invalid_argument("build_known_values_lp_exact: bad h");
    auto value_at = [&](int j) { return j <= n ? values[static_cast<std::size_t>(j - 1)] : tail; };

    LpModelT<Rational> model;
    std::vector<std::vector<int>> col(static_cast<std::size_t>(n + 1));
    for (int i = h + 1; i <= n; ++i) {
        col[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i + 1), -1);
        for (int ell = 1; ell <= i; ++ell)
            col[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell)] =
                model.add_var(VarLabel::stop(i, ell));
    }

    std::map<int, Rational> obj;
    for (int i = h + 1; i <= n; ++i)
        for (int ell = 1; ell <= i; ++ell) {
            Rational c = -tail;
            for (int j = ell; j <= ell + n - i; ++j)
                c += value_at(j) * Rational(i, n) * local_rank_prob_exact(n, i, j, ell);
            obj[col[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell)]] = c;
        }
    model.set_objective(obj, tail);

    for (int i = h + 1; i <= n; ++i)
        for (int ell = 1; ell <= i; ++ell) {
            std::map<int, Rational> row;
            for (int j = h + 1; j < i; ++j)
                for (int s = 1; s <= j; ++s)
                    row[col[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)]] += 1;
            row[col[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell)]] += i;
            model.add_row(row, LpModelT<Rational>::Relation::LessEq, Rational(1));
        }
    return model;
}

LpModelT<Rational> build_sdlp_exact(int n, int h) {
    if (!(0 <= h && h < n)) throw std::invalid_argument("build_sdlp_exact: bad h");
    LpModelT<Rational> model;
    std::vector<std::vector<int>> col(static_cast<std::size_t>(n + 1));
    for (int i = h + 1; i <= n; ++i) {
        col[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i + 1), -1);
        for (int ell = 1; ell <= i; ++ell)
            col[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell)] =
                model.add_var(VarLabel::stop(i, ell));
    }
    const int alpha_col = model.add_var(VarLabel::alpha());
    model.set_objective({{alpha_col, Rational(1)}});

    for (int i = h + 1; i <= n; ++i)
        for (int ell = 1; ell <= i; ++ell) {
            std::map<int, Rational> row;
            for (int j = h + 1; j < i; ++j)
                for (int s = 1; s <= j; ++s)
                    row[col[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)]] += 1;
            row[col[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell)]] += i;
            model.add_row(row, LpModelT<Rational>::Relation::LessEq, Rational(1));
        }

    for (int k = 1; k <= h + 1; ++k) {
        std::map<int, Rational> row;
        Rational denom(0);
        for (int j = 1; j <= k; ++j) denom += opt_dist_dependent_exact(n, h, j);
        row[alpha_col] = denom;
        for (int j = 1; j <= k; ++j)
            for (int i = h + 1; i <= n; ++i)
                for (int ell = 1; ell <= std::min(i, j); ++ell) {
                    Rational c = Rational(i, n) * local_rank_prob_exact(n, i, j, ell);
                    if (c != 0) row[col[static_cast<std::size_t>(i)][static_cast<std::size_t>(ell)]] -= c;
                }
        model.add_row(row, LpModelT<Rational>::Relation::LessEq, Rational(0));
    }
    return model;
}

}  // namespace dos

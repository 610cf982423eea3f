#include "k3lab/zeta.hpp"

#include <map>

namespace k3lab {

namespace {

constexpr int kDim = 22;

Int int_pow(long b, long e) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
    return out;
}

void require_complete(const WeilPolynomial& W) {
    if (W.p < 2) throw DomainError("characteristic must be at least 2");
    if (W.coefficients.size() != kDim + 1 || W.coefficients[0] != 1)
        throw DomainError("polynomial must be monic of degree 22");
}

}  // namespace

std::vector<Int> traces_from_counts(long p, const std::vector<Int>& counts) {
    if (p < 2) throw DomainError("characteristic must be at least 2");
    std::vector<Int> out;
    out.reserve(counts.size());
    for (size_t k = 1; k <= counts.size(); ++k) {
        const Int& n = counts[k - 1];
        if (n < 0) throw DomainError("negative point count");
        out.push_back(n - 1 - int_pow(p, 2 * static_cast<long>(k)));
    }
    return out;
}

std::vector<Int> counts_from_weil(const WeilPolynomial& W, int kmax) {
    require_complete(W);
    if (kmax < 1) throw DomainError("need at least one count");
    const auto& c = W.coefficients;
    std::vector<Int> ps(kmax + 1);
    ps[0] = kDim;
    // Newton: p_k + c_1 p_{k-1} + ... + c_{k-1} p_1 + k c_k = 0 for k <= 22,
    // and the same without the k c_k tail beyond the degree
    for (int k = 1; k <= kmax; ++k) {
        Int s = 0;
        int top = std::min(k - 1, kDim);
        for (int j = 1; j <= top; ++j) s += c[j] * ps[k - j];
        if (k <= kDim) s += Int(k) * c[k];
        ps[k] = -s;
    }
    std::vector<Int> out(kmax);
    for (int k = 1; k <= kmax; ++k) out[k - 1] = 1 + int_pow(W.p, 2 * k) + ps[k];
    return out;
}

std::vector<Int> newton_charpoly(const std::vector<Int>& traces) {
    if (traces.size() > kDim) throw DomainError("more traces than the degree allows");
    size_t m = traces.size();
    std::vector<Int> e(m + 1);
    e[0] = 1;
    for (size_t k = 1; k <= m; ++k) {
        Int s = 0;
        int sgn = 1;
        for (size_t j = 1; j <= k; ++j) {
            s += sgn * e[k - j] * traces[j - 1];
            sgn = -sgn;
        }
        Int q, r;
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(k));
        if (r != 0) throw NonIntegralError("Newton identity step " + std::to_string(k) +
                                           " is not integral; input counts are inconsistent");
        e[k] = q;
    }
    std::vector<Int> out(m + 1);
    for (size_t k = 0; k <= m; ++k) out[k] = (k % 2 == 0) ? e[k] : -e[k];
    return out;
}

WeilPolynomial apply_functional_equation(long p, const std::vector<Int>& partial, int sign) {
    if (p < 2) throw DomainError("characteristic must be at least 2");
    if (partial.size() < 12 || partial.size() > kDim + 1)
        throw DomainError("need between 11 and 22 coefficients after the leading 1");
    if (partial[0] != 1) throw DomainError("polynomial must be monic");
    if (sign < -1 || sign > 1) throw DomainError("sign must be -1, 0 or +1");

    auto try_sign = [&](int s) -> std::optional<std::vector<Int>> {
        std::vector<Int> c(kDim + 1);
        std::vector<bool> have(kDim + 1, false);
        for (size_t i = 0; i < partial.size(); ++i) {
            c[i] = partial[i];
            have[i] = true;
        }
        for (int i = 0; i <= kDim / 2; ++i) {
            int j = kDim - i;
            Int want = Int(s) * int_pow(p, kDim - 2 * i) * c[i];
            if (have[j]) {
                if (c[j] != want) return std::nullopt;
            } else {
                c[j] = want;
            }
        }
        return c;
    };

    std::vector<std::pair<int, std::vector<Int>>> viable;
    for (int s : {+1, -1}) {
        if (sign != 0 && s != sign) continue;
        if (auto c = try_sign(s)) viable.emplace_back(s, std::move(*c));
    }
    if (viable.empty())
        throw InconsistentError("coefficients violate the functional equation for " +
                                std::string(sign == 0 ? "both signs" : "the requested sign"));
    if (viable.size() > 1)
        throw DomainError("functional-equation sign undetermined; pass it explicitly");

    WeilPolynomial W;
    W.p = p;
    W.coefficients = std::move(viable.front().second);
    W.sign = viable.front().first;
    return W;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) throw DomainError("empty polynomial");
    std::vector<Int> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::optional<std::vector<Int>> poly_exact_divide(const std::vector<Int>& num,
                                                  const std::vector<Int>& den) {
    if (den.empty() || den[0] == 0) throw DomainError("invalid divisor polynomial");
    if (num.size() < den.size()) return std::nullopt;
    std::vector<Int> rem = num;
    std::vector<Int> quot(num.size() - den.size() + 1, 0);
    for (size_t i = 0; i < quot.size(); ++i) {
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(), den[0].get_mpz_t());
        if (r != 0) return std::nullopt;
        quot[i] = q;
        for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= q * den[j];
    }
    for (const Int& c : rem)
        if (c != 0) return std::nullopt;
    return quot;
}

std::vector<Int> cyclotomic(long n) {
    if (n < 1) throw DomainError("cyclotomic order must be positive");
    std::map<long, std::vector<Int>> phi;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        std::vector<Int> num(d + 1, 0);
        num[0] = 1;
        num[d] = -1;
        for (const auto& [e, f] : phi) {
            if (d % e != 0) continue;
            auto q = poly_exact_divide(num, f);
            if (!q) throw InconsistentError("cyclotomic recursion failed");
            num = std::move(*q);
        }
        phi[d] = std::move(num);
    }
    return phi[n];
}

std::vector<Int> scaled_cyclotomic(long n, long p) {
    if (p < 2) throw DomainError("characteristic must be at least 2");
    std::vector<Int> f = cyclotomic(n);
    for (size_t i = 0; i < f.size(); ++i) f[i] *= int_pow(p, static_cast<long>(i));
    return f;
}

long picard_upper_bound(const WeilPolynomial& W, long cyclotomic_order_bound) {
    require_complete(W);
    if (cyclotomic_order_bound < 1) throw DomainError("order bound must be positive");
    std::vector<Int> rem = W.coefficients;
    long total = 0;
    for (long n = 1; n <= cyclotomic_order_bound; ++n) {
        std::vector<Int> g = scaled_cyclotomic(n, W.p);
        if (g.size() > rem.size()) continue;
        long deg = static_cast<long>(g.size()) - 1;
        while (true) {
            auto q = poly_exact_divide(rem, g);
            if (!q) break;
            rem = std::move(*q);
            total += deg;
        }
    }
    return total;
}

std::vector<Int> divide_out_algebraic(const std::vector<Int>& coeffs, long p, long r) {
    if (p < 2) throw DomainError("characteristic must be at least 2");
    if (r < 0) throw DomainError("negative rank");
    if (coeffs.empty() || coeffs[0] != 1) throw DomainError("polynomial must be monic");
    std::vector<Int> rem = coeffs;
    std::vector<Int> lin = {Int(1), Int(-p)};
    for (long i = 0; i < r; ++i) {
        auto q = poly_exact_divide(rem, lin);
        if (!q)
            throw InconsistentError("(T - p)^" + std::to_string(r) +
                                    " does not divide the polynomial; claimed algebraic rank is wrong");
        rem = std::move(*q);
    }
    return rem;
}

long compare_reductions(long r1, const Int& d1, long r2, const Int& d2) {
    auto check_squarefree = [](const Int& d) {
        if (d == 0) throw DomainError("discriminant square-class must be nonzero");
        Int a = abs(d);
        for (Int e = 2; e * e <= a; ++e) {
            if (a % (e * e) == 0) throw DomainError("square-class representative must be squarefree");
            if (e > 1000000) throw SizeLimitError("square-class representative too large to validate");
        }
    };
    check_squarefree(d1);
    check_squarefree(d2);
    if (r1 < 0 || r2 < 0) throw DomainError("negative rank bound");
    if (r1 == r2 && d1 != d2) return r1 - 1;
    return std::min(r1, r2);
}

}  // namespace k3lab

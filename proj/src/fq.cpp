#include "k3lab/fq.hpp"

#include <algorithm>

namespace k3lab {

namespace {

constexpr long kMaxQ = 531441;     // 3^12
constexpr long kAddTableMaxQ = 2048;

bool small_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<long> unpack(long m, long p, int len) {
    std::vector<long> d(len, 0);
    for (int i = 0; i < len; ++i) {
        d[i] = m % p;
        m /= p;
    }
    return d;
}

long pack(const std::vector<long>& d, long p, int len) {
    long m = 0;
    for (int i = len - 1; i >= 0; --i) m = m * p + d[i];
    return m;
}

// remainder test against a monic divisor, both constant-term-first
bool monic_divides(const std::vector<long>& div, std::vector<long> f, long p) {
    int d = static_cast<int>(div.size()) - 1;
    for (int i = static_cast<int>(f.size()) - 1; i >= d; --i) {
        long c = f[i];
        if (c == 0) continue;
        for (int j = 0; j <= d; ++j) {
            long t = (f[i - d + j] - c * div[j]) % p;
            f[i - d + j] = t < 0 ? t + p : t;
        }
    }
    for (int i = 0; i < d; ++i)
        if (f[i] != 0) return false;
    return true;
}

bool is_irreducible(const std::vector<long>& f, long p, int k) {
    for (int d = 1; 2 * d <= k; ++d) {
        long nd = 1;
        for (int i = 0; i < d; ++i) nd *= p;
        for (long m = 0; m < nd; ++m) {
            std::vector<long> div = unpack(m, p, d + 1);
            div[d] = 1;
            if (monic_divides(div, f, p)) return false;
        }
    }
    return true;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

FqContext::FqContext(long p, int k, bool allow_char2) : p_(p), k_(k) {
    if (!small_prime(p)) throw FieldError("characteristic must be prime, got " + std::to_string(p));
    if (p == 2 && !allow_char2) throw FieldError("characteristic 2 rejected for this operation");
    if (k < 1 || k > 12) throw FieldError("extension degree must lie in [1, 12], got " + std::to_string(k));
    q_ = 1;
    for (int i = 0; i < k; ++i) {
        q_ *= p;
        if (q_ > kMaxQ) throw SizeLimitError("field size exceeds 3^12");
    }

    if (k == 1) {
        mod_ = {0, 1};
    } else {
        long nk = q_;
        for (long m = 0; m < nk; ++m) {
            std::vector<long> f = unpack(m, p, k + 1);
            f[k] = 1;
            if (is_irreducible(f, p, k)) {
                mod_ = f;
                break;
            }
        }
        if (mod_.empty()) throw InconsistentError("no irreducible modulus found");
    }

    neg_.resize(q_);
    for (long a = 0; a < q_; ++a) {
        std::vector<long> d = unpack(a, p_, k_);
        for (auto& x : d) x = x == 0 ? 0 : p_ - x;
        neg_[a] = pack(d, p_, k_);
    }

    if (q_ == 2) {
        gen_ = 1;
    } else {
        std::vector<long> fac = prime_factors(q_ - 1);
        for (long g = 2; g < q_; ++g) {
            bool ok = true;
            for (long r : fac) {
                long e = (q_ - 1) / r;
                long acc = 1, base = g;
                while (e > 0) {
                    if (e & 1) acc = mul_poly(acc, base);
                    base = mul_poly(base, base);
                    e >>= 1;
                }
                if (acc == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen_ = g;
                break;
            }
        }
        if (gen_ == 0) throw InconsistentError("no multiplicative generator found");
    }

    expt_.resize(q_ - 1);
    logt_.assign(q_, -1);
    expt_[0] = 1;
    logt_[1] = 0;
    for (long i = 1; i < q_ - 1; ++i) {
        expt_[i] = mul_poly(expt_[i - 1], gen_);
        logt_[expt_[i]] = i;
    }

    if (p_ != 2) {
        chit_.assign(q_, 0);
        for (long i = 0; i < q_ - 1; ++i) chit_[expt_[i]] = (i % 2 == 0) ? 1 : -1;
    }

    if (q_ <= kAddTableMaxQ) {
        addtab_.resize(q_ * q_);
        for (long a = 0; a < q_; ++a)
            for (long b = 0; b < q_; ++b) addtab_[a * q_ + b] = add_slow(a, b);
    }
}

long FqContext::add_slow(long a, long b) const {
    long out = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
        long d = a % p_ + b % p_;
        if (d >= p_) d -= p_;
        out += d * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

long FqContext::mul_poly(long a, long b) const {
    std::vector<long> da = unpack(a, p_, k_), db = unpack(b, p_, k_);
    std::vector<long> buf(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < k_; ++j) buf[i + j] = (buf[i + j] + da[i] * db[j]) % p_;
    }
    for (int i = 2 * k_ - 2; i >= k_; --i) {
        long c = buf[i];
        if (c == 0) continue;
        buf[i] = 0;
        for (int j = 0; j < k_; ++j) {
            long t = (buf[i - k_ + j] - c * mod_[j]) % p_;
            buf[i - k_ + j] = t < 0 ? t + p_ : t;
        }
    }
    buf.resize(k_);
    return pack(buf, p_, k_);
}

long FqContext::inv(long a) const {
    if (a == 0) throw DomainError("inverse of zero");
    long l = logt_[a];
    return l == 0 ? 1 : expt_[q_ - 1 - l];
}

long FqContext::pow(long a, long e) const {
    if (e < 0) throw DomainError("negative exponent");
    if (a == 0) return e == 0 ? 1 : 0;
    long r = (logt_[a] * (e % (q_ - 1))) % (q_ - 1);
    return expt_[r];
}

int FqContext::chi(long a) const {
    if (chit_.empty()) throw FieldError("quadratic character undefined in characteristic 2");
    return chit_[a];
}

long FqContext::from_int(const Int& n) const {
    mpz_class r = n % p_;
    if (r < 0) r += p_;
    return r.get_si();
}

}  // namespace k3lab

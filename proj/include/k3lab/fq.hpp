#pragma once

#include <vector>

#include "k3lab/types.hpp"

namespace k3lab {

// F_{p^k} with table-driven arithmetic. Elements are integers in [0, q)
// packing the polynomial representation in base p, least significant digit
// first, so prime-field constants keep their value in every extension.
class FqContext {
  public:
    // The modulus is the monic irreducible of degree k whose non-leading
    // coefficient vector, read as a base-p integer, is smallest; this pins
    // one field model per (p, k) without Conway tables. p = 2 is accepted
    // only where the caller says so, because the double-cover model w^2 = f
    // breaks in characteristic 2. k <= 12 and q <= 3^12.
    FqContext(long p, int k, bool allow_char2 = false);

    long p() const { return p_; }
    int k() const { return k_; }
    long q() const { return q_; }

    long add(long a, long b) const {
        if (addtab_.empty()) return add_slow(a, b);
        return addtab_[a * q_ + b];
    }
    long sub(long a, long b) const { return add(a, neg_[b]); }
    long neg(long a) const { return neg_[a]; }
    long mul(long a, long b) const {
        if (a == 0 || b == 0) return 0;
        long s = logt_[a] + logt_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return expt_[s];
    }
    long inv(long a) const;
    long pow(long a, long e) const;
    long frob(long a) const { return pow(a, p_); }

    // quadratic character: 0 at 0, else parity of the discrete log
    int chi(long a) const;

    // reduction of an integer into the prime subfield
    long from_int(const Int& n) const;

    long generator() const { return gen_; }
    // monic modulus coefficients, constant term first, length k+1
    const std::vector<long>& modulus() const { return mod_; }

  private:
    long add_slow(long a, long b) const;
    long mul_poly(long a, long b) const;  // table-free, used during setup

    long p_ = 0, q_ = 0, gen_ = 0;
    int k_ = 0;
    std::vector<long> mod_;
    std::vector<long> expt_, logt_, neg_;
    std::vector<long> addtab_;  // full table when q is small
    std::vector<signed char> chit_;
};

}  // namespace k3lab

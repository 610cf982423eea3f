#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3lab/types.hpp"

namespace k3lab {

// Variable list shared by polynomials of one ambient ring. Weights support
// the degree-3 cover coordinate of the weighted projective space P(1,1,1,3).
struct VarContext {
    std::vector<std::string> names;
    std::vector<long> weights;  // one per name, defaulting to 1

    VarContext() = default;
    explicit VarContext(std::vector<std::string> ns, std::vector<long> ws = {});

    size_t arity() const { return names.size(); }
    bool operator==(const VarContext& o) const {
        return names == o.names && weights == o.weights;
    }
    bool operator!=(const VarContext& o) const { return !(*this == o); }
    std::string declaration() const;  // the "vars ..." fixture line payload
};

using Exps = std::vector<int>;

// Graded lexicographic, largest first: plain total degree, tie broken by the
// exponent vector itself descending. Map iteration order is the canonical
// term order of the text format.
struct GrlexDesc {
    bool operator()(const Exps& a, const Exps& b) const {
        long sa = 0, sb = 0;
        for (int e : a) sa += e;
        for (int e : b) sb += e;
        if (sa != sb) return sa > sb;
        return a > b;
    }
};

using TermMap = std::map<Exps, Int, GrlexDesc>;

// Sparse exact-integer multivariate polynomial.
class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(VarContext ctx) : ctx_(std::move(ctx)) {}

    static MultiPoly constant(const VarContext& ctx, const Int& c);
    static MultiPoly variable(const VarContext& ctx, size_t index, int exponent = 1);

    const VarContext& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // zero coefficients are never stored
    void add_term(const Exps& e, const Int& c);
    Int coefficient(const Exps& e) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Int& c) const;
    MultiPoly pow(long e) const;
    bool operator==(const MultiPoly& o) const {
        return ctx_ == o.ctx_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    long weighted_degree(const Exps& e) const;
    // weighted-homogeneous test; degree is meaningful only when true
    bool is_homogeneous(long* degree = nullptr) const;

    Int eval(const std::vector<Int>& point) const;

    // canonical text: terms in map order, each [+-]c*v^e with coefficient
    // always printed and '^1' omitted; parse round-trips bit-exactly
    std::string to_string() const;
    static MultiPoly parse(const VarContext& ctx, const std::string& body);

  private:
    VarContext ctx_;
    TermMap terms_;
};

// FNV-1a over the canonical text, the fixture checksum function.
std::uint64_t fnv1a64(const std::string& s);
std::string checksum_hex(const MultiPoly& p);

// exact substitution, one substituent per variable of f
MultiPoly compose(const MultiPoly& f, const std::vector<MultiPoly>& subs);

std::vector<MultiPoly> partials(const MultiPoly& f);

// f3^2 - 4 f2 f4 for plane forms of degrees 2, 3, 4
MultiPoly branch_sextic(const MultiPoly& f2, const MultiPoly& f3, const MultiPoly& f4);

// x = x0 y0, y = x0 y1, z = x1 y0, w = x1 y1
std::vector<MultiPoly> segre_components(const VarContext& p1p1, const VarContext& p3);

struct SegreTransfer {
    MultiPoly F;         // degree-n form on P^3, free of the monomial x*w
    MultiPoly relation;  // xw - yz
};

// Bidegree-(n,n) form on P^1 x P^1 to its canonical preimage on the Segre
// quadric: monomials are rewritten to avoid x*w, which fixes the coset
// representative mod (xw - yz).
SegreTransfer segre_transfer(const MultiPoly& g);

// normal form mod (xw - yz) that prefers yz over xw
MultiPoly xw_eliminate(const MultiPoly& F);

struct NodalShape {
    bool node_at_origin = false;  // origin meaning (0:0:0:1)
    std::string reason;           // failure explanation
    Int cone_det = 0;             // det of the matrix of 2*f2 when nodal
};

// Quartic of the shape f4 + f3 w + f2 w^2 with nondegenerate quadratic cone
// at (0:0:0:1): no w^3 or w^4 terms and det of the doubled f2 matrix nonzero.
NodalShape nodal_shape_check(const MultiPoly& F);

}  // namespace k3lab

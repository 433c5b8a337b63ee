#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace edgecone {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<RatVector>;

// Either the bipartite quotient Z^{m+n}/(1,...,1,-1,...,-1) or plain Z^d.
class QuotientContext {
public:
    static QuotientContext bipartite(int m, int n);
    static QuotientContext plain(int d);

    bool degenerate() const { return degenerate_; }
    int m() const { return m_; }
    int n() const { return n_; }
    // length of coordinate vectors
    int ambient_dim() const { return degenerate_ ? m_ : m_ + n_; }
    // rank of N (and of M)
    int rank() const { return degenerate_ ? m_ : m_ + n_ - 1; }
    IntVector w() const;

    // N and M both embed in Z^rank(); the pairing becomes the dot product there.
    IntVector reduce_n(std::span<const Integer> canonical) const;
    IntVector expand_n(std::span<const Integer> reduced) const;
    IntVector reduce_m(std::span<const Integer> coords) const;
    IntVector expand_m(std::span<const Integer> reduced) const;

    bool operator==(const QuotientContext&) const = default;

private:
    QuotientContext(int m, int n, bool degenerate) : m_(m), n_(n), degenerate_(degenerate) {}
    int m_ = 0;
    int n_ = 0;
    bool degenerate_ = false;
};

class NVector {
public:
    NVector(QuotientContext ctx, IntVector canonical);
    const QuotientContext& context() const { return ctx_; }
    const IntVector& coords() const { return coords_; }
    bool is_zero() const;
    bool operator==(const NVector&) const = default;

private:
    QuotientContext ctx_;
    IntVector coords_;
};

class MVector {
public:
    // throws PreconditionError when coords is not orthogonal to w
    MVector(QuotientContext ctx, IntVector coords);
    const QuotientContext& context() const { return ctx_; }
    const IntVector& coords() const { return coords_; }
    bool operator==(const MVector&) const = default;

private:
    QuotientContext ctx_;
    IntVector coords_;
};

NVector canonicalize(std::span<const Integer> raw, const QuotientContext& ctx);
bool in_m(std::span<const Integer> coords, const QuotientContext& ctx);
Integer pairing(const MVector& u, const NVector& v);
NVector primitive_part(const NVector& v);
bool is_smooth_ray_set(std::span<const NVector> rays, const QuotientContext& ctx);

// plain integer helpers
IntVector to_integers(std::span<const long long> v);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Integer content(std::span<const Integer> v);
IntVector primitive(std::span<const Integer> v);
IntVector primitive(std::span<const Rational> v);
std::vector<Integer> smith_invariant_factors(IntMatrix rows);
std::string format_vector(std::span<const Integer> v);

// exact linear algebra over Q
int rank(RatMatrix rows);
int rank(const IntMatrix& rows);
// basis of { x : A x = 0 }, ncols = length of x
RatMatrix nullspace(RatMatrix rows, int ncols);
// basis of the row space, in echelon form
IntMatrix row_space_basis(const IntMatrix& rows);
RatMatrix to_rational(const IntMatrix& rows);

} // namespace edgecone

#include "edgecone/lattice.hpp"

#include "edgecone/error.hpp"

#include <algorithm>
#include <sstream>

namespace edgecone {

QuotientContext QuotientContext::bipartite(int m, int n)
{
    if (m < 1 || n < 1)
        throw ParseError("bipartite context needs m >= 1 and n >= 1");
    return QuotientContext(m, n, false);
}

QuotientContext QuotientContext::plain(int d)
{
    if (d < 1)
        throw ParseError("ambient dimension must be positive");
    return QuotientContext(d, 0, true);
}

IntVector QuotientContext::w() const
{
    IntVector out;
    if (degenerate_)
        return out;
    out.assign(m_ + n_, Integer(1));
    for (int j = 0; j < n_; ++j)
        out[m_ + j] = -1;
    return out;
}

static void check_length(std::span<const Integer> v, int expected)
{
    if (static_cast<int>(v.size()) != expected)
        throw ParseError("vector has length " + std::to_string(v.size()) + ", expected " +
                         std::to_string(expected));
}

IntVector QuotientContext::reduce_n(std::span<const Integer> canonical) const
{
    check_length(canonical, ambient_dim());
    if (!degenerate_ && canonical.back() != 0)
        throw InternalError("N vector is not canonical");
    return IntVector(canonical.begin(), canonical.begin() + rank());
}

IntVector QuotientContext::expand_n(std::span<const Integer> reduced) const
{
    check_length(reduced, rank());
    IntVector out(reduced.begin(), reduced.end());
    if (!degenerate_)
        out.emplace_back(0);
    return out;
}

IntVector QuotientContext::reduce_m(std::span<const Integer> coords) const
{
    check_length(coords, ambient_dim());
    return IntVector(coords.begin(), coords.begin() + rank());
}

IntVector QuotientContext::expand_m(std::span<const Integer> reduced) const
{
    check_length(reduced, rank());
    IntVector out(reduced.begin(), reduced.end());
    if (!degenerate_) {
        Integer last = 0;
        for (int i = 0; i < m_; ++i)
            last += reduced[i];
        for (int j = m_; j < rank(); ++j)
            last -= reduced[j];
        out.push_back(last);
    }
    return out;
}

NVector::NVector(QuotientContext ctx, IntVector canonical) : ctx_(ctx), coords_(std::move(canonical))
{
    check_length(coords_, ctx_.ambient_dim());
    if (!ctx_.degenerate() && coords_.back() != 0)
        throw InternalError("NVector built from a non-canonical representative");
}

bool NVector::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& x) { return x == 0; });
}

bool in_m(std::span<const Integer> coords, const QuotientContext& ctx)
{
    if (static_cast<int>(coords.size()) != ctx.ambient_dim())
        return false;
    if (ctx.degenerate())
        return true;
    Integer s = 0;
    for (int i = 0; i < ctx.m(); ++i)
        s += coords[i];
    for (int j = 0; j < ctx.n(); ++j)
        s -= coords[ctx.m() + j];
    return s == 0;
}

MVector::MVector(QuotientContext ctx, IntVector coords) : ctx_(ctx), coords_(std::move(coords))
{
    check_length(coords_, ctx_.ambient_dim());
    if (!in_m(coords_, ctx_))
        throw PreconditionError("degree " + format_vector(coords_) +
                                " is not in M: left and right coordinate sums differ");
}

NVector canonicalize(std::span<const Integer> raw, const QuotientContext& ctx)
{
    check_length(raw, ctx.ambient_dim());
    IntVector out(raw.begin(), raw.end());
    if (!ctx.degenerate()) {
        Integer k = out.back();
        IntVector w = ctx.w();
        for (size_t i = 0; i < out.size(); ++i)
            out[i] += k * w[i];
    }
    return NVector(ctx, std::move(out));
}

Integer pairing(const MVector& u, const NVector& v)
{
    if (!(u.context() == v.context()))
        throw PreconditionError("pairing of vectors from different contexts");
    return dot(u.coords(), v.coords());
}

NVector primitive_part(const NVector& v)
{
    if (v.is_zero())
        throw PreconditionError("primitive part of the zero vector");
    return NVector(v.context(), primitive(std::span<const Integer>(v.coords())));
}

bool is_smooth_ray_set(std::span<const NVector> rays, const QuotientContext& ctx)
{
    IntMatrix rows;
    for (const NVector& r : rays) {
        if (!(r.context() == ctx))
            throw PreconditionError("ray from a different context");
        rows.push_back(ctx.reduce_n(r.coords()));
    }
    if (rows.empty())
        return true;
    std::vector<Integer> d = smith_invariant_factors(rows);
    if (d.size() != rows.size())
        throw PreconditionError("rays are linearly dependent");
    return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
}

IntVector to_integers(std::span<const long long> v)
{
    IntVector out;
    out.reserve(v.size());
    for (long long x : v)
        out.emplace_back(static_cast<long>(x));
    return out;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b)
{
    if (a.size() != b.size())
        throw PreconditionError("dot product of vectors with different lengths");
    Integer s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Integer content(std::span<const Integer> v)
{
    Integer g = 0;
    for (const Integer& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntVector primitive(std::span<const Integer> v)
{
    Integer g = content(v);
    IntVector out(v.begin(), v.end());
    if (g > 1)
        for (Integer& x : out)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return out;
}

IntVector primitive(std::span<const Rational> v)
{
    Integer l = 1;
    for (const Rational& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out;
    out.reserve(v.size());
    for (const Rational& x : v) {
        Integer y = x.get_num() * (l / x.get_den());
        out.push_back(y);
    }
    return primitive(std::span<const Integer>(out));
}

std::vector<Integer> smith_invariant_factors(IntMatrix a)
{
    std::vector<Integer> out;
    if (a.empty())
        return out;
    const size_t rows = a.size();
    const size_t cols = a[0].size();
    for (size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            size_t pr = rows, pc = cols;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) {
                std::sort(out.begin(), out.end());
                return out;
            }
            std::swap(a[t], a[pr]);
            for (auto& row : a)
                std::swap(row[t], row[pc]);

            bool clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                if (a[i][t] != 0)
                    clean = false;
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                if (a[t][j] != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // pivot must divide the whole trailing block
            bool divides = true;
            for (size_t i = t + 1; i < rows && divides; ++i)
                for (size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
                        for (size_t k = t; k < cols; ++k)
                            a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        out.push_back(abs(a[t][t]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string format_vector(std::span<const Integer> v)
{
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ',';
        os << v[i].get_str();
    }
    os << ']';
    return os.str();
}

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(RatMatrix& a, int ncols)
{
    std::vector<int> pivots;
    size_t r = 0;
    for (int c = 0; c < ncols && r < a.size(); ++c) {
        size_t p = r;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[r], a[p]);
        Rational inv = 1 / a[r][c];
        for (int j = c; j < ncols; ++j)
            a[r][j] *= inv;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rational f = a[i][c];
            for (int j = c; j < ncols; ++j)
                a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

RatMatrix to_rational(const IntMatrix& rows)
{
    RatMatrix out;
    out.reserve(rows.size());
    for (const IntVector& r : rows)
        out.emplace_back(r.begin(), r.end());
    return out;
}

int rank(RatMatrix rows)
{
    if (rows.empty())
        return 0;
    return static_cast<int>(rref(rows, static_cast<int>(rows[0].size())).size());
}

int rank(const IntMatrix& rows)
{
    return rank(to_rational(rows));
}

RatMatrix nullspace(RatMatrix rows, int ncols)
{
    std::vector<int> pivots = rref(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots)
        is_pivot[c] = true;
    RatMatrix basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f])
            continue;
        RatVector x(ncols, Rational(0));
        x[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = -rows[i][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

IntMatrix row_space_basis(const IntMatrix& rows)
{
    if (rows.empty())
        return {};
    RatMatrix a = to_rational(rows);
    std::vector<int> pivots = rref(a, static_cast<int>(rows[0].size()));
    IntMatrix out;
    for (size_t i = 0; i < pivots.size(); ++i)
        out.push_back(primitive(std::span<const Rational>(a[i])));
    return out;
}

} // namespace edgecone

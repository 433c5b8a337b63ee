#include "edgecone/oracle.hpp"

#include "edgecone/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace edgecone {

namespace {

struct DDRay {
    IntVector c;
    IndexSet zeros;
};

// extreme rays of { c : a c >= 0 } for a matrix of full column rank k
std::vector<DDRay> double_description(const IntMatrix& a, int k)
{
    const size_t rows = a.size();
    std::vector<size_t> basis_rows;
    RatMatrix chosen;
    for (size_t i = 0; i < rows && static_cast<int>(basis_rows.size()) < k; ++i) {
        RatMatrix trial = chosen;
        trial.emplace_back(a[i].begin(), a[i].end());
        if (rank(trial) > static_cast<int>(chosen.size())) {
            chosen = std::move(trial);
            basis_rows.push_back(i);
        }
    }
    if (static_cast<int>(basis_rows.size()) != k)
        throw InternalError("constraint matrix is rank deficient");

    // columns of the inverse of the chosen k x k block
    RatMatrix aug(k, RatVector(2 * k, Rational(0)));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            aug[i][j] = chosen[i][j];
        aug[i][k + i] = 1;
    }
    for (int col = 0; col < k; ++col) {
        int p = col;
        while (aug[p][col] == 0)
            ++p;
        std::swap(aug[p], aug[col]);
        Rational inv = 1 / aug[col][col];
        for (auto& x : aug[col])
            x *= inv;
        for (int i = 0; i < k; ++i) {
            if (i == col || aug[i][col] == 0)
                continue;
            Rational f = aug[i][col];
            for (int j = 0; j < 2 * k; ++j)
                aug[i][j] -= f * aug[col][j];
        }
    }
    std::vector<DDRay> cur;
    std::vector<bool> processed(rows, false);
    for (size_t r : basis_rows)
        processed[r] = true;
    for (int j = 0; j < k; ++j) {
        RatVector col(k);
        for (int i = 0; i < k; ++i)
            col[i] = aug[i][k + j];
        DDRay ray{primitive(std::span<const Rational>(col)), IndexSet(rows)};
        for (int i = 0; i < k; ++i)
            if (i != j)
                ray.zeros.set(basis_rows[i]);
        cur.push_back(std::move(ray));
    }

    for (size_t t = 0; t < rows; ++t) {
        if (processed[t])
            continue;
        processed[t] = true;
        std::vector<Integer> val(cur.size());
        std::vector<size_t> pos, neg;
        std::vector<DDRay> next;
        for (size_t i = 0; i < cur.size(); ++i) {
            val[i] = dot(a[t], cur[i].c);
            if (val[i] > 0)
                pos.push_back(i);
            else if (val[i] < 0)
                neg.push_back(i);
        }
        for (size_t i = 0; i < cur.size(); ++i) {
            if (val[i] < 0)
                continue;
            DDRay r = cur[i];
            if (val[i] == 0)
                r.zeros.set(t);
            next.push_back(std::move(r));
        }
        for (size_t p : pos) {
            for (size_t q : neg) {
                IndexSet common = cur[p].zeros & cur[q].zeros;
                if (static_cast<int>(common.count()) < k - 2)
                    continue;
                bool adjacent = true;
                for (size_t r = 0; r < cur.size() && adjacent; ++r)
                    if (r != p && r != q && common.is_subset_of(cur[r].zeros))
                        adjacent = false;
                if (!adjacent)
                    continue;
                IntVector c(k);
                for (int i = 0; i < k; ++i)
                    c[i] = val[p] * cur[q].c[i] - val[q] * cur[p].c[i];
                common.set(t);
                next.push_back(DDRay{primitive(std::span<const Integer>(c)), common});
            }
        }
        cur = std::move(next);
    }
    return cur;
}

bool lex_less(const IntVector& x, const IntVector& y)
{
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](const Integer& p, const Integer& q) { return cmp(p, q) < 0; });
}

int rank_of_rows(const IntMatrix& all, const IndexSet& pick)
{
    IntMatrix rows;
    for (size_t i = pick.find_first(); i != IndexSet::npos; i = pick.find_next(i))
        rows.push_back(all[i]);
    return rank(rows);
}

} // namespace

Cone Cone::from_generators(const IntMatrix& gens)
{
    if (gens.empty())
        throw PreconditionError("cone needs at least one generator");
    const int d = static_cast<int>(gens[0].size());
    for (const IntVector& g : gens) {
        if (static_cast<int>(g.size()) != d)
            throw ParseError("generators have different lengths");
        if (std::all_of(g.begin(), g.end(), [](const Integer& x) { return x == 0; }))
            throw PreconditionError("zero generator");
    }
    Cone c;
    c.ambient_dim_ = d;
    IntMatrix basis = row_space_basis(gens);
    const int k = static_cast<int>(basis.size());
    c.dim_ = k;
    for (const RatVector& e : nullspace(to_rational(basis), d))
        c.equations_.push_back(primitive(std::span<const Rational>(e)));

    IntMatrix a;
    for (const IntVector& g : gens) {
        IntVector row(k);
        for (int i = 0; i < k; ++i)
            row[i] = dot(g, basis[i]);
        a.push_back(std::move(row));
    }
    std::vector<DDRay> dd = double_description(a, k);
    IntMatrix normals;
    for (const DDRay& r : dd) {
        IntVector y(d, Integer(0));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < d; ++j)
                y[j] += r.c[i] * basis[i][j];
        normals.push_back(primitive(std::span<const Integer>(y)));
    }
    if (rank(normals) != k)
        throw PreconditionError("cone is not strongly convex");
    std::sort(normals.begin(), normals.end(), lex_less);
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    c.facets_ = std::move(normals);

    const size_t nf = c.facets_.size();
    for (const IntVector& g : gens) {
        IntVector p = primitive(std::span<const Integer>(g));
        if (std::find(c.rays_.begin(), c.rays_.end(), p) != c.rays_.end())
            continue;
        IndexSet z(nf);
        for (size_t f = 0; f < nf; ++f)
            if (dot(c.facets_[f], p) == 0)
                z.set(f);
        if (rank_of_rows(c.facets_, z) == k - 1) {
            c.rays_.push_back(std::move(p));
            c.ray_facets_.push_back(std::move(z));
        }
    }
    c.facet_rays_.assign(nf, IndexSet(c.rays_.size()));
    for (size_t r = 0; r < c.rays_.size(); ++r)
        for (size_t f = 0; f < nf; ++f)
            if (c.ray_facets_[r].test(f))
                c.facet_rays_[f].set(r);
    return c;
}

bool Cone::contains(std::span<const Integer> x) const
{
    if (static_cast<int>(x.size()) != ambient_dim_)
        throw PreconditionError("vector length does not match the cone");
    for (const IntVector& e : equations_)
        if (dot(e, x) != 0)
            return false;
    for (const IntVector& f : facets_)
        if (dot(f, x) < 0)
            return false;
    return true;
}

int Cone::ray_index(std::span<const Integer> primitive_ray) const
{
    for (size_t i = 0; i < rays_.size(); ++i)
        if (std::equal(rays_[i].begin(), rays_[i].end(), primitive_ray.begin(), primitive_ray.end()))
            return static_cast<int>(i);
    return -1;
}

Cone dualize(const Cone& c)
{
    return Cone::from_generators(c.facet_normals());
}

FaceDescriptor face_from_rays(const Cone& c, const IndexSet& rays)
{
    const size_t nf = c.facet_normals().size();
    IndexSet facets(nf);
    facets.set();
    for (size_t r = rays.find_first(); r != IndexSet::npos; r = rays.find_next(r))
        facets &= c.facets_of_ray(static_cast<int>(r));
    IndexSet closure(c.rays().size());
    closure.set();
    for (size_t f = facets.find_first(); f != IndexSet::npos; f = facets.find_next(f))
        closure &= c.rays_of_facet(static_cast<int>(f));
    FaceDescriptor out;
    IntMatrix coords;
    for (size_t r = closure.find_first(); r != IndexSet::npos; r = closure.find_next(r)) {
        out.rays.push_back(static_cast<int>(r));
        coords.push_back(c.rays()[r]);
    }
    for (size_t f = facets.find_first(); f != IndexSet::npos; f = facets.find_next(f))
        out.facets.push_back(static_cast<int>(f));
    out.dim = rank(coords);
    return out;
}

FaceDescriptor minimal_face_containing(const Cone& c, std::span<const int> rays)
{
    IndexSet s(c.rays().size());
    for (int r : rays) {
        if (r < 0 || r >= static_cast<int>(c.rays().size()))
            throw PreconditionError("ray index out of range");
        s.set(r);
    }
    return face_from_rays(c, s);
}

std::vector<FaceDescriptor> face_lattice(const Cone& c, int max_dim)
{
    std::vector<FaceDescriptor> out;
    const size_t nr = c.rays().size();
    std::vector<IndexSet> layer{IndexSet(nr)};
    out.push_back(face_from_rays(c, layer[0]));
    for (int d = 1; d <= max_dim && d <= c.dim(); ++d) {
        std::set<IndexSet> seen;
        std::vector<FaceDescriptor> found;
        for (const IndexSet& f : layer) {
            for (size_t r = 0; r < nr; ++r) {
                if (f.test(r))
                    continue;
                IndexSet s = f;
                s.set(r);
                FaceDescriptor g = face_from_rays(c, s);
                if (g.dim != d)
                    continue;
                IndexSet key(nr);
                for (int x : g.rays)
                    key.set(x);
                if (seen.insert(key).second)
                    found.push_back(std::move(g));
            }
        }
        std::sort(found.begin(), found.end(),
                  [](const FaceDescriptor& x, const FaceDescriptor& y) { return x.rays < y.rays; });
        layer.clear();
        for (const FaceDescriptor& g : found) {
            IndexSet key(nr);
            for (int x : g.rays)
                key.set(x);
            layer.push_back(key);
            out.push_back(g);
        }
    }
    return out;
}

bool in_cone_generated_by(std::span<const Integer> x, const IntMatrix& gens)
{
    if (gens.empty())
        return std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; });
    return Cone::from_generators(gens).contains(x);
}

std::optional<IntVector> hilbert_basis_witness(const IntMatrix& gens, int bound)
{
    using Small = std::vector<long long>;
    Cone cone = Cone::from_generators(gens);
    const int d = cone.ambient_dim();
    auto small = [](const IntMatrix& m) {
        std::vector<Small> out;
        for (const IntVector& v : m) {
            Small s;
            for (const Integer& x : v) {
                if (!x.fits_slong_p())
                    throw LimitError("coordinates too large for the Hilbert check");
                s.push_back(x.get_si());
            }
            out.push_back(std::move(s));
        }
        return out;
    };
    std::vector<Small> g = small(gens), facets = small(cone.facet_normals()), eqs = small(cone.span_equations());
    auto sdot = [](const Small& a, const Small& b) {
        long long s = 0;
        for (size_t i = 0; i < a.size(); ++i)
            s += a[i] * b[i];
        return s;
    };
    auto inside = [&](const Small& p) {
        for (const Small& e : eqs)
            if (sdot(e, p) != 0)
                return false;
        for (const Small& f : facets)
            if (sdot(f, p) < 0)
                return false;
        return true;
    };
    std::map<Small, bool> memo;
    auto decomposable = [&](auto&& self, const Small& p) -> bool {
        if (std::all_of(p.begin(), p.end(), [](long long x) { return x == 0; }))
            return true;
        if (auto it = memo.find(p); it != memo.end())
            return it->second;
        bool ok = false;
        for (const Small& h : g) {
            Small q(p);
            for (int i = 0; i < d; ++i)
                q[i] -= h[i];
            if (inside(q) && self(self, q)) {
                ok = true;
                break;
            }
        }
        memo.emplace(p, ok);
        return ok;
    };

    Small lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        bool nonneg = std::all_of(g.begin(), g.end(), [&](const Small& h) { return h[i] >= 0; });
        bool nonpos = std::all_of(g.begin(), g.end(), [&](const Small& h) { return h[i] <= 0; });
        lo[i] = nonneg ? 0 : -bound;
        hi[i] = nonpos ? 0 : bound;
    }
    Small p = lo;
    for (;;) {
        if (inside(p) && !decomposable(decomposable, p))
            return to_integers(p);
        int i = 0;
        while (i < d && p[i] == hi[i]) {
            p[i] = lo[i];
            ++i;
        }
        if (i == d)
            break;
        ++p[i];
    }
    return std::nullopt;
}

bool hilbert_basis_check(const IntMatrix& gens, int bound)
{
    return !hilbert_basis_witness(gens, bound).has_value();
}

ConeInput parse_cone_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid cone JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("rays") ||
        !j["ambient_dim"].is_number_integer() || !j["rays"].is_array())
        throw ParseError("cone JSON needs an integer ambient_dim and a rays array");
    ConeInput in;
    in.ambient_dim = j["ambient_dim"].get<int>();
    if (in.ambient_dim < 1)
        throw ParseError("ambient_dim must be positive");
    for (const auto& r : j["rays"]) {
        if (!r.is_array() || static_cast<int>(r.size()) != in.ambient_dim)
            throw ParseError("each ray must have ambient_dim integer entries");
        IntVector v;
        for (const auto& x : r) {
            if (!x.is_number_integer())
                throw ParseError("ray entries must be integers");
            v.emplace_back(static_cast<long>(x.get<long long>()));
        }
        in.rays.push_back(std::move(v));
    }
    if (in.rays.empty())
        throw ParseError("cone JSON has no rays");
    return in;
}

std::string cone_to_json(int ambient_dim, const IntMatrix& rays)
{
    nlohmann::ordered_json j;
    j["ambient_dim"] = ambient_dim;
    j["rays"] = nlohmann::ordered_json::array();
    for (const IntVector& r : rays) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const Integer& x : r)
            row.push_back(x.get_si());
        j["rays"].push_back(row);
    }
    return j.dump();
}

} // namespace edgecone

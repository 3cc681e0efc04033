#include "knroot/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "knroot/errors.hpp"

namespace knroot {

namespace {

struct DualRay {
    IntVec v;
    std::set<std::size_t> tight;  // processed constraints satisfied with equality
};

bool subset(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Combinatorial adjacency test: p and n are adjacent iff no third ray is
// tight on every constraint that both p and n are tight on.
bool adjacent(const std::vector<DualRay>& rays, std::size_t pi, std::size_t ni) {
    std::set<std::size_t> common;
    std::set_intersection(rays[pi].tight.begin(), rays[pi].tight.end(), rays[ni].tight.begin(),
                          rays[ni].tight.end(), std::inserter(common, common.begin()));
    for (std::size_t k = 0; k < rays.size(); ++k) {
        if (k == pi || k == ni) continue;
        if (subset(common, rays[k].tight)) return false;
    }
    return true;
}

}  // namespace

IntMatrix dual_description(std::size_t ambient_dim, const IntMatrix& rays) {
    if (ambient_dim > 6)
        throw ResourceLimitError("dual_description: ambient dimension > 6");

    // Maintain a minimal description (lineality basis + extreme rays) of the
    // dual cone {h : <h, r_i> >= 0}, inserting one constraint at a time.
    std::vector<IntVec> lineality;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        IntVec e(ambient_dim);
        e[i] = 1;
        lineality.push_back(e);
    }
    std::vector<DualRay> dual;

    for (std::size_t idx = 0; idx < rays.rows(); ++idx) {
        IntVec a = rays.row(idx);

        std::size_t l0 = lineality.size();
        for (std::size_t i = 0; i < lineality.size(); ++i)
            if (dot(a, lineality[i]) != 0) {
                l0 = i;
                break;
            }
        if (l0 < lineality.size()) {
            // The hyperplane cuts the lineality space: one lineality vector
            // becomes an extreme ray, the rest are projected into {a = 0}.
            IntVec w = lineality[l0];
            Int aw = dot(a, w);
            if (aw < 0) {
                for (Int& x : w) x = -x;
                aw = -aw;
            }
            std::vector<IntVec> new_lin;
            for (std::size_t i = 0; i < lineality.size(); ++i) {
                if (i == l0) continue;
                Int al = dot(a, lineality[i]);
                IntVec l(ambient_dim);
                for (std::size_t k = 0; k < ambient_dim; ++k)
                    l[k] = aw * lineality[i][k] - al * w[k];
                new_lin.push_back(primitive(std::move(l)));
            }
            for (DualRay& r : dual) {
                Int ar = dot(a, r.v);
                IntVec nv(ambient_dim);
                for (std::size_t k = 0; k < ambient_dim; ++k) nv[k] = aw * r.v[k] - ar * w[k];
                r.v = primitive(std::move(nv));
                r.tight.insert(idx);
            }
            DualRay nr;
            nr.v = std::move(w);
            for (std::size_t j = 0; j < idx; ++j) nr.tight.insert(j);
            dual.push_back(std::move(nr));
            lineality = std::move(new_lin);
            continue;
        }

        // a vanishes on the lineality space; split the rays.
        std::vector<std::size_t> pos, zero, neg;
        std::vector<Int> val(dual.size());
        for (std::size_t i = 0; i < dual.size(); ++i) {
            val[i] = dot(a, dual[i].v);
            if (val[i] > 0)
                pos.push_back(i);
            else if (val[i] == 0)
                zero.push_back(i);
            else
                neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i : zero) dual[i].tight.insert(idx);
            continue;
        }
        std::vector<DualRay> next;
        for (std::size_t i : pos) next.push_back(dual[i]);
        for (std::size_t i : zero) {
            next.push_back(dual[i]);
            next.back().tight.insert(idx);
        }
        for (std::size_t p : pos)
            for (std::size_t n : neg) {
                if (!adjacent(dual, p, n)) continue;
                IntVec w(ambient_dim);
                for (std::size_t k = 0; k < ambient_dim; ++k)
                    w[k] = val[p] * dual[n].v[k] - val[n] * dual[p].v[k];
                DualRay nr;
                nr.v = primitive(std::move(w));
                std::set_intersection(dual[p].tight.begin(), dual[p].tight.end(),
                                      dual[n].tight.begin(), dual[n].tight.end(),
                                      std::inserter(nr.tight, nr.tight.begin()));
                nr.tight.insert(idx);
                bool dup = false;
                for (const DualRay& ex : next)
                    if (ex.v == nr.v) dup = true;
                if (!dup) next.push_back(std::move(nr));
            }
        dual = std::move(next);
    }

    std::vector<IntVec> out;
    for (const IntVec& l : lineality) {
        out.push_back(l);
        IntVec m(ambient_dim);
        for (std::size_t k = 0; k < ambient_dim; ++k) m[k] = -l[k];
        out.push_back(std::move(m));
    }
    for (const DualRay& r : dual) out.push_back(r.v);
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return IntMatrix::from_rows(ambient_dim, out);
}

RationalCone RationalCone::from_rays(std::size_t ambient_dim, std::vector<IntVec> rays) {
    std::vector<IntVec> clean;
    for (IntVec& r : rays) {
        if (r.size() != ambient_dim) throw Error("cone ray has wrong dimension");
        if (vec_is_zero(r)) continue;
        clean.push_back(primitive(std::move(r)));
    }
    std::sort(clean.begin(), clean.end(), lex_less);
    clean.erase(std::unique(clean.begin(), clean.end()), clean.end());

    RationalCone c;
    c.ambient_ = ambient_dim;
    c.rays_ = IntMatrix::from_rows(ambient_dim, clean);
    c.facets_ = dual_description(ambient_dim, c.rays_);
    c.dim_ = rank(c.rays_);
    c.pointed_ = (rank(c.facets_) == ambient_dim);

    // Face lattice: close the facet-tight ray sets under intersection.
    const std::size_t nr = clean.size(), nf = c.facets_.rows();
    std::vector<std::set<std::size_t>> facet_tight(nf);
    for (std::size_t j = 0; j < nf; ++j)
        for (std::size_t i = 0; i < nr; ++i)
            if (dot(c.facets_.row(j), clean[i]) == 0) facet_tight[j].insert(i);

    std::set<std::set<std::size_t>> sets;
    std::set<std::size_t> all;
    for (std::size_t i = 0; i < nr; ++i) all.insert(i);
    sets.insert(all);
    std::vector<std::set<std::size_t>> work{all};
    while (!work.empty()) {
        std::set<std::size_t> s = std::move(work.back());
        work.pop_back();
        for (std::size_t j = 0; j < nf; ++j) {
            std::set<std::size_t> inter;
            std::set_intersection(s.begin(), s.end(), facet_tight[j].begin(),
                                  facet_tight[j].end(), std::inserter(inter, inter.begin()));
            if (sets.insert(inter).second) work.push_back(std::move(inter));
        }
    }

    auto descriptors = std::make_shared<std::vector<FaceDescriptor>>();
    for (const auto& s : sets) {
        FaceDescriptor f;
        f.ray_indices.assign(s.begin(), s.end());
        std::vector<IntVec> face_rays;
        for (std::size_t i : f.ray_indices) face_rays.push_back(clean[i]);
        f.dim = face_rays.empty() ? 0 : rank(IntMatrix::from_rows(ambient_dim, face_rays));
        for (std::size_t j = 0; j < nf; ++j)
            if (subset(s, facet_tight[j])) f.tight_facets.push_back(j);
        descriptors->push_back(std::move(f));
    }
    std::sort(descriptors->begin(), descriptors->end(),
              [](const FaceDescriptor& a, const FaceDescriptor& b) {
                  if (a.dim != b.dim) return a.dim < b.dim;
                  return a.ray_indices < b.ray_indices;
              });
    c.faces_ = std::move(descriptors);
    return c;
}

bool RationalCone::contains(const IntVec& v) const {
    if (v.size() != ambient_) throw Error("contains: wrong dimension");
    for (std::size_t j = 0; j < facets_.rows(); ++j)
        if (dot(facets_.row(j), v) < 0) return false;
    return true;
}

IntVec RationalCone::positive_grading() const {
    IntVec g(ambient_);
    for (std::size_t j = 0; j < facets_.rows(); ++j)
        for (std::size_t k = 0; k < ambient_; ++k) g[k] += facets_.at(j, k);
    return g;
}

namespace {

// Exact solve of a nonsingular square system over Q.
std::vector<Rat> solve_rational(const IntMatrix& m, const IntVec& b) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
        a[i][n] = Rat(b[i]);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw Error("solve_rational: singular system");
        std::swap(a[piv], a[col]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[col][col];
            for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

Int rat_floor(const Rat& q) {
    return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

// Lattice points of the half-open parallelepiped spanned by the given
// independent rays, including the origin.
std::vector<IntVec> parallelepiped_points(const RationalCone& cone,
                                          const std::vector<std::size_t>& simplex) {
    std::vector<IntVec> srays;
    for (std::size_t i : simplex) srays.push_back(cone.ray(i));
    const std::size_t k = srays.size();

    Sublattice span_lat = Sublattice::from_generators(cone.ambient_dim(), srays).saturation();
    IntMatrix coords(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        auto c = span_lat.coordinates(srays[j]);
        if (!c) throw Error("parallelepiped: ray not in its own span lattice");
        for (std::size_t i = 0; i < k; ++i) coords.at(i, j) = (*c)[i];
    }
    SnfResult s = snf(coords);
    Int order = 1;
    for (std::size_t i = 0; i < k; ++i) order *= s.d.at(i, i);
    if (order > 1000000) throw ResourceLimitError("hilbert_basis: parallelepiped too large");
    IntMatrix uinv = inverse_unimodular(s.u);

    std::vector<IntVec> points;
    IntVec t(k);
    while (true) {
        IntVec w = uinv * t;
        std::vector<Rat> lam = solve_rational(coords, w);
        IntVec fl(k);
        for (std::size_t i = 0; i < k; ++i) fl[i] = rat_floor(lam[i]);
        IntVec shift = coords * fl;
        IntVec w2 = vec_sub(w, shift);
        points.push_back(span_lat.from_coordinates(w2));

        std::size_t pos = 0;
        while (pos < k) {
            ++t[pos];
            if (t[pos] < s.d.at(pos, pos)) break;
            t[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    return points;
}

struct Triangulator {
    const RationalCone& cone;
    std::set<std::size_t> extreme;  // ray indices lying on 1-dimensional faces
    std::map<std::size_t, std::vector<std::vector<std::size_t>>> memo;  // face idx -> simplices

    explicit Triangulator(const RationalCone& c) : cone(c) {
        for (const FaceDescriptor& f : c.faces())
            if (f.dim == 1)
                for (std::size_t i : f.ray_indices) extreme.insert(i);
    }

    const std::vector<std::vector<std::size_t>>& simplices(std::size_t face_idx) {
        auto it = memo.find(face_idx);
        if (it != memo.end()) return it->second;
        const FaceDescriptor& f = cone.faces()[face_idx];
        std::vector<std::size_t> er;
        for (std::size_t i : f.ray_indices)
            if (extreme.count(i)) er.push_back(i);
        std::vector<std::vector<std::size_t>> out;
        if (er.size() == f.dim) {
            out.push_back(er);
        } else {
            // Pull the first extreme ray over the facets of f that avoid it.
            std::size_t apex = er.front();
            std::set<std::size_t> fset(f.ray_indices.begin(), f.ray_indices.end());
            for (std::size_t gi = 0; gi < cone.faces().size(); ++gi) {
                const FaceDescriptor& g = cone.faces()[gi];
                if (g.dim + 1 != f.dim) continue;
                std::set<std::size_t> gset(g.ray_indices.begin(), g.ray_indices.end());
                if (!subset(gset, fset) || gset.count(apex)) continue;
                for (const auto& s : simplices(gi)) {
                    std::vector<std::size_t> t = s;
                    t.push_back(apex);
                    std::sort(t.begin(), t.end());
                    out.push_back(std::move(t));
                }
            }
        }
        return memo[face_idx] = std::move(out);
    }
};

}  // namespace

std::vector<IntVec> hilbert_basis(const RationalCone& cone) {
    if (!cone.is_pointed()) throw NotPointedError("hilbert_basis: cone is not pointed");
    if (cone.ambient_dim() > 4 || cone.ray_count() > 8)
        throw ResourceLimitError("hilbert_basis: beyond desk-scale guard (dim <= 4, rays <= 8)");
    if (cone.dim() == 0) return {};

    std::size_t top = cone.faces().size();
    for (std::size_t i = 0; i < cone.faces().size(); ++i)
        if (cone.faces()[i].dim == cone.dim() &&
            cone.faces()[i].ray_indices.size() == cone.ray_count())
            top = i;
    if (top == cone.faces().size()) throw Error("hilbert_basis: top face missing");

    Triangulator tri(cone);
    std::set<IntVec> candidates;
    for (std::size_t i = 0; i < cone.ray_count(); ++i) candidates.insert(cone.ray(i));
    for (const auto& simplex : tri.simplices(top))
        for (IntVec& p : parallelepiped_points(cone, simplex))
            if (!vec_is_zero(p)) candidates.insert(std::move(p));

    // Keep the irreducibles: process by increasing degree so that every
    // decomposable candidate already has an accepted summand.
    IntVec grading = cone.positive_grading();
    std::vector<IntVec> ordered(candidates.begin(), candidates.end());
    std::sort(ordered.begin(), ordered.end(), [&](const IntVec& a, const IntVec& b) {
        Int da = dot(grading, a), db = dot(grading, b);
        if (da != db) return da < db;
        return lex_less(a, b);
    });
    std::vector<IntVec> accepted;
    for (const IntVec& x : ordered) {
        bool reducible = false;
        for (const IntVec& y : accepted) {
            IntVec diff = vec_sub(x, y);
            if (!vec_is_zero(diff) && cone.contains(diff)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) accepted.push_back(x);
    }
    std::sort(accepted.begin(), accepted.end(), lex_less);
    return accepted;
}

}  // namespace knroot

#include "knroot/monoid.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "knroot/errors.hpp"

namespace knroot {

struct AffineMonoid::Impl {
    std::size_t ambient = 0;
    IntMatrix generators;  // ambient x r, columns
    Sublattice gp;
    RationalCone cone;

    // Write-once face cache (faces require sharpness, so they cannot always
    // be built eagerly).
    mutable std::once_flag faces_once;
    mutable std::vector<MonoidFace> faces;
    mutable bool faces_ok = false;
};

AffineMonoid AffineMonoid::from_generators(std::size_t ambient_dim, std::vector<IntVec> gens) {
    std::vector<IntVec> clean;
    for (IntVec& g : gens) {
        if (g.size() != ambient_dim) throw Error("monoid generator has wrong dimension");
        if (vec_is_zero(g)) continue;
        clean.push_back(std::move(g));
    }
    std::sort(clean.begin(), clean.end(), lex_less);
    clean.erase(std::unique(clean.begin(), clean.end()), clean.end());

    auto impl = std::make_shared<Impl>();
    impl->ambient = ambient_dim;
    impl->generators = IntMatrix::from_cols(ambient_dim, clean);
    impl->gp = Sublattice::from_generators(ambient_dim, clean);
    impl->cone = RationalCone::from_rays(ambient_dim, clean);

    AffineMonoid m;
    m.impl_ = std::move(impl);
    return m;
}

std::size_t AffineMonoid::ambient_dim() const { return impl_->ambient; }
std::size_t AffineMonoid::generator_count() const { return impl_->generators.cols(); }
const IntMatrix& AffineMonoid::generators() const { return impl_->generators; }
IntVec AffineMonoid::generator(std::size_t i) const { return impl_->generators.col(i); }
const Sublattice& AffineMonoid::groupification() const { return impl_->gp; }
const RationalCone& AffineMonoid::cone() const { return impl_->cone; }

bool AffineMonoid::is_sharp() const { return impl_->cone.is_pointed(); }

bool AffineMonoid::operator==(const AffineMonoid& rhs) const {
    return impl_->ambient == rhs.impl_->ambient && impl_->generators == rhs.impl_->generators;
}

const std::vector<MonoidFace>& AffineMonoid::faces() const {
    std::call_once(impl_->faces_once, [this] {
        if (!is_sharp()) return;  // faces_ok stays false
        const RationalCone& c = impl_->cone;
        for (const FaceDescriptor& fd : c.faces()) {
            MonoidFace f;
            f.descriptor = fd;
            // A generator is on the face iff it is tight on the face's
            // facets (all generators already lie in the cone).
            for (std::size_t g = 0; g < generator_count(); ++g) {
                IntVec gen = generator(g);
                bool on = true;
                for (std::size_t j : fd.tight_facets)
                    if (dot(c.facets().row(j), gen) != 0) {
                        on = false;
                        break;
                    }
                if (on) f.generator_indices.push_back(g);
            }
            std::vector<IntVec> face_gens;
            for (std::size_t g : f.generator_indices) face_gens.push_back(generator(g));
            f.gp = Sublattice::from_generators(impl_->ambient, face_gens);
            impl_->faces.push_back(std::move(f));
        }
        impl_->faces_ok = true;
    });
    if (!impl_->faces_ok) throw NotSharpError("faces: monoid is not sharp");
    return impl_->faces;
}

std::size_t AffineMonoid::trivial_face_index() const {
    const auto& fs = faces();
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (fs[i].generator_indices.empty()) return i;
    throw Error("trivial face missing");
}

std::size_t AffineMonoid::full_face_index() const {
    const auto& fs = faces();
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (fs[i].generator_indices.size() == generator_count()) return i;
    throw Error("full face missing");
}

std::optional<std::size_t> AffineMonoid::find_face(
    const std::vector<std::size_t>& generator_indices) const {
    std::vector<std::size_t> sorted = generator_indices;
    std::sort(sorted.begin(), sorted.end());
    const auto& fs = faces();
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (fs[i].generator_indices == sorted) return i;
    return std::nullopt;
}

Sublattice AffineMonoid::relation_lattice() const { return kernel_basis(impl_->generators); }

bool AffineMonoid::lattice_cone_member(const IntVec& v) const {
    return impl_->cone.contains(v) && impl_->gp.contains(v);
}

namespace {

// Exact knapsack membership: v is a non-negative integral combination of the
// generator columns. Generators inside the cone's lineality form the unit
// group of the monoid, so they only need a lattice solve; the rest carry a
// strictly positive grading which bounds the search.
class MembershipSolver {
public:
    explicit MembershipSolver(const AffineMonoid& p) : p_(p) {
        const RationalCone& c = p.cone();
        grading_ = c.positive_grading();
        for (std::size_t i = 0; i < p.generator_count(); ++i) {
            IntVec g = p.generator(i);
            if (dot(grading_, g) == 0)
                unit_gens_.push_back(std::move(g));
            else
                graded_gens_.push_back(std::move(g));
        }
        unit_lattice_ = Sublattice::from_generators(p.ambient_dim(), unit_gens_);
    }

    bool contains(const IntVec& v) {
        if (!p_.lattice_cone_member(v)) return false;
        return search(v, 0);
    }

private:
    bool remainder_ok(const IntVec& v) {
        if (vec_is_zero(v)) return true;
        return unit_lattice_.rank() > 0 && unit_lattice_.contains(v);
    }

    bool search(const IntVec& v, std::size_t from) {
        Int deg = dot(grading_, v);
        if (deg == 0) return remainder_ok(v);
        auto key = std::make_pair(v, from);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        bool ok = false;
        for (std::size_t i = from; i < graded_gens_.size() && !ok; ++i) {
            const IntVec& g = graded_gens_[i];
            if (dot(grading_, g) > deg) continue;
            IntVec rest = vec_sub(v, g);
            if (!p_.cone().contains(rest)) continue;
            ok = search(rest, i);
        }
        memo_[key] = ok;
        return ok;
    }

    const AffineMonoid& p_;
    IntVec grading_;
    std::vector<IntVec> unit_gens_, graded_gens_;
    Sublattice unit_lattice_;
    std::map<std::pair<IntVec, std::size_t>, bool> memo_;
};

}  // namespace

bool AffineMonoid::is_member(const IntVec& v) const {
    if (v.size() != impl_->ambient) throw Error("is_member: wrong dimension");
    if (vec_is_zero(v)) return true;
    MembershipSolver solver(*this);
    return solver.contains(v);
}

bool AffineMonoid::face_contains(std::size_t face_index, const IntVec& v) const {
    const MonoidFace& f = face(face_index);
    for (std::size_t j : f.descriptor.tight_facets)
        if (dot(impl_->cone.facets().row(j), v) != 0) return false;
    return f.gp.contains(v);
}

namespace {

// Hilbert basis of cone(P) ∩ L expressed back in ambient coordinates, for a
// sublattice L given by its basis; works in L-coordinates so the lattice is
// the full Z^rank there.
std::vector<IntVec> cone_lattice_generators(const AffineMonoid& p, const Sublattice& lat) {
    std::vector<IntVec> coords;
    for (std::size_t i = 0; i < p.generator_count(); ++i) {
        auto c = lat.coordinates(p.generator(i));
        if (!c) throw Error("generator outside the expected lattice");
        coords.push_back(*c);
    }
    RationalCone cone_lat = RationalCone::from_rays(lat.rank(), coords);
    std::vector<IntVec> out;
    for (const IntVec& h : hilbert_basis(cone_lat)) out.push_back(lat.from_coordinates(h));
    return out;
}

}  // namespace

AffineMonoid AffineMonoid::saturate() const {
    if (!is_sharp()) throw NotSharpError("saturate: monoid is not sharp");
    // Saturation lives in the lattice the monoid spans rationally, so cone
    // points like (1,1) in <(1,0),(1,2)> are picked up even though they miss
    // the index-2 group generated by the generators.
    return from_generators(impl_->ambient,
                           cone_lattice_generators(*this, impl_->gp.saturation()));
}

bool AffineMonoid::is_saturated() const {
    const Sublattice& gp = impl_->gp;
    const std::size_t r = gp.rank();
    if (r == 0) return true;

    if (is_sharp()) {
        MembershipSolver solver(*this);
        for (const IntVec& h : cone_lattice_generators(*this, gp))
            if (!solver.contains(h)) return false;
        return true;
    }

    // Non-sharp case: split off the unit part. cone(P)^gp ∩ lineality is
    // generated by the generators lying in the lineality; the saturation is
    // generated by ± a basis of (P^gp ∩ lineality) together with lifts of
    // the Hilbert basis of the pointed quotient cone.
    std::vector<IntVec> coords;
    for (std::size_t i = 0; i < generator_count(); ++i) coords.push_back(*gp.coordinates(generator(i)));
    RationalCone cone_gp = RationalCone::from_rays(r, coords);
    IntVec grading = cone_gp.positive_grading();

    std::vector<IntVec> lineal;
    for (const IntVec& c : coords)
        if (dot(grading, c) == 0) lineal.push_back(c);
    Sublattice unit_sat = Sublattice::from_generators(r, lineal).saturation();

    FinAbGroup quot = cokernel(unit_sat.basis().transpose());
    if (!quot.is_free()) throw Error("saturated quotient unexpectedly has torsion");
    IntMatrix proj = quot.projection;  // (r - t) x r

    std::vector<IntVec> q_rays;
    for (const IntVec& c : coords) {
        IntVec q = proj * c;
        if (!vec_is_zero(q)) q_rays.push_back(q);
    }
    RationalCone cone_q = RationalCone::from_rays(proj.rows(), q_rays);

    MembershipSolver solver(*this);
    auto member_coords = [&](const IntVec& c) { return solver.contains(gp.from_coordinates(c)); };

    for (std::size_t i = 0; i < unit_sat.rank(); ++i) {
        IntVec b = unit_sat.basis_vector(i);
        IntVec nb(b.size());
        for (std::size_t k = 0; k < b.size(); ++k) nb[k] = -b[k];
        if (!member_coords(b) || !member_coords(nb)) return false;
    }
    for (const IntVec& h : hilbert_basis(cone_q)) {
        auto lift = solve_integral(proj, h);
        if (!lift) throw Error("free quotient projection failed to lift");
        if (!member_coords(*lift)) return false;
    }
    return true;
}

CharStalk AffineMonoid::char_stalk(std::size_t face_index) const {
    const MonoidFace& f = face(face_index);
    const Sublattice& gp = impl_->gp;
    const std::size_t r = gp.rank();
    const std::size_t rf = f.gp.rank();

    // F^gp expressed in P^gp coordinates, one column per basis vector.
    IntMatrix c(r, rf);
    for (std::size_t j = 0; j < rf; ++j) {
        auto coord = gp.coordinates(f.gp.basis_vector(j));
        if (!coord) throw Error("face group not contained in P^gp");
        for (std::size_t i = 0; i < r; ++i) c.at(i, j) = (*coord)[i];
    }
    FinAbGroup quot = cokernel(c);
    if (!quot.is_free())
        throw TorsionError("char_stalk: P^gp/F^gp has torsion (monoid is not saturated)");

    std::vector<IntVec> qgens;
    for (std::size_t g = 0; g < generator_count(); ++g) {
        IntVec q = quot.project(*gp.coordinates(generator(g)));
        qgens.push_back(std::move(q));
    }
    CharStalk out;
    out.quotient = AffineMonoid::from_generators(quot.free_rank, qgens);
    out.quotient_gp = std::move(quot);
    return out;
}

KummerRootResult kummer_root(const AffineMonoid& p, long long n) {
    if (n < 1) throw Error("kummer_root: n must be >= 1");
    KummerRootResult out;
    out.root = p;  // (1/n)P is P again in its own coordinates
    out.inclusion = IntMatrix(p.ambient_dim(), p.ambient_dim());
    for (std::size_t i = 0; i < p.ambient_dim(); ++i) out.inclusion.at(i, i) = n;
    out.level = n;
    return out;
}

IntMatrix generators_in_gp_coordinates(const AffineMonoid& p) {
    const Sublattice& gp = p.groupification();
    IntMatrix m(gp.rank(), p.generator_count());
    for (std::size_t j = 0; j < p.generator_count(); ++j) {
        auto c = gp.coordinates(p.generator(j));
        if (!c) throw Error("generator not in its own groupification");
        for (std::size_t i = 0; i < gp.rank(); ++i) m.at(i, j) = (*c)[i];
    }
    return m;
}

}  // namespace knroot

#include "lefib/surfaces.hpp"

namespace lefib {

FiberSurface::FiberSurface(int g, int b) : genus(g), boundary_count(b) {
    if (g < 0 || b < 0)
        throw std::invalid_argument("fiber surface: genus and boundary count must be non-negative");
}

bool is_exceptional(const FiberSurface& f) {
    const int g = f.genus, b = f.boundary_count;
    return (g == 0 && b <= 2) || (g == 1 && b == 0);
}

bool HomologyClass::is_zero() const {
    for (const Int& x : coords)
        if (x != 0)
            return false;
    return true;
}

Int intersection_pairing(const HomologyClass& x, const HomologyClass& y) {
    if (x.rank() != y.rank() || x.rank() % 2 != 0)
        throw DimensionError("intersection pairing: rank mismatch");
    Int s = 0;
    for (std::size_t i = 0; i + 1 < x.rank(); i += 2)
        s += x.coords[i] * y.coords[i + 1] - x.coords[i + 1] * y.coords[i];
    return s;
}

CurveClass CurveClass::on(const FiberSurface& fiber, std::string name, IntVec coords) {
    if (!fiber.symplectic_enabled())
        throw UnsupportedError("curve class with homology coordinates requires b in {0,1}");
    if (coords.size() != fiber.homology_rank())
        throw DimensionError("curve class: homology vector has wrong rank");
    CurveClass c;
    c.name = std::move(name);
    c.homology = HomologyClass(std::move(coords));
    c.separating = c.homology.is_zero();
    c.essential = !c.separating;
    return c;
}

CurveClass CurveClass::declared(std::string name, bool separating, bool essential) {
    CurveClass c;
    c.name = std::move(name);
    c.separating = separating;
    c.essential = essential;
    return c;
}

MarkedSurface surger(const FiberSurface& f, const CurveClass& c) {
    if (!c.essential || c.separating)
        throw UnsupportedError("surgery supported only along nonseparating essential curves");
    if (f.genus < 1)
        throw UnsupportedError("surgery: fiber has no nonseparating curve");
    MarkedSurface out;
    out.genus = f.genus - 1;
    out.boundary_count = f.boundary_count;
    out.marked_points = 2;
    out.components = 1;
    return out;
}

std::optional<int> essential_curve_class_count(const FiberSurface& f) {
    if (f.boundary_count == 0 || f.boundary_count == 1)
        return 1;
    return std::nullopt;
}

Pi1Kind pi1_fiber_kind(const FiberSurface& f) {
    if (f.genus == 1 && f.boundary_count == 0)
        return Pi1Kind::rank_two;
    if (f.genus == 0 && f.boundary_count == 2)
        return Pi1Kind::infinite_cyclic;
    return Pi1Kind::trivial;
}

static std::size_t pi1_rank(Pi1Kind k) {
    switch (k) {
        case Pi1Kind::rank_two: return 2;
        case Pi1Kind::infinite_cyclic: return 1;
        default: return 0;
    }
}

Pi1Element Pi1Element::zero_for(const FiberSurface& f) {
    Pi1Element e;
    e.kind = pi1_fiber_kind(f);
    e.coords.assign(pi1_rank(e.kind), Int(0));
    return e;
}

Pi1Element Pi1Element::make(const FiberSurface& f, IntVec coords) {
    Pi1Element e;
    e.kind = pi1_fiber_kind(f);
    if (coords.size() != pi1_rank(e.kind))
        throw DimensionError("structure twist: coordinate rank does not match Pi_1 of the fiber");
    e.coords = std::move(coords);
    return e;
}

bool Pi1Element::is_zero() const {
    for (const Int& x : coords)
        if (x != 0)
            return false;
    return true;
}

Pi1Element Pi1Element::plus(const Pi1Element& o) const {
    if (kind != o.kind)
        throw DimensionError("structure twist addition: mismatched groups");
    Pi1Element e = *this;
    for (std::size_t i = 0; i < coords.size(); ++i)
        e.coords[i] += o.coords[i];
    return e;
}

Pi1Element Pi1Element::negated() const {
    Pi1Element e = *this;
    for (Int& x : e.coords)
        x = -x;
    return e;
}

Pi1Element Pi1Element::scaled(const Int& k) const {
    Pi1Element e = *this;
    for (Int& x : e.coords)
        x *= k;
    return e;
}

}  // namespace lefib

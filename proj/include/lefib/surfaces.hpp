#ifndef LEFIB_SURFACES_HPP
#define LEFIB_SURFACES_HPP

#include "lefib/numeric.hpp"

#include <optional>
#include <string>

namespace lefib {

struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The fiber F_{g,b}. Admissible fibers exclude the sphere and the disk.
// Homology machinery (the symplectic lattice of rank 2g) is available only
// for b in {0,1}; for b = 1 we identify H_1(F_{g,1}) with H_1(F_{g,0}) by
// capping the boundary.
struct FiberSurface {
    int genus = 0;
    int boundary_count = 0;

    FiberSurface() = default;
    FiberSurface(int g, int b);

    bool admissible() const { return !(genus == 0 && (boundary_count == 0 || boundary_count == 1)); }
    bool symplectic_enabled() const { return boundary_count == 0 || boundary_count == 1; }
    std::size_t homology_rank() const { return 2 * static_cast<std::size_t>(genus); }
    int euler_characteristic() const { return 2 - 2 * genus - boundary_count; }

    bool operator==(const FiberSurface& o) const { return genus == o.genus && boundary_count == o.boundary_count; }
    bool operator!=(const FiberSurface& o) const { return !(*this == o); }
};

// F_{g,b} is exceptional iff (g,b) is one of (0,0), (0,1), (0,2), (1,0).
bool is_exceptional(const FiberSurface& f);

// An element of H_1(F; Z) in the basis a_1, b_1, ..., a_g, b_g.
struct HomologyClass {
    IntVec coords;

    HomologyClass() = default;
    explicit HomologyClass(IntVec c) : coords(std::move(c)) {}

    bool is_zero() const;
    std::size_t rank() const { return coords.size(); }

    bool operator==(const HomologyClass& o) const { return coords == o.coords; }
    bool operator!=(const HomologyClass& o) const { return !(*this == o); }
};

// <x,y> = x^T J y with the standard block-diagonal J.
Int intersection_pairing(const HomologyClass& x, const HomologyClass& y);

// A simple closed curve on the fiber, remembered through its homology class.
// For b in {0,1} the separating flag is forced: separating <=> homology = 0,
// and homological essentiality is the negation. For other fibers both flags
// are declared data (e.g. the core of the annulus is separating yet
// homologically essential).
struct CurveClass {
    std::string name;
    HomologyClass homology;
    bool separating = false;
    bool essential = true;

    CurveClass() = default;

    static CurveClass on(const FiberSurface& fiber, std::string name, IntVec coords);
    static CurveClass declared(std::string name, bool separating, bool essential);

    bool same_class(const CurveClass& o) const { return homology == o.homology && separating == o.separating; }
};

// Result of surgering F along a vanishing cycle; carries the two marked
// points coming from the collapsed curve.
struct MarkedSurface {
    int genus = 0;
    int boundary_count = 0;
    int marked_points = 2;
    int components = 1;
};

// Surgery along a nonseparating essential curve: genus drops by one, the
// boundary is untouched, and the result is connected.
MarkedSurface surger(const FiberSurface& f, const CurveClass& c);

// #C_{g,b}, the number of classes of homologically essential curves up to
// diffeomorphism: 1 when b in {0,1}; no formula is available otherwise.
std::optional<int> essential_curve_class_count(const FiberSurface& f);

// Pi_1(F) = pi_1(Diff(F), id) for the admissible fibers: Z^2 for the torus,
// Z for the annulus, trivial otherwise.
enum class Pi1Kind { trivial, infinite_cyclic, rank_two };

Pi1Kind pi1_fiber_kind(const FiberSurface& f);

struct Pi1Element {
    Pi1Kind kind = Pi1Kind::trivial;
    IntVec coords;  // length 0, 1 or 2 matching the kind

    static Pi1Element zero_for(const FiberSurface& f);
    static Pi1Element make(const FiberSurface& f, IntVec coords);

    bool is_zero() const;
    Pi1Element plus(const Pi1Element& o) const;
    Pi1Element negated() const;
    Pi1Element scaled(const Int& k) const;

    bool operator==(const Pi1Element& o) const { return kind == o.kind && coords == o.coords; }
};

}  // namespace lefib

#endif

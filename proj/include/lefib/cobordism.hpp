#ifndef LEFIB_COBORDISM_HPP
#define LEFIB_COBORDISM_HPP

#include "lefib/meyer.hpp"

#include <array>
#include <variant>

namespace lefib {

// A Lefschetz cobordism class over 2-dimensional bases, held through a list
// of representing fibrations (their disjoint union). All representatives
// share the closed fiber F_{g,0} and have closed bases. The empty list is
// the zero class (the empty fibration).
struct CobordismClass {
    int genus = 0;
    std::vector<FibrationData> representatives;
};

CobordismClass make_class(int genus, std::vector<FibrationData> reps);

// [f1] + [f2] = [f1 \sqcup f2]
CobordismClass class_sum(const CobordismClass& x, const CobordismClass& y);

// eta = n_+ - n_- summed over representatives.
Int eta(const CobordismClass& x);

// sigma = total-space signature summed over representatives.
Int sigma_class(const CobordismClass& x);

// Phi = ([V],[M]) in Omega_4 + Omega_2; the first component is realized by
// the signature isomorphism, the second is identically zero.
std::pair<Int, Int> forgetful_phi(const CobordismClass& x);

// Class-preserving moves, each with a witness of its parameters.
struct HurwitzWitness {
    std::size_t representative = 0;
    std::size_t index = 0;
    HurwitzDirection direction = HurwitzDirection::right;
};
struct ConjugationWitness {
    std::size_t representative = 0;
    TwistWord word;
};
struct CancellingPairWitness {
    std::size_t representative = 0;
    std::size_t position = 0;
    CurveClass curve;
};
struct FibersumSplitWitness {
    std::size_t first = 0;
    std::size_t second = 0;
    TwistWord gluing;
};
struct ReorderWitness {
    std::vector<std::size_t> order;
};

using MoveWitness = std::variant<HurwitzWitness, ConjugationWitness, CancellingPairWitness,
                                 FibersumSplitWitness, ReorderWitness>;

// Applies the move and asserts that sigma and eta are unchanged.
CobordismClass apply_move(const CobordismClass& x, const MoveWitness& w);

// Hermite-reduced basis of a subgroup of Z^2. Zero, one or two rows;
// row-style normal form [[a,b],[0,c]] with a > 0, c > 0, 0 <= b < c.
struct LatticeBasis {
    std::vector<std::array<Int, 2>> rows;

    bool contains(const Int& s, const Int& e) const;
};

LatticeBasis hermite_lattice(const std::vector<std::pair<Int, Int>>& generators);

// Basis of the subgroup of Z^2 generated by {(sigma(x_i), eta(x_i))}.
LatticeBasis invariant_image_lattice(const std::vector<CobordismClass>& classes);

}  // namespace lefib

#endif

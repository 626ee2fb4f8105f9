#ifndef LEFIB_MEYER_HPP
#define LEFIB_MEYER_HPP

#include "lefib/fibration.hpp"

namespace lefib {

// Symmetric bilinear form over the rationals.
struct RationalSymmetricForm {
    std::vector<std::vector<Rat>> matrix;

    std::size_t dimension() const { return matrix.size(); }
    bool symmetric() const;
};

// Signature by exact congruence diagonalization; throws on non-symmetric
// input.
int signature_of_form(const RationalSymmetricForm& q);

// Meyer's cocycle tau_g on Sp(2g, Z): the signature of the symmetrized form
//   <(x1,y1),(x2,y2)> = (x1+y1)^T J (B-I) y2
// on V_{A,B} = {(x,y) : (A^{-1}-I)x + (B-I)y = 0}. It satisfies
//   tau(A,B) + tau(AB,C) = tau(A,BC) + tau(B,C),
//   tau(I,.) = tau(.,I) = tau(A,A^{-1}) = 0,
// and is invariant under simultaneous conjugation. |tau| is bounded by
// dim V_{A,B}.
int meyer_cocycle(const SymplecticMatrix& a, const SymplecticMatrix& b);

struct CalibrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Local signature contributions of a positive and a negative critical point,
// fixed once by the elliptic-fibration oracle and frozen. Calibration solves
//   -S(E(1)) + 12 c_plus = -8
// from the cocycle sum S over the word (t_a t_b)^6, forces c_minus = -c_plus,
// and then cross-checks the (t_a t_b)^12 fibration against the K3 signature
// -16, the reversed E(1) against +8, and a cancelling-pair insertion against
// invariance. Any mismatch raises CalibrationError.
struct LocalTerms {
    Rat c_plus;
    Rat c_minus;
};

const LocalTerms& calibrate_local_terms();

// Telescoped Meyer sum over a word: sum_k tau(prefix_k, letter_{k+1}).
Int meyer_word_sum(const TwistWord& w, const FiberSurface& fiber);

// Signature of the closed total space:
//   sigma = -S(closure word) + n_+ c_+ + n_- c_-.
// Requires a valid datum over a closed base with all vanishing cycles
// nonseparating and a fiber with b in {0,1}.
Int fibration_signature(const FibrationData& f);

}  // namespace lefib

#endif

#ifndef LEFIB_MCG_HPP
#define LEFIB_MCG_HPP

#include "lefib/surfaces.hpp"

#include <utility>
#include <vector>

namespace lefib {

// A positive or negative Dehn twist about a curve in the fiber.
struct SignedTwist {
    CurveClass curve;
    int sign = 1;  // +1 or -1

    SignedTwist() = default;
    SignedTwist(CurveClass c, int s);

    SignedTwist inverse() const { return SignedTwist(curve, -sign); }
};

// A word in signed Dehn twists; the empty word is allowed. All letters are
// understood to live on one fiber, which operations receive as context.
struct TwistWord {
    std::vector<SignedTwist> letters;

    TwistWord() = default;
    explicit TwistWord(std::vector<SignedTwist> l) : letters(std::move(l)) {}

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    TwistWord inverse() const;                     // reverse order, flip signs
    TwistWord concat(const TwistWord& o) const;    // this followed by o
    TwistWord conjugated_by(const TwistWord& h) const;  // h^{-1} w h

    bool operator==(const TwistWord& o) const;
};

// Element of Sp(2g, Z); the defining relation M^T J M = J is checked on
// construction.
class SymplecticMatrix {
  public:
    explicit SymplecticMatrix(IntMat m);
    static SymplecticMatrix identity(std::size_t genus);

    std::size_t genus() const { return mat_.rows() / 2; }
    const IntMat& matrix() const { return mat_; }

    SymplecticMatrix operator*(const SymplecticMatrix& o) const;
    SymplecticMatrix inverse() const;
    HomologyClass apply(const HomologyClass& x) const;
    bool is_identity() const;

    bool operator==(const SymplecticMatrix& o) const { return mat_ == o.mat_; }
    bool operator!=(const SymplecticMatrix& o) const { return !(*this == o); }

  private:
    IntMat mat_;
};

// Homological action of a signed twist: x -> x + sign <x,c> c. A twist about
// a homologically trivial curve acts as the identity; the optional flag
// reports that degenerate case to the caller.
SymplecticMatrix transvection_matrix(const SignedTwist& t, const FiberSurface& fiber,
                                     bool* inessential_warning = nullptr);

// Ordered product of the transvections of the letters; the empty word maps to
// the identity. Requires b in {0,1} and letters of matching rank.
SymplecticMatrix word_to_matrix(const TwistWord& w, const FiberSurface& fiber);

// A finite presentation of the mapping class group: generators are positive
// twists about named nonseparating curves, relators are words in them (with
// inverses allowed).
struct Presentation {
    FiberSurface fiber;
    std::vector<CurveClass> generators;
    std::vector<std::string> relator_names;
    std::vector<TwistWord> relators;
};

struct PresentationReport {
    struct Item {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Item> generator_checks;
    std::vector<Item> relator_checks;
    bool ok() const;
};

// Checks the machine-checkable necessary conditions: each generator curve is
// nonseparating, and each relator maps to the identity symplectic matrix.
PresentationReport validate_presentation(const Presentation& p);

// Classical relation pairs (lhs, rhs) with equal symplectic image, for use as
// test fixtures and building blocks:
//   braid          t_a t_b t_a = t_b t_a t_b            (g >= 1)
//   chain          (t_a t_b)^6 = 1 on g = 1, the 5-chain sixth power on g = 2
//   lantern        four twists = three twists           (g >= 2)
//   hyperelliptic  (c1..c5 c5..c1)^2 = 1                (g = 2)
std::pair<TwistWord, TwistWord> relation_library(const std::string& name, const FiberSurface& fiber);

// Canonical name for a generated curve class: "c" then one "_<coord>" per
// coordinate with "m" marking negatives, e.g. (1,-1) -> "c_1_m1".
std::string canonical_curve_name(const HomologyClass& h);

// Flip the class so its first nonzero coordinate is positive (a class and its
// negative define the same transvection).
HomologyClass normalized_class(HomologyClass h);

}  // namespace lefib

#endif

#ifndef LEFIB_FIBRATION_HPP
#define LEFIB_FIBRATION_HPP

#include "lefib/mcg.hpp"

#include <map>
#include <string>
#include <vector>

namespace lefib {

// The base surface of a fibration; any genus and boundary count.
struct BaseSurface {
    int genus = 0;
    int boundary_count = 0;

    BaseSurface() = default;
    BaseSurface(int h, int d);

    bool closed() const { return boundary_count == 0; }
    int euler_characteristic() const { return 2 - 2 * genus - boundary_count; }

    bool operator==(const BaseSurface& o) const { return genus == o.genus && boundary_count == o.boundary_count; }
};

// Combinatorial datum of a Lefschetz fibration over a surface:
//  - lefschetz_word: the twists delta_1 ... delta_n of the meridians of the
//    Hurwitz system, signs recording positive/negative critical points;
//  - bundle_words: the images of the base generators, 2h words for the handle
//    generators (alpha_1, beta_1, ..., alpha_h, beta_h) plus d-1 words for
//    the extra boundary loops when the base has d >= 2 boundary components;
//  - structure_twist: the clutching bookkeeping in Pi_1(F), nonzero only for
//    exceptional fibers.
struct FibrationData {
    FiberSurface fiber;
    BaseSurface base;
    TwistWord lefschetz_word;
    std::vector<TwistWord> bundle_words;
    Pi1Element structure_twist;
    bool declared_lefschetz_surjective = false;

    std::size_t expected_bundle_words() const {
        return 2 * static_cast<std::size_t>(base.genus) +
               (base.boundary_count >= 2 ? static_cast<std::size_t>(base.boundary_count) - 1 : 0);
    }
};

FibrationData make_fibration(FiberSurface fiber, BaseSurface base, TwistWord lefschetz,
                             std::vector<TwistWord> bundle_words = {},
                             Pi1Element structure_twist = {});

enum class Verdict { pass, fail, not_applicable };

const char* verdict_name(Verdict v);

struct ValidationReport {
    Verdict allowability = Verdict::pass;
    Verdict closure = Verdict::not_applicable;
    Verdict structure = Verdict::pass;
    // Over bounded bases the closure condition is vacuous; the boundary
    // holonomies are reported (trivial or not, one flag per component) but
    // never constrained.
    std::vector<bool> boundary_monodromy_trivial;
    std::vector<std::string> diagnostics;

    bool ok() const {
        return allowability != Verdict::fail && closure != Verdict::fail && structure != Verdict::fail;
    }
};

// Checks allowability (every vanishing cycle homologically essential), the
// closed-base closure condition at the symplectic level, and admissibility of
// the structure twist.
ValidationReport validate(const FibrationData& f);

// (n_+, n_-): counts of positive and negative critical points.
std::pair<long, long> critical_counts(const FibrationData& f);

// chi(total space) = chi(base) chi(fiber) + n.
long euler_characteristic(const FibrationData& f);

// The word whose symplectic triviality is the closed-base closure condition:
// the Lefschetz letters followed by the expanded handle commutators
// [alpha_1, beta_1] ... [alpha_h, beta_h].
TwistWord closure_word(const FibrationData& f);

// -f : (-V) -> (-M). The Lefschetz word is reversed with flipped signs; the
// base orientation reversal swaps each handle pair (alpha_j, beta_j) ->
// (beta_j, alpha_j) and reverses the handle order, which keeps the closure
// word symplectically trivial; extra boundary words are inverted; the
// structure twist is negated.
FibrationData reverse_orientation(const FibrationData& f);

enum class HurwitzDirection { right, left };

// Elementary transformation at position i (0-based, i+1 < n):
//   right: (d_i, d_{i+1}) -> (d_{i+1}, d_{i+1}^{-1} d_i d_{i+1})
//   left:  (d_i, d_{i+1}) -> (d_i d_{i+1} d_i^{-1}, d_i)
// Conjugated letters store the matrix-transported homology class, normalized
// so the first nonzero coordinate is positive.
FibrationData hurwitz_move(const FibrationData& f, std::size_t i, HurwitzDirection dir);

// Global conjugation of the whole datum by a word h (an equivalence of the
// fibration): Lefschetz letters are transported by the matrix of h, bundle
// words are conjugated as words.
FibrationData conjugate_fibration(const FibrationData& f, const TwistWord& h);

// Fiber sum over closed bases. The second summand's letters are conjugated so
// the combined closure word stays symplectically trivial: for sphere
// summands this is exactly conjugation by the gluing word h.
FibrationData fiber_sum(const FibrationData& f1, const FibrationData& f2, const TwistWord& gluing);

// Twisting by an element of Pi_1(F): adds to the structure twist; rejected
// for nonzero psi when the fiber is not exceptional.
FibrationData twist(const FibrationData& f, const Pi1Element& psi);

// If the Lefschetz monodromy is surjective (declared by the datum, or
// established by the sufficient symplectic criterion for the torus and the
// declared-essential criterion for the annulus), the twisting is equivalent
// to the untwisted fibration, so the structure twist resets to zero.
FibrationData twist_normalize(const FibrationData& f);

// A finite cover of a bounded base, described by one permutation of
// {0,...,degree-1} per base generator (indexed like bundle_words). Critical
// values may not be branch points, so meridians always act trivially.
struct CoverSpec {
    int degree = 1;
    std::map<std::size_t, std::vector<int>> generator_perms;
};

// Pullback along the cover: the lifted Hurwitz system is computed by
// Reidemeister-Schreier coset enumeration. A transitive action yields one
// fibration; otherwise one fibration per orbit is returned.
std::vector<FibrationData> pullback_cover(const FibrationData& f, const CoverSpec& cover);

// Declared singular-monodromy data for one critical-image component.
struct SingularMonodromyData {
    std::size_t component = 0;
    CurveClass vanishing_cycle;
    std::vector<TwistWord> images;
};

// Homological surrogate of the compatibility condition: every image matrix
// must send the vanishing cycle class to plus or minus itself.
Verdict singular_compatibility_check(const SingularMonodromyData& s, const FiberSurface& fiber);

}  // namespace lefib

#endif

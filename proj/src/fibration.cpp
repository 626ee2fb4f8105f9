#include "lefib/fibration.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace lefib {

BaseSurface::BaseSurface(int h, int d) : genus(h), boundary_count(d) {
    if (h < 0 || d < 0)
        throw std::invalid_argument("base surface: genus and boundary count must be non-negative");
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "not-applicable";
    }
}

FibrationData make_fibration(FiberSurface fiber, BaseSurface base, TwistWord lefschetz,
                             std::vector<TwistWord> bundle_words, Pi1Element structure_twist) {
    if (!fiber.admissible())
        throw UnsupportedError("the sphere and the disk are not admissible fibers");
    FibrationData f;
    f.fiber = fiber;
    f.base = base;
    f.lefschetz_word = std::move(lefschetz);
    f.bundle_words = std::move(bundle_words);
    if (f.bundle_words.size() != f.expected_bundle_words())
        throw std::invalid_argument("fibration: expected " + std::to_string(f.expected_bundle_words()) +
                                    " bundle words, got " + std::to_string(f.bundle_words.size()));
    if (structure_twist.coords.empty() && structure_twist.kind == Pi1Kind::trivial)
        f.structure_twist = Pi1Element::zero_for(fiber);
    else
        f.structure_twist = std::move(structure_twist);
    if (f.structure_twist.kind != pi1_fiber_kind(fiber))
        throw DimensionError("structure twist does not live in Pi_1 of the fiber");
    return f;
}

TwistWord closure_word(const FibrationData& f) {
    TwistWord w = f.lefschetz_word;
    for (int j = 0; j < f.base.genus; ++j) {
        const TwistWord& alpha = f.bundle_words[2 * j];
        const TwistWord& beta = f.bundle_words[2 * j + 1];
        w = w.concat(alpha).concat(beta).concat(alpha.inverse()).concat(beta.inverse());
    }
    return w;
}

ValidationReport validate(const FibrationData& f) {
    ValidationReport rep;

    // allowability: every vanishing cycle homologically essential
    for (std::size_t i = 0; i < f.lefschetz_word.size(); ++i) {
        const CurveClass& c = f.lefschetz_word.letters[i].curve;
        bool essential = f.fiber.symplectic_enabled() ? !c.homology.is_zero() : c.essential;
        if (!essential) {
            rep.allowability = Verdict::fail;
            rep.diagnostics.push_back("letter " + std::to_string(i + 1) + " (" + c.name +
                                      ") is not homologically essential");
        }
    }

    // closure over a closed base, at the symplectic level
    if (!f.base.closed() || !f.fiber.symplectic_enabled()) {
        rep.closure = Verdict::not_applicable;
    } else {
        SymplecticMatrix m = word_to_matrix(closure_word(f), f.fiber);
        rep.closure = m.is_identity() ? Verdict::pass : Verdict::fail;
        if (rep.closure == Verdict::fail)
            rep.diagnostics.push_back("closure word does not map to the identity symplectic matrix");
    }

    // per-boundary holonomy over bounded bases, reported only
    if (!f.base.closed() && f.fiber.symplectic_enabled()) {
        const int d = f.base.boundary_count;
        SymplecticMatrix first = word_to_matrix(closure_word(f), f.fiber);
        for (int i = 0; i + 1 < d; ++i)
            first = first * word_to_matrix(f.bundle_words[2 * f.base.genus + i], f.fiber);
        rep.boundary_monodromy_trivial.push_back(first.is_identity());
        for (int i = 0; i + 1 < d; ++i)
            rep.boundary_monodromy_trivial.push_back(
                word_to_matrix(f.bundle_words[2 * f.base.genus + i], f.fiber).is_identity());
    }

    // structure twist admissibility
    if (f.structure_twist.kind != pi1_fiber_kind(f.fiber)) {
        rep.structure = Verdict::fail;
        rep.diagnostics.push_back("structure twist has the wrong rank for this fiber");
    } else if (!is_exceptional(f.fiber) && !f.structure_twist.is_zero()) {
        rep.structure = Verdict::fail;
        rep.diagnostics.push_back("nonzero structure twist on a non-exceptional fiber");
    }
    return rep;
}

std::pair<long, long> critical_counts(const FibrationData& f) {
    long np = 0, nm = 0;
    for (const SignedTwist& t : f.lefschetz_word.letters)
        (t.sign > 0 ? np : nm) += 1;
    return {np, nm};
}

long euler_characteristic(const FibrationData& f) {
    return static_cast<long>(f.base.euler_characteristic()) * f.fiber.euler_characteristic() +
           static_cast<long>(f.lefschetz_word.size());
}

FibrationData reverse_orientation(const FibrationData& f) {
    FibrationData out = f;
    out.lefschetz_word = f.lefschetz_word.inverse();
    out.bundle_words.clear();
    const int h = f.base.genus;
    for (int j = h - 1; j >= 0; --j) {
        out.bundle_words.push_back(f.bundle_words[2 * j + 1]);
        out.bundle_words.push_back(f.bundle_words[2 * j]);
    }
    for (std::size_t i = f.bundle_words.size(); i > static_cast<std::size_t>(2 * h); --i)
        out.bundle_words.push_back(f.bundle_words[i - 1].inverse());
    out.structure_twist = f.structure_twist.negated();
    return out;
}

namespace {

SignedTwist transported_letter(const SignedTwist& t, const SymplecticMatrix& m, const FiberSurface& fiber) {
    HomologyClass h = normalized_class(m.apply(t.curve.homology));
    CurveClass c = CurveClass::on(fiber, canonical_curve_name(h), h.coords);
    return SignedTwist(std::move(c), t.sign);
}

// Conjugation of twist letters needs either the symplectic transport
// (b in {0,1}) or a fiber whose mapping class group is abelian, where
// conjugates equal the originals. Among admissible fibers with b >= 2 only
// the annulus qualifies.
bool conjugation_is_trivial(const FiberSurface& fiber) {
    return fiber.genus == 0 && fiber.boundary_count == 2;
}

void require_letter_transport(const FiberSurface& fiber) {
    if (!fiber.symplectic_enabled() && !conjugation_is_trivial(fiber))
        throw UnsupportedError("twist conjugation is not representable for this fiber");
}

}  // namespace

FibrationData hurwitz_move(const FibrationData& f, std::size_t i, HurwitzDirection dir) {
    const std::size_t n = f.lefschetz_word.size();
    if (i + 1 >= n)
        throw std::out_of_range("hurwitz move: index out of range");
    require_letter_transport(f.fiber);
    FibrationData out = f;
    const SignedTwist& x = f.lefschetz_word.letters[i];
    const SignedTwist& y = f.lefschetz_word.letters[i + 1];
    if (conjugation_is_trivial(f.fiber)) {
        out.lefschetz_word.letters[i] = y;
        out.lefschetz_word.letters[i + 1] = x;
    } else if (dir == HurwitzDirection::right) {
        SymplecticMatrix m = transvection_matrix(y, f.fiber).inverse();
        out.lefschetz_word.letters[i] = y;
        out.lefschetz_word.letters[i + 1] = transported_letter(x, m, f.fiber);
    } else {
        SymplecticMatrix m = transvection_matrix(x, f.fiber);
        out.lefschetz_word.letters[i] = transported_letter(y, m, f.fiber);
        out.lefschetz_word.letters[i + 1] = x;
    }
    return out;
}

FibrationData conjugate_fibration(const FibrationData& f, const TwistWord& h) {
    if (h.empty() || conjugation_is_trivial(f.fiber))
        return f;
    FibrationData out = f;
    SymplecticMatrix m = word_to_matrix(h, f.fiber).inverse();
    for (SignedTwist& t : out.lefschetz_word.letters)
        t = transported_letter(t, m, f.fiber);
    for (TwistWord& w : out.bundle_words)
        w = w.conjugated_by(h);
    return out;
}

FibrationData fiber_sum(const FibrationData& f1, const FibrationData& f2, const TwistWord& gluing) {
    if (f1.fiber != f2.fiber)
        throw UnsupportedError("fiber sum: the fibers must agree");
    if (!f1.base.closed() || !f2.base.closed())
        throw UnsupportedError("fiber sum is implemented for closed bases");

    require_letter_transport(f1.fiber);
    FibrationData out;
    out.fiber = f1.fiber;
    out.base = BaseSurface(f1.base.genus + f2.base.genus, 0);
    out.lefschetz_word = f1.lefschetz_word;

    if (f1.fiber.symplectic_enabled()) {
        // Conjugate the second summand's meridian twists by V = H * C1^{-1},
        // where C1 is the commutator part of the first summand; then
        //   W1 (V^{-1} W2 V) C1 (H^{-1} C2 H) = I
        // whenever both closure words are trivial. Over sphere summands C1 = I
        // and this is plain conjugation by the gluing word.
        TwistWord c1;
        for (int j = 0; j < f1.base.genus; ++j) {
            const TwistWord& a = f1.bundle_words[2 * j];
            const TwistWord& b = f1.bundle_words[2 * j + 1];
            c1 = c1.concat(a).concat(b).concat(a.inverse()).concat(b.inverse());
        }
        SymplecticMatrix v = word_to_matrix(gluing, f1.fiber) * word_to_matrix(c1, f1.fiber).inverse();
        SymplecticMatrix vinv = v.inverse();
        for (const SignedTwist& t : f2.lefschetz_word.letters)
            out.lefschetz_word.letters.push_back(transported_letter(t, vinv, f1.fiber));
    } else {
        for (const SignedTwist& t : f2.lefschetz_word.letters)
            out.lefschetz_word.letters.push_back(t);
    }

    out.bundle_words = f1.bundle_words;
    for (const TwistWord& w : f2.bundle_words)
        out.bundle_words.push_back(w.conjugated_by(gluing));
    out.structure_twist = f1.structure_twist.plus(f2.structure_twist);
    out.declared_lefschetz_surjective = f1.declared_lefschetz_surjective || f2.declared_lefschetz_surjective;
    return out;
}

FibrationData twist(const FibrationData& f, const Pi1Element& psi) {
    if (psi.is_zero())
        return f;
    if (!is_exceptional(f.fiber))
        throw UnsupportedError("twisting by a nonzero element requires an exceptional fiber");
    if (psi.kind != pi1_fiber_kind(f.fiber))
        throw DimensionError("twisting element does not live in Pi_1 of the fiber");
    FibrationData out = f;
    out.structure_twist = f.structure_twist.plus(psi);
    return out;
}

namespace {

// Sufficient criterion for surjectivity of the Lefschetz monodromy on the two
// exceptional fibers where it matters: on the torus two twist letters whose
// classes pair to +-1 generate all of SL(2,Z); on the annulus any essential
// letter generates the infinite cyclic mapping class group.
bool lefschetz_monodromy_surjective(const FibrationData& f) {
    if (f.declared_lefschetz_surjective)
        return true;
    if (f.fiber.genus == 1 && f.fiber.boundary_count == 0) {
        const auto& ls = f.lefschetz_word.letters;
        for (std::size_t i = 0; i < ls.size(); ++i)
            for (std::size_t j = i + 1; j < ls.size(); ++j) {
                Int p = intersection_pairing(ls[i].curve.homology, ls[j].curve.homology);
                if (p == 1 || p == -1)
                    return true;
            }
        return false;
    }
    if (f.fiber.genus == 0 && f.fiber.boundary_count == 2) {
        for (const SignedTwist& t : f.lefschetz_word.letters)
            if (t.curve.essential)
                return true;
        return false;
    }
    return false;
}

}  // namespace

FibrationData twist_normalize(const FibrationData& f) {
    if (f.structure_twist.is_zero())
        return f;
    if (!lefschetz_monodromy_surjective(f))
        return f;
    FibrationData out = f;
    out.structure_twist = Pi1Element::zero_for(f.fiber);
    return out;
}

namespace {

using Perm = std::vector<int>;

Perm identity_perm(int degree) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm invert_perm(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        q[p[i]] = static_cast<int>(i);
    return q;
}

bool is_perm(const Perm& p, int degree) {
    if (static_cast<int>(p.size()) != degree)
        return false;
    std::vector<bool> seen(degree, false);
    for (int x : p) {
        if (x < 0 || x >= degree || seen[x])
            return false;
        seen[x] = true;
    }
    return true;
}

// letters of a word in the free base generators, as (generator index, +-1)
using GenWord = std::vector<std::pair<std::size_t, int>>;

Perm perm_of_word(const GenWord& w, const std::vector<Perm>& gen_perms, int degree) {
    Perm acc = identity_perm(degree);
    for (auto [g, e] : w) {
        const Perm& p = gen_perms[g];
        Perm step = e > 0 ? p : invert_perm(p);
        for (int& x : acc)
            x = step[x];
    }
    return acc;
}

int cycle_count_on(const Perm& p, const std::vector<int>& orbit) {
    std::set<int> left(orbit.begin(), orbit.end());
    int cycles = 0;
    while (!left.empty()) {
        int start = *left.begin();
        int x = start;
        do {
            left.erase(x);
            x = p[x];
        } while (x != start);
        ++cycles;
    }
    return cycles;
}

TwistWord expand_gen_word(const GenWord& w, const std::vector<TwistWord>& bundle_words) {
    TwistWord out;
    for (auto [g, e] : w)
        out = out.concat(e > 0 ? bundle_words[g] : bundle_words[g].inverse());
    return out;
}

}  // namespace

std::vector<FibrationData> pullback_cover(const FibrationData& f, const CoverSpec& cover) {
    if (f.base.boundary_count < 1)
        throw UnsupportedError("pullback is implemented for covers of bounded bases");
    if (!f.lefschetz_word.empty())
        require_letter_transport(f.fiber);
    const int degree = cover.degree;
    if (degree < 1)
        throw std::invalid_argument("cover degree must be positive");
    const std::size_t k = f.bundle_words.size();

    std::vector<Perm> gen_perms(k, identity_perm(degree));
    for (const auto& [idx, p] : cover.generator_perms) {
        if (idx >= k)
            throw std::invalid_argument("cover permutation refers to an unknown base generator");
        if (!is_perm(p, degree))
            throw std::invalid_argument("cover assignment is not a permutation of the covering sheets");
        gen_perms[idx] = p;
    }

    // orbits of the action (connected components of the cover)
    std::vector<int> orbit_of(degree, -1);
    std::vector<std::vector<int>> orbits;
    for (int s = 0; s < degree; ++s) {
        if (orbit_of[s] >= 0)
            continue;
        std::vector<int> orbit;
        std::queue<int> q;
        q.push(s);
        orbit_of[s] = static_cast<int>(orbits.size());
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            orbit.push_back(x);
            for (std::size_t g = 0; g < k; ++g) {
                for (int y : {gen_perms[g][x], invert_perm(gen_perms[g])[x]}) {
                    if (orbit_of[y] < 0) {
                        orbit_of[y] = static_cast<int>(orbits.size());
                        q.push(y);
                    }
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }

    const int h = f.base.genus, d = f.base.boundary_count;

    std::vector<FibrationData> out;
    for (const auto& orbit : orbits) {
        const int m = static_cast<int>(orbit.size());

        // Schreier transversal over this orbit, BFS from its least sheet
        std::map<int, GenWord> transversal;
        std::set<std::pair<int, std::size_t>> tree_edges;  // (sheet, gen): sheet --gen--> gen(sheet)
        std::queue<int> q;
        transversal[orbit.front()] = {};
        q.push(orbit.front());
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (std::size_t g = 0; g < k; ++g) {
                int fwd = gen_perms[g][x];
                if (!transversal.count(fwd)) {
                    GenWord w = transversal[x];
                    w.emplace_back(g, 1);
                    transversal[fwd] = std::move(w);
                    tree_edges.insert({x, g});
                    q.push(fwd);
                }
                int bwd = invert_perm(gen_perms[g])[x];
                if (!transversal.count(bwd)) {
                    GenWord w = transversal[x];
                    w.emplace_back(g, -1);
                    transversal[bwd] = std::move(w);
                    tree_edges.insert({bwd, g});
                    q.push(bwd);
                }
            }
        }

        // lifted meridian twists: t_j delta_i t_j^{-1} for each sheet j
        TwistWord lifted_word;
        std::map<int, SymplecticMatrix> transport;
        if (f.fiber.symplectic_enabled())
            for (int j : orbit)
                transport.emplace(j, word_to_matrix(expand_gen_word(transversal[j], f.bundle_words), f.fiber));
        for (const SignedTwist& t : f.lefschetz_word.letters) {
            for (int j : orbit) {
                if (f.fiber.symplectic_enabled())
                    lifted_word.letters.push_back(transported_letter(t, transport.at(j), f.fiber));
                else
                    lifted_word.letters.push_back(t);
            }
        }

        // Reidemeister-Schreier generators t_j x t_{j.x}^{-1} over non-tree edges
        std::vector<TwistWord> lifted_bundle;
        for (int j : orbit) {
            for (std::size_t g = 0; g < k; ++g) {
                if (tree_edges.count({j, g}))
                    continue;
                GenWord w = transversal[j];
                w.emplace_back(g, 1);
                GenWord back = transversal[gen_perms[g][j]];
                for (auto it = back.rbegin(); it != back.rend(); ++it)
                    w.emplace_back(it->first, -it->second);
                lifted_bundle.push_back(expand_gen_word(w, f.bundle_words));
            }
        }

        // topology of the covering base from the boundary holonomies
        int chi_cover = m * f.base.euler_characteristic();
        int boundary_cover = 0;
        {
            // first boundary word: inverse of prod [a_j,b_j] * e_2 ... e_d;
            // a permutation and its inverse have the same cycle count
            GenWord w1;
            for (int j = 0; j < h; ++j) {
                w1.emplace_back(2 * j, 1);
                w1.emplace_back(2 * j + 1, 1);
                w1.emplace_back(2 * j, -1);
                w1.emplace_back(2 * j + 1, -1);
            }
            for (int i = 0; i + 1 < d; ++i)
                w1.emplace_back(2 * h + i, 1);
            boundary_cover += cycle_count_on(perm_of_word(w1, gen_perms, degree), orbit);
            for (int i = 0; i + 1 < d; ++i)
                boundary_cover += cycle_count_on(gen_perms[2 * h + i], orbit);
        }
        int genus_cover_x2 = 2 - chi_cover - boundary_cover;
        if (genus_cover_x2 < 0 || genus_cover_x2 % 2 != 0)
            throw std::logic_error("pullback: inconsistent cover topology");
        BaseSurface cover_base(genus_cover_x2 / 2, boundary_cover);

        std::size_t expected = 2 * static_cast<std::size_t>(cover_base.genus) +
                               (boundary_cover >= 2 ? boundary_cover - 1 : 0);
        if (lifted_bundle.size() != expected)
            throw std::logic_error("pullback: Schreier rank does not match cover topology");

        FibrationData lifted;
        lifted.fiber = f.fiber;
        lifted.base = cover_base;
        lifted.lefschetz_word = std::move(lifted_word);
        lifted.bundle_words = std::move(lifted_bundle);
        lifted.structure_twist = f.structure_twist.scaled(m);
        out.push_back(std::move(lifted));
    }
    return out;
}

Verdict singular_compatibility_check(const SingularMonodromyData& s, const FiberSurface& fiber) {
    if (!fiber.symplectic_enabled())
        return Verdict::not_applicable;
    const HomologyClass& c = s.vanishing_cycle.homology;
    HomologyClass neg = c;
    for (Int& x : neg.coords)
        x = -x;
    for (const TwistWord& w : s.images) {
        HomologyClass image = word_to_matrix(w, fiber).apply(c);
        if (image != c && image != neg)
            return Verdict::fail;
    }
    return Verdict::pass;
}

}  // namespace lefib

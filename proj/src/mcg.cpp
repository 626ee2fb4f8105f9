#include "lefib/mcg.hpp"

#include <sstream>

namespace lefib {

SignedTwist::SignedTwist(CurveClass c, int s) : curve(std::move(c)), sign(s) {
    if (s != 1 && s != -1)
        throw std::invalid_argument("signed twist: sign must be +1 or -1");
}

TwistWord TwistWord::inverse() const {
    TwistWord w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.push_back(it->inverse());
    return w;
}

TwistWord TwistWord::concat(const TwistWord& o) const {
    TwistWord w = *this;
    w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
    return w;
}

TwistWord TwistWord::conjugated_by(const TwistWord& h) const {
    return h.inverse().concat(*this).concat(h);
}

bool TwistWord::operator==(const TwistWord& o) const {
    if (letters.size() != o.letters.size())
        return false;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (letters[i].sign != o.letters[i].sign || !letters[i].curve.same_class(o.letters[i].curve))
            return false;
    }
    return true;
}

SymplecticMatrix::SymplecticMatrix(IntMat m) : mat_(std::move(m)) {
    if (!is_symplectic(mat_))
        throw std::invalid_argument("matrix fails M^T J M = J");
}

SymplecticMatrix SymplecticMatrix::identity(std::size_t genus) {
    return SymplecticMatrix(IntMat::identity(2 * genus));
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& o) const {
    if (genus() != o.genus())
        throw DimensionError("symplectic product: size mismatch");
    return SymplecticMatrix(mat_ * o.mat_);
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    return SymplecticMatrix(symplectic_inverse(mat_));
}

HomologyClass SymplecticMatrix::apply(const HomologyClass& x) const {
    return HomologyClass(mat_.apply(x.coords));
}

bool SymplecticMatrix::is_identity() const {
    return mat_ == IntMat::identity(mat_.rows());
}

SymplecticMatrix transvection_matrix(const SignedTwist& t, const FiberSurface& fiber,
                                     bool* inessential_warning) {
    if (!fiber.symplectic_enabled())
        throw UnsupportedError("transvection requires a fiber with b in {0,1}");
    const std::size_t n = fiber.homology_rank();
    const IntVec& c = t.curve.homology.coords;
    if (c.size() != n)
        throw DimensionError("transvection: curve rank does not match fiber");
    if (inessential_warning)
        *inessential_warning = t.curve.homology.is_zero();

    // T(x) = x + sign <x,c> c  =  I + sign * c (Jc)^T
    IntMat j = standard_symplectic_form(fiber.genus);
    IntVec jc = j.apply(c);
    IntMat m = IntMat::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            m.at(i, k) += Int(t.sign) * c[i] * jc[k];
    return SymplecticMatrix(std::move(m));
}

SymplecticMatrix word_to_matrix(const TwistWord& w, const FiberSurface& fiber) {
    if (!fiber.symplectic_enabled())
        throw UnsupportedError("word evaluation requires a fiber with b in {0,1}");
    SymplecticMatrix m = SymplecticMatrix::identity(fiber.genus);
    for (const SignedTwist& t : w.letters) {
        if (t.curve.homology.rank() != fiber.homology_rank())
            throw DimensionError("word contains letters from a different fiber");
        m = m * transvection_matrix(t, fiber);
    }
    return m;
}

bool PresentationReport::ok() const {
    for (const auto& i : generator_checks)
        if (!i.pass)
            return false;
    for (const auto& i : relator_checks)
        if (!i.pass)
            return false;
    return true;
}

PresentationReport validate_presentation(const Presentation& p) {
    PresentationReport rep;
    for (const CurveClass& g : p.generators) {
        PresentationReport::Item item;
        item.name = g.name;
        if (!p.fiber.symplectic_enabled()) {
            item.pass = g.essential && !g.separating;
            item.detail = item.pass ? "declared nonseparating" : "generator must be nonseparating";
        } else if (g.homology.is_zero()) {
            item.pass = false;
            item.detail = "generator curve is homologically trivial";
        } else {
            item.pass = true;
            item.detail = "nonseparating";
        }
        rep.generator_checks.push_back(std::move(item));
    }
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        PresentationReport::Item item;
        item.name = i < p.relator_names.size() ? p.relator_names[i] : ("r" + std::to_string(i + 1));
        SymplecticMatrix m = word_to_matrix(p.relators[i], p.fiber);
        item.pass = m.is_identity();
        item.detail = item.pass ? "maps to identity" : "symplectic image is not the identity";
        rep.relator_checks.push_back(std::move(item));
    }
    return rep;
}

std::string canonical_curve_name(const HomologyClass& h) {
    std::ostringstream os;
    os << "c";
    for (const Int& x : h.coords) {
        os << "_";
        if (x < 0)
            os << "m" << -x;
        else
            os << x;
    }
    return os.str();
}

HomologyClass normalized_class(HomologyClass h) {
    for (const Int& x : h.coords) {
        if (x == 0)
            continue;
        if (x < 0)
            for (Int& y : h.coords)
                y = -y;
        break;
    }
    return h;
}

namespace {

CurveClass curve_from_coords(const FiberSurface& fiber, IntVec coords) {
    HomologyClass h = normalized_class(HomologyClass(std::move(coords)));
    return CurveClass::on(fiber, canonical_curve_name(h), h.coords);
}

IntVec basis_a(std::size_t g2, std::size_t i) {
    IntVec v(g2);
    v[2 * i] = 1;
    return v;
}

IntVec basis_b(std::size_t g2, std::size_t i) {
    IntVec v(g2);
    v[2 * i + 1] = 1;
    return v;
}

TwistWord word_of(const std::vector<SignedTwist>& letters) {
    return TwistWord(letters);
}

TwistWord power(const TwistWord& w, int k) {
    TwistWord out;
    for (int i = 0; i < k; ++i)
        out = out.concat(w);
    return out;
}

}  // namespace

std::pair<TwistWord, TwistWord> relation_library(const std::string& name, const FiberSurface& fiber) {
    if (!fiber.symplectic_enabled())
        throw UnsupportedError("relation library requires a fiber with b in {0,1}");
    const std::size_t n = fiber.homology_rank();
    const int g = fiber.genus;

    if (name == "braid") {
        if (g < 1)
            throw UnsupportedError("braid relation needs genus >= 1");
        SignedTwist ta(curve_from_coords(fiber, basis_a(n, 0)), 1);
        SignedTwist tb(curve_from_coords(fiber, basis_b(n, 0)), 1);
        return {word_of({ta, tb, ta}), word_of({tb, ta, tb})};
    }

    if (name == "chain") {
        if (g == 1) {
            SignedTwist ta(curve_from_coords(fiber, basis_a(n, 0)), 1);
            SignedTwist tb(curve_from_coords(fiber, basis_b(n, 0)), 1);
            return {power(word_of({ta, tb}), 6), TwistWord()};
        }
        if (g == 2) {
            // 5-chain a1, b1, a1+a2, b2, a2; consecutive curves meet once.
            IntVec c3(n);
            c3[0] = 1;
            c3[2] = 1;
            TwistWord chain = word_of({SignedTwist(curve_from_coords(fiber, basis_a(n, 0)), 1),
                                       SignedTwist(curve_from_coords(fiber, basis_b(n, 0)), 1),
                                       SignedTwist(curve_from_coords(fiber, c3), 1),
                                       SignedTwist(curve_from_coords(fiber, basis_b(n, 1)), 1),
                                       SignedTwist(curve_from_coords(fiber, basis_a(n, 1)), 1)});
            return {power(chain, 6), TwistWord()};
        }
        throw UnsupportedError("chain relation is provided for genus 1 and 2 only");
    }

    if (name == "lantern") {
        if (g < 2)
            throw UnsupportedError("lantern relation needs genus >= 2");
        // Four pairwise disjoint curves u1..u4 with [u1]+[u2]+[u3]+[u4] = 0 and
        // the three pair curves v_ij = u_i + u_j. On genus >= 3 all seven
        // classes are primitive; genus 2 admits no such configuration (a mod-2
        // count rules it out), so there one class is a double.
        IntVec u1, u2, u3;
        if (g == 2) {
            u1 = basis_a(n, 0);
            u2 = basis_a(n, 1);
            u3 = IntVec(n);
            u3[0] = 2;
            u3[2] = 1;
        } else {
            u1 = basis_a(n, 0);
            u2 = basis_a(n, 1);
            u3 = basis_a(n, 2);
        }
        IntVec u4(n), v12(n), v13(n), v23(n);
        for (std::size_t i = 0; i < n; ++i) {
            u4[i] = -(u1[i] + u2[i] + u3[i]);
            v12[i] = u1[i] + u2[i];
            v13[i] = u1[i] + u3[i];
            v23[i] = u2[i] + u3[i];
        }
        TwistWord lhs = word_of({SignedTwist(curve_from_coords(fiber, u1), 1),
                                 SignedTwist(curve_from_coords(fiber, u2), 1),
                                 SignedTwist(curve_from_coords(fiber, u3), 1),
                                 SignedTwist(curve_from_coords(fiber, u4), 1)});
        TwistWord rhs = word_of({SignedTwist(curve_from_coords(fiber, v12), 1),
                                 SignedTwist(curve_from_coords(fiber, v13), 1),
                                 SignedTwist(curve_from_coords(fiber, v23), 1)});
        return {lhs, rhs};
    }

    if (name == "hyperelliptic") {
        if (g != 2)
            throw UnsupportedError("hyperelliptic relation is provided for genus 2");
        IntVec c3(n);
        c3[0] = 1;
        c3[2] = 1;
        std::vector<SignedTwist> chain = {SignedTwist(curve_from_coords(fiber, basis_a(n, 0)), 1),
                                          SignedTwist(curve_from_coords(fiber, basis_b(n, 0)), 1),
                                          SignedTwist(curve_from_coords(fiber, c3), 1),
                                          SignedTwist(curve_from_coords(fiber, basis_b(n, 1)), 1),
                                          SignedTwist(curve_from_coords(fiber, basis_a(n, 1)), 1)};
        TwistWord iota = word_of(chain);
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            iota.letters.push_back(*it);
        return {iota.concat(iota), TwistWord()};
    }

    throw std::invalid_argument("unknown relation name: " + name);
}

}  // namespace lefib

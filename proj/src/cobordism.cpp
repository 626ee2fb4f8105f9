#include "lefib/cobordism.hpp"

#include <algorithm>

namespace lefib {

CobordismClass make_class(int genus, std::vector<FibrationData> reps) {
    FiberSurface expected(genus, 0);
    for (const FibrationData& f : reps) {
        if (f.fiber != expected)
            throw UnsupportedError("cobordism class: representatives must share the closed fiber F_{g,0}");
        if (!f.base.closed())
            throw UnsupportedError("cobordism class: representatives must have closed bases");
    }
    CobordismClass c;
    c.genus = genus;
    c.representatives = std::move(reps);
    return c;
}

CobordismClass class_sum(const CobordismClass& x, const CobordismClass& y) {
    if (x.genus != y.genus)
        throw UnsupportedError("class sum: fiber mismatch");
    CobordismClass out = x;
    out.representatives.insert(out.representatives.end(), y.representatives.begin(),
                               y.representatives.end());
    return out;
}

Int eta(const CobordismClass& x) {
    Int total = 0;
    for (const FibrationData& f : x.representatives) {
        auto [np, nm] = critical_counts(f);
        total += Int(np) - Int(nm);
    }
    return total;
}

Int sigma_class(const CobordismClass& x) {
    Int total = 0;
    for (const FibrationData& f : x.representatives)
        total += fibration_signature(f);
    return total;
}

std::pair<Int, Int> forgetful_phi(const CobordismClass& x) {
    return {sigma_class(x), Int(0)};
}

namespace {

struct MoveApplier {
    const CobordismClass& x;

    CobordismClass operator()(const HurwitzWitness& w) const {
        CobordismClass out = x;
        out.representatives.at(w.representative) =
            hurwitz_move(out.representatives.at(w.representative), w.index, w.direction);
        return out;
    }
    CobordismClass operator()(const ConjugationWitness& w) const {
        CobordismClass out = x;
        out.representatives.at(w.representative) =
            conjugate_fibration(out.representatives.at(w.representative), w.word);
        return out;
    }
    CobordismClass operator()(const CancellingPairWitness& w) const {
        CobordismClass out = x;
        FibrationData& f = out.representatives.at(w.representative);
        if (w.position > f.lefschetz_word.size())
            throw std::out_of_range("cancelling pair: position out of range");
        auto it = f.lefschetz_word.letters.begin() + static_cast<std::ptrdiff_t>(w.position);
        it = f.lefschetz_word.letters.insert(it, SignedTwist(w.curve, -1));
        f.lefschetz_word.letters.insert(it, SignedTwist(w.curve, 1));
        return out;
    }
    CobordismClass operator()(const FibersumSplitWitness& w) const {
        if (w.first == w.second)
            throw std::invalid_argument("fiber sum split: need two distinct representatives");
        CobordismClass out;
        out.genus = x.genus;
        FibrationData sum = fiber_sum(x.representatives.at(w.first), x.representatives.at(w.second), w.gluing);
        for (std::size_t i = 0; i < x.representatives.size(); ++i) {
            if (i == std::min(w.first, w.second))
                out.representatives.push_back(sum);
            else if (i != std::max(w.first, w.second))
                out.representatives.push_back(x.representatives[i]);
        }
        return out;
    }
    CobordismClass operator()(const ReorderWitness& w) const {
        if (w.order.size() != x.representatives.size())
            throw std::invalid_argument("reorder: permutation size mismatch");
        std::vector<bool> seen(w.order.size(), false);
        CobordismClass out;
        out.genus = x.genus;
        for (std::size_t i : w.order) {
            if (i >= x.representatives.size() || seen[i])
                throw std::invalid_argument("reorder: not a permutation");
            seen[i] = true;
            out.representatives.push_back(x.representatives[i]);
        }
        return out;
    }
};

}  // namespace

CobordismClass apply_move(const CobordismClass& x, const MoveWitness& w) {
    Int sigma_before = sigma_class(x);
    Int eta_before = eta(x);
    CobordismClass out = std::visit(MoveApplier{x}, w);
    if (sigma_class(out) != sigma_before || eta(out) != eta_before)
        throw std::logic_error("move application changed a cobordism invariant");
    return out;
}

namespace {

// x a + y b = g with g = gcd(a, b) >= 0
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        if (a < 0) {
            x = -1;
            y = 0;
            return -a;
        }
        x = 1;
        y = 0;
        return a;
    }
    Int x1, y1;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

LatticeBasis hermite_lattice(const std::vector<std::pair<Int, Int>>& generators) {
    Int a = 0, b = 0;  // first row (a, b)
    Int c = 0;         // second row (0, c)
    for (const auto& [s, e] : generators) {
        Int vs = s, ve = e;
        if (vs != 0) {
            if (a == 0) {
                std::swap(a, vs);
                std::swap(b, ve);
            }
            if (vs != 0) {
                Int x, y;
                Int g = ext_gcd(a, vs, x, y);
                Int na = g;
                Int nb = x * b + y * ve;
                Int rb = (a / g) * ve - (vs / g) * b;
                a = na;
                b = nb;
                vs = 0;
                ve = rb;
            }
        }
        c = gcd(c, ve);
    }
    if (a < 0) {
        a = -a;
        b = -b;
    }
    LatticeBasis out;
    if (a != 0) {
        if (c > 0)
            b = ((b % c) + c) % c;
        out.rows.push_back({a, b});
    }
    if (c != 0)
        out.rows.push_back({Int(0), c});
    return out;
}

bool LatticeBasis::contains(const Int& s, const Int& e) const {
    Int rs = s, re = e;
    for (const auto& row : rows) {
        if (row[0] != 0) {
            if (rs % row[0] != 0)
                return false;
            Int m = rs / row[0];
            rs -= m * row[0];
            re -= m * row[1];
        } else if (row[1] != 0) {
            if (re % row[1] != 0)
                return false;
            re = 0;
        }
    }
    return rs == 0 && re == 0;
}

LatticeBasis invariant_image_lattice(const std::vector<CobordismClass>& classes) {
    std::vector<std::pair<Int, Int>> gens;
    gens.reserve(classes.size());
    for (const CobordismClass& x : classes)
        gens.emplace_back(sigma_class(x), eta(x));
    return hermite_lattice(gens);
}

}  // namespace lefib

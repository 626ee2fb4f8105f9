#include "lefib/meyer.hpp"

#include <cstdlib>
#include <future>
#include <thread>

namespace lefib {

bool RationalSymmetricForm::symmetric() const {
    const std::size_t n = matrix.size();
    for (const auto& row : matrix)
        if (row.size() != n)
            return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (matrix[i][j] != matrix[j][i])
                return false;
    return true;
}

int signature_of_form(const RationalSymmetricForm& q) {
    if (!q.symmetric())
        throw std::invalid_argument("signature_of_form: matrix is not symmetric");
    return signature_of_symmetric(q.matrix);
}

int meyer_cocycle(const SymplecticMatrix& a, const SymplecticMatrix& b) {
    if (a.genus() != b.genus())
        throw DimensionError("meyer cocycle: size mismatch");
    const std::size_t g = a.genus();
    const std::size_t n = 2 * g;

    IntMat ai = a.inverse().matrix();
    const IntMat& bm = b.matrix();
    IntMat sys(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            sys.at(i, j) = ai.at(i, j) - (i == j ? 1 : 0);
            sys.at(i, n + j) = bm.at(i, j) - (i == j ? 1 : 0);
        }
    }
    std::vector<IntVec> basis = integer_kernel_basis(sys);
    const std::size_t d = basis.size();
    if (d == 0)
        return 0;

    IntMat jbmi(n, n);  // J (B - I)
    {
        IntMat j = standard_symplectic_form(g);
        IntMat bmi(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                bmi.at(i, k) = bm.at(i, k) - (i == k ? 1 : 0);
        jbmi = j * bmi;
    }

    // G_ij = (x_i + y_i)^T J(B-I) y_j, then take G + G^T; doubling a form
    // does not change its signature
    std::vector<std::vector<Rat>> sym(d, std::vector<Rat>(d));
    std::vector<IntVec> xy(d), jy(d);
    for (std::size_t i = 0; i < d; ++i) {
        IntVec s(n);
        IntVec y(basis[i].begin() + n, basis[i].end());
        for (std::size_t t = 0; t < n; ++t)
            s[t] = basis[i][t] + y[t];
        xy[i] = std::move(s);
        jy[i] = jbmi.apply(y);
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Int gij = 0;
            for (std::size_t t = 0; t < n; ++t)
                gij += xy[i][t] * jy[j][t];
            sym[i][j] += Rat(gij);
            sym[j][i] += Rat(gij);
        }
    }
    return signature_of_symmetric(sym);
}

namespace {

bool parallel_enabled() {
    const char* env = std::getenv("LEFIB_SEQUENTIAL");
    return env == nullptr || env[0] == '\0' || env[0] == '0';
}

}  // namespace

Int meyer_word_sum(const TwistWord& w, const FiberSurface& fiber) {
    const std::size_t n = w.size();
    if (n < 2)
        return 0;
    std::vector<SymplecticMatrix> prefixes;
    prefixes.reserve(n - 1);
    SymplecticMatrix p = SymplecticMatrix::identity(fiber.genus);
    std::vector<SymplecticMatrix> letters;
    letters.reserve(n);
    for (const SignedTwist& t : w.letters)
        letters.push_back(transvection_matrix(t, fiber));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        p = p * letters[k];
        prefixes.push_back(p);
    }

    Int total = 0;
    const std::size_t terms = n - 1;
    unsigned workers = std::thread::hardware_concurrency();
    if (parallel_enabled() && workers > 1 && terms >= 8) {
        std::vector<std::future<Int>> parts;
        const std::size_t chunk = (terms + workers - 1) / workers;
        for (std::size_t begin = 0; begin < terms; begin += chunk) {
            const std::size_t end = std::min(begin + chunk, terms);
            parts.push_back(std::async(std::launch::async, [&, begin, end]() {
                Int sum = 0;
                for (std::size_t k = begin; k < end; ++k)
                    sum += meyer_cocycle(prefixes[k], letters[k + 1]);
                return sum;
            }));
        }
        for (auto& part : parts)
            total += part.get();
    } else {
        for (std::size_t k = 0; k < terms; ++k)
            total += meyer_cocycle(prefixes[k], letters[k + 1]);
    }
    return total;
}

namespace {

FibrationData elliptic_e1() {
    FiberSurface torus(1, 0);
    CurveClass a = CurveClass::on(torus, "a", {Int(1), Int(0)});
    CurveClass b = CurveClass::on(torus, "b", {Int(0), Int(1)});
    TwistWord w;
    for (int i = 0; i < 6; ++i) {
        w.letters.emplace_back(a, 1);
        w.letters.emplace_back(b, 1);
    }
    return make_fibration(torus, BaseSurface(0, 0), w);
}

Int signature_with(const FibrationData& f, const LocalTerms& lt) {
    Int s = meyer_word_sum(closure_word(f), f.fiber);
    auto [np, nm] = critical_counts(f);
    Rat sigma = -Rat(s) + Rat(np) * lt.c_plus + Rat(nm) * lt.c_minus;
    if (denominator(sigma) != 1)
        throw CalibrationError("signature is not an integer under the calibrated local terms");
    return numerator(sigma);
}

LocalTerms compute_calibration() {
    FiberSurface torus(1, 0);
    FibrationData e1 = elliptic_e1();

    // -S + 12 c_plus = -8 (E(1) = CP^2 # 9 \bar{CP}^2 has signature 1 - 9)
    Int s1 = meyer_word_sum(e1.lefschetz_word, torus);
    LocalTerms lt;
    lt.c_plus = Rat(s1 - 8) / 12;
    lt.c_minus = -lt.c_plus;

    // cross-checks against independent oracles
    FibrationData e2 = e1;
    e2.lefschetz_word = e1.lefschetz_word.concat(e1.lefschetz_word);
    if (signature_with(e2, lt) != -16)
        throw CalibrationError("calibration: (t_a t_b)^12 over the sphere does not give the K3 signature -16");
    if (signature_with(reverse_orientation(e1), lt) != 8)
        throw CalibrationError("calibration: reversed E(1) does not give +8");

    FibrationData cancel = e1;
    CurveClass diag = CurveClass::on(torus, "d", {Int(1), Int(1)});
    cancel.lefschetz_word.letters.insert(cancel.lefschetz_word.letters.begin() + 3, SignedTwist(diag, -1));
    cancel.lefschetz_word.letters.insert(cancel.lefschetz_word.letters.begin() + 3, SignedTwist(diag, 1));
    if (signature_with(cancel, lt) != -8)
        throw CalibrationError("calibration: cancelling-pair insertion changed the signature");

    return lt;
}

}  // namespace

const LocalTerms& calibrate_local_terms() {
    static const LocalTerms lt = compute_calibration();
    return lt;
}

Int fibration_signature(const FibrationData& f) {
    if (!f.fiber.symplectic_enabled())
        throw UnsupportedError("signature requires a fiber with b in {0,1}");
    if (!f.base.closed())
        throw UnsupportedError("signature is defined for closed total spaces (closed base)");
    for (const SignedTwist& t : f.lefschetz_word.letters)
        if (t.curve.homology.is_zero())
            throw UnsupportedError("signature with separating vanishing cycles is not supported");
    ValidationReport rep = validate(f);
    if (!rep.ok())
        throw UnsupportedError("signature requires a valid fibration datum");
    return signature_with(f, calibrate_local_terms());
}

}  // namespace lefib
